// Copyright 2026 The majorana-clifford Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "majorana/f2.hpp"
#include "majorana/group.hpp"

namespace majorana {

using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Fixed points.

/// f = |ker(S + I)|, f_+ = even part of it, c_+ = #{even v : S v = v + j}.
/// Counts are powers of two and kept as exponents.
struct FixedPointProfile {
    std::size_t dim = 0;
    std::size_t fixed_log2 = 0;
    std::size_t even_fixed_log2 = 0;
    bool complemented = false;  // c_+ = f_+ when true, else c_+ = 0

    BigInt f() const {
        return BigInt(1) << fixed_log2;
    }
    BigInt f_plus() const {
        return BigInt(1) << even_fixed_log2;
    }
    BigInt c_plus() const {
        return complemented ? f_plus() : BigInt(0);
    }
    /// (f_+ + c_+) / 2.
    Rational restricted_value() const {
        return Rational(f_plus() + c_plus(), 2);
    }
    /// log2 of (f_+ + c_+) / 2; may be -1 in odd dimension.
    long restricted_log2() const {
        return static_cast<long>(even_fixed_log2) + (complemented ? 1 : 0) - 1;
    }
};

inline FixedPointProfile fixed_point_profile(const BitMatrix &s) {
    if (s.rows() != s.cols() || s.rows() == 0) {
        throw Error(ErrorKind::invalid_dimension, "fixed points need a square matrix");
    }
    const std::size_t n = s.rows();
    BitMatrix a = s ^ BitMatrix::identity(n);
    FixedPointProfile p;
    p.dim = n;
    p.fixed_log2 = n - rank(a);

    // [(S + I); j^T] x = (0; 0) for f_+ and (j; 0) for c_+.
    std::vector<BitVec> rows = a.row_vectors();
    rows.push_back(all_ones(n));
    BitMatrix stacked = BitMatrix::from_rows(std::move(rows));
    p.even_fixed_log2 = n - rank(stacked);
    BitVec rhs = all_ones(n).concat(BitVec(1));
    p.complemented = solve_affine(stacked, rhs).has_value();
    return p;
}

inline FixedPointProfile fixed_point_profile(const OrthogonalMap &s) {
    return fixed_point_profile(s.matrix());
}
inline FixedPointProfile fixed_point_profile(const SymplecticMap &s) {
    return fixed_point_profile(s.matrix());
}

// ---------------------------------------------------------------------------
// Frame potentials.

enum class FrameMode { exact, monte_carlo };

inline const char *frame_mode_name(FrameMode m) {
    return m == FrameMode::exact ? "exact" : "monte_carlo";
}

struct FrameOptions {
    FrameMode mode = FrameMode::exact;
    std::uint64_t budget = 10'000'000;  // exact mode: max group order enumerated
    std::uint64_t samples = 1'000'000;  // Monte Carlo draws
    std::uint64_t seed = 20240601;
    std::size_t shards = 16;
    std::size_t threads = 1;
};

struct FramePotentialReport {
    GroupKind ensemble = GroupKind::orthogonal;
    std::size_t dim = 0;
    std::size_t t = 1;
    FrameMode mode = FrameMode::exact;
    bool restricted = false;
    std::optional<Rational> value;  // exact mode
    double estimate = 0;            // exact mode: value as a double
    double std_error = 0;
    std::uint64_t samples = 0;  // Monte Carlo draws, or |G| in exact mode
    std::uint64_t seed = 0;
};

namespace detail {

inline void check_frame_args(GroupKind kind, std::size_t dim, std::size_t t, bool restricted) {
    if (t == 0) {
        throw Error(ErrorKind::invalid_dimension, "frame potential order t must be >= 1");
    }
    if (restricted && kind != GroupKind::orthogonal) {
        throw Error(ErrorKind::unsupported, "parity-restricted frame potential is defined for the orthogonal ensemble");
    }
    group_order(kind, dim);  // validates dim
}

/// Exponent e of the per-element summand 2^e, before raising to t - 1.
inline long summand_log2(const FixedPointProfile &p, bool restricted) {
    return restricted ? p.restricted_log2() : static_cast<long>(p.fixed_log2);
}

inline Rational power_of_two(long e) {
    if (e >= 0) {
        return Rational(BigInt(1) << e);
    }
    return Rational(BigInt(1), BigInt(1) << (-e));
}

template <class Fn>
void enumerate_group(GroupKind kind, std::size_t dim, Fn &&fn) {
    BigInt order = group_order(kind, dim);
    for (BigInt i = 1; i <= order; ++i) {
        if (kind == GroupKind::orthogonal) {
            fn(sample_orthogonal(dim, i).matrix());
        } else {
            fn(sample_symplectic(dim, i).matrix());
        }
    }
}

struct ShardSums {
    std::uint64_t count = 0;
    long double sum = 0;
    long double sum_sq = 0;
};

}  // namespace detail

/// Histogram log2(summand) -> multiplicity over the whole group.
inline std::map<long, BigInt> fixed_point_histogram(GroupKind kind, std::size_t dim, bool restricted,
                                                    std::uint64_t budget = 10'000'000) {
    detail::check_frame_args(kind, dim, 1, restricted);
    if (group_order(kind, dim) > budget) {
        throw Error(ErrorKind::budget_exceeded, "group order exceeds the exact-enumeration budget");
    }
    std::map<long, BigInt> hist;
    detail::enumerate_group(kind, dim, [&](const BitMatrix &m) {
        hist[detail::summand_log2(fixed_point_profile(m), restricted)] += 1;
    });
    return hist;
}

/// (1/|G|) sum_S x(S)^{t-1} from a histogram.
inline Rational frame_value_from_histogram(const std::map<long, BigInt> &hist, std::size_t t) {
    BigInt total = 0;
    Rational sum = 0;
    for (const auto &[e, count] : hist) {
        sum += Rational(count) * detail::power_of_two(e * static_cast<long>(t - 1));
        total += count;
    }
    return sum / Rational(total);
}

inline FramePotentialReport frame_potential_impl(GroupKind kind, std::size_t dim, std::size_t t, bool restricted,
                                                 const FrameOptions &opt) {
    detail::check_frame_args(kind, dim, t, restricted);
    FramePotentialReport rep;
    rep.ensemble = kind;
    rep.dim = dim;
    rep.t = t;
    rep.mode = opt.mode;
    rep.restricted = restricted;
    rep.seed = opt.seed;
    if (opt.mode == FrameMode::exact) {
        auto hist = fixed_point_histogram(kind, dim, restricted, opt.budget);
        rep.value = frame_value_from_histogram(hist, t);
        rep.estimate = static_cast<double>(*rep.value);
        rep.samples = static_cast<std::uint64_t>(group_order(kind, dim));
        return rep;
    }
    if (opt.samples < 2) {
        throw Error(ErrorKind::invalid_dimension, "Monte Carlo needs at least 2 samples");
    }
    const std::size_t shards = std::max<std::size_t>(1, opt.shards);
    std::vector<detail::ShardSums> sums(shards);
    auto run_shard = [&](std::size_t s) {
        std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                          static_cast<std::uint32_t>(s)};
        std::mt19937_64 rng(seq);
        const std::uint64_t count = opt.samples / shards + (s < opt.samples % shards ? 1 : 0);
        detail::ShardSums acc;
        for (std::uint64_t k = 0; k < count; ++k) {
            BitMatrix m = kind == GroupKind::orthogonal ? sample_orthogonal_random(dim, rng).matrix()
                                                        : sample_symplectic_random(dim, rng).matrix();
            long e = detail::summand_log2(fixed_point_profile(m), restricted);
            long double x = std::ldexp(1.0L, static_cast<int>(e * static_cast<long>(t - 1)));
            acc.sum += x;
            acc.sum_sq += x * x;
        }
        acc.count = count;
        sums[s] = acc;
    };
    const std::size_t threads = std::clamp<std::size_t>(opt.threads, 1, shards);
    if (threads == 1) {
        for (std::size_t s = 0; s < shards; ++s) {
            run_shard(s);
        }
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t s = w; s < shards; s += threads) {
                    run_shard(s);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    // Aggregate in shard order so the result is independent of thread count.
    long double sum = 0;
    long double sum_sq = 0;
    std::uint64_t count = 0;
    for (const auto &s : sums) {
        sum += s.sum;
        sum_sq += s.sum_sq;
        count += s.count;
    }
    long double mean = sum / count;
    long double var = (sum_sq - count * mean * mean) / (count - 1);
    rep.estimate = static_cast<double>(mean);
    rep.std_error = static_cast<double>(std::sqrt(std::max<long double>(var, 0) / count));
    rep.samples = count;
    return rep;
}

/// F_t = (1/|G|) sum_S f(S)^{t-1}.
inline FramePotentialReport frame_potential(GroupKind kind, std::size_t dim, std::size_t t,
                                            const FrameOptions &opt = {}) {
    return frame_potential_impl(kind, dim, t, false, opt);
}

/// F^+_t over O(dim): averages ((f_+ + c_+)/2)^{t-1}.
inline FramePotentialReport parity_frame_potential(std::size_t dim, std::size_t t, const FrameOptions &opt = {}) {
    return frame_potential_impl(GroupKind::orthogonal, dim, t, true, opt);
}

/// Haar value: Catalan(t) for N = 2, t! for N >= t.
inline BigInt haar_frame_potential(std::size_t t, std::size_t big_n) {
    if (t == 0 || big_n == 0) {
        throw Error(ErrorKind::invalid_dimension, "haar_frame_potential needs t, N >= 1");
    }
    if (big_n >= t) {
        BigInt f = 1;
        for (std::size_t k = 2; k <= t; ++k) {
            f *= k;
        }
        return f;
    }
    if (big_n == 2) {
        // Catalan number C_t = binom(2t, t) / (t + 1).
        BigInt num = 1;
        BigInt den = 1;
        for (std::size_t k = 1; k <= t; ++k) {
            num *= (t + k);
            den *= k;
        }
        return num / den / (t + 1);
    }
    throw Error(ErrorKind::unsupported, "Haar frame potential known only for N = 2 or N >= t");
}

inline std::string rational_to_string(const Rational &r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

/// {ensemble, dim, t, mode, value|estimate, std_error, samples, seed, restricted}.
inline nlohmann::json to_json(const FramePotentialReport &rep) {
    nlohmann::json j;
    j["ensemble"] = group_kind_name(rep.ensemble);
    j["dim"] = rep.dim;
    j["t"] = rep.t;
    j["mode"] = frame_mode_name(rep.mode);
    j["restricted"] = rep.restricted;
    if (rep.value) {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        if (denominator(*rep.value) == 1 && numerator(*rep.value) <= BigInt(std::numeric_limits<std::int64_t>::max())) {
            j["value"] = static_cast<std::int64_t>(numerator(*rep.value));
        } else {
            j["value"] = rational_to_string(*rep.value);
        }
    } else {
        j["estimate"] = rep.estimate;
        j["std_error"] = rep.std_error;
    }
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    return j;
}

// ---------------------------------------------------------------------------
// Orbits.

enum class OrbitSpace { full, even_quotient };

struct OrbitSummary {
    std::size_t count = 0;
    std::vector<std::uint64_t> sizes;  // ascending
};

namespace detail {

class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
    }
    std::size_t size_of(std::size_t x) {
        return size_[find(x)];
    }

   private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

inline std::uint64_t vec_to_index(const BitVec &v) {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.get(i)) {
            x |= std::uint64_t{1} << i;
        }
    }
    return x;
}

inline BitVec index_to_vec(std::size_t n, std::uint64_t x) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v.set(i, (x >> i) & 1);
    }
    return v;
}

}  // namespace detail

inline constexpr std::uint64_t kMaxOrbitTuples = std::uint64_t{1} << 16;

/// Orbits of the generator closure on (space)^{tuple_order}. Orthogonal
/// generators are h_a for every a of weight 2 or 4; symplectic generators are
/// the Pauli-basis transvections of every nonzero a.
inline OrbitSummary orbit_structure(std::size_t dim, std::size_t tuple_order, GroupKind kind, OrbitSpace space) {
    if (dim == 0 || dim > 16 || tuple_order == 0) {
        throw Error(ErrorKind::invalid_dimension, "orbit counting needs 1 <= dim <= 16 and tuple order >= 1");
    }
    if (kind == GroupKind::symplectic && dim % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "symplectic group needs even dimension");
    }
    if (kind == GroupKind::symplectic && space == OrbitSpace::even_quotient) {
        throw Error(ErrorKind::unsupported, "the even quotient is defined for the orthogonal action");
    }
    if (space == OrbitSpace::even_quotient && dim % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "even quotient needs an even dimension");
    }

    // Points of the space and a lookup from vector index to point id.
    std::vector<BitVec> points;
    std::vector<std::int64_t> point_id(std::size_t{1} << dim, -1);
    const BitVec j = all_ones(dim);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << dim); ++x) {
        BitVec v = detail::index_to_vec(dim, x);
        if (space == OrbitSpace::even_quotient) {
            if (v.parity() || (v ^ j) < v) {
                continue;
            }
        }
        point_id[x] = static_cast<std::int64_t>(points.size());
        points.push_back(std::move(v));
    }
    auto canonical_id = [&](BitVec v) {
        if (space == OrbitSpace::even_quotient && (v ^ j) < v) {
            v ^= j;
        }
        return static_cast<std::size_t>(point_id[detail::vec_to_index(v)]);
    };

    const std::uint64_t p = points.size();
    std::uint64_t tuples = 1;
    for (std::size_t k = 0; k < tuple_order; ++k) {
        if (tuples > kMaxOrbitTuples / p) {
            throw Error(ErrorKind::budget_exceeded, "tuple space exceeds 2^16 elements");
        }
        tuples *= p;
    }

    std::vector<BitVec> gens;
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << dim); ++x) {
        BitVec a = detail::index_to_vec(dim, x);
        if (kind == GroupKind::orthogonal) {
            if (a.weight() == 2 || a.weight() == 4) {
                gens.push_back(std::move(a));
            }
        } else {
            gens.push_back(std::move(a));
        }
    }

    detail::UnionFind uf(tuples);
    std::vector<std::size_t> image(p);
    for (const auto &a : gens) {
        for (std::size_t i = 0; i < p; ++i) {
            BitVec w = kind == GroupKind::orthogonal ? apply_householder(a, points[i])
                                                     : transvection_apply(a, points[i], Basis::pauli);
            image[i] = canonical_id(std::move(w));
        }
        for (std::uint64_t tup = 0; tup < tuples; ++tup) {
            std::uint64_t rest = tup;
            std::uint64_t mapped = 0;
            std::uint64_t place = 1;
            for (std::size_t k = 0; k < tuple_order; ++k) {
                mapped += image[rest % p] * place;
                rest /= p;
                place *= p;
            }
            uf.unite(tup, mapped);
        }
    }
    OrbitSummary out;
    for (std::uint64_t tup = 0; tup < tuples; ++tup) {
        if (uf.find(tup) == tup) {
            out.sizes.push_back(uf.size_of(tup));
        }
    }
    std::sort(out.sizes.begin(), out.sizes.end());
    out.count = out.sizes.size();
    return out;
}

inline std::size_t orbit_count(std::size_t dim, std::size_t tuple_order, GroupKind kind, OrbitSpace space) {
    return orbit_structure(dim, tuple_order, kind, space).count;
}

// ---------------------------------------------------------------------------
// Quotient embedding O(2n) -> Sp(2n - 2).

/// Basis of the even subspace: rows b_1 .. b_{2n-2} followed by j. For
/// k = 1 .. n-1 (1-based), b_{2k-1} has ones at 1..2k-2, 2k-1, 2k+1 and b_{2k}
/// at 1..2k. The first 2n-2 rows have Gram matrix eta.
inline BitMatrix quotient_basis(std::size_t n) {
    if (n < 2) {
        throw Error(ErrorKind::invalid_dimension, "quotient basis needs n >= 2");
    }
    const std::size_t modes = 2 * n;
    std::vector<BitVec> rows;
    for (std::size_t k = 1; k < n; ++k) {
        BitVec odd(modes);
        BitVec even(modes);
        for (std::size_t i = 0; i < 2 * k - 2; ++i) {
            odd.set(i);
        }
        odd.set(2 * k - 2);
        odd.set(2 * k);
        for (std::size_t i = 0; i < 2 * k; ++i) {
            even.set(i);
        }
        rows.push_back(std::move(odd));
        rows.push_back(std::move(even));
    }
    rows.push_back(all_ones(modes));
    return BitMatrix::from_rows(std::move(rows));
}

/// Induced action on (even vectors)/<j> in the basis b_1 .. b_{2n-2}: column i
/// of the result holds the coordinates of S b_i, the j component dropped.
inline SymplecticMap quotient_action(const OrthogonalMap &s) {
    if (s.dim() < 4 || s.dim() % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "quotient action needs S in O(2n) with n >= 2");
    }
    const std::size_t n = s.dim() / 2;
    const std::size_t q = 2 * n - 2;
    BitMatrix basis = quotient_basis(n);
    BitMatrix coords_system = basis.transpose();  // columns are the basis vectors
    BitMatrix out(q, q);
    for (std::size_t i = 0; i < q; ++i) {
        auto sol = solve_affine(coords_system, s.apply(basis.row(i)));
        if (!sol) {
            throw Error(ErrorKind::not_orthogonal, "image leaves the even subspace");
        }
        for (std::size_t k = 0; k < q; ++k) {
            out.set(k, i, sol->particular.get(k));
        }
    }
    return unchecked_symplectic(std::move(out), Basis::pauli);
}

}  // namespace majorana
