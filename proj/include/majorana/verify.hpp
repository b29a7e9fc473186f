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

// Cross-checks of the F2 layer against the dense oracle, as run by
// `majorana verify`.

#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "majorana/dense_oracle.hpp"
#include "majorana/design.hpp"

namespace majorana {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Membership test used by the parse-and-verify path.
inline bool is_member(const BitMatrix &m, GroupKind kind, Basis basis = Basis::pauli) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        return false;
    }
    return kind == GroupKind::orthogonal ? is_orthogonal(m) : (m.rows() % 2 == 0 && is_symplectic(m, basis));
}

namespace detail {

inline BitVec random_vec(std::size_t len, std::mt19937_64 &rng) {
    BitVec v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v.set(i, rng() & 1);
    }
    return v;
}

inline BitVec random_even_nonzero(std::size_t len, std::mt19937_64 &rng) {
    for (;;) {
        BitVec v = random_vec(len, rng);
        if (v.parity()) {
            v.flip(rng() % len);
        }
        if (!v.none()) {
            return v;
        }
    }
}

inline CliffordWord random_p_clifford_word(std::size_t n, std::mt19937_64 &rng) {
    CliffordWord w;
    w.n = n;
    const std::size_t len = 1 + rng() % (4 * n);
    for (std::size_t k = 0; k < len; ++k) {
        w.gens.push_back(random_even_nonzero(2 * n, rng));
    }
    if (rng() & 1) {
        BitVec p = random_vec(2 * n, rng);
        if (p.parity()) {
            p.flip(0);
        }
        w.prefix = MajoranaString{PhaseExp(static_cast<int>(rng() % 4)), p, Basis::majorana};
    }
    return w;
}

inline std::vector<BitVec> all_vectors(std::size_t len) {
    std::vector<BitVec> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
        BitVec v(len);
        for (std::size_t i = 0; i < len; ++i) {
            v.set(i, (x >> i) & 1);
        }
        out.push_back(v);
    }
    return out;
}

inline CheckResult finish(std::string name, std::size_t cases, std::size_t failures, const std::string &first) {
    std::ostringstream os;
    os << cases << " cases";
    if (failures) {
        os << ", " << failures << " failed; first: " << first;
    }
    return {std::move(name), failures == 0, os.str()};
}

}  // namespace detail

inline CheckResult verify_compose(std::size_t max_modes = 6) {
    std::size_t cases = 0, failures = 0;
    std::string first;
    for (std::size_t modes = 2; modes <= max_modes; modes += 2) {
        for (Basis basis : {Basis::majorana, Basis::pauli}) {
            auto vecs = detail::all_vectors(modes);
            std::vector<DenseOperator> dense;
            for (const auto &v : vecs) {
                dense.push_back(dense_string(MajoranaString{PhaseExp(0), v, basis}));
            }
            for (std::size_t x = 0; x < vecs.size(); ++x) {
                for (std::size_t y = 0; y < vecs.size(); ++y) {
                    MajoranaString c = compose(MajoranaString{PhaseExp(0), vecs[x], basis},
                                               MajoranaString{PhaseExp(0), vecs[y], basis});
                    ++cases;
                    if (!approx_equal(dense_string(c), dense[x] * dense[y])) {
                        if (!failures++) {
                            first = vecs[x].to_string() + " * " + vecs[y].to_string();
                        }
                    }
                }
            }
        }
    }
    return detail::finish("compose-dense", cases, failures, first);
}

inline CheckResult verify_hermitian_phase(std::size_t max_modes = 12) {
    std::size_t cases = 0, failures = 0;
    std::string first;
    for (std::size_t modes = 2; modes <= max_modes; modes += 2) {
        for (const auto &v : detail::all_vectors(modes)) {
            ++cases;
            if (zeta_coeff(v, v).value() != 0 && !failures++) {
                first = v.to_string();
            }
        }
    }
    return detail::finish("zeta-diagonal", cases, failures, first);
}

inline CheckResult verify_braids(std::size_t trials = 300, std::uint64_t seed = 1) {
    std::mt19937_64 rng(seed);
    std::size_t failures = 0;
    std::string first;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = 1 + rng() % 4;
        BitVec a = detail::random_even_nonzero(2 * n, rng);
        MajoranaString s{PhaseExp(0), detail::random_vec(2 * n, rng), Basis::majorana};
        MajoranaString predicted = braid_action(a, s);
        DenseOperator b = dense_braid(a);
        if (!approx_equal(b * dense_string(s) * b.adjoint(), dense_string(predicted), 1e-9) && !failures++) {
            first = "a=" + a.to_string() + " v=" + s.v.to_string();
        }
    }
    return detail::finish("braid-conjugation", trials, failures, first);
}

inline CheckResult verify_parity_invariance(std::size_t trials = 100, std::uint64_t seed = 2) {
    std::mt19937_64 rng(seed);
    std::size_t failures = 0;
    std::string first;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = 1 + rng() % 3;
        CliffordWord w = detail::random_p_clifford_word(n, rng);
        DenseOperator u = dense_word(w);
        DenseOperator j = dense_majorana(all_ones(2 * n));
        if (!approx_equal(u * j * u.adjoint(), j, 1e-9) && !failures++) {
            first = to_string(w);
        }
    }
    return detail::finish("parity-invariance", trials, failures, first);
}

inline CheckResult verify_irreducibility(std::size_t max_modes = 8) {
    std::size_t cases = 0, failures = 0;
    std::string first;
    for (std::size_t modes = 2; modes <= max_modes; modes += 2) {
        double sum = 0;
        for (const auto &v : detail::all_vectors(modes)) {
            const Complex tr = dense_majorana(v).trace();
            for (int a = 0; a < 4; ++a) {
                sum += std::norm(detail::i_pow(a) * tr);
            }
        }
        sum /= 4.0 * std::ldexp(1.0, static_cast<int>(modes));
        ++cases;
        if (std::abs(sum - 1.0) > 1e-9 && !failures++) {
            first = "2n=" + std::to_string(modes) + " sum=" + std::to_string(sum);
        }
    }
    return detail::finish("irreducibility", cases, failures, first);
}

inline CheckResult verify_projectors(std::size_t trials = 60, std::uint64_t seed = 3) {
    std::mt19937_64 rng(seed);
    std::size_t failures = 0;
    std::string first;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t r = 1 + rng() % (n - 1);
        const IsotropicSubspace canon = canonical_isotropic(n, r);
        OrthogonalMap s = sample_orthogonal_random(2 * n, rng);
        std::vector<BitVec> rows;
        for (const auto &b : canon.basis()) {
            rows.push_back(s.apply(b));
        }
        Stabilizer stab(validate_generators(rows, n), detail::random_vec(2 * n, rng));
        DenseOperator p = stabilizer_projector_dense(stab);
        bool ok = approx_equal(p * p, p, 1e-9) && approx_equal(p, p.adjoint(), 1e-9) &&
                  std::abs(p.trace() - Complex(std::ldexp(1.0, static_cast<int>(n - r)), 0)) < 1e-9;
        for (const auto &b : stab.space().basis()) {
            DenseOperator g = dense_string(stabilizer_element(stab, b));
            ok = ok && approx_equal(g * p, p, 1e-9);
        }
        if (!ok && !failures++) {
            first = "n=" + std::to_string(n) + " r=" + std::to_string(r);
        }
    }
    return detail::finish("stabilizer-projector", trials, failures, first);
}

/// The synthesized braid word conjugates each canonical generator onto the
/// corresponding input generator, up to sign.
inline CheckResult verify_encoder(std::size_t trials = 60, std::uint64_t seed = 4) {
    std::mt19937_64 rng(seed);
    std::size_t failures = 0;
    std::string first;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t r = 1 + rng() % (n - 1);
        const IsotropicSubspace canon = canonical_isotropic(n, r);
        OrthogonalMap s = sample_orthogonal_random(2 * n, rng);
        std::vector<BitVec> rows;
        for (const auto &b : canon.basis()) {
            rows.push_back(s.apply(b));
        }
        EncoderSynthesis enc = stab_clifford_word(validate_generators(rows, n));
        CliffordWord w;
        w.n = n;
        w.gens = enc.word;
        DenseOperator u = dense_word(w);
        bool ok = true;
        for (std::size_t i = 0; i < r; ++i) {
            auto c = conjugation_coefficient(u, canon.basis()[i], rows[i], 1e-9);
            ok = ok && c && std::abs(std::abs(*c) - 1.0) < 1e-9 && std::abs(c->imag()) < 1e-9;
        }
        if (!ok && !failures++) {
            first = "n=" + std::to_string(n) + " r=" + std::to_string(r);
        }
    }
    return detail::finish("encoder-dense", trials, failures, first);
}

inline CheckResult verify_trace_identity(std::size_t trials = 200, std::uint64_t seed = 5) {
    std::mt19937_64 rng(seed);
    std::size_t failures = 0;
    std::string first;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = 2 + t % 3;
        CliffordWord w = detail::random_p_clifford_word(n, rng);
        const double value = parity_restricted_trace_sq(w);
        const double expect = static_cast<double>(fixed_point_profile(w.orthogonal_map()).restricted_value());
        if (std::abs(value) > 1e-9 && std::abs(value - expect) > 1e-9 && !failures++) {
            first = "n=" + std::to_string(n) + " trace^2=" + std::to_string(value);
        }
    }
    return detail::finish("trace-identity", trials, failures, first);
}

inline CheckResult verify_subalgebra() {
    std::size_t failures = 0;
    DenseOperator id = dense_identity(2);
    failures += !approx_equal(reduce_to_subalgebra(id, {0, 1}), dense_identity(1));
    failures += !approx_equal(reduce_to_subalgebra(dense_majorana(BitVec::from_string("1100")), {0, 1}),
                              dense_majorana(BitVec::from_string("11")));
    failures += !approx_equal(reduce_to_subalgebra(dense_majorana(BitVec::from_string("0011")), {0, 1}),
                              DenseOperator::Zero(2, 2));
    return detail::finish("subalgebra", 3, failures, "example mismatch");
}

inline std::vector<CheckResult> run_verification_suites() {
    return {verify_compose(),     verify_hermitian_phase(), verify_braids(),
            verify_parity_invariance(), verify_irreducibility(),   verify_projectors(),
            verify_encoder(),     verify_trace_identity(),  verify_subalgebra()};
}

}  // namespace majorana
