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

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "majorana/f2.hpp"
#include "majorana/strings.hpp"

namespace majorana {

using BigInt = boost::multiprecision::cpp_int;

enum class GroupKind { symplectic, orthogonal };

inline const char *group_kind_name(GroupKind kind) {
    return kind == GroupKind::symplectic ? "sp" : "o";
}

inline bool is_orthogonal(const BitMatrix &m) {
    return m.rows() == m.cols() && m.transpose() * m == BitMatrix::identity(m.rows());
}

inline bool is_symplectic(const BitMatrix &m, Basis basis) {
    if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
        return false;
    }
    BitMatrix form = make_form(basis == Basis::majorana ? Form::omega : Form::eta, m.rows());
    return m.transpose() * form * m == form;
}

/// Left-multiplies by the Householder reflection h_a = I + a a^T in place.
inline void reflect_rows(BitMatrix &m, const BitVec &a) {
    BitVec r = m.apply_left(a);  // a^T M
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (a.get(i)) {
            m.row(i) ^= r;
        }
    }
}

/// v + (a^T v) a for an even-parity a.
inline BitVec apply_householder(const BitVec &a, const BitVec &v) {
    if (a.size() != v.size()) {
        throw Error(ErrorKind::length_mismatch, "householder vector and target differ in length");
    }
    if (a.parity()) {
        throw Error(ErrorKind::odd_parity, "householder vector must have even parity");
    }
    return a.dot(v) ? v ^ a : v;
}

/// v + <a, v> a under the basis's symplectic form.
inline BitVec transvection_apply(const BitVec &a, const BitVec &v, Basis basis = Basis::majorana) {
    if (a.size() != v.size()) {
        throw Error(ErrorKind::length_mismatch, "transvection vector and target differ in length");
    }
    return symp_product(a, v, basis) ? v ^ a : v;
}

/// Element of O(N, F2) acting on column vectors.
class OrthogonalMap {
   public:
    OrthogonalMap() = default;

    static OrthogonalMap identity(std::size_t n) {
        return OrthogonalMap(BitMatrix::identity(n));
    }

    static OrthogonalMap from_matrix(BitMatrix m) {
        if (!is_orthogonal(m)) {
            throw Error(ErrorKind::not_orthogonal, "matrix is not orthogonal over F2");
        }
        return OrthogonalMap(std::move(m));
    }

    /// h_a = I + a a^T.
    static OrthogonalMap householder(const BitVec &a) {
        if (a.parity()) {
            throw Error(ErrorKind::odd_parity, "householder vector must have even parity");
        }
        BitMatrix m = BitMatrix::identity(a.size());
        reflect_rows(m, a);
        return OrthogonalMap(std::move(m));
    }

    const BitMatrix &matrix() const noexcept {
        return m_;
    }
    std::size_t dim() const noexcept {
        return m_.rows();
    }
    BitVec apply(const BitVec &v) const {
        return m_.apply(v);
    }
    OrthogonalMap inverse() const {
        return OrthogonalMap(m_.transpose());
    }

    friend OrthogonalMap operator*(const OrthogonalMap &a, const OrthogonalMap &b) {
        return OrthogonalMap(a.m_ * b.m_);
    }
    friend bool operator==(const OrthogonalMap &a, const OrthogonalMap &b) noexcept {
        return a.m_ == b.m_;
    }

   private:
    explicit OrthogonalMap(BitMatrix m) : m_(std::move(m)) {
    }
    friend OrthogonalMap unchecked_orthogonal(BitMatrix m);

    BitMatrix m_;
};

/// Wraps a matrix already known to be orthogonal by construction.
inline OrthogonalMap unchecked_orthogonal(BitMatrix m) {
    return OrthogonalMap(std::move(m));
}

/// Element of Sp(2n, F2) in a stated basis.
class SymplecticMap {
   public:
    SymplecticMap() = default;

    static SymplecticMap from_matrix(BitMatrix m, Basis basis) {
        if (!is_symplectic(m, basis)) {
            throw Error(ErrorKind::not_symplectic, "matrix does not preserve the symplectic form");
        }
        return SymplecticMap(std::move(m), basis);
    }
    static SymplecticMap identity(std::size_t dim, Basis basis) {
        return SymplecticMap(BitMatrix::identity(dim), basis);
    }

    const BitMatrix &matrix() const noexcept {
        return m_;
    }
    Basis basis() const noexcept {
        return basis_;
    }
    std::size_t dim() const noexcept {
        return m_.rows();
    }
    BitVec apply(const BitVec &v) const {
        return m_.apply(v);
    }

    /// Same map in the other basis: S -> W S W.
    SymplecticMap to_basis(Basis target) const {
        if (target == basis_) {
            return *this;
        }
        BitMatrix w = make_form(Form::jordan_wigner, dim());
        return SymplecticMap(w * m_ * w, target);
    }

    friend SymplecticMap operator*(const SymplecticMap &a, const SymplecticMap &b) {
        if (a.basis_ != b.basis_) {
            throw Error(ErrorKind::basis_mismatch, "symplectic maps in different bases");
        }
        return SymplecticMap(a.m_ * b.m_, a.basis_);
    }
    friend bool operator==(const SymplecticMap &a, const SymplecticMap &b) noexcept {
        return a.basis_ == b.basis_ && a.m_ == b.m_;
    }

   private:
    SymplecticMap(BitMatrix m, Basis basis) : m_(std::move(m)), basis_(basis) {
    }
    friend SymplecticMap unchecked_symplectic(BitMatrix m, Basis basis);

    BitMatrix m_;
    Basis basis_ = Basis::pauli;
};

inline SymplecticMap unchecked_symplectic(BitMatrix m, Basis basis) {
    return SymplecticMap(std::move(m), basis);
}

// ---------------------------------------------------------------------------
// Braid words.

/// gamma = P B(g_1) B(g_2) ... B(g_k), P an optional Majorana-string prefix.
/// Its F2 action is h_{g_1} h_{g_2} ... h_{g_k}.
struct CliffordWord {
    std::size_t n = 0;  // mode pairs
    std::optional<MajoranaString> prefix;
    std::vector<BitVec> gens;
    bool general = false;  // odd-parity generators allowed

    std::size_t modes() const noexcept {
        return 2 * n;
    }

    void validate() const {
        if (n == 0) {
            throw Error(ErrorKind::invalid_dimension, "word needs n >= 1");
        }
        if (prefix) {
            if (prefix->v.size() != modes()) {
                throw Error(ErrorKind::length_mismatch, "prefix length differs from 2n");
            }
            if (prefix->basis != Basis::majorana) {
                throw Error(ErrorKind::basis_mismatch, "prefix must be a Majorana string");
            }
        }
        for (const auto &g : gens) {
            if (g.size() != modes()) {
                throw Error(ErrorKind::length_mismatch, "generator length differs from 2n");
            }
            if (!general && g.parity()) {
                throw Error(ErrorKind::odd_parity, "odd-parity generator in a p-Clifford word");
            }
        }
    }

    /// True when every generator and the prefix have even parity.
    bool parity_preserving() const {
        for (const auto &g : gens) {
            if (g.parity()) {
                return false;
            }
        }
        return !prefix || !prefix->v.parity();
    }

    /// Product of the generators' transvections in listed order (Majorana
    /// basis). For even generators these are Householder reflections.
    BitMatrix action_matrix() const {
        BitMatrix m = BitMatrix::identity(modes());
        for (std::size_t k = gens.size(); k-- > 0;) {
            const BitVec &g = gens[k];
            if (!g.parity()) {
                reflect_rows(m, g);
            } else {
                // tau_g M = M + g (g^T omega M); omega x = p(x) j + x.
                BitVec r = m.apply_left(g);  // g^T M
                for (std::size_t i = 0; i < modes(); ++i) {
                    r ^= m.row(i);  // + j^T M, since p(g) = 1
                }
                for (std::size_t i = 0; i < modes(); ++i) {
                    if (g.get(i)) {
                        m.row(i) ^= r;
                    }
                }
            }
        }
        return m;
    }

    OrthogonalMap orthogonal_map() const {
        for (const auto &g : gens) {
            if (g.parity()) {
                throw Error(ErrorKind::odd_parity, "word contains odd generators; use symplectic_map");
            }
        }
        return unchecked_orthogonal(action_matrix());
    }

    SymplecticMap symplectic_map() const {
        return unchecked_symplectic(action_matrix(), Basis::majorana);
    }
};

/// Braid-word text format: optional "P i^<a> <bits>" line, then "B <bits>"
/// per generator.
inline std::string to_string(const CliffordWord &w) {
    std::string s;
    if (w.prefix) {
        s += "P " + to_string(*w.prefix) + "\n";
    }
    for (const auto &g : w.gens) {
        s += "B " + g.to_string() + "\n";
    }
    return s;
}

inline CliffordWord parse_word(std::istream &in, bool general = false) {
    CliffordWord w;
    w.general = general;
    std::string line;
    std::size_t modes = 0;
    bool first = true;
    auto note_length = [&](std::size_t len) {
        if (len == 0 || len % 2 != 0) {
            throw Error(ErrorKind::invalid_dimension, "word vectors need even positive length");
        }
        if (modes != 0 && len != modes) {
            throw Error(ErrorKind::length_mismatch, "word vectors differ in length");
        }
        modes = len;
    };
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.size() > 2 && line.compare(0, 2, "P ") == 0) {
            if (!first) {
                throw Error(ErrorKind::parse_error, "prefix line must come first");
            }
            w.prefix = parse_string(std::string_view(line).substr(2), Basis::majorana);
            note_length(w.prefix->v.size());
        } else if (line.size() > 2 && line.compare(0, 2, "B ") == 0) {
            BitVec g = BitVec::from_string(line.substr(2));
            note_length(g.size());
            w.gens.push_back(std::move(g));
        } else {
            throw Error(ErrorKind::parse_error, "unrecognized word line '" + line + "'");
        }
        first = false;
    }
    if (modes == 0) {
        throw Error(ErrorKind::parse_error, "empty braid word");
    }
    w.n = modes / 2;
    w.validate();
    return w;
}

/// B(a) s B(a)^dagger. For even a the vector becomes v + (a^T v) a and the
/// phase picks up (i zeta(a, v))^{a^T v}. With `allow_odd` the general
/// transvection rule <a, v> is used instead.
inline MajoranaString braid_action(const BitVec &a, const MajoranaString &s, bool allow_odd = false) {
    if (s.basis != Basis::majorana) {
        throw Error(ErrorKind::basis_mismatch, "braid action is defined on Majorana strings");
    }
    detail::require_same_length(a, s.v);
    if (a.parity() && !allow_odd) {
        throw Error(ErrorKind::odd_parity, "braid generator must have even parity");
    }
    if (!symp_product(a, s.v, Basis::majorana)) {
        return s;
    }
    return {s.phase + PhaseExp(1) + zeta_coeff(a, s.v), s.v ^ a, s.basis};
}

/// Conjugates a string by every braid of the word (and the prefix), innermost
/// generator first.
inline MajoranaString word_action(const CliffordWord &w, const MajoranaString &s) {
    MajoranaString out = s;
    for (std::size_t k = w.gens.size(); k-- > 0;) {
        out = braid_action(w.gens[k], out, w.general);
    }
    if (w.prefix) {
        if (symp_product(w.prefix->v, out.v)) {
            out.phase += PhaseExp(2);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Householder search.

/// Even a, b with h_b h_a v = w (b may be zero).
///
/// Branches: (1) v = w or v^T w = 1 - p(v): a = w - v; (2) v, w share a zero
/// index and a one index: weight-2 a through the first of each; (3) otherwise
/// weight-2 a through the first (1, 0) and the first (0, 1) index. b = w - v - a
/// in (2) and (3).
inline std::pair<BitVec, BitVec> find_householders(const BitVec &v, const BitVec &w) {
    if (v.size() != w.size()) {
        throw Error(ErrorKind::length_mismatch, "find_householders: length mismatch");
    }
    const std::size_t n = v.size();
    if (v.parity() != w.parity()) {
        throw Error(ErrorKind::odd_parity, "find_householders: v and w differ in parity");
    }
    if (v.none() || w.none()) {
        throw Error(ErrorKind::invalid_dimension, "find_householders: zero vector");
    }
    if (v.all() || w.all()) {
        throw Error(ErrorKind::invalid_dimension, "find_householders: all-ones vector");
    }
    BitVec zero(n);
    if (v == w) {
        return {zero, zero};
    }
    if (v.dot(w) == !v.parity()) {
        return {v ^ w, zero};
    }
    BitVec a(n);
    std::optional<std::size_t> common_zero;
    std::optional<std::size_t> common_one;
    std::optional<std::size_t> only_v;
    std::optional<std::size_t> only_w;
    for (std::size_t i = 0; i < n; ++i) {
        bool vi = v.get(i);
        bool wi = w.get(i);
        if (!vi && !wi && !common_zero) {
            common_zero = i;
        } else if (vi && wi && !common_one) {
            common_one = i;
        } else if (vi && !wi && !only_v) {
            only_v = i;
        } else if (!vi && wi && !only_w) {
            only_w = i;
        }
    }
    if (common_zero && common_one) {
        a.set(*common_zero);
        a.set(*common_one);
    } else {
        // Neither vector contains the other (else they would share a zero).
        a.set(*only_v);
        a.set(*only_w);
    }
    return {a, v ^ w ^ a};
}

// ---------------------------------------------------------------------------
// Group orders.

/// Number of admissible first columns at recursion level m of the
/// orthogonal sampler: odd-parity vectors, minus j when m is odd.
inline BigInt orthogonal_level_count(std::size_t m) {
    if (m <= 1) {
        return 1;
    }
    BigInt p = BigInt(1) << (m - 1);
    return m % 2 == 1 ? p - 1 : p;
}

inline BigInt group_order(GroupKind kind, std::size_t dim) {
    if (dim == 0) {
        throw Error(ErrorKind::invalid_dimension, "group dimension must be >= 1");
    }
    if (kind == GroupKind::symplectic) {
        if (dim % 2 != 0) {
            throw Error(ErrorKind::invalid_dimension, "symplectic group needs even dimension");
        }
        const std::size_t n = dim / 2;
        BigInt order = BigInt(1) << (n * n);
        for (std::size_t i = 1; i <= n; ++i) {
            order *= (BigInt(1) << (2 * i)) - 1;
        }
        return order;
    }
    BigInt order = 1;
    for (std::size_t m = 2; m <= dim; ++m) {
        order *= orthogonal_level_count(m);
    }
    return order;
}

// ---------------------------------------------------------------------------
// Orthogonal sampling.

namespace detail {

/// First-column target at level m from the trailing m-1 bits b:
/// f = (p(b) + 1) (+) b, which is odd and equals j only when b is all ones
/// and m is odd.
inline BitVec level_column(const BitVec &b) {
    BitVec head(1);
    head.set(0, !b.parity());
    return head.concat(b);
}

/// g = h_b h_a (1 (+) g_prev) at each level, from level 2 up to N.
/// `columns[m - 2]` is the level-m first-column target.
inline OrthogonalMap orthogonal_from_columns(std::size_t dim, const std::vector<BitVec> &columns) {
    BitMatrix g = BitMatrix::identity(1);
    for (std::size_t m = 2; m <= dim; ++m) {
        g = BitMatrix::direct_sum(BitMatrix::identity(1), g);
        const BitVec &f = columns[m - 2];
        BitVec e = BitVec::unit(m, 0);
        auto [a, b] = find_householders(e, f);
        reflect_rows(g, a);
        reflect_rows(g, b);
    }
    return unchecked_orthogonal(std::move(g));
}

template <class Rng>
BitVec random_bits(std::size_t len, Rng &rng) {
    BitVec v(len);
    std::uint64_t pool = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (i % 64 == 0) {
            pool = static_cast<std::uint64_t>(rng());
        }
        v.set(i, (pool >> (i % 64)) & 1U);
    }
    return v;
}

inline BitVec bits_of(const BigInt &value, std::size_t len, bool msb_first) {
    BitVec v(len);
    for (std::size_t j = 0; j < len; ++j) {
        if (boost::multiprecision::bit_test(value, static_cast<unsigned>(j))) {
            v.set(msb_first ? len - 1 - j : j);
        }
    }
    return v;
}

inline void check_index(const BigInt &index, const BigInt &order) {
    if (index < 1 || index > order) {
        throw Error(ErrorKind::index_out_of_range, "index must lie in [1, |G|]");
    }
}

}  // namespace detail

/// Index-to-element bijection [1, |O(N)|] -> O(N, F2).
///
/// index - 1 is split into mixed-radix digits, the top level N taking the
/// least significant digit. The digit at level m, written MSB-first as m-1
/// bits b, selects the first column (p(b) + 1) (+) b.
inline OrthogonalMap sample_orthogonal(std::size_t dim, const BigInt &index) {
    detail::check_index(index, group_order(GroupKind::orthogonal, dim));
    std::vector<BitVec> columns(dim > 1 ? dim - 1 : 0);
    BigInt rest = index - 1;
    for (std::size_t m = dim; m >= 2; --m) {
        BigInt p = orthogonal_level_count(m);
        BigInt digit = rest % p;
        rest /= p;
        columns[m - 2] = detail::level_column(detail::bits_of(digit, m - 1, true));
    }
    return detail::orthogonal_from_columns(dim, columns);
}

/// Uniform draw from O(N, F2): each level's first column is drawn uniformly
/// from its admissible set.
template <class Rng>
OrthogonalMap sample_orthogonal_random(std::size_t dim, Rng &rng) {
    if (dim == 0) {
        throw Error(ErrorKind::invalid_dimension, "orthogonal group needs dim >= 1");
    }
    std::vector<BitVec> columns(dim > 1 ? dim - 1 : 0);
    for (std::size_t m = 2; m <= dim; ++m) {
        BitVec b;
        do {
            b = detail::random_bits(m - 1, rng);
        } while (m % 2 == 1 && b.all());
        columns[m - 2] = detail::level_column(b);
    }
    return detail::orthogonal_from_columns(dim, columns);
}

inline OrthogonalMap sample_orthogonal_random(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_orthogonal_random(dim, rng);
}

// ---------------------------------------------------------------------------
// Symplectic sampling (Pauli basis), after Koenig and Smolin.

namespace detail {

/// h1, h2 with Z_h2 Z_h1 x = y, Z_h(v) = v + <h, v> h in the Pauli form.
inline std::pair<BitVec, BitVec> find_transvection(const BitVec &x, const BitVec &y) {
    const std::size_t n = x.size();
    BitVec zero(n);
    if (x == y) {
        return {zero, zero};
    }
    if (symp_product(x, y, Basis::pauli)) {
        return {x ^ y, zero};
    }
    auto nonzero_pair = [](const BitVec &u, std::size_t i) { return u.get(i) || u.get(i + 1); };
    BitVec z(n);
    for (std::size_t i = 0; i < n; i += 2) {
        if (nonzero_pair(x, i) && nonzero_pair(y, i)) {
            z.set(i, x.get(i) != y.get(i));
            z.set(i + 1, x.get(i + 1) != y.get(i + 1));
            if (!z.get(i) && !z.get(i + 1)) {
                z.set(i + 1);
                if (x.get(i) != x.get(i + 1)) {
                    z.set(i);
                }
            }
            return {x ^ z, y ^ z};
        }
    }
    for (std::size_t i = 0; i < n; i += 2) {
        if (nonzero_pair(x, i) && !nonzero_pair(y, i)) {
            if (x.get(i) == x.get(i + 1)) {
                z.set(i + 1);
            } else {
                z.set(i + 1, x.get(i));
                z.set(i, x.get(i + 1));
            }
            break;
        }
    }
    for (std::size_t i = 0; i < n; i += 2) {
        if (!nonzero_pair(x, i) && nonzero_pair(y, i)) {
            if (y.get(i) == y.get(i + 1)) {
                z.set(i + 1);
            } else {
                z.set(i + 1, y.get(i));
                z.set(i, y.get(i + 1));
            }
            break;
        }
    }
    return {x ^ z, y ^ z};
}

struct SymplecticLevel {
    BitVec f1;    // nonzero, length 2m: image of e_1
    BitVec bits;  // length 2m - 1: selects the image of e_2
};

inline SymplecticMap symplectic_from_levels(const std::vector<SymplecticLevel> &levels) {
    // levels[m - 1] belongs to Sp(2m); build from m = 1 upward.
    BitMatrix g;
    for (std::size_t m = 1; m <= levels.size(); ++m) {
        const std::size_t nn = 2 * m;
        const SymplecticLevel &lv = levels[m - 1];
        BitVec e1 = BitVec::unit(nn, 0);
        auto [t0, t1] = find_transvection(e1, lv.f1);
        BitVec eprime = e1;
        for (std::size_t j = 2; j < nn; ++j) {
            eprime.set(j, lv.bits.get(j - 1));
        }
        BitVec h0 = transvection_apply(t1, transvection_apply(t0, eprime, Basis::pauli), Basis::pauli);
        BitVec f1 = lv.bits.get(0) ? BitVec(nn) : lv.f1;
        g = m == 1 ? BitMatrix::identity(2) : BitMatrix::direct_sum(BitMatrix::identity(2), g);
        for (std::size_t j = 0; j < nn; ++j) {
            BitVec r = g.row(j);
            r = transvection_apply(t0, r, Basis::pauli);
            r = transvection_apply(t1, r, Basis::pauli);
            r = transvection_apply(h0, r, Basis::pauli);
            r = transvection_apply(f1, r, Basis::pauli);
            g.row(j) = r;
        }
    }
    // Rows of g are the images of the standard basis; return the map with
    // those images as columns.
    return unchecked_symplectic(g.transpose(), Basis::pauli);
}

}  // namespace detail

/// Index-to-element bijection [1, |Sp(dim)|] -> Sp(dim, F2), Pauli basis.
inline SymplecticMap sample_symplectic(std::size_t dim, const BigInt &index) {
    detail::check_index(index, group_order(GroupKind::symplectic, dim));
    const std::size_t n = dim / 2;
    std::vector<detail::SymplecticLevel> levels(n);
    BigInt rest = index - 1;
    for (std::size_t m = n; m >= 1; --m) {
        const std::size_t nn = 2 * m;
        BigInt s = (BigInt(1) << nn) - 1;
        BigInt k = rest % s + 1;
        rest /= s;
        BigInt bits_value = rest % (BigInt(1) << (nn - 1));
        rest >>= (nn - 1);
        levels[m - 1] = {detail::bits_of(k, nn, false), detail::bits_of(bits_value, nn - 1, false)};
    }
    return detail::symplectic_from_levels(levels);
}

template <class Rng>
SymplecticMap sample_symplectic_random(std::size_t dim, Rng &rng) {
    if (dim == 0 || dim % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "symplectic group needs even dimension");
    }
    const std::size_t n = dim / 2;
    std::vector<detail::SymplecticLevel> levels(n);
    for (std::size_t m = 1; m <= n; ++m) {
        BitVec f1;
        do {
            f1 = detail::random_bits(2 * m, rng);
        } while (f1.none());
        levels[m - 1] = {std::move(f1), detail::random_bits(2 * m - 1, rng)};
    }
    return detail::symplectic_from_levels(levels);
}

inline SymplecticMap sample_symplectic_random(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_symplectic_random(dim, rng);
}

// ---------------------------------------------------------------------------
// Decomposition into reflections.

/// h_{w_1} h_{w_2} ... h_{w_k}.
inline BitMatrix reflection_product(std::size_t dim, const std::vector<BitVec> &word) {
    BitMatrix m = BitMatrix::identity(dim);
    for (std::size_t k = word.size(); k-- > 0;) {
        reflect_rows(m, word[k]);
    }
    return m;
}

/// Householder word whose product (in listed order) is S; at most 2N
/// reflections. Column i is sent to e_i by reflections supported on indices
/// >= i, which fix the columns already reduced.
inline std::vector<BitVec> decompose_orthogonal(const OrthogonalMap &s) {
    const std::size_t n = s.dim();
    BitMatrix t = s.matrix();
    std::vector<BitVec> word;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t d = n - i;
        BitVec col = t.column(i).slice(i, d);
        BitVec target = BitVec::unit(d, 0);
        if (col == target) {
            continue;
        }
        auto [a, b] = find_householders(col, target);
        BitVec pad(i);
        BitVec fa = pad.concat(a);
        BitVec fb = pad.concat(b);
        reflect_rows(t, fa);
        word.push_back(fa);
        if (!fb.none()) {
            reflect_rows(t, fb);
            word.push_back(fb);
        }
    }
    // t is now the identity: h_{w_k} ... h_{w_1} S = I, so S = h_{w_1} ... h_{w_k}.
    return word;
}

/// Expands h_a into weight-2/4 reflections via h_b h_a' h_b = h_{h_b a'}:
/// with b hitting three ones of a and one zero, h_b a = a + b has weight k-2.
/// The returned word's product equals h_a.
inline std::vector<BitVec> reduce_to_elementary(const BitVec &a) {
    if (a.parity()) {
        throw Error(ErrorKind::odd_parity, "reduce_to_elementary needs even a");
    }
    if (a.none()) {
        throw Error(ErrorKind::invalid_dimension, "reduce_to_elementary needs a != 0");
    }
    if (a.all()) {
        throw Error(ErrorKind::invalid_dimension, "h_j cannot be generated from weight-2/4 reflections");
    }
    const std::size_t w = a.weight();
    if (w <= 4) {
        return {a};
    }
    BitVec b(a.size());
    std::size_t taken = 0;
    for (std::size_t i = 0; i < a.size() && taken < 3; ++i) {
        if (a.get(i)) {
            b.set(i);
            ++taken;
        }
    }
    for (std::size_t i = a.size(); i-- > 0;) {
        if (!a.get(i)) {
            b.set(i);
            break;
        }
    }
    std::vector<BitVec> inner = reduce_to_elementary(a ^ b);
    std::vector<BitVec> word;
    word.reserve(inner.size() + 2);
    word.push_back(b);
    word.insert(word.end(), inner.begin(), inner.end());
    word.push_back(b);
    return word;
}

}  // namespace majorana
