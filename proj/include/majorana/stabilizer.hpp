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

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "majorana/f2.hpp"
#include "majorana/group.hpp"
#include "majorana/strings.hpp"

namespace majorana {

/// Even-parity isotropic subspace M of F2^{2n}. The basis order is the one
/// used to define mu-bar, so it is part of the value.
class IsotropicSubspace {
   public:
    IsotropicSubspace() = default;

    std::size_t n() const noexcept {
        return n_;
    }
    std::size_t modes() const noexcept {
        return 2 * n_;
    }
    std::size_t dim() const noexcept {
        return basis_.size();
    }
    const std::vector<BitVec> &basis() const noexcept {
        return basis_;
    }

    /// Coefficients c with sum_i c_i b_i = m, or nullopt when m is not in M.
    std::optional<BitVec> coordinates(const BitVec &m) const {
        if (m.size() != modes()) {
            throw Error(ErrorKind::length_mismatch, "vector length differs from 2n");
        }
        if (basis_.empty()) {
            return m.none() ? std::optional<BitVec>(BitVec(0)) : std::nullopt;
        }
        auto sol = solve_affine(BitMatrix::from_rows(basis_).transpose(), m);
        if (!sol) {
            return std::nullopt;
        }
        return sol->particular;
    }

    bool contains(const BitVec &m) const {
        return coordinates(m).has_value();
    }
    bool contains_all_ones() const {
        return contains(all_ones(modes()));
    }

    friend bool operator==(const IsotropicSubspace &, const IsotropicSubspace &) = default;

   private:
    IsotropicSubspace(std::size_t n, std::vector<BitVec> basis) : n_(n), basis_(std::move(basis)) {
    }
    friend IsotropicSubspace make_isotropic_unchecked(std::size_t n, std::vector<BitVec> basis);

    std::size_t n_ = 0;
    std::vector<BitVec> basis_;
};

inline IsotropicSubspace make_isotropic_unchecked(std::size_t n, std::vector<BitVec> basis) {
    return IsotropicSubspace(n, std::move(basis));
}

/// Checks even parity, pairwise commutation, independence and dim <= n.
/// Rows keep the caller's order.
inline IsotropicSubspace validate_generators(const std::vector<BitVec> &rows, std::optional<std::size_t> n = {}) {
    std::size_t modes = 0;
    if (n) {
        if (*n == 0) {
            throw Error(ErrorKind::invalid_dimension, "isotropic subspace needs n >= 1");
        }
        modes = 2 * *n;
    } else {
        if (rows.empty()) {
            throw Error(ErrorKind::invalid_dimension, "cannot infer n from an empty generator list");
        }
        modes = rows.front().size();
    }
    if (modes == 0 || modes % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "generator length must be even and positive");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != modes) {
            throw Error(ErrorKind::length_mismatch, "generators differ in length");
        }
        if (rows[i].parity()) {
            throw Error(ErrorKind::odd_parity, "odd-parity row " + rows[i].to_string());
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (symp_product(rows[i], rows[k])) {
                throw Error(ErrorKind::not_isotropic,
                            "rows " + rows[k].to_string() + " and " + rows[i].to_string() + " anticommute");
            }
        }
    }
    if (rank(rows) != rows.size()) {
        throw Error(ErrorKind::dependent_rows, "generators are linearly dependent");
    }
    if (rows.size() > modes / 2) {
        throw Error(ErrorKind::not_isotropic, "isotropic dimension exceeds n");
    }
    return make_isotropic_unchecked(modes / 2, rows);
}

/// Validates and stores the subspace in reduced row-echelon form.
inline IsotropicSubspace validate_isotropic(const std::vector<BitVec> &rows, std::optional<std::size_t> n = {}) {
    IsotropicSubspace checked = validate_generators(rows, n);
    if (rows.empty()) {
        return checked;
    }
    RowEchelon e = row_reduce(BitMatrix::from_rows(rows));
    return make_isotropic_unchecked(checked.n(), e.reduced.row_vectors());
}

/// First r rows of M_std: 1100..., 0011..., ...
inline IsotropicSubspace canonical_isotropic(std::size_t n, std::size_t r) {
    if (n == 0 || r == 0 || r > n) {
        throw Error(ErrorKind::invalid_dimension, "canonical_isotropic needs 1 <= r <= n");
    }
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < r; ++i) {
        BitVec v(2 * n);
        v.set(2 * i);
        v.set(2 * i + 1);
        rows.push_back(std::move(v));
    }
    return make_isotropic_unchecked(n, std::move(rows));
}

/// Pads every generator with two zero modes; j of the enlarged space is then
/// outside M.
inline IsotropicSubspace add_ancilla(const IsotropicSubspace &m) {
    std::vector<BitVec> rows;
    rows.reserve(m.dim());
    for (const auto &b : m.basis()) {
        rows.push_back(b.concat(BitVec(2)));
    }
    return make_isotropic_unchecked(m.n() + 1, std::move(rows));
}

// ---------------------------------------------------------------------------
// Encoder synthesis.

/// Result of stab_clifford: S and a braid word with S = h_{w_1} h_{w_2} ...
struct EncoderSynthesis {
    OrthogonalMap map;
    std::vector<BitVec> word;
};

/// Orthogonal S with S (1100...)_i = b_i for every generator, in order.
///
/// Builds T with T b_i = e'_i one generator at a time. At step i the
/// generator's image m has a prefix made of equal pairs (it commutes with the
/// canonical generators already placed), so h_a with a = prefix (+) a' clears
/// it while a', b' move the trailing block to 1100... Returns S = T^T.
inline EncoderSynthesis stab_clifford_word(const IsotropicSubspace &space) {
    const std::size_t modes = space.modes();
    if (space.contains_all_ones()) {
        throw Error(ErrorKind::all_ones_in_span, "j lies in span(M); add ancilla modes first");
    }
    BitMatrix t = BitMatrix::identity(modes);
    std::vector<BitVec> word;
    for (std::size_t i = 0; i < space.dim(); ++i) {
        const std::size_t head = 2 * i;
        const std::size_t tail = modes - head;
        BitVec m = t.apply(space.basis()[i]);
        BitVec prefix = m.slice(0, head);
        BitVec trailing = m.slice(head, tail);
        if (trailing.none()) {
            throw Error(ErrorKind::dependent_rows, "generator " + std::to_string(i + 1) + " reduces to zero");
        }
        if (trailing.all()) {
            throw Error(ErrorKind::all_ones_in_span, "generator " + std::to_string(i + 1) + " reduces to j");
        }
        BitVec target(tail);
        target.set(0);
        target.set(1);
        if (trailing == target && prefix.none()) {
            continue;
        }
        BitVec a_tail(tail);
        BitVec b_tail(tail);
        if (trailing == target) {
            // h_a then h_b with a' = b' = 0110... move the prefix out and back.
            a_tail.set(1);
            a_tail.set(2);
            b_tail = a_tail;
        } else {
            std::tie(a_tail, b_tail) = find_householders(trailing, target);
        }
        BitVec a = prefix.concat(a_tail);
        BitVec b = BitVec(head).concat(b_tail);
        for (const BitVec *h : {&a, &b}) {
            if (!h->none()) {
                reflect_rows(t, *h);
                word.push_back(*h);
            }
        }
    }
    // T = h_{w_k} ... h_{w_1}, so S = T^T = h_{w_1} ... h_{w_k}.
    return {unchecked_orthogonal(t.transpose()), std::move(word)};
}

inline OrthogonalMap stab_clifford(const IsotropicSubspace &space) {
    return stab_clifford_word(space).map;
}

// ---------------------------------------------------------------------------
// Stabilizers.

/// S(M, v): generators (-1)^{v^T b_i} mu(b_i). The sign vector is stored as
/// the lexicographically minimal representative of v + M.
class Stabilizer {
   public:
    Stabilizer() = default;

    Stabilizer(IsotropicSubspace space, BitVec sign) : space_(std::move(space)), sign_(std::move(sign)) {
        if (sign_.size() != space_.modes()) {
            throw Error(ErrorKind::length_mismatch, "sign vector length differs from 2n");
        }
        canonicalize();
    }

    explicit Stabilizer(IsotropicSubspace space) : Stabilizer(space, BitVec(space.modes())) {
    }

    const IsotropicSubspace &space() const noexcept {
        return space_;
    }
    const BitVec &sign_vector() const noexcept {
        return sign_;
    }
    std::size_t n() const noexcept {
        return space_.n();
    }
    std::size_t logical_count() const noexcept {
        return space_.n() - space_.dim();
    }

    friend bool operator==(const Stabilizer &, const Stabilizer &) = default;

   private:
    void canonicalize() {
        if (space_.dim() == 0) {
            return;
        }
        RowEchelon e = row_reduce(BitMatrix::from_rows(space_.basis()));
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            if (sign_.get(e.pivots[r])) {
                sign_ ^= e.reduced.row(r);
            }
        }
    }

    IsotropicSubspace space_;
    BitVec sign_;
};

/// mu-bar(m): product of mu(b_i) over the expansion of m, in basis order.
inline MajoranaString modified_string(const IsotropicSubspace &space, const BitVec &m) {
    auto coeffs = space.coordinates(m);
    if (!coeffs) {
        throw Error(ErrorKind::out_of_span, "vector " + m.to_string() + " is not in the stabilizer space");
    }
    MajoranaString out = MajoranaString::identity(space.modes());
    for (std::size_t i = 0; i < space.dim(); ++i) {
        if (coeffs->get(i)) {
            out = compose(out, MajoranaString{PhaseExp(0), space.basis()[i], Basis::majorana});
        }
    }
    return out;
}

/// (-1)^{v^T m} mu-bar(m).
inline MajoranaString stabilizer_element(const Stabilizer &stab, const BitVec &m) {
    MajoranaString s = modified_string(stab.space(), m);
    if (stab.sign_vector().dot(m)) {
        s.phase += PhaseExp(2);
    }
    return s;
}

/// 2k vectors spanning the omega-centralizer of M modulo M.
inline std::vector<BitVec> logical_generators(const Stabilizer &stab) {
    const IsotropicSubspace &space = stab.space();
    const std::size_t modes = space.modes();
    std::vector<BitVec> centralizer;
    if (space.dim() == 0) {
        for (std::size_t i = 0; i < modes; ++i) {
            centralizer.push_back(BitVec::unit(modes, i));
        }
    } else {
        // Rows omega b_i; omega is symmetric so x in the kernel commutes with every b_i.
        BitMatrix constraints(space.dim(), modes);
        for (std::size_t i = 0; i < space.dim(); ++i) {
            const BitVec &b = space.basis()[i];
            constraints.row(i) = b.parity() ? b ^ all_ones(modes) : b;
        }
        centralizer = kernel_basis(constraints);
    }
    std::vector<BitVec> span = space.basis();
    std::vector<BitVec> logicals;
    std::size_t current = span.size();
    for (const auto &c : centralizer) {
        span.push_back(c);
        std::size_t next = rank(span);
        if (next > current) {
            logicals.push_back(c);
            current = next;
        } else {
            span.pop_back();
        }
    }
    return logicals;
}

/// <(-1)^F> of a maximal stabilizer state: (-1)^{p(v)}.
inline int state_parity(const Stabilizer &stab) {
    if (stab.space().dim() != stab.n()) {
        throw Error(ErrorKind::invalid_dimension, "state parity needs a maximal stabilizer (r = n)");
    }
    return stab.sign_vector().parity() ? -1 : 1;
}

/// Conjugation by mu(a): the character shifts by a.
inline Stabilizer apply_string(const Stabilizer &stab, const BitVec &a) {
    if (a.size() != stab.space().modes()) {
        throw Error(ErrorKind::length_mismatch, "string length differs from 2n");
    }
    return Stabilizer(stab.space(), stab.sign_vector() ^ a);
}

/// Maps generators and the sign vector through S.
inline Stabilizer transform_stabilizer(const OrthogonalMap &s, const Stabilizer &stab) {
    if (s.dim() != stab.space().modes()) {
        throw Error(ErrorKind::length_mismatch, "orthogonal map dimension differs from 2n");
    }
    std::vector<BitVec> rows;
    for (const auto &b : stab.space().basis()) {
        rows.push_back(s.apply(b));
    }
    return Stabilizer(validate_isotropic(rows, stab.n()), s.apply(stab.sign_vector()));
}

// ---------------------------------------------------------------------------
// File format:
//   n=<n> r=<r>
//   <r generator bitstrings>
//   [sign=<bitstring>]

struct StabilizerFile {
    std::size_t n = 0;
    std::vector<BitVec> generators;
    std::optional<BitVec> sign;
};

inline StabilizerFile parse_stabilizer_file(std::istream &in) {
    StabilizerFile f;
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
                line.pop_back();
            }
            if (!line.empty()) {
                return true;
            }
        }
        return false;
    };
    if (!next_line()) {
        throw Error(ErrorKind::parse_error, "empty stabilizer file");
    }
    std::size_t r = 0;
    {
        std::istringstream header(line);
        std::string n_tok;
        std::string r_tok;
        if (!(header >> n_tok >> r_tok) || n_tok.rfind("n=", 0) != 0 || r_tok.rfind("r=", 0) != 0) {
            throw Error(ErrorKind::parse_error, "header must read 'n=<n> r=<r>'");
        }
        try {
            f.n = std::stoul(n_tok.substr(2));
            r = std::stoul(r_tok.substr(2));
        } catch (const std::exception &) {
            throw Error(ErrorKind::parse_error, "bad number in header '" + line + "'");
        }
    }
    if (f.n == 0) {
        throw Error(ErrorKind::invalid_dimension, "n must be >= 1");
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (!next_line()) {
            throw Error(ErrorKind::parse_error, "expected " + std::to_string(r) + " generator lines");
        }
        BitVec g = BitVec::from_string(line);
        if (g.size() != 2 * f.n) {
            throw Error(ErrorKind::length_mismatch, "generator '" + line + "' does not have length 2n");
        }
        f.generators.push_back(std::move(g));
    }
    if (next_line()) {
        if (line.rfind("sign=", 0) != 0) {
            throw Error(ErrorKind::parse_error, "unexpected line '" + line + "'");
        }
        BitVec s = BitVec::from_string(line.substr(5));
        if (s.size() != 2 * f.n) {
            throw Error(ErrorKind::length_mismatch, "sign vector does not have length 2n");
        }
        f.sign = std::move(s);
        if (next_line()) {
            throw Error(ErrorKind::parse_error, "trailing content after sign line");
        }
    }
    return f;
}

inline std::string to_string(const Stabilizer &stab) {
    std::string s = "n=" + std::to_string(stab.n()) + " r=" + std::to_string(stab.space().dim()) + "\n";
    for (const auto &b : stab.space().basis()) {
        s += b.to_string() + "\n";
    }
    if (!stab.sign_vector().none()) {
        s += "sign=" + stab.sign_vector().to_string() + "\n";
    }
    return s;
}

}  // namespace majorana
