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
#include <sstream>
#include <string>
#include <string_view>

#include "majorana/f2.hpp"

namespace majorana {

/// Exponent a of i^a, kept in {0, 1, 2, 3}.
class PhaseExp {
   public:
    constexpr PhaseExp() = default;
    constexpr explicit PhaseExp(int a) : a_(static_cast<std::uint8_t>(((a % 4) + 4) % 4)) {
    }

    constexpr int value() const noexcept {
        return a_;
    }

    constexpr PhaseExp &operator+=(PhaseExp other) noexcept {
        a_ = static_cast<std::uint8_t>((a_ + other.a_) & 3);
        return *this;
    }
    friend constexpr PhaseExp operator+(PhaseExp a, PhaseExp b) noexcept {
        a += b;
        return a;
    }
    friend constexpr PhaseExp operator-(PhaseExp a) noexcept {
        return PhaseExp(4 - a.a_);
    }
    friend constexpr bool operator==(PhaseExp, PhaseExp) = default;

   private:
    std::uint8_t a_ = 0;
};

/// i^a mu(v) (Majorana basis) or i^a pi(v) (Pauli basis).
///
/// The unphased string is Hermitian and squares to the identity; its own
/// normalization i^{v^T L v} is part of the definition of mu(v) / pi(v) and is
/// not stored in `phase`.
struct MajoranaString {
    PhaseExp phase;
    BitVec v;
    Basis basis = Basis::majorana;

    static MajoranaString identity(std::size_t modes, Basis basis = Basis::majorana) {
        return {PhaseExp(0), BitVec(modes), basis};
    }

    std::size_t modes() const noexcept {
        return v.size();
    }

    friend bool operator==(const MajoranaString &, const MajoranaString &) = default;
};

namespace detail {

inline void require_same_length(const BitVec &a, const BitVec &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::length_mismatch, "strings of different length");
    }
    if (a.size() % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "string length must be even");
    }
}

inline void require_compatible(const MajoranaString &a, const MajoranaString &b) {
    if (a.basis != b.basis) {
        throw Error(ErrorKind::basis_mismatch, "strings in different bases");
    }
    require_same_length(a.v, b.v);
}

}  // namespace detail

/// zeta(v, w) with mu(v) mu(w) = zeta(v, w) mu(v + w), as a power of i.
///
///   zeta = (-1)^{v^T L w + f(v, w)} i^{<v, w>}
///   f    = q(v) q(w) + <v, w> (q(v) + q(w) + 1),   q(x) = x^T L x
///
/// with L the strictly lower part of the form. The same closed form holds for
/// Pauli strings with (eta_L, eta) in place of (omega_L, omega).
inline PhaseExp zeta_coeff(const BitVec &v, const BitVec &w, Basis basis = Basis::majorana) {
    detail::require_same_length(v, w);
    const int cross = lower_product(v, w, basis);
    const int qv = lower_product(v, v, basis);
    const int qw = lower_product(w, w, basis);
    const int sp = symp_product(v, w, basis);
    const int f = (qv & qw) ^ (sp & (qv ^ qw ^ 1));
    return PhaseExp(2 * (cross ^ f) + sp);
}

/// Operator product s1 * s2, phase-exact.
inline MajoranaString compose(const MajoranaString &s1, const MajoranaString &s2) {
    detail::require_compatible(s1, s2);
    return {s1.phase + s2.phase + zeta_coeff(s1.v, s2.v, s1.basis), s1.v ^ s2.v, s1.basis};
}

inline bool commutes(const MajoranaString &s1, const MajoranaString &s2) {
    detail::require_compatible(s1, s2);
    return !symp_product(s1.v, s2.v, s1.basis);
}

/// W v. W is the upper triangle (with diagonal) of the complement of eta, so
/// (W v)_i is the parity of v_i..v_end, minus v_{i+1} when i is even.
inline BitVec jordan_wigner_vector(const BitVec &v) {
    if (v.size() % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "Jordan-Wigner map needs even length");
    }
    BitVec out(v.size());
    bool suffix = false;
    for (std::size_t k = v.size(); k-- > 0;) {
        suffix ^= v.get(k);
        bool bit = suffix;
        if (k % 2 == 0) {
            bit ^= v.get(k + 1);
        }
        out.set(k, bit);
    }
    return out;
}

/// Relabels mu(v) <-> pi(W v) and flips the basis tag. W is an involution, so
/// this map is too.
inline MajoranaString jordan_wigner_map(const MajoranaString &s) {
    return {s.phase, jordan_wigner_vector(s.v), s.basis == Basis::majorana ? Basis::pauli : Basis::majorana};
}

/// (-1)^F = mu(j) on n mode pairs.
inline MajoranaString parity_operator(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::invalid_dimension, "parity operator needs n >= 1");
    }
    return {PhaseExp(0), BitVec::ones(2 * n), Basis::majorana};
}

// ---------------------------------------------------------------------------
// Text format: "i^<a> <bitstring>".

inline std::string to_string(const MajoranaString &s) {
    return "i^" + std::to_string(s.phase.value()) + " " + s.v.to_string();
}

inline MajoranaString parse_string(std::string_view text, Basis basis) {
    std::istringstream in{std::string(text)};
    std::string phase_tok;
    std::string bits_tok;
    std::string extra;
    if (!(in >> phase_tok >> bits_tok) || (in >> extra)) {
        throw Error(ErrorKind::parse_error, "expected 'i^<a> <bitstring>', got '" + std::string(text) + "'");
    }
    if (phase_tok.size() != 3 || phase_tok.compare(0, 2, "i^") != 0 || phase_tok[2] < '0' || phase_tok[2] > '3') {
        throw Error(ErrorKind::parse_error, "bad phase token '" + phase_tok + "'");
    }
    BitVec v = BitVec::from_string(bits_tok);
    if (v.size() == 0 || v.size() % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "string length must be even and positive");
    }
    return {PhaseExp(phase_tok[2] - '0'), std::move(v), basis};
}

}  // namespace majorana
