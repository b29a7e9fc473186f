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

// Explicit 2^n x 2^n matrices for n <= 6. Used as ground truth by tests and
// by the `verify` subcommand; nothing in the F2 layer depends on it.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "majorana/f2.hpp"
#include "majorana/group.hpp"
#include "majorana/stabilizer.hpp"
#include "majorana/strings.hpp"

namespace majorana {

using DenseOperator = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDenseModes = 12;
inline constexpr double kDenseTolerance = 1e-10;

namespace detail {

inline void check_dense_modes(std::size_t modes) {
    if (modes == 0 || modes % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "dense operators need an even, positive mode count");
    }
    if (modes > kMaxDenseModes) {
        throw Error(ErrorKind::invalid_dimension, "dense oracle is capped at 2n <= 12");
    }
}

inline Complex i_pow(int a) {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((a % 4) + 4) % 4];
}

inline DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

/// Z^{z} X^{x} on one qubit.
inline DenseOperator single_qubit(bool z, bool x) {
    DenseOperator m(2, 2);
    m << 1.0, 0.0, 0.0, z ? -1.0 : 1.0;
    if (x) {
        DenseOperator xm(2, 2);
        xm << 0.0, 1.0, 1.0, 0.0;
        m = m * xm;
    }
    return m;
}

}  // namespace detail

inline DenseOperator dense_identity(std::size_t n) {
    return DenseOperator::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
}

/// pi(v) = i^{v^T eta_L v} (x)_k Z^{v_{2k-1}} X^{v_{2k}}, qubit 1 leftmost.
inline DenseOperator dense_pauli(const BitVec &v) {
    detail::check_dense_modes(v.size());
    DenseOperator m = DenseOperator::Identity(1, 1);
    for (std::size_t k = 0; k < v.size() / 2; ++k) {
        m = detail::kron(m, detail::single_qubit(v.get(2 * k), v.get(2 * k + 1)));
    }
    return detail::i_pow(lower_product(v, v, Basis::pauli)) * m;
}

/// chi_k = pi(W e_k), the k-th Majorana mode (0-based).
inline DenseOperator dense_mode(std::size_t k, std::size_t n) {
    return dense_pauli(jordan_wigner_vector(BitVec::unit(2 * n, k)));
}

/// mu(v) = i^{v^T omega_L v} chi_1^{v_1} ... chi_2n^{v_2n}.
inline DenseOperator dense_majorana(const BitVec &v) {
    detail::check_dense_modes(v.size());
    const std::size_t n = v.size() / 2;
    DenseOperator m = dense_identity(n);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v.get(k)) {
            m = m * dense_mode(k, n);
        }
    }
    return detail::i_pow(lower_product(v, v, Basis::majorana)) * m;
}

inline DenseOperator dense_string(const MajoranaString &s) {
    DenseOperator m = s.basis == Basis::majorana ? dense_majorana(s.v) : dense_pauli(s.v);
    return detail::i_pow(s.phase.value()) * m;
}

/// B(a) = (I + i mu(a)) / sqrt(2).
inline DenseOperator dense_braid(const BitVec &a) {
    DenseOperator mu = dense_majorana(a);
    DenseOperator id = DenseOperator::Identity(mu.rows(), mu.cols());
    return (id + Complex(0, 1) * mu) / std::sqrt(2.0);
}

/// P B(g_1) ... B(g_k).
inline DenseOperator dense_word(const CliffordWord &w) {
    detail::check_dense_modes(w.modes());
    DenseOperator u = w.prefix ? dense_string(*w.prefix) : dense_identity(w.n);
    for (const auto &g : w.gens) {
        u = u * dense_braid(g);
    }
    return u;
}

/// (1/|M|) sum_m (-1)^{v^T m} mu-bar(m).
inline DenseOperator stabilizer_projector_dense(const Stabilizer &stab) {
    const IsotropicSubspace &space = stab.space();
    detail::check_dense_modes(space.modes());
    const std::size_t r = space.dim();
    DenseOperator sum = DenseOperator::Zero(Eigen::Index{1} << space.n(), Eigen::Index{1} << space.n());
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << r); ++c) {
        BitVec m(space.modes());
        for (std::size_t i = 0; i < r; ++i) {
            if ((c >> i) & 1) {
                m ^= space.basis()[i];
            }
        }
        sum += dense_string(stabilizer_element(stab, m));
    }
    return sum / static_cast<double>(std::uint64_t{1} << r);
}

/// Pi_+ = (I + mu(j)) / 2.
inline DenseOperator even_projector(std::size_t n) {
    return (dense_identity(n) + dense_majorana(all_ones(2 * n))) / 2.0;
}

/// |tr(Pi_+ U)|^2 for a parity-preserving word.
inline double parity_restricted_trace_sq(const CliffordWord &w) {
    if (!w.parity_preserving()) {
        throw Error(ErrorKind::odd_parity, "parity-restricted trace needs a parity-preserving word");
    }
    DenseOperator u = dense_word(w);
    return std::norm((even_projector(w.n) * u).trace());
}

/// O_A = sum_{v_A} c_{v_A} mu_A(v_A), c_{v_A} = 2^{-n} tr(O mu(v_A on A)).
/// `modes` lists 0-based mode indices; its order fixes the embedding.
inline DenseOperator reduce_to_subalgebra(const DenseOperator &o, const std::vector<std::size_t> &modes) {
    if (o.rows() != o.cols() || o.rows() < 2 || (o.rows() & (o.rows() - 1)) != 0) {
        throw Error(ErrorKind::invalid_dimension, "operator dimension must be a power of two >= 2");
    }
    std::size_t n = 0;
    while ((Eigen::Index{1} << n) < o.rows()) {
        ++n;
    }
    detail::check_dense_modes(2 * n);
    if (modes.empty() || modes.size() % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "subalgebra needs an even, nonzero number of modes");
    }
    if (modes.size() > 2 * n) {
        throw Error(ErrorKind::invalid_dimension, "subalgebra larger than the full algebra");
    }
    std::vector<bool> used(2 * n, false);
    for (auto k : modes) {
        if (k >= 2 * n || used[k]) {
            throw Error(ErrorKind::invalid_dimension, "subalgebra modes must be distinct and in range");
        }
        used[k] = true;
    }
    const std::size_t na = modes.size() / 2;
    const double scale = std::ldexp(1.0, -static_cast<int>(n));
    DenseOperator out = DenseOperator::Zero(Eigen::Index{1} << na, Eigen::Index{1} << na);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << modes.size()); ++x) {
        BitVec va(modes.size());
        BitVec full(2 * n);
        for (std::size_t k = 0; k < modes.size(); ++k) {
            if ((x >> k) & 1) {
                va.set(k);
                full.set(modes[k]);
            }
        }
        Complex c = scale * (o * dense_majorana(full)).trace();
        if (std::abs(c) > kDenseTolerance) {
            out += c * dense_majorana(va);
        }
    }
    return out;
}

inline bool approx_equal(const DenseOperator &a, const DenseOperator &b, double tol = kDenseTolerance) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

/// c with U mu(v) U^dagger = c * mu(target), or nullopt when U mu(v) U^dagger
/// is not proportional to mu(target).
inline std::optional<Complex> conjugation_coefficient(const DenseOperator &u, const BitVec &v, const BitVec &target,
                                                      double tol = kDenseTolerance) {
    DenseOperator lhs = u * dense_majorana(v) * u.adjoint();
    DenseOperator rhs = dense_majorana(target);
    Complex c = (rhs.adjoint() * lhs).trace() / static_cast<double>(rhs.rows());
    if (!approx_equal(lhs, c * rhs, tol)) {
        return std::nullopt;
    }
    return c;
}

}  // namespace majorana
