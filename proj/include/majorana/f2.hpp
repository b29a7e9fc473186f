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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "majorana/error.hpp"

namespace majorana {

/// Which symplectic form a binary vector is interpreted against.
enum class Basis { majorana, pauli };

inline const char *basis_name(Basis basis) {
    return basis == Basis::majorana ? "majorana" : "pauli";
}

/// Packed vector over F2.
///
/// Index 0 (printed first) lives in the most significant bit of word 0, so
/// comparing the packed words as unsigned integers is lexicographic order on
/// the printed string. Bits past size() are always zero.
class BitVec {
   public:
    using word_t = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_((len + word_bits - 1) / word_bits, 0) {
    }

    static BitVec ones(std::size_t len) {
        BitVec v(len);
        for (auto &w : v.words_) {
            w = ~word_t{0};
        }
        v.mask_tail();
        return v;
    }

    static BitVec unit(std::size_t len, std::size_t index) {
        BitVec v(len);
        v.set(index);
        return v;
    }

    /// Parses a '0'/'1' string, index 0 first.
    static BitVec from_string(std::string_view text) {
        BitVec v(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') {
                v.set(i);
            } else if (text[i] != '0') {
                throw Error(ErrorKind::parse_error, "bad bit character in '" + std::string(text) + "'");
            }
        }
        return v;
    }

    std::size_t size() const noexcept {
        return len_;
    }
    std::size_t num_words() const noexcept {
        return words_.size();
    }
    std::span<const word_t> words() const noexcept {
        return words_;
    }
    std::span<word_t> words() noexcept {
        return words_;
    }

    bool get(std::size_t i) const noexcept {
        return (words_[i / word_bits] >> shift(i)) & 1u;
    }
    bool operator[](std::size_t i) const noexcept {
        return get(i);
    }
    void set(std::size_t i, bool value = true) noexcept {
        word_t m = word_t{1} << shift(i);
        if (value) {
            words_[i / word_bits] |= m;
        } else {
            words_[i / word_bits] &= ~m;
        }
    }
    void flip(std::size_t i) noexcept {
        words_[i / word_bits] ^= word_t{1} << shift(i);
    }

    std::size_t weight() const noexcept {
        std::size_t total = 0;
        for (auto w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }
    bool parity() const noexcept {
        word_t acc = 0;
        for (auto w : words_) {
            acc ^= w;
        }
        return std::popcount(acc) & 1;
    }
    bool none() const noexcept {
        for (auto w : words_) {
            if (w) {
                return false;
            }
        }
        return true;
    }
    bool all() const noexcept {
        return weight() == len_;
    }

    /// Canonical inner product v^T w over F2.
    bool dot(const BitVec &other) const noexcept {
        word_t acc = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            acc ^= words_[k] & other.words_[k];
        }
        return std::popcount(acc) & 1;
    }

    std::optional<std::size_t> first_set(std::size_t from = 0) const noexcept {
        for (std::size_t i = from; i < len_; ++i) {
            if (get(i)) {
                return i;
            }
        }
        return std::nullopt;
    }

    BitVec &operator^=(const BitVec &other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] ^= other.words_[k];
        }
        return *this;
    }
    BitVec &operator&=(const BitVec &other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] &= other.words_[k];
        }
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec &b) noexcept {
        a ^= b;
        return a;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) noexcept {
        a &= b;
        return a;
    }

    friend bool operator==(const BitVec &a, const BitVec &b) noexcept {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(const BitVec &a, const BitVec &b) noexcept {
        if (auto c = a.len_ <=> b.len_; c != 0) {
            return c;
        }
        for (std::size_t k = 0; k < a.words_.size(); ++k) {
            if (auto c = a.words_[k] <=> b.words_[k]; c != 0) {
                return c;
            }
        }
        return std::strong_ordering::equal;
    }

    /// Entrywise 0 <-> 1.
    BitVec complement() const {
        BitVec v = *this;
        for (auto &w : v.words_) {
            w = ~w;
        }
        v.mask_tail();
        return v;
    }

    /// Bits [start, start + count).
    BitVec slice(std::size_t start, std::size_t count) const {
        BitVec v(count);
        for (std::size_t i = 0; i < count; ++i) {
            v.set(i, get(start + i));
        }
        return v;
    }

    /// This vector followed by `tail`.
    BitVec concat(const BitVec &tail) const {
        BitVec v(len_ + tail.len_);
        for (std::size_t k = 0; k < words_.size(); ++k) {
            v.words_[k] = words_[k];
        }
        for (std::size_t i = 0; i < tail.len_; ++i) {
            v.set(len_ + i, tail.get(i));
        }
        return v;
    }

    /// Swaps entries (2k, 2k+1) for every k. Requires even length.
    BitVec swap_pairs() const noexcept {
        constexpr word_t even_idx = 0xAAAAAAAAAAAAAAAAull;  // indices 0, 2, 4, ...
        constexpr word_t odd_idx = 0x5555555555555555ull;
        BitVec v = *this;
        for (auto &w : v.words_) {
            w = ((w & even_idx) >> 1) | ((w & odd_idx) << 1);
        }
        return v;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i) {
            if (get(i)) {
                s[i] = '1';
            }
        }
        return s;
    }

    std::size_t hash() const noexcept {
        std::size_t h = len_ * 0x9E3779B97F4A7C15ull;
        for (auto w : words_) {
            h ^= std::hash<word_t>{}(w) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

   private:
    static constexpr unsigned shift(std::size_t i) noexcept {
        return static_cast<unsigned>(word_bits - 1 - (i % word_bits));
    }
    void mask_tail() noexcept {
        std::size_t r = len_ % word_bits;
        if (r != 0 && !words_.empty()) {
            words_.back() &= ~word_t{0} << (word_bits - r);
        }
    }

    std::size_t len_ = 0;
    std::vector<word_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec &v) const noexcept {
        return v.hash();
    }
};

/// Dense matrix over F2, stored as packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
    }

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m.set(i, i);
        }
        return m;
    }

    static BitMatrix from_rows(std::vector<BitVec> rows) {
        BitMatrix m;
        if (rows.empty()) {
            return m;
        }
        m.cols_ = rows.front().size();
        for (const auto &r : rows) {
            if (r.size() != m.cols_) {
                throw Error(ErrorKind::length_mismatch, "matrix rows have different lengths");
            }
        }
        m.rows_ = std::move(rows);
        return m;
    }

    std::size_t rows() const noexcept {
        return rows_.size();
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool get(std::size_t r, std::size_t c) const noexcept {
        return rows_[r].get(c);
    }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept {
        rows_[r].set(c, value);
    }
    const BitVec &row(std::size_t r) const noexcept {
        return rows_[r];
    }
    BitVec &row(std::size_t r) noexcept {
        return rows_[r];
    }
    const std::vector<BitVec> &row_vectors() const noexcept {
        return rows_;
    }

    BitVec column(std::size_t c) const {
        BitVec v(rows());
        for (std::size_t r = 0; r < rows(); ++r) {
            v.set(r, get(r, c));
        }
        return v;
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows());
        for (std::size_t r = 0; r < rows(); ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (get(r, c)) {
                    t.set(c, r);
                }
            }
        }
        return t;
    }

    /// M v.
    BitVec apply(const BitVec &v) const {
        if (v.size() != cols_) {
            throw Error(ErrorKind::length_mismatch, "matrix-vector size mismatch");
        }
        BitVec out(rows());
        for (std::size_t r = 0; r < rows(); ++r) {
            if (rows_[r].dot(v)) {
                out.set(r);
            }
        }
        return out;
    }

    /// v^T M, returned as a vector.
    BitVec apply_left(const BitVec &v) const {
        if (v.size() != rows()) {
            throw Error(ErrorKind::length_mismatch, "vector-matrix size mismatch");
        }
        BitVec out(cols_);
        for (std::size_t r = 0; r < rows(); ++r) {
            if (v.get(r)) {
                out ^= rows_[r];
            }
        }
        return out;
    }

    friend BitMatrix operator*(const BitMatrix &a, const BitMatrix &b) {
        if (a.cols_ != b.rows()) {
            throw Error(ErrorKind::length_mismatch, "matrix product size mismatch");
        }
        BitMatrix out(a.rows(), b.cols_);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            out.rows_[r] = b.apply_left(a.rows_[r]);
        }
        return out;
    }

    friend BitMatrix operator^(BitMatrix a, const BitMatrix &b) {
        if (a.rows() != b.rows() || a.cols_ != b.cols_) {
            throw Error(ErrorKind::length_mismatch, "matrix sum size mismatch");
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            a.rows_[r] ^= b.rows_[r];
        }
        return a;
    }

    friend bool operator==(const BitMatrix &a, const BitMatrix &b) noexcept {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }
    friend std::strong_ordering operator<=>(const BitMatrix &a, const BitMatrix &b) noexcept {
        if (auto c = a.cols_ <=> b.cols_; c != 0) {
            return c;
        }
        return a.rows_ <=> b.rows_;
    }

    BitMatrix complement() const {
        BitMatrix m = *this;
        for (auto &r : m.rows_) {
            r = r.complement();
        }
        return m;
    }

    /// Block diagonal a (+) b.
    static BitMatrix direct_sum(const BitMatrix &a, const BitMatrix &b) {
        BitMatrix m(a.rows() + b.rows(), a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c) {
                m.set(r, c, a.get(r, c));
            }
        }
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols_; ++c) {
                m.set(a.rows() + r, a.cols_ + c, b.get(r, c));
            }
        }
        return m;
    }

    /// One '0'/'1' row per line, each followed by a newline.
    std::string to_string() const {
        std::string s;
        for (const auto &r : rows_) {
            s += r.to_string();
            s += '\n';
        }
        return s;
    }

    std::size_t hash() const noexcept {
        std::size_t h = cols_;
        for (const auto &r : rows_) {
            h ^= r.hash() + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

   private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct BitMatrixHash {
    std::size_t operator()(const BitMatrix &m) const noexcept {
        return m.hash();
    }
};

// ---------------------------------------------------------------------------
// Matrix text format: one row per line; a blank line (or end of input)
// terminates the block.

/// Reads one matrix block. Leading blank lines are skipped; returns nullopt
/// when the stream holds no further rows.
inline std::optional<BitMatrix> read_matrix(std::istream &in) {
    std::vector<BitVec> rows;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        if (line.empty()) {
            if (rows.empty()) {
                continue;
            }
            break;
        }
        rows.push_back(BitVec::from_string(line));
    }
    if (rows.empty()) {
        return std::nullopt;
    }
    return BitMatrix::from_rows(std::move(rows));
}

// ---------------------------------------------------------------------------
// Row reduction.

struct RowEchelon {
    BitMatrix reduced;                // reduced row-echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each leading row
};

/// Reduced row-echelon form; the pivot of each step is the first row with a
/// set bit in the current column.
inline RowEchelon row_reduce(const BitMatrix &m, std::size_t pivot_cols) {
    std::vector<BitVec> rows = m.row_vectors();
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < pivot_cols && next < rows.size(); ++c) {
        std::size_t p = next;
        while (p < rows.size() && !rows[p].get(c)) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[next]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(c)) {
                rows[r] ^= rows[next];
            }
        }
        pivots.push_back(c);
        ++next;
    }
    // Rows past the pivots are zero on the pivot columns; keep the ones that
    // still carry bits in the trailing (non-pivot) columns.
    std::size_t kept = next;
    for (std::size_t r = next; r < rows.size(); ++r) {
        if (!rows[r].none()) {
            std::swap(rows[kept++], rows[r]);
        }
    }
    rows.resize(kept);
    RowEchelon out;
    out.pivots = std::move(pivots);
    if (!rows.empty()) {
        out.reduced = BitMatrix::from_rows(std::move(rows));
    }
    return out;
}

inline RowEchelon row_reduce(const BitMatrix &m) {
    return row_reduce(m, m.cols());
}

inline std::size_t rank(const BitMatrix &m) {
    return row_reduce(m).pivots.size();
}

inline std::size_t rank(std::span<const BitVec> rows) {
    if (rows.empty()) {
        return 0;
    }
    return rank(BitMatrix::from_rows({rows.begin(), rows.end()}));
}

/// Basis of {x : M x = 0}, one vector per free column in increasing order.
inline std::vector<BitVec> kernel_basis(const BitMatrix &m) {
    const std::size_t n = m.cols();
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec x(n);
        x.set(f);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            if (e.reduced.get(r, f)) {
                x.set(e.pivots[r]);
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Solution set of M x = b: one representative plus a kernel basis.
struct AffineSolution {
    BitVec particular;
    std::vector<BitVec> kernel;

    std::size_t kernel_dim() const noexcept {
        return kernel.size();
    }
};

/// Solves M x = b. Free variables are set to zero in the representative.
/// Returns nullopt when the system is inconsistent.
inline std::optional<AffineSolution> solve_affine(const BitMatrix &m, const BitVec &b) {
    if (m.rows() != b.size()) {
        throw Error(ErrorKind::length_mismatch, "solve_affine: rows(M) != len(b)");
    }
    const std::size_t n = m.cols();
    std::vector<BitVec> aug;
    aug.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVec rhs(1);
        rhs.set(0, b.get(r));
        aug.push_back(m.row(r).concat(rhs));
    }
    AffineSolution sol;
    sol.particular = BitVec(n);
    if (aug.empty()) {
        sol.kernel = kernel_basis(m);
        return sol;
    }
    RowEchelon e = row_reduce(BitMatrix::from_rows(std::move(aug)), n);
    // Rows below the pivots are zero on the coefficient columns; any set
    // right-hand side there makes the system inconsistent.
    const BitMatrix &red = e.reduced;
    for (std::size_t r = e.pivots.size(); r < red.rows(); ++r) {
        if (red.get(r, n)) {
            return std::nullopt;
        }
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        is_pivot[e.pivots[r]] = true;
        if (red.get(r, n)) {
            sol.particular.set(e.pivots[r]);
        }
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec x(n);
        x.set(f);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            if (red.get(r, f)) {
                x.set(e.pivots[r]);
            }
        }
        sol.kernel.push_back(std::move(x));
    }
    return sol;
}

/// True when `v` lies in the span of `rows`.
inline bool in_span(std::span<const BitVec> rows, const BitVec &v) {
    if (rows.empty()) {
        return v.none();
    }
    BitMatrix t = BitMatrix::from_rows({rows.begin(), rows.end()}).transpose();
    return solve_affine(t, v).has_value();
}

// ---------------------------------------------------------------------------
// Structural forms.

enum class Form { omega, omega_lower, eta, eta_lower, jordan_wigner, identity };

inline BitMatrix make_form(Form kind, std::size_t dim) {
    if (dim == 0) {
        throw Error(ErrorKind::invalid_dimension, "form dimension must be >= 1");
    }
    bool needs_even = kind == Form::eta || kind == Form::eta_lower || kind == Form::jordan_wigner;
    if (needs_even && dim % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "eta/eta_lower/jw need an even dimension");
    }
    BitMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            bool paired = (r / 2 == c / 2) && r != c;
            bool bit = false;
            switch (kind) {
                case Form::omega:
                    bit = r != c;
                    break;
                case Form::omega_lower:
                    bit = r > c;
                    break;
                case Form::eta:
                    bit = paired;
                    break;
                case Form::eta_lower:
                    bit = paired && r > c;
                    break;
                case Form::jordan_wigner:
                    // Upper triangle (with diagonal) of the complement of eta.
                    bit = r <= c && !paired;
                    break;
                case Form::identity:
                    bit = r == c;
                    break;
            }
            m.set(r, c, bit);
        }
    }
    return m;
}

inline BitVec all_ones(std::size_t dim) {
    if (dim == 0) {
        throw Error(ErrorKind::invalid_dimension, "all-ones vector needs dim >= 1");
    }
    return BitVec::ones(dim);
}

inline BitVec complement(const BitVec &v) {
    return v.complement();
}
inline BitMatrix complement(const BitMatrix &m) {
    return m.complement();
}

struct WeightParity {
    std::size_t weight;
    bool parity;
};

inline WeightParity weight_parity(const BitVec &v) {
    std::size_t w = v.weight();
    return {w, (w & 1) != 0};
}

/// v^T Omega w for the basis's symplectic form, without building the form.
/// Majorana: omega w = p(w) j + w, so the product is p(v) p(w) + v.w.
inline bool symp_product(const BitVec &v, const BitVec &w, Basis basis = Basis::majorana) {
    if (v.size() != w.size()) {
        throw Error(ErrorKind::length_mismatch, "symplectic product of vectors of different length");
    }
    if (v.size() % 2 != 0) {
        throw Error(ErrorKind::invalid_dimension, "symplectic product needs even length");
    }
    if (basis == Basis::majorana) {
        return (v.parity() && w.parity()) != v.dot(w);
    }
    return v.dot(w.swap_pairs());
}

/// v^T L w where L is the strictly lower-triangular part of the basis's
/// symplectic form (omega_L or eta_L).
inline bool lower_product(const BitVec &v, const BitVec &w, Basis basis = Basis::majorana) {
    if (v.size() != w.size()) {
        throw Error(ErrorKind::length_mismatch, "lower-form product of vectors of different length");
    }
    using word_t = BitVec::word_t;
    auto vw = v.words();
    auto ww = w.words();
    word_t acc = 0;
    if (basis == Basis::majorana) {
        // sum_i v_i * (w_0 + ... + w_{i-1}): exclusive prefix parity of w.
        word_t carry = 0;
        for (std::size_t k = 0; k < ww.size(); ++k) {
            word_t x = ww[k];
            word_t p = x;
            p ^= p >> 1;
            p ^= p >> 2;
            p ^= p >> 4;
            p ^= p >> 8;
            p ^= p >> 16;
            p ^= p >> 32;
            word_t exclusive = (p ^ x) ^ carry;
            acc ^= vw[k] & exclusive;
            if (std::popcount(x) & 1) {
                carry = ~carry;
            }
        }
    } else {
        // sum_k v_{2k+1} w_{2k}.
        constexpr word_t odd_idx = 0x5555555555555555ull;
        for (std::size_t k = 0; k < ww.size(); ++k) {
            acc ^= vw[k] & (ww[k] >> 1) & odd_idx;
        }
    }
    return std::popcount(acc) & 1;
}

}  // namespace majorana

template <>
struct std::hash<majorana::BitVec> {
    std::size_t operator()(const majorana::BitVec &v) const noexcept {
        return v.hash();
    }
};
