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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
// The dense checks here use their own matrix representation (textbook
// Jordan-Wigner: gamma_{2k-1} = Z..Z X, gamma_{2k} = Z..Z Y) rather than the
// library's oracle. Every string identity tested is representation-independent,
// so agreement is a genuine cross-check.

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "majorana/design.hpp"
#include "majorana/stabilizer.hpp"

using namespace majorana;

namespace {

using Mat = Eigen::MatrixXcd;
using Cx = std::complex<double>;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// ---------------------------------------------------------------------------
// Independent oracles.

Cx ipow(int a) {
    static const Cx t[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return t[((a % 4) + 4) % 4];
}

Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

class Rep {
   public:
    explicit Rep(std::size_t n) : n_(n) {
        Mat id = Mat::Identity(2, 2), x(2, 2), y(2, 2), z(2, 2);
        x << 0, 1, 1, 0;
        y << 0, Cx(0, -1), Cx(0, 1), 0;
        z << 1, 0, 0, -1;
        for (std::size_t k = 0; k < n; ++k) {
            for (const Mat *tail : {&x, &y}) {
                Mat m = Mat::Identity(1, 1);
                for (std::size_t q = 0; q < n; ++q) {
                    m = kron(m, q < k ? z : q == k ? *tail : id);
                }
                gamma_.push_back(m);
            }
        }
    }

    Mat identity() const {
        return Mat::Identity(Eigen::Index{1} << n_, Eigen::Index{1} << n_);
    }

    /// i^{phase} i^{C(|v|,2)} gamma^{v} in increasing mode order.
    Mat string(int phase, const BitVec &v) const {
        Mat m = identity();
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v.get(k)) {
                m = m * gamma_[k];
            }
        }
        const std::size_t w = v.weight();
        return ipow(phase + static_cast<int>((w * (w - 1) / 2) % 2)) * m;
    }

    Mat string(const MajoranaString &s) const {
        return string(s.phase.value(), s.v);
    }

    Mat braid(const BitVec &a) const {
        return (identity() + Cx(0, 1) * string(0, a)) / std::sqrt(2.0);
    }

   private:
    std::size_t n_;
    std::vector<Mat> gamma_;
};

bool close(const Mat &a, const Mat &b, double tol) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

BitMatrix eta(std::size_t dim) {
    BitMatrix m(dim, dim);
    for (std::size_t k = 0; k + 1 < dim; k += 2) {
        m.set(k, k + 1);
        m.set(k + 1, k);
    }
    return m;
}

BitMatrix omega(std::size_t dim) {
    BitMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m.set(r, c, r != c);
        }
    }
    return m;
}

bool orthogonal(const BitMatrix &m) {
    return m * m.transpose() == BitMatrix::identity(m.rows());
}

bool symplectic_pauli(const BitMatrix &m) {
    return m.transpose() * eta(m.rows()) * m == eta(m.rows());
}

BitMatrix householder(const BitVec &a) {
    BitMatrix h = BitMatrix::identity(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            if (a.get(r) && a.get(c)) {
                h.set(r, c, !h.get(r, c));
            }
        }
    }
    return h;
}

BitVec vec(std::size_t len, std::uint64_t x) {
    BitVec v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v.set(i, (x >> i) & 1);
    }
    return v;
}

BitVec random_vec(std::size_t len, std::mt19937_64 &rng) {
    BitVec v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v.set(i, rng() & 1);
    }
    return v;
}

BitVec random_even_nonzero(std::size_t len, std::mt19937_64 &rng) {
    for (;;) {
        BitVec v = random_vec(len, rng);
        if (!v.parity() && !v.none()) {
            return v;
        }
    }
}

/// Brute-force f_+ and c_+ of S.
std::pair<std::uint64_t, std::uint64_t> brute_even_profile(const BitMatrix &s) {
    const std::size_t n = s.rows();
    BitVec j(n);
    for (std::size_t i = 0; i < n; ++i) {
        j.set(i);
    }
    std::uint64_t fp = 0, cp = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        BitVec v = vec(n, x);
        if (v.parity()) {
            continue;
        }
        BitVec sv = s.apply(v);
        fp += sv == v;
        cp += sv == (v ^ j);
    }
    return {fp, cp};
}

std::uint64_t brute_fixed(const BitMatrix &s) {
    std::uint64_t f = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << s.rows()); ++x) {
        BitVec v = vec(s.rows(), x);
        f += s.apply(v) == v;
    }
    return f;
}

/// (1/|G|) sum x^{t-1} over a list of per-element values.
Rational brute_frame(const std::vector<Rational> &values, std::size_t t) {
    Rational sum = 0;
    for (const auto &x : values) {
        Rational p = 1;
        for (std::size_t k = 1; k < t; ++k) {
            p *= x;
        }
        sum += p;
    }
    return sum / Rational(static_cast<long>(values.size()));
}

std::string str(const Rational &r) {
    return rational_to_string(r);
}

// ---------------------------------------------------------------------------
// Criteria.

Outcome group_orders() {
    Outcome o;
    std::ostringstream d;
    const std::map<std::size_t, long> expect{{2, 2}, {4, 48}, {6, 23040}};
    for (const auto &[dim, order] : expect) {
        std::set<BitMatrix> seen;
        bool members = true;
        for (long i = 1; i <= order; ++i) {
            BitMatrix m = sample_orthogonal(dim, i).matrix();
            members = members && orthogonal(m);
            seen.insert(m);
        }
        const bool ok = group_order(GroupKind::orthogonal, dim) == order && members &&
                        seen.size() == static_cast<std::size_t>(order);
        o.pass = o.pass && ok;
        d << "|O(" << dim << ")|=" << group_order(GroupKind::orthogonal, dim) << " distinct=" << seen.size() << " ";
    }
    o.detail = d.str();
    return o;
}

Outcome symplectic_orders() {
    Outcome o;
    std::ostringstream d;
    const std::map<std::size_t, long> expect{{2, 6}, {4, 720}};
    for (const auto &[dim, order] : expect) {
        std::set<BitMatrix> seen;
        bool members = true;
        for (long i = 1; i <= order; ++i) {
            BitMatrix m = sample_symplectic(dim, i).matrix();
            members = members && symplectic_pauli(m);
            seen.insert(m);
        }
        const bool ok = group_order(GroupKind::symplectic, dim) == order && members &&
                        seen.size() == static_cast<std::size_t>(order);
        o.pass = o.pass && ok;
        d << "|Sp(" << dim << ")|=" << group_order(GroupKind::symplectic, dim) << " distinct=" << seen.size() << " ";
    }
    o.detail = d.str();
    return o;
}

Outcome jordan_wigner() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t dim = 2; dim <= 64; dim += 2) {
        BitMatrix w = make_form(Form::jordan_wigner, dim);
        o.pass = o.pass && w * w == BitMatrix::identity(dim) && w.transpose() * eta(dim) * w == omega(dim);
        ++checked;
    }
    o.detail = std::to_string(checked) + " even dims up to 64";
    return o;
}

Outcome phase_algebra() {
    Outcome o;
    std::size_t pairs = 0, bad = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        Rep rep(n);
        const std::size_t dim = 2 * n;
        std::vector<Mat> dense;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << dim); ++x) {
            dense.push_back(rep.string(0, vec(dim, x)));
        }
        for (std::uint64_t x = 0; x < dense.size(); ++x) {
            for (std::uint64_t y = 0; y < dense.size(); ++y) {
                for (int a = 0; a < 4; ++a) {
                    for (int b = 0; b < 4; ++b) {
                        MajoranaString s1{PhaseExp(a), vec(dim, x), Basis::majorana};
                        MajoranaString s2{PhaseExp(b), vec(dim, y), Basis::majorana};
                        ++pairs;
                        if (!close(rep.string(compose(s1, s2)), ipow(a + b) * dense[x] * dense[y], 0)) {
                            ++bad;
                        }
                    }
                }
            }
        }
    }
    std::size_t diag = 0, diag_bad = 0;
    for (std::size_t dim = 2; dim <= 16; dim += 2) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << dim); ++x) {
            BitVec v = vec(dim, x);
            ++diag;
            diag_bad += zeta_coeff(v, v).value() != 0;
        }
    }
    o.pass = bad == 0 && diag_bad == 0;
    o.detail = std::to_string(pairs) + " phased pairs (" + std::to_string(bad) + " off), " + std::to_string(diag) +
               " zeta(v,v) checks (" + std::to_string(diag_bad) + " off)";
    return o;
}

Outcome braid_correctness() {
    Outcome o;
    std::mt19937_64 rng(0xB4A1D);
    std::size_t bad = 0;
    double worst = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + t % 4;
        Rep rep(n);
        BitVec a = random_even_nonzero(2 * n, rng);
        MajoranaString s{PhaseExp(static_cast<int>(rng() % 4)), random_vec(2 * n, rng), Basis::majorana};
        Mat b = rep.braid(a);
        Mat lhs = b * rep.string(s) * b.adjoint();
        double err = (lhs - rep.string(braid_action(a, s))).cwiseAbs().maxCoeff();
        worst = std::max(worst, err);
        bad += err > 1e-9;
    }
    o.pass = bad == 0;
    o.detail = "500 cases, " + std::to_string(bad) + " off, max err " + std::to_string(worst);
    return o;
}

/// Random isotropic generator rows: each new even row is drawn from the
/// kernel of the rows so far plus the parity row, and kept if independent.
std::vector<BitVec> random_isotropic(std::size_t n, std::size_t r, std::mt19937_64 &rng) {
    const std::size_t dim = 2 * n;
    std::vector<BitVec> rows;
    while (rows.size() < r) {
        std::vector<BitVec> constraints = rows;
        constraints.push_back(all_ones(dim));
        std::vector<BitVec> ker = kernel_basis(BitMatrix::from_rows(constraints));
        BitVec v(dim);
        for (const auto &k : ker) {
            if (rng() & 1) {
                v ^= k;
            }
        }
        std::vector<BitVec> trial = rows;
        trial.push_back(v);
        if (rank(BitMatrix::from_rows(trial)) == trial.size()) {
            rows.push_back(v);
        }
    }
    return rows;
}

Outcome encoder() {
    Outcome o;
    std::mt19937_64 rng(0xE4C0DE);
    std::size_t bad = 0, ancilla = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + rng() % 16;
        const std::size_t r = 1 + rng() % n;
        IsotropicSubspace space = validate_generators(random_isotropic(n, r, rng), n);
        if (space.contains_all_ones()) {
            space = add_ancilla(space);
            ++ancilla;
        }
        BitMatrix s = stab_clifford(space).matrix();
        bool ok = orthogonal(s);
        for (std::size_t i = 0; i < space.dim(); ++i) {
            BitVec canon(space.modes());
            canon.set(2 * i);
            canon.set(2 * i + 1);
            ok = ok && s.apply(canon) == space.basis()[i];
        }
        bad += !ok;
    }
    o.pass = bad == 0;
    o.detail = "1000 subspaces (" + std::to_string(ancilla) + " with ancilla), " + std::to_string(bad) + " off";
    return o;
}

Outcome trace_identity() {
    Outcome o;
    std::mt19937_64 rng(0x7ACE);
    std::size_t bad = 0, zeros = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + t % 3;
        const std::size_t dim = 2 * n;
        Rep rep(n);
        Mat u = rep.identity();
        if (rng() & 1) {
            BitVec p = random_vec(dim, rng);
            if (p.parity()) {
                p.flip(rng() % dim);
            }
            u = rep.string(static_cast<int>(rng() % 4), p);
        }
        BitMatrix s = BitMatrix::identity(dim);
        const std::size_t len = 1 + rng() % 12;
        for (std::size_t k = 0; k < len; ++k) {
            BitVec g = random_even_nonzero(dim, rng);
            u = u * rep.braid(g);
            s = s * householder(g);
        }
        Mat proj = (rep.identity() + rep.string(0, all_ones(dim))) / 2.0;
        const double value = std::norm((proj * u).trace());
        FixedPointProfile p = fixed_point_profile(s);
        auto [fp, cp] = brute_even_profile(s);
        const double expect = static_cast<double>(p.restricted_value());
        const bool profile_ok = p.f_plus() == fp && p.c_plus() == cp;
        const bool is_zero = std::abs(value) <= 1e-9;
        zeros += is_zero;
        bad += !(profile_ok && (is_zero || std::abs(value - expect) <= 1e-9));
    }
    o.pass = bad == 0;
    o.detail = "200 words (" + std::to_string(zeros) + " zero traces), " + std::to_string(bad) + " off";
    return o;
}

Outcome exact_frames() {
    Outcome o;
    std::ostringstream d;
    std::vector<Rational> o4, sp2, o6, sp4;
    for (int i = 1; i <= 48; ++i) {
        auto [fp, cp] = brute_even_profile(sample_orthogonal(4, i).matrix());
        o4.push_back(Rational(static_cast<long>(fp + cp), 2));
    }
    for (int i = 1; i <= 6; ++i) {
        sp2.push_back(Rational(static_cast<long>(brute_fixed(sample_symplectic(2, i).matrix()))));
    }
    for (int i = 1; i <= 23040; ++i) {
        auto [fp, cp] = brute_even_profile(sample_orthogonal(6, i).matrix());
        o6.push_back(Rational(static_cast<long>(fp + cp), 2));
    }
    for (int i = 1; i <= 720; ++i) {
        sp4.push_back(Rational(static_cast<long>(brute_fixed(sample_symplectic(4, i).matrix()))));
    }
    const long target[4] = {1, 2, 5, 15};
    d << "F+(O4)/F(Sp2)/F+(O6)/F(Sp4):";
    for (std::size_t t = 1; t <= 4; ++t) {
        Rational lo4 = *parity_frame_potential(4, t).value;
        Rational lsp2 = *frame_potential(GroupKind::symplectic, 2, t).value;
        Rational lo6 = *parity_frame_potential(6, t).value;
        Rational lsp4 = *frame_potential(GroupKind::symplectic, 4, t).value;
        const bool ok = lo4 == target[t - 1] && lsp2 == target[t - 1] && lo4 == brute_frame(o4, t) &&
                        lsp2 == brute_frame(sp2, t) && lo6 == lsp4 && lo6 == brute_frame(o6, t) &&
                        lsp4 == brute_frame(sp4, t);
        o.pass = o.pass && ok;
        d << " t=" << t << ":" << str(lo4) << "/" << str(lsp2) << "/" << str(lo6) << "/" << str(lsp4);
    }
    o.detail = d.str();
    return o;
}

Outcome design_order() {
    Outcome o;
    Rational f3 = *parity_frame_potential(4, 3).value;
    Rational f4 = *parity_frame_potential(4, 4).value;
    // Haar value at N = 2 is the Catalan number C_t = binom(2t, t) / (t + 1).
    auto catalan = [](long t) {
        BigInt c = 1;
        for (long k = 0; k < t; ++k) {
            c = c * 2 * (2 * k + 1) / (k + 2);
        }
        return c;
    };
    const bool haar_ok = haar_frame_potential(3, 2) == catalan(3) && haar_frame_potential(4, 2) == catalan(4) &&
                         catalan(3) == 5 && catalan(4) == 14;
    o.pass = haar_ok && f3 == Rational(catalan(3)) && f4 == 15 && f4 != Rational(catalan(4));
    o.detail = "F+_3=" + str(f3) + " (Haar 5), F+_4=" + str(f4) + " (Haar 14)";
    return o;
}

Outcome orbit_structure_o4() {
    Outcome o;
    OrbitSummary s = orbit_structure(4, 1, GroupKind::orthogonal, OrbitSpace::full);
    // Independent: orbits under the full enumerated group.
    std::vector<BitMatrix> group;
    for (int i = 1; i <= 48; ++i) {
        group.push_back(sample_orthogonal(4, i).matrix());
    }
    std::set<std::uint64_t> unseen;
    for (std::uint64_t x = 0; x < 16; ++x) {
        unseen.insert(x);
    }
    std::multiset<std::uint64_t> sizes;
    while (!unseen.empty()) {
        BitVec v = vec(4, *unseen.begin());
        std::set<std::uint64_t> orbit;
        for (const auto &g : group) {
            BitVec w = g.apply(v);
            std::uint64_t idx = 0;
            for (std::size_t i = 0; i < 4; ++i) {
                idx |= static_cast<std::uint64_t>(w.get(i)) << i;
            }
            orbit.insert(idx);
        }
        for (auto idx : orbit) {
            unseen.erase(idx);
        }
        sizes.insert(orbit.size());
    }
    std::vector<std::uint64_t> brute(sizes.begin(), sizes.end());
    const std::vector<std::uint64_t> expect{1, 1, 6, 8};
    o.pass = s.count == 4 && s.sizes == expect && brute == expect;
    std::ostringstream d;
    d << s.count << " orbits, sizes {";
    for (std::size_t i = 0; i < s.sizes.size(); ++i) {
        d << (i ? ", " : "") << s.sizes[i];
    }
    d << "}";
    o.detail = d.str();
    return o;
}

Outcome quotient_map() {
    Outcome o;
    std::vector<OrthogonalMap> group;
    for (int i = 1; i <= 48; ++i) {
        group.push_back(sample_orthogonal(4, i));
    }
    std::vector<BitMatrix> image;
    std::map<BitMatrix, int> fiber;
    bool members = true;
    for (const auto &g : group) {
        image.push_back(quotient_action(g).matrix());
        members = members && symplectic_pauli(image.back());
        fiber[image.back()] += 1;
    }
    std::size_t hom_bad = 0;
    for (std::size_t a = 0; a < group.size(); ++a) {
        for (std::size_t b = 0; b < group.size(); ++b) {
            hom_bad += quotient_action(group[a] * group[b]).matrix() != image[a] * image[b];
        }
    }
    std::set<BitMatrix> sp2;
    for (int i = 1; i <= 6; ++i) {
        sp2.insert(sample_symplectic(2, i).matrix());
    }
    bool onto = fiber.size() == sp2.size();
    bool uniform = true;
    for (const auto &[m, count] : fiber) {
        onto = onto && sp2.count(m);
        uniform = uniform && count == 8;
    }
    o.pass = members && hom_bad == 0 && onto && uniform;
    o.detail = "2304 products (" + std::to_string(hom_bad) + " off), image " + std::to_string(fiber.size()) +
               " of 6, fibers " + (uniform ? "all 8" : "non-uniform");
    return o;
}

Outcome monte_carlo() {
    Outcome o;
    std::ostringstream d;
    FrameOptions opt;
    opt.mode = FrameMode::monte_carlo;
    opt.samples = 1'000'000;
    opt.seed = 20240601;
    for (std::size_t t : {2u, 3u}) {
        const double exact = static_cast<double>(*parity_frame_potential(6, t).value);
        FramePotentialReport mc = parity_frame_potential(6, t, opt);
        const double z = std::abs(mc.estimate - exact) / mc.std_error;
        o.pass = o.pass && mc.samples == opt.samples && z <= 5.0;
        d << "t=" << t << ": " << mc.estimate << " +- " << mc.std_error << " vs " << exact << " (" << z << " sigma) ";
    }
    o.detail = d.str();
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"group orders O(2), O(4), O(6)", group_orders},
        {"symplectic orders Sp(2), Sp(4)", symplectic_orders},
        {"Jordan-Wigner W^2 = I, omega = W^T eta W", jordan_wigner},
        {"phase algebra vs dense products", phase_algebra},
        {"braid conjugation", braid_correctness},
        {"encoder synthesis", encoder},
        {"parity-restricted trace identity", trace_identity},
        {"exact frame potentials", exact_frames},
        {"design order of O(4)", design_order},
        {"orbits of O(4)", orbit_structure_o4},
        {"quotient homomorphism O(4) -> Sp(2)", quotient_map},
        {"Monte Carlo vs exact at n = 3", monte_carlo},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        while (!out.detail.empty() && out.detail.back() == ' ') {
            out.detail.pop_back();
        }
        failures += !out.pass;
        std::printf("%s %2zu %s: %s [%.2fs]\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failures ? 1 : 0;
}
