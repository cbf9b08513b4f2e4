#ifndef SRCIRC_CANONICAL_HPP
#define SRCIRC_CANONICAL_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "srcirc/criterion.hpp"
#include "srcirc/embedding.hpp"
#include "srcirc/exact/poly.hpp"
#include "srcirc/exact/rational.hpp"

namespace srcirc {

using Complex = std::complex<double>;

struct NotConstructible : Error {
    NotConstructible(int n, const std::string& why)
        : Error("not-constructible", "Hamiltonian step " + std::to_string(n) + ": " + why), step(n) {}
    int step;
};

struct HamiltonianStep {
    int n = 0;
    Rational gamma;
};

/// H(a) = diag(1/gamma_n, gamma_n) on the n-th half-step
/// [q^{(n-1)/2}, q^{n/2}), n = 1..2g, with log q = L.
struct StepHamiltonian {
    int g = 0;
    Rational L;
    /// E(0) = sum_m C_m, the terminal value of A.
    Rational e0;
    std::vector<HamiltonianStep> steps;

    bool positive_definite() const {
        for (const auto& s : steps)
            if (sgn(s.gamma) <= 0) return false;
        return true;
    }

    std::vector<Rational> gammas() const {
        std::vector<Rational> out;
        for (const auto& s : steps) out.push_back(s.gamma);
        return out;
    }
};

/// Steps gamma_n = Delta_{n-1} Delta_n for a symbol vector; every Delta_n
/// must be finite and nonzero.
inline StepHamiltonian hamiltonian_from_symbols(const SymbolVector& C, const Rational& L) {
    StepHamiltonian H;
    H.g = C.g();
    H.L = L;
    H.e0 = C.sum();
    const auto Delta = capital_deltas(C);
    for (std::size_t i = 0; i < Delta.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        if (Delta[i].is_indeterminate()) throw NotConstructible(n, "Delta is 0/0");
        if (Delta[i].is_infinite()) throw NotConstructible(n, "Delta is infinite");
        if (Delta[i].value() == 0) throw NotConstructible(n, "Delta vanishes");
    }
    const auto gam = gammas_from_deltas(Delta);
    for (std::size_t i = 0; i < gam.size(); ++i) H.steps.push_back({static_cast<int>(i) + 1, gam[i].value()});
    return H;
}

inline StepHamiltonian hamiltonian(const CoeffVector& c, const LogScale& L = LogScale()) {
    return hamiltonian_from_symbols(embed_simple(c, L), L.value());
}

using Mat2 = std::array<std::array<Complex, 2>, 2>;

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

inline Complex mat2_det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

/// [[cos th, -gamma sin th], [sin th / gamma, cos th]], determinant 1.
inline Mat2 transfer_factor(double gamma, Complex theta) {
    const Complex c = std::cos(theta), s = std::sin(theta);
    return Mat2{{{c, -gamma * s}, {s / gamma, c}}};
}

namespace detail {

inline void check_point(const StepHamiltonian& H, int n, double s) {
    if (n < 1 || n > 2 * H.g) throw DimensionError("interval index must lie in 1..2g");
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("interval fraction must lie in [0, 1]");
}

}  // namespace detail

/// Transfer matrix from the point a = q^{(n-1+s)/2} to the right end q^g.
/// s = 1 is accepted and gives the left limit at the breakpoint q^{n/2}.
inline Mat2 transfer_product(const StepHamiltonian& H, int n, double s, Complex z) {
    detail::check_point(H, n, s);
    const double L = H.L.get_d();
    const auto& st = H.steps;
    Mat2 M = transfer_factor(st[static_cast<std::size_t>(n - 1)].gamma.get_d(), z * (L * (1.0 - s) / 2.0));
    for (int k = n + 1; k <= 2 * H.g; ++k)
        M = mat2_mul(M, transfer_factor(st[static_cast<std::size_t>(k - 1)].gamma.get_d(), z * (L / 2.0)));
    return M;
}

/// (A(a,z), B(a,z)) = E(0) M (1, 0)^T.
inline std::pair<Complex, Complex> eval_AB(const StepHamiltonian& H, Complex z, int n, double s) {
    const Mat2 M = transfer_product(H, n, s, z);
    const double e0 = H.e0.get_d();
    return {e0 * M[0][0], e0 * M[1][0]};
}

/// K(a; z, w) = (conj(A(w)) B(z) - conj(B(w)) A(z)) / (pi (z - conj w)).
inline Complex kernel_K(const StepHamiltonian& H, int n, double s, Complex z, Complex w) {
    const Complex d = z - std::conj(w);
    if (d == Complex(0.0, 0.0)) throw DomainError("kernel pole at z = conj(w)");
    const auto [Az, Bz] = eval_AB(H, z, n, s);
    const auto [Aw, Bw] = eval_AB(H, w, n, s);
    return (std::conj(Aw) * Bz - std::conj(Bw) * Az) / (std::numbers::pi * d);
}

struct OdeResidual {
    /// |-(2/L) dA/ds - z(-gamma B)| and |-(2/L) dB/ds - z A/gamma| with
    /// central differences.
    double residual_A = 0.0;
    double residual_B = 0.0;
    /// |A| + |B| at the centre, for relative comparisons.
    double scale = 0.0;
};

struct StencilError : Error {
    explicit StencilError(const std::string& what) : Error("stencil", what) {}
};

/// Central-difference check of -a d/da (A,B) = z J H(a) (A,B) inside the
/// n-th interval. In the fraction s, a d/da = (2/L) d/ds.
inline OdeResidual ode_residual(const StepHamiltonian& H, Complex z, int n, double s, double h) {
    detail::check_point(H, n, s);
    if (!(h > 0.0) || s - h < 0.0 || s + h > 1.0) throw StencilError("stencil leaves the interval");
    const double L = H.L.get_d();
    const double gamma = H.steps[static_cast<std::size_t>(n - 1)].gamma.get_d();
    const auto [Ap, Bp] = eval_AB(H, z, n, s + h);
    const auto [Am, Bm] = eval_AB(H, z, n, s - h);
    const auto [A, B] = eval_AB(H, z, n, s);
    const Complex dA = (Ap - Am) / (2.0 * h), dB = (Bp - Bm) / (2.0 * h);
    OdeResidual r;
    r.residual_A = std::abs(-(2.0 / L) * dA - z * (-gamma * B));
    r.residual_B = std::abs(-(2.0 / L) * dB - z * (A / gamma));
    r.scale = std::abs(A) + std::abs(B);
    return r;
}

namespace detail {

/// Polynomial with Gaussian-rational coefficients, stored as re + i im.
struct ComplexPoly {
    Poly re;
    Poly im;
};

inline ComplexPoly cmul(const ComplexPoly& a, const ComplexPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ComplexPoly cadd(const ComplexPoly& a, const ComplexPoly& b) { return {a.re + b.re, a.im + b.im}; }

}  // namespace detail

/// P(x) = (P(1)/2^{2g}) [1 0] prod_n [[x+1, i g_n (x-1)], [-i (x-1)/g_n, x+1]] [1 0]^T
/// expanded exactly; the imaginary part must cancel.
inline CoeffVector reconstruct_polynomial(const std::vector<Rational>& gammas, const Rational& p1) {
    if (gammas.empty() || gammas.size() % 2 != 0) throw InputError("need 2g step values");
    for (const auto& gm : gammas)
        if (gm == 0) throw DomainError("zero step value makes a transfer factor singular");
    using detail::ComplexPoly;
    const Poly xp1(std::vector<Rational>{1, 1});
    const Poly xm1(std::vector<Rational>{-1, 1});
    ComplexPoly v0{Poly(1), Poly()}, v1{Poly(), Poly()};
    for (const auto& gm : gammas) {
        const ComplexPoly diag{xp1, Poly()};
        const ComplexPoly upper{Poly(), xm1 * gm};                  // i g (x-1)
        const ComplexPoly lower{Poly(), xm1 * Rational(-1 / gm)};   // -i (x-1)/g
        ComplexPoly n0 = detail::cadd(detail::cmul(v0, diag), detail::cmul(v1, lower));
        ComplexPoly n1 = detail::cadd(detail::cmul(v0, upper), detail::cmul(v1, diag));
        v0 = std::move(n0);
        v1 = std::move(n1);
    }
    if (!v0.im.is_zero()) throw Error("internal", "imaginary residue in reconstructed polynomial");
    Rational scale = p1;
    for (std::size_t i = 0; i < gammas.size(); ++i) scale /= 2;
    const Poly p = v0.re * scale;
    std::vector<Rational> full(gammas.size() + 1, Rational(0));
    for (std::size_t k = 0; k < full.size(); ++k) full[k] = p.coeff(k);
    return from_full(full);
}

}  // namespace srcirc

#endif  // SRCIRC_CANONICAL_HPP
