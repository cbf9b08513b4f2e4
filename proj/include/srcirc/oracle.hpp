#ifndef SRCIRC_ORACLE_HPP
#define SRCIRC_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "srcirc/embedding.hpp"
#include "srcirc/exact/matrix.hpp"
#include "srcirc/exact/poly.hpp"
#include "srcirc/exact/rational.hpp"

namespace srcirc {

using Complex = std::complex<double>;

struct OracleFailure : Error {
    explicit OracleFailure(const std::string& what) : Error("oracle-failure", what) {}
};

namespace detail {

inline std::pair<Complex, Complex> horner_with_derivative(const std::vector<double>& a, Complex z) {
    Complex p(0.0, 0.0), dp(0.0, 0.0);
    for (std::size_t k = a.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[k];
    }
    return {p, dp};
}

inline double coeff_norm(const std::vector<double>& a) {
    double s = 0.0;
    for (double x : a) s += std::abs(x);
    return s;
}

/// Residual |p(z)| relative to the coefficient 1-norm scaled by max(1,|z|)^deg.
inline double relative_residual(const std::vector<double>& a, Complex z) {
    const double r = std::max(1.0, std::abs(z));
    return std::abs(horner_with_derivative(a, z).first) / (coeff_norm(a) * std::pow(r, static_cast<double>(a.size() - 1)));
}

}  // namespace detail

/// All roots of the real polynomial sum_k a_k x^k (ascending coefficients)
/// by Aberth-Ehrlich simultaneous iteration. Starting points sit on the
/// circle of radius |a_0/a_d|^{1/d} at angles 2 pi k/d + 0.4.
inline std::vector<Complex> find_roots(std::vector<double> a, int max_iter = 2000) {
    while (!a.empty() && a.back() == 0.0) a.pop_back();
    if (a.size() < 2) throw DomainError("root finding needs degree >= 1");
    std::size_t zeros = 0;
    while (a[zeros] == 0.0) ++zeros;
    std::vector<Complex> roots(zeros, Complex(0.0, 0.0));
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(zeros));
    const std::size_t d = a.size() - 1;
    if (d == 0) return roots;
    const double lead = a.back();
    for (double& x : a) x /= lead;
    const double radius = std::pow(std::abs(a[0]), 1.0 / static_cast<double>(d));
    std::vector<Complex> z(d);
    for (std::size_t k = 0; k < d; ++k)
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4);
    bool converged = false;
    for (int it = 0; it < max_iter && !converged; ++it) {
        converged = true;
        for (std::size_t i = 0; i < d; ++i) {
            const auto [p, dp] = detail::horner_with_derivative(a, z[i]);
            if (p == Complex(0.0, 0.0)) continue;
            const Complex ratio = p / dp;
            Complex sum(0.0, 0.0);
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            const Complex w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            z[i] -= w;
            if (std::abs(w) > 1e-15 * std::max(1.0, std::abs(z[i]))) converged = false;
        }
    }
    for (const auto& r : z)
        if (detail::relative_residual(a, r) > 1e-10)
            throw OracleFailure("root finder did not converge (residual above 1e-10)");
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

/// Yun's square-free decomposition: p = lc * prod_i f_i^i, f_i monic,
/// squarefree and pairwise coprime. Returns (i, f_i) for nonconstant f_i.
inline std::vector<std::pair<int, Poly>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<int, Poly>> out;
    if (p.degree() < 1) return out;
    const Poly dp = p.derivative();
    const Poly a0 = Poly::gcd(p, dp);
    Poly b = Poly::exact_div(p, a0);
    Poly c = Poly::exact_div(dp, a0);
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() >= 1; ++i) {
        const Poly a = Poly::gcd(b, d);
        if (a.degree() >= 1) out.emplace_back(i, a);
        b = Poly::exact_div(b, a);
        c = Poly::exact_div(d, a);
        d = c - b.derivative();
    }
    return out;
}

enum class CircleClass { AllSimpleOnT, OnTWithMultiple, OffT, Uncertain };

inline std::string to_string(CircleClass c) {
    switch (c) {
        case CircleClass::AllSimpleOnT: return "AllSimpleOnT";
        case CircleClass::OnTWithMultiple: return "OnTWithMultiple";
        case CircleClass::OffT: return "OffT";
        case CircleClass::Uncertain: return "Uncertain";
    }
    return "Unknown";
}

struct RootReport {
    std::vector<Complex> roots;
    /// |root| - 1 per root.
    std::vector<double> deviation;
    /// Size of the cluster (roots closer than the separation threshold) each root belongs to.
    std::vector<int> cluster_size;
    CircleClass cls = CircleClass::Uncertain;
};

/// Roots with | |r| - 1 | <= tol_inner count as on T, beyond tol_outer as
/// off T, in between as Uncertain. Roots closer than `separation` are one
/// multiple root.
inline RootReport classify_circle(const std::vector<Complex>& roots, double tol_inner = 1e-9, double tol_outer = 1e-6,
                                  double separation = 1e-6) {
    if (roots.empty()) throw DomainError("no roots to classify");
    RootReport rep;
    rep.roots = roots;
    bool off = false, uncertain = false, multiple = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double dev = std::abs(roots[i]) - 1.0;
        rep.deviation.push_back(dev);
        if (std::abs(dev) > tol_outer) off = true;
        else if (std::abs(dev) > tol_inner) uncertain = true;
        int cluster = 0;
        for (const auto& r : roots)
            if (std::abs(r - roots[i]) <= separation) ++cluster;
        rep.cluster_size.push_back(cluster);
        if (cluster > 1) multiple = true;
    }
    if (off) rep.cls = CircleClass::OffT;
    else if (uncertain) rep.cls = CircleClass::Uncertain;
    else if (multiple) rep.cls = CircleClass::OnTWithMultiple;
    else rep.cls = CircleClass::AllSimpleOnT;
    return rep;
}

inline std::vector<double> to_doubles(const std::vector<Rational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_d());
    return out;
}

/// Roots of an exact polynomial with multiplicities made exact: each
/// square-free factor is solved separately and its roots repeated.
inline std::vector<Complex> find_roots_exact(const Poly& p) {
    std::vector<Complex> out;
    for (const auto& [mult, f] : squarefree_decomposition(p)) {
        const auto r = find_roots(to_doubles(f.coeffs()));
        for (int i = 0; i < mult; ++i) out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

struct TakagiChain {
    std::vector<Rational> dets;
    bool pass = false;
};

/// Resultant-type matrix of Q (ascending coefficients q, degree n) and its
/// reversal. With a_k the coefficient of x^{n-k}, row r < n holds a_0..a_n
/// starting at column r and row n+r holds a_n..a_0 starting at column r
/// (real coefficients, so conjugation is trivial). D_k keeps rows and
/// columns {0..k-1} and {n..n+k-1}. All roots of Q lie strictly inside the
/// unit circle iff det D_k > 0 for k = 1..n.
inline TakagiChain takagi_chain(const std::vector<Rational>& q) {
    std::vector<Rational> a = q;
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.size() < 2) throw DomainError("Takagi chain needs degree >= 1");
    std::reverse(a.begin(), a.end());
    const std::size_t n = a.size() - 1;
    RatMatrix D(2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= n; ++k) {
            if (r + k < 2 * n) D(r, r + k) = a[k];
            if (r + k < 2 * n) D(n + r, r + k) = a[n - k];
        }
    TakagiChain chain;
    chain.pass = true;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < k; ++i) idx.push_back(i);
        for (std::size_t i = 0; i < k; ++i) idx.push_back(n + i);
        RatMatrix sub(2 * k, 2 * k);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = D(idx[i], idx[j]);
        chain.dets.push_back(det_bareiss(sub));
        if (sgn(chain.dets.back()) <= 0) chain.pass = false;
    }
    return chain;
}

struct OracleVerdict {
    RootReport roots;
    /// Takagi chain on P'; passes iff every root of P' is strictly inside T.
    TakagiChain takagi;
    /// Whether the chain's pass flag matches cls == AllSimpleOnT.
    bool takagi_agrees = false;
};

/// Numeric root classification of P (authoritative) plus the Takagi chain
/// on P' as a cross-check.
inline OracleVerdict verdict_oracle(const CoeffVector& c, double tol_inner = 1e-9, double tol_outer = 1e-6) {
    OracleVerdict v;
    const Poly p(c.full());
    v.roots = classify_circle(find_roots_exact(p), tol_inner, tol_outer);
    v.takagi = takagi_chain(p.derivative().coeffs());
    v.takagi_agrees = v.takagi.pass == (v.roots.cls == CircleClass::AllSimpleOnT);
    return v;
}

}  // namespace srcirc

#endif  // SRCIRC_ORACLE_HPP
