#ifndef SRCIRC_CERTIFY_HPP
#define SRCIRC_CERTIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "srcirc/criterion.hpp"
#include "srcirc/embedding.hpp"
#include "srcirc/exact/poly.hpp"
#include "srcirc/exact/sturm.hpp"

namespace srcirc {

/// det(E^+ +- E^- J_n) over the Laurent ring. Columns beyond n come from
/// the lower-triangular E^+ alone, so the determinant factors as
/// C_{-g}^{2g+1-n} times the top-left n x n block determinant.
inline std::pair<LaurentPoly, LaurentPoly> symbolic_det_pair(const LaurentSymbolVector& C, int n) {
    const int g = C.g();
    if (n < 1 || n > 2 * g) throw DimensionError("n must lie in 1..2g");
    const auto [plus, minus] = build_E_plus_minus(C);
    LaurentPoly corner(1);
    for (int i = 0; i < 2 * g + 1 - n; ++i) corner *= C.at(-g);
    const std::size_t nn = static_cast<std::size_t>(n);
    const LaurentPoly dp = corner * laurent_det(plus_minus_matrix(plus, minus, n, +1).top_left(nn));
    const LaurentPoly dm = corner * laurent_det(plus_minus_matrix(plus, minus, n, -1).top_left(nn));
    return {dp, dm};
}

struct SymbolicDelta {
    int n = 0;
    LaurentPoly det_plus;
    LaurentPoly det_minus;
    /// delta_n(c; t) = numerator / denominator in lowest terms, with the
    /// odd-n factor (t^{2g}-1)/(t^{2g}+1) folded in, powers of t cleared and
    /// the denominator primitive with positive leading coefficient.
    Poly numerator;
    Poly denominator;
    /// det_minus vanishes identically; no ratio exists.
    bool degenerate = false;

    ExtRational eval(const Rational& t) const {
        if (degenerate) return ExtRational::indeterminate();
        return ExtRational::ratio(numerator.eval(t), denominator.eval(t));
    }
};

namespace detail {

/// t^{2g} -+ 1.
inline Poly power_plus(int g, long sign) {
    std::vector<Rational> v(static_cast<std::size_t>(2 * g + 1), Rational(0));
    v[0] = sign;
    v.back() = 1;
    return Poly(std::move(v));
}

}  // namespace detail

inline SymbolicDelta symbolic_delta_n(const CoeffVector& c, const LaurentSymbolVector& C, int n) {
    SymbolicDelta r;
    r.n = n;
    std::tie(r.det_plus, r.det_minus) = symbolic_det_pair(C, n);
    if (r.det_minus.is_zero()) {
        r.degenerate = true;
        return r;
    }
    Poly num = r.det_plus.cleared();
    Poly den = r.det_minus.cleared();
    if (!num.is_zero()) {
        const int shift = r.det_plus.low() - r.det_minus.low();
        if (shift > 0) num = num.shift_up(static_cast<std::size_t>(shift));
        else if (shift < 0) den = den.shift_up(static_cast<std::size_t>(-shift));
    }
    if (n % 2 == 1) {
        num = num * detail::power_plus(c.g(), -1);
        den = den * detail::power_plus(c.g(), +1);
    }
    if (num.is_zero()) {
        r.numerator = Poly();
        r.denominator = Poly(1);
        return r;
    }
    const Poly g = Poly::gcd(num, den);
    num = Poly::exact_div(num, g);
    den = Poly::exact_div(den, g);
    const Poly den_prim = den.primitive();
    const Rational scale = den_prim.lead() / den.lead();
    r.numerator = num * scale;
    r.denominator = den_prim;
    return r;
}

/// delta_n(c; t) as exact rational functions of t, n = 1..2g.
inline std::vector<SymbolicDelta> symbolic_delta(const CoeffVector& c) {
    const auto C = embed_omega_symbolic(c);
    std::vector<SymbolicDelta> out;
    for (int n = 1; n <= 2 * c.g(); ++n) out.push_back(symbolic_delta_n(c, C, n));
    return out;
}

enum class CertificateClass { CertifiedOnT, CertifiedFail, Inconclusive };

inline std::string to_string(CertificateClass c) {
    switch (c) {
        case CertificateClass::CertifiedOnT: return "CertifiedOnT";
        case CertificateClass::CertifiedFail: return "CertifiedFail";
        case CertificateClass::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

struct CertificateRecord {
    int n = 0;
    SymbolicDelta delta;
    int roots_plus = 0;
    int roots_minus = 0;
    Rational sample_t;
    int sample_sign = 0;
};

struct SignCertificate {
    CertificateClass cls = CertificateClass::Inconclusive;
    std::vector<CertificateRecord> records;
    std::optional<int> witness_n;
    /// Closed rational interval [lo, hi] in t > 1 containing a point where
    /// delta_n(c; t) is not in (0, inf); lo == hi for an exact witness point.
    std::optional<std::pair<Rational, Rational>> witness;
    std::string reason;
};

/// First of 2, 3, 5/2, 7/3 that is a root of none of the polynomials.
inline Rational choose_sample_point(const std::vector<const Poly*>& polys) {
    const Rational candidates[] = {Rational(2), Rational(3), make_rational(5, 2), make_rational(7, 3)};
    for (const auto& t : candidates) {
        bool clash = false;
        for (const Poly* p : polys)
            if (p->eval(t) == 0) clash = true;
        if (!clash) return t;
    }
    throw DomainError("every candidate sample point is a root");
}

/// Decides 0 < delta_n(c; t) < inf for all n and all t > 1. An exact pass
/// over the default grid catches most failures cheaply; otherwise both
/// determinants are shown root-free on (1, inf) (Descartes' rule after the
/// shift t = 1 + x, Sturm when that is not decisive) and their signs are
/// read at one sample point.
inline SignCertificate certify_on_circle(const CoeffVector& c) {
    SignCertificate cert;
    for (const auto& t : default_grid()) {
        const DeltaReport rep = delta_omega(c, t);
        if (auto n = rep.first_failure()) {
            cert.cls = CertificateClass::CertifiedFail;
            cert.witness_n = n;
            cert.witness = std::make_pair(t, t);
            cert.reason = "delta_" + std::to_string(*n) + "(c; " + to_string(t) +
                          ") = " + rep.records[static_cast<std::size_t>(*n - 1)].delta.str();
            return cert;
        }
    }
    const auto C = embed_omega_symbolic(c);
    const Rational one(1);
    for (int n = 1; n <= 2 * c.g(); ++n) {
        CertificateRecord rec;
        rec.n = n;
        rec.delta = symbolic_delta_n(c, C, n);
        if (rec.delta.det_plus.is_zero() || rec.delta.det_minus.is_zero()) {
            cert.cls = CertificateClass::Inconclusive;
            cert.witness_n = n;
            cert.reason = "determinant vanishes identically in t at n=" + std::to_string(n);
            cert.records.push_back(std::move(rec));
            return cert;
        }
        const Poly& pp = rec.delta.det_plus.cleared();
        const Poly& pm = rec.delta.det_minus.cleared();
        rec.roots_plus = count_roots_above(pp, one);
        rec.roots_minus = count_roots_above(pm, one);
        rec.sample_t = choose_sample_point({&pp, &pm});
        const int odd_sign = 1;  // (t^{2g}-1)/(t^{2g}+1) > 0 for t > 1
        rec.sample_sign = pp.sign_at(rec.sample_t) * pm.sign_at(rec.sample_t) * odd_sign;
        const int n_now = n;
        auto fail = [&](const Poly& p, const std::string& what) {
            cert.cls = CertificateClass::CertifiedFail;
            cert.witness_n = n_now;
            const auto iv = isolate_roots(p, one);
            cert.witness = iv.front();
            cert.reason = what + " determinant has a root in (" + to_string(iv.front().first) + ", " +
                          to_string(iv.front().second) + "] at n=" + std::to_string(n_now);
        };
        if (rec.roots_minus > 0) {
            fail(pm, "minus");
            cert.records.push_back(std::move(rec));
            return cert;
        }
        if (rec.roots_plus > 0) {
            fail(pp, "plus");
            cert.records.push_back(std::move(rec));
            return cert;
        }
        if (rec.sample_sign < 0) {
            cert.cls = CertificateClass::CertifiedFail;
            cert.witness_n = n;
            cert.witness = std::make_pair(rec.sample_t, rec.sample_t);
            cert.reason = "delta_" + std::to_string(n) + " is negative on all of t > 1";
            cert.records.push_back(std::move(rec));
            return cert;
        }
        cert.records.push_back(std::move(rec));
    }
    cert.cls = CertificateClass::CertifiedOnT;
    return cert;
}

}  // namespace srcirc

#endif  // SRCIRC_CERTIFY_HPP
