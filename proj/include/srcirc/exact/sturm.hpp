#ifndef SRCIRC_EXACT_STURM_HPP
#define SRCIRC_EXACT_STURM_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "srcirc/exact/poly.hpp"

namespace srcirc {

/// Raised when a root count is requested for the zero polynomial.
struct UndefinedCountError : Error {
    explicit UndefinedCountError(const std::string& what) : Error("undefined-count", what) {}
};

/// p / gcd(p, p'), normalized to a primitive integer polynomial.
inline Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : Poly(1);
    const Poly g = Poly::gcd(p, p.derivative());
    return Poly::exact_div(p, g).primitive();
}

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k). Each member
/// is rescaled by a positive constant, which leaves sign variations intact.
inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p.content_normalized());
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.content_normalized());
    while (true) {
        Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back((-r).content_normalized());
    }
    return chain;
}

namespace detail {

inline int count_variations(const std::vector<int>& signs) {
    int v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

inline int variations_at(const std::vector<Poly>& chain, const Rational& t) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q.sign_at(t));
    return count_variations(signs);
}

inline int variations_at_infinity(const std::vector<Poly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q.sign_at_pos_infinity());
    return count_variations(signs);
}

/// Removes the factors (t - a) for endpoints a that are roots.
inline Poly strip_endpoint_roots(Poly p, const Rational& lo, const std::optional<Rational>& hi) {
    if (p.eval(lo) == 0) p = Poly::exact_div(p, Poly::linear_root(lo));
    if (hi && p.eval(*hi) == 0) p = Poly::exact_div(p, Poly::linear_root(*hi));
    return p;
}

}  // namespace detail

/// Number of distinct real roots of p in the open interval (lo, hi), or in
/// (lo, +inf) when hi is empty.
inline int sturm_count(const Poly& p, const Rational& lo, const std::optional<Rational>& hi = std::nullopt) {
    if (p.is_zero()) throw UndefinedCountError("root count of the zero polynomial");
    if (hi && *hi <= lo) return 0;
    const Poly q = detail::strip_endpoint_roots(squarefree_part(p), lo, hi);
    if (q.degree() <= 0) return 0;
    const auto chain = sturm_chain(q);
    const int upper = hi ? detail::variations_at(chain, *hi) : detail::variations_at_infinity(chain);
    return detail::variations_at(chain, lo) - upper;
}

/// Root count of the polynomial part of a Laurent polynomial; the interval
/// must lie in t > 0 so that the cleared power of t contributes nothing.
inline int sturm_count(const LaurentPoly& p, const Rational& lo, bool hi_is_infinity,
                       const std::optional<Rational>& hi = std::nullopt) {
    if (p.is_zero()) throw UndefinedCountError("root count of the zero polynomial");
    if (sgn(lo) < 0) throw DomainError("interval must lie in t >= 0");
    if (!hi_is_infinity && !hi) throw InputError("finite interval needs an upper end");
    return sturm_count(p.cleared(), lo, hi_is_infinity ? std::nullopt : hi);
}

/// Coefficients of p(lo + x), ascending in x.
inline std::vector<Rational> taylor_shift(const Poly& p, const Rational& lo) {
    std::vector<Rational> a = p.coeffs();
    const std::size_t d = a.size();
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = d - 1; j-- > i;) a[j] += lo * a[j + 1];
    return a;
}

/// Sign variations of p(lo + x) with the factors x stripped. By Descartes'
/// rule this bounds the number of roots in (lo, +inf), counted with
/// multiplicity, and has the same parity.
inline int descartes_variations(const Poly& p, const Rational& lo) {
    if (p.is_zero()) throw UndefinedCountError("root count of the zero polynomial");
    int v = 0, last = 0;
    for (const auto& x : taylor_shift(p, lo)) {
        const int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

/// Distinct roots in (lo, +inf): Descartes when it is exact (0 or 1
/// variations), Sturm otherwise.
inline int count_roots_above(const Poly& p, const Rational& lo) {
    const int v = descartes_variations(p, lo);
    return v <= 1 ? v : sturm_count(p, lo);
}

/// Upper bound on the absolute value of every real root (Cauchy bound).
inline Rational cauchy_bound(const Poly& p) {
    if (p.degree() < 1) return Rational(1);
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeffs()[static_cast<std::size_t>(i)] / p.lead());
        if (r > m) m = r;
    }
    return m + 1;
}

/// Disjoint rational intervals (a, b], each holding exactly one distinct
/// root of p in (lo, hi) (or (lo, +inf)), in increasing order.
inline std::vector<std::pair<Rational, Rational>> isolate_roots(const Poly& p, const Rational& lo,
                                                                const std::optional<Rational>& hi = std::nullopt) {
    if (p.is_zero()) throw UndefinedCountError("root isolation of the zero polynomial");
    const Poly q = squarefree_part(p);
    std::vector<std::pair<Rational, Rational>> out;
    if (q.degree() <= 0) return out;
    const auto chain = sturm_chain(q);
    Rational top = hi ? *hi : cauchy_bound(q);
    if (!hi && top <= lo) return out;
    // Counts over half-open (a, b]; the open upper end is handled by
    // excluding a root sitting exactly at hi.
    auto count = [&](const Rational& a, const Rational& b) {
        return detail::variations_at(chain, a) - detail::variations_at(chain, b);
    };
    std::vector<std::pair<Rational, Rational>> work{{lo, top}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int n = count(a, b);
        if (hi && b == *hi && q.eval(b) == 0) --n;
        if (n == 0) continue;
        if (n == 1 && !(hi && b == *hi && q.eval(b) == 0)) {
            out.emplace_back(a, b);
            continue;
        }
        Rational mid = (a + b) / 2;
        work.emplace_back(mid, b);
        work.emplace_back(a, mid);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace srcirc

#endif  // SRCIRC_EXACT_STURM_HPP
