#ifndef SRCIRC_EMBEDDING_HPP
#define SRCIRC_EMBEDDING_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "srcirc/exact/poly.hpp"
#include "srcirc/exact/rational.hpp"

namespace srcirc {

/// Self-reciprocal polynomial of degree 2g,
///   P(x) = sum_{k<g} c_k (x^{2g-k} + x^k) + c_g x^g,   c_0 != 0.
class CoeffVector {
public:
    CoeffVector() = default;

    /// Takes c_0..c_g; g is inferred as size - 1.
    explicit CoeffVector(std::vector<Rational> c) : c_(std::move(c)) {
        if (c_.size() < 2) throw InputError("need at least two coefficients c_0, c_1");
        if (c_.front() == 0) throw InputError("leading coefficient c_0 must be nonzero");
    }

    int g() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](std::size_t k) const { return c_.at(k); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    /// All 2g+1 coefficients of P in ascending powers of x.
    std::vector<Rational> full() const {
        const std::size_t gg = c_.size() - 1;
        std::vector<Rational> out(2 * gg + 1);
        for (std::size_t k = 0; k <= gg; ++k) out[k] = out[2 * gg - k] = c_[k];
        return out;
    }

    /// P(1) = 2 sum_{k<g} c_k + c_g.
    Rational value_at_one() const {
        Rational s(0);
        for (std::size_t k = 0; k + 1 < c_.size(); ++k) s += 2 * c_[k];
        return s + c_.back();
    }

    friend bool operator==(const CoeffVector& a, const CoeffVector& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

/// Inverse of full(): reads c_0..c_g from a palindromic ascending list.
inline CoeffVector from_full(const std::vector<Rational>& p) {
    if (p.size() < 3 || p.size() % 2 == 0) throw InputError("self-reciprocal polynomial must have even degree >= 2");
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != p[p.size() - 1 - k]) throw InputError("coefficient list is not palindromic");
    return CoeffVector(std::vector<Rational>(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(p.size() / 2 + 1)));
}

/// Positive rational standing in for log q.
class LogScale {
public:
    explicit LogScale(Rational L = Rational(2)) : L_(std::move(L)) {
        if (sgn(L_) <= 0) throw DomainError("log-scale must be positive");
    }

    const Rational& value() const noexcept { return L_; }

    /// Throws unless the endpoint factors 1 - mL stay nonzero for m <= g.
    void check_for_degree(int g) const {
        for (int m = 1; m <= g; ++m)
            if (L_ * m == 1) throw DomainError("log-scale 1/" + std::to_string(m) + " makes C_g vanish");
    }

private:
    Rational L_;
};

struct SimpleEmbedding {
    Rational L;
};
struct OmegaEmbedding {
    Rational t;
};
struct DirectEmbedding {};
struct SymbolicOmegaEmbedding {};

using Provenance = std::variant<DirectEmbedding, SimpleEmbedding, OmegaEmbedding, SymbolicOmegaEmbedding>;

/// Coefficients C_g, ..., C_{-g} of the exponential polynomial
///   E(z) = sum_m C_m e^{i m z L}.
/// Entries are stored in that order; at(m) indexes by m.
template <class T>
class SymbolVectorT {
public:
    SymbolVectorT() = default;

    SymbolVectorT(std::vector<T> entries, Provenance provenance = DirectEmbedding{})
        : entries_(std::move(entries)), provenance_(std::move(provenance)) {
        if (entries_.size() < 3 || entries_.size() % 2 == 0)
            throw InputError("symbol vector needs 2g+1 entries with g >= 1");
        if (entries_.front() == 0 || entries_.back() == 0) throw InputError("endpoint entries C_g, C_{-g} must be nonzero");
    }

    int g() const noexcept { return static_cast<int>(entries_.size() / 2); }

    /// C_m for -g <= m <= g.
    const T& at(int m) const {
        if (m < -g() || m > g()) throw DimensionError("symbol index out of range");
        return entries_[static_cast<std::size_t>(g() - m)];
    }

    const std::vector<T>& entries() const noexcept { return entries_; }
    const Provenance& provenance() const noexcept { return provenance_; }

    /// Index-reversed vector, C#_m = C_{-m}.
    SymbolVectorT reflected() const {
        return SymbolVectorT(std::vector<T>(entries_.rbegin(), entries_.rend()), DirectEmbedding{});
    }

    /// sum_m C_m, the value E(0).
    T sum() const {
        T s(0);
        for (const auto& e : entries_) s += e;
        return s;
    }

    friend bool operator==(const SymbolVectorT& a, const SymbolVectorT& b) { return a.entries_ == b.entries_; }

private:
    std::vector<T> entries_;
    Provenance provenance_;
};

using SymbolVector = SymbolVectorT<Rational>;
using LaurentSymbolVector = SymbolVectorT<LaurentPoly>;

/// C_m = c_{g-m}(1 - mL), C_{-m} = c_{g-m}(1 + mL), m = 0..g.
inline SymbolVector embed_simple(const CoeffVector& c, const LogScale& L) {
    const int g = c.g();
    L.check_for_degree(g);
    std::vector<Rational> out(static_cast<std::size_t>(2 * g + 1));
    for (int m = -g; m <= g; ++m) {
        const std::size_t k = static_cast<std::size_t>(g - (m < 0 ? -m : m));
        out[static_cast<std::size_t>(g - m)] = c[k] * (1 - m * L.value());
    }
    return SymbolVector(std::move(out), SimpleEmbedding{L.value()});
}

/// C_m = c_{g-m} t^{-m}, C_{-m} = c_{g-m} t^m.
inline SymbolVector embed_omega(const CoeffVector& c, const Rational& t) {
    if (t <= 1) throw DomainError("omega embedding needs t > 1");
    const int g = c.g();
    std::vector<Rational> out(static_cast<std::size_t>(2 * g + 1));
    for (int m = -g; m <= g; ++m) {
        const std::size_t k = static_cast<std::size_t>(g - (m < 0 ? -m : m));
        Rational power(1);
        const Rational base = m > 0 ? Rational(1 / t) : t;
        for (int i = 0; i < (m < 0 ? -m : m); ++i) power *= base;
        out[static_cast<std::size_t>(g - m)] = c[k] * power;
    }
    return SymbolVector(std::move(out), OmegaEmbedding{t});
}

/// embed_omega with t kept as an indeterminate.
inline LaurentSymbolVector embed_omega_symbolic(const CoeffVector& c) {
    const int g = c.g();
    std::vector<LaurentPoly> out(static_cast<std::size_t>(2 * g + 1));
    for (int m = -g; m <= g; ++m) {
        const std::size_t k = static_cast<std::size_t>(g - (m < 0 ? -m : m));
        out[static_cast<std::size_t>(g - m)] = LaurentPoly::monomial(c[k], -m);
    }
    return LaurentSymbolVector(std::move(out), SymbolicOmegaEmbedding{});
}

/// Entrywise substitution t -> t0.
inline SymbolVector evaluate(const LaurentSymbolVector& C, const Rational& t0) {
    std::vector<Rational> out;
    out.reserve(C.entries().size());
    for (const auto& e : C.entries()) out.push_back(e.eval(t0));
    return SymbolVector(std::move(out), OmegaEmbedding{t0});
}

}  // namespace srcirc

#endif  // SRCIRC_EMBEDDING_HPP
