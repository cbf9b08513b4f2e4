#ifndef SRCIRC_EXACT_POLY_HPP
#define SRCIRC_EXACT_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "srcirc/exact/matrix.hpp"
#include "srcirc/exact/rational.hpp"

namespace srcirc {

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(implicit)
    Poly(Rational c) {                   // NOLINT(implicit)
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly monomial(Rational c, std::size_t exponent) {
        if (c == 0) return Poly();
        std::vector<Rational> v(exponent + 1, Rational(0));
        v[exponent] = std::move(c);
        return Poly(std::move(v));
    }

    /// The polynomial t - r.
    static Poly linear_root(const Rational& r) { return Poly(std::vector<Rational>{Rational(-r), Rational(1)}); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& lead() const {
        if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    Rational eval(const Rational& t) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    int sign_at(const Rational& t) const { return sgn(eval(t)); }
    int sign_at_pos_infinity() const { return is_zero() ? 0 : sgn(lead()); }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<Rational> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
        return Poly(std::move(v));
    }

    /// Count of leading zero coefficients, i.e. the multiplicity of t = 0.
    std::size_t low_order() const {
        std::size_t k = 0;
        while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
        return k;
    }

    /// Divides out t^k; the low k coefficients must be zero.
    Poly shift_down(std::size_t k) const {
        if (k > low_order() && !is_zero()) throw DomainError("shift_down would drop nonzero terms");
        if (k >= coeffs_.size()) return Poly();
        return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
    }

    Poly shift_up(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<Rational> v(k, Rational(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(v));
    }

    /// Scaled to integer coefficients with gcd 1 and a positive leading term.
    Poly primitive() const {
        Poly p = content_normalized();
        if (!p.is_zero() && sgn(p.coeffs_.back()) < 0) p = -p;
        return p;
    }

    /// Scaled by a positive rational to integer coefficients with gcd 1.
    Poly content_normalized() const {
        if (is_zero()) return Poly();
        BigInt den_lcm = 1;
        for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        BigInt num_gcd = 0;
        for (const auto& c : coeffs_) {
            const BigInt scaled = c.get_num() * (den_lcm / c.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
        const Rational factor = make_rational(den_lcm, num_gcd);
        return *this * factor;
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        return *this * Rational(1 / lead());
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }

    friend Poly operator*(Poly a, const Rational& s) {
        if (s == 0) return Poly();
        for (auto& c : a.coeffs_) c *= s;
        return a;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator==(const Poly& a, long c) { return a == Poly(c); }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly(), a};
        std::vector<Rational> rem = a.coeffs_;
        const std::size_t db = b.coeffs_.size() - 1;
        std::vector<Rational> quo(rem.size() - db, Rational(0));
        const Rational inv_lead = 1 / b.coeffs_.back();
        for (std::size_t k = rem.size(); k-- > db;) {
            if (rem[k] == 0) continue;
            const Rational q = rem[k] * inv_lead;
            quo[k - db] = q;
            for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs_[j];
        }
        rem.resize(db);
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    /// Quotient a/b; throws if b does not divide a.
    static Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw DomainError("inexact polynomial division");
        return q;
    }

    /// Monic greatest common divisor; gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second.primitive();
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            const bool negative = sgn(c) < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (out.empty()) out += negative ? "-" : "";
            else out += negative ? " - " : " + ";
            const bool unit = mag == 1 && k > 0;
            if (!unit) out += to_string(mag);
            if (k > 0) {
                if (!unit) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Laurent polynomial t^low * body(t) over Q. Normalized so that body has a
/// nonzero constant term; the zero polynomial has an empty body and low = 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}                // NOLINT(implicit)
    LaurentPoly(Rational c) : body_(std::move(c)) {}                 // NOLINT(implicit)
    LaurentPoly(int low, Poly body) : low_(low), body_(std::move(body)) { normalize(); }

    static LaurentPoly monomial(Rational c, int exponent) { return LaurentPoly(exponent, Poly(std::move(c))); }

    /// From ascending coefficients starting at exponent `low`.
    static LaurentPoly from_coeffs(int low, std::vector<Rational> coeffs) {
        return LaurentPoly(low, Poly(std::move(coeffs)));
    }

    bool is_zero() const noexcept { return body_.is_zero(); }
    int low() const noexcept { return low_; }
    int high() const noexcept { return low_ + body_.degree(); }
    const Poly& body() const noexcept { return body_; }

    Rational coeff(int exponent) const {
        if (is_zero() || exponent < low_) return Rational(0);
        return body_.coeff(static_cast<std::size_t>(exponent - low_));
    }

    /// Polynomial part t^N * p with N the smallest shift making every
    /// exponent nonnegative and the constant term nonzero. Its roots away
    /// from t = 0 are exactly those of p.
    const Poly& cleared() const noexcept { return body_; }

    Rational eval(const Rational& t) const {
        if (is_zero()) return Rational(0);
        if (t == 0) throw DomainError("Laurent polynomial evaluated at t = 0");
        Rational scale(1);
        const Rational base = low_ >= 0 ? t : Rational(1 / t);
        for (int i = 0; i < (low_ >= 0 ? low_ : -low_); ++i) scale *= base;
        return scale * body_.eval(t);
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int low = std::min(a.low_, b.low_);
        Poly sum = a.body_.shift_up(static_cast<std::size_t>(a.low_ - low)) +
                   b.body_.shift_up(static_cast<std::size_t>(b.low_ - low));
        return LaurentPoly(low, std::move(sum));
    }

    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly(a.low_, -a.body_); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        return LaurentPoly(a.low_ + b.low_, a.body_ * b.body_);
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Quotient in the Laurent ring; throws if b does not divide a.
    static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw DomainError("Laurent division by zero");
        if (a.is_zero()) return LaurentPoly();
        return LaurentPoly(a.low_ - b.low_, Poly::exact_div(a.body_, b.body_));
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.body_ == b.body_;
    }
    friend bool operator==(const LaurentPoly& a, long c) { return a == LaurentPoly(c); }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        const auto& cs = body_.coeffs();
        for (std::size_t k = cs.size(); k-- > 0;) {
            const Rational& c = cs[k];
            if (c == 0) continue;
            const int e = low_ + static_cast<int>(k);
            const bool negative = sgn(c) < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (out.empty()) out += negative ? "-" : "";
            else out += negative ? " - " : " + ";
            const bool unit = mag == 1 && e != 0;
            if (!unit) out += to_string(mag);
            if (e != 0) {
                if (!unit) out += "*";
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

private:
    void normalize() {
        if (body_.is_zero()) {
            low_ = 0;
            return;
        }
        const std::size_t k = body_.low_order();
        if (k > 0) {
            body_ = body_.shift_down(k);
            low_ += static_cast<int>(k);
        }
    }

    int low_ = 0;
    Poly body_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

/// Exact determinant over the Laurent ring by fraction-free elimination.
inline LaurentPoly laurent_det(const LaurentMatrix& m) {
    return bareiss_determinant(m, [](const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly::exact_div(a, b); });
}

/// Entrywise substitution t -> t0.
inline RatMatrix evaluate(const LaurentMatrix& m, const Rational& t0) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(t0);
    return out;
}

}  // namespace srcirc

#endif  // SRCIRC_EXACT_POLY_HPP
