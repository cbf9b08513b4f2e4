#ifndef SRCIRC_EXACT_RATIONAL_HPP
#define SRCIRC_EXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace srcirc {

/// Exact arbitrary-precision fraction. GMP keeps every value reduced with a
/// positive denominator once canonicalized; all helpers below canonicalize.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Base class of every error the library raises.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    /// Machine-readable error code, e.g. "dimension", "domain", "input".
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error("dimension", what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

struct InputError : Error {
    explicit InputError(const std::string& what) : Error("input", what) {}
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

/// Formats as "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline BigInt parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw InputError("malformed integer '" + std::string(s) + "'");
    std::string text(s);
    if (text.front() == '+') text.erase(0, 1);
    return BigInt(text, 10);
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

}  // namespace detail

/// Parses "p/q", an integer, or a finite decimal such as "-1.25" exactly.
inline Rational parse_rational(std::string_view text) {
    const std::string_view s = detail::trim(text);
    if (s.empty()) throw InputError("empty rational literal");
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigInt num = detail::parse_integer(detail::trim(s.substr(0, slash)));
        const BigInt den = detail::parse_integer(detail::trim(s.substr(slash + 1)));
        if (den == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
        return make_rational(num, den);
    }
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        const std::string_view frac = s.substr(dot + 1);
        bool negative = false;
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
            negative = whole.front() == '-';
            whole.remove_prefix(1);
        }
        if (whole.empty() && frac.empty()) throw InputError("malformed decimal '" + std::string(s) + "'");
        for (char ch : frac)
            if (ch < '0' || ch > '9') throw InputError("malformed decimal '" + std::string(s) + "'");
        const BigInt w = whole.empty() ? BigInt(0) : detail::parse_integer(whole);
        if (w < 0) throw InputError("malformed decimal '" + std::string(s) + "'");
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac), 10);
        BigInt num = w * scale + f;
        if (negative) num = -num;
        return make_rational(num, scale);
    }
    return Rational(detail::parse_integer(s));
}

/// Value of a determinant ratio: finite, infinite (zero denominator) or 0/0.
class ExtRational {
public:
    struct Infinity {};
    struct Indeterminate {};

    ExtRational() : value_(Rational(0)) {}
    ExtRational(Rational r) : value_(std::move(r)) {}  // NOLINT(implicit)
    static ExtRational infinity() { return ExtRational(Infinity{}); }
    static ExtRational indeterminate() { return ExtRational(Indeterminate{}); }

    /// num/den with the conventions: x/0 = infinity for x != 0, 0/0 indeterminate.
    static ExtRational ratio(const Rational& num, const Rational& den) {
        if (den == 0) return num == 0 ? indeterminate() : infinity();
        return ExtRational(Rational(num / den));
    }

    bool is_finite() const { return std::holds_alternative<Rational>(value_); }
    bool is_infinite() const { return std::holds_alternative<Infinity>(value_); }
    bool is_indeterminate() const { return std::holds_alternative<Indeterminate>(value_); }

    const Rational& value() const {
        if (!is_finite()) throw DomainError("ExtRational is not finite");
        return std::get<Rational>(value_);
    }

    /// True iff finite and strictly positive.
    bool is_positive_finite() const { return is_finite() && sgn(std::get<Rational>(value_)) > 0; }

    friend ExtRational operator*(const ExtRational& a, const ExtRational& b) {
        if (a.is_indeterminate() || b.is_indeterminate()) return indeterminate();
        if (a.is_infinite() || b.is_infinite()) {
            const ExtRational& other = a.is_infinite() ? b : a;
            if (other.is_finite() && other.value() == 0) return indeterminate();
            return infinity();
        }
        return ExtRational(Rational(a.value() * b.value()));
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.is_finite() && b.is_finite()) return a.value() == b.value();
        return a.value_.index() == b.value_.index();
    }

    std::string str() const {
        if (is_infinite()) return "inf";
        if (is_indeterminate()) return "indeterminate";
        return to_string(std::get<Rational>(value_));
    }

    friend std::ostream& operator<<(std::ostream& os, const ExtRational& e) { return os << e.str(); }

private:
    explicit ExtRational(Infinity) : value_(Infinity{}) {}
    explicit ExtRational(Indeterminate) : value_(Indeterminate{}) {}

    std::variant<Rational, Infinity, Indeterminate> value_;
};

/// Inverse of ExtRational::str().
inline ExtRational parse_ext_rational(std::string_view text) {
    const std::string_view s = detail::trim(text);
    if (s == "inf") return ExtRational::infinity();
    if (s == "indeterminate") return ExtRational::indeterminate();
    return ExtRational(parse_rational(s));
}

}  // namespace srcirc

#endif  // SRCIRC_EXACT_RATIONAL_HPP
