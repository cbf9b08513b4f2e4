#ifndef SRCIRC_EXPOLY_HPP
#define SRCIRC_EXPOLY_HPP

#include <cmath>
#include <complex>
#include <utility>

#include "srcirc/embedding.hpp"
#include "srcirc/exact/rational.hpp"

namespace srcirc {

using Complex = std::complex<double>;

struct RangeError : Error {
    explicit RangeError(const std::string& what) : Error("range", what) {}
};

namespace detail {

inline void check_range(double im_z, int g, double L) {
    if (std::abs(im_z) * g * L > 700.0) throw RangeError("|Im z| g L exceeds 700; exponentials overflow");
}

}  // namespace detail

/// E(z) = sum_m C_m e^{i m z L}.
inline Complex eval_E(const SymbolVector& C, const Rational& L, Complex z) {
    const double l = L.get_d();
    const int g = C.g();
    detail::check_range(z.imag(), g, l);
    Complex acc(0.0, 0.0);
    for (int m = -g; m <= g; ++m) acc += C.at(m).get_d() * std::exp(Complex(0.0, m * l) * z);
    return acc;
}

/// E#(z) = conj(E(conj z)).
inline Complex eval_E_sharp(const SymbolVector& C, const Rational& L, Complex z) {
    return std::conj(eval_E(C, L, std::conj(z)));
}

/// A = (E + E#)/2, B = i(E - E#)/2.
inline std::pair<Complex, Complex> eval_A_B(const SymbolVector& C, const Rational& L, Complex z) {
    const Complex e = eval_E(C, L, z), es = eval_E_sharp(C, L, z);
    return {(e + es) / 2.0, Complex(0.0, 1.0) * (e - es) / 2.0};
}

/// A_q(z) = q^{-g i z} P(q^{i z}) = sum_m c_{g-|m|} e^{i m z L}.
inline Complex eval_Aq_from_poly(const CoeffVector& c, const Rational& L, Complex z) {
    const double l = L.get_d();
    const int g = c.g();
    detail::check_range(z.imag(), g, l);
    Complex acc(0.0, 0.0);
    for (int m = -g; m <= g; ++m)
        acc += c[static_cast<std::size_t>(g - std::abs(m))].get_d() * std::exp(Complex(0.0, m * l) * z);
    return acc;
}

/// E_{q,omega}(z) = A_q(z + i omega).
inline Complex eval_E_omega(const CoeffVector& c, const Rational& L, double omega, Complex z) {
    if (!(omega > 0.0)) throw DomainError("omega must be positive");
    return eval_Aq_from_poly(c, L, z + Complex(0.0, omega));
}

/// E#_{q,omega}(z) = A_q(z - i omega).
inline Complex eval_E_omega_sharp(const CoeffVector& c, const Rational& L, double omega, Complex z) {
    if (!(omega > 0.0)) throw DomainError("omega must be positive");
    return eval_Aq_from_poly(c, L, z - Complex(0.0, omega));
}

}  // namespace srcirc

#endif  // SRCIRC_EXPOLY_HPP
