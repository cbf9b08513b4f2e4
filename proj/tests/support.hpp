#ifndef SRCIRC_TESTS_SUPPORT_HPP
#define SRCIRC_TESTS_SUPPORT_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "srcirc/srcirc.hpp"

namespace testing_support {

using srcirc::Rational;

/// Laplace expansion along the first row; exponential, test sizes only.
template <class T>
T cofactor_det(const srcirc::Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        srcirc::Matrix<T> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = m(i, k);
        T term = m(0, j) * cofactor_det(minor);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound = 9, long den_bound = 5) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
    return srcirc::make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long num_bound = 9, long den_bound = 5) {
    Rational r;
    do r = random_rational(rng, num_bound, den_bound);
    while (r == 0);
    return r;
}

inline srcirc::CoeffVector random_coeffs(std::mt19937_64& rng, int g, long num_bound = 9, long den_bound = 5) {
    std::vector<Rational> c;
    c.push_back(random_nonzero_rational(rng, num_bound, den_bound));
    for (int k = 1; k <= g; ++k) c.push_back(random_rational(rng, num_bound, den_bound));
    return srcirc::CoeffVector(std::move(c));
}

/// Integer coefficients in [-bound, bound] with c_0 != 0.
inline srcirc::CoeffVector random_integer_coeffs(std::mt19937_64& rng, int g, long bound = 9) {
    return random_coeffs(rng, g, bound, 1);
}

/// prod_j (x^2 - a_j x + 1) with distinct a_j in (-2, 2): all roots simple
/// and on the unit circle.
inline srcirc::CoeffVector random_simple_on_circle(std::mt19937_64& rng, int g) {
    std::vector<Rational> used;
    srcirc::Poly p(1);
    std::uniform_int_distribution<long> num(-39, 39);
    while (static_cast<int>(used.size()) < g) {
        const Rational a = srcirc::make_rational(num(rng), 20);
        bool dup = false;
        for (const auto& u : used) dup = dup || u == a;
        if (dup) continue;
        used.push_back(a);
        p = p * srcirc::Poly(std::vector<Rational>{1, Rational(-a), 1});
    }
    return srcirc::from_full(p.coeffs());
}

}  // namespace testing_support

#endif  // SRCIRC_TESTS_SUPPORT_HPP
