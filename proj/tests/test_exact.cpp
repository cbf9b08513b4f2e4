#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace srcirc;
using testing_support::cofactor_det;
using testing_support::random_rational;

namespace {

LaurentPoly t_pow(int e, long c = 1) { return LaurentPoly::monomial(Rational(c), e); }

Poly from_roots(const std::vector<Rational>& roots) {
    Poly p(1);
    for (const auto& r : roots) p = p * Poly::linear_root(r);
    return p;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2/-4")) == "1/2");
    CHECK(to_string(parse_rational("-1.25")) == "-5/4");
    CHECK(to_string(parse_rational(" 7 ")) == "7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK(parse_ext_rational("inf").is_infinite());
    CHECK(parse_ext_rational("indeterminate").is_indeterminate());
    CHECK(parse_ext_rational("-3/9") == ExtRational(make_rational(-1, 3)));
}

TEST_CASE("extended ratios follow the zero-denominator conventions") {
    CHECK(ExtRational::ratio(Rational(2), Rational(0)).is_infinite());
    CHECK(ExtRational::ratio(Rational(0), Rational(0)).is_indeterminate());
    CHECK(ExtRational::ratio(Rational(-12), Rational(60)) == ExtRational(make_rational(-1, 5)));
    CHECK((ExtRational::infinity() * ExtRational(Rational(0))).is_indeterminate());
    CHECK((ExtRational::infinity() * ExtRational(Rational(3))).is_infinite());
    CHECK((ExtRational::indeterminate() * ExtRational(Rational(1))).is_indeterminate());
    CHECK_FALSE(ExtRational::infinity().is_positive_finite());
    CHECK(ExtRational::infinity().str() == "inf");
}

TEST_CASE("det_bareiss examples") {
    CHECK(det_bareiss(RatMatrix::identity(3)) == 1);
    CHECK(det_bareiss(RatMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det_bareiss(RatMatrix()) == 1);
    CHECK(det_bareiss(RatMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
    const RatMatrix frac = RatMatrix::from_rows({{make_rational(1, 2), make_rational(1, 3)}, {make_rational(1, 4), make_rational(1, 5)}});
    CHECK(det_bareiss(frac) == make_rational(1, 10) - make_rational(1, 12));
    CHECK_THROWS_AS(det_bareiss(RatMatrix(2, 3)), DimensionError);
}

TEST_CASE("det_bareiss agrees with cofactor expansion") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            RatMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = trial % 3 == 0 && (i + j) % 2 ? Rational(0) : random_rational(rng);
            REQUIRE(det_bareiss(m) == cofactor_det(m));
        }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        RatMatrix a(4, 4), b(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                a(i, j) = random_rational(rng);
                b(i, j) = random_rational(rng);
            }
        REQUIRE(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
    }
}

TEST_CASE("polynomial arithmetic") {
    const Poly p(std::vector<Rational>{1, 2, 1});  // (t+1)^2
    const Poly q(std::vector<Rational>{1, 1});
    CHECK(Poly::exact_div(p, q) == q);
    CHECK(Poly::gcd(p, p.derivative()) == q);
    CHECK(p.eval(Rational(2)) == 9);
    CHECK(Poly(std::vector<Rational>{0, 0, 0}).is_zero());
    CHECK(Poly(std::vector<Rational>{make_rational(1, 2), make_rational(-3, 4)}).primitive() ==
          Poly(std::vector<Rational>{-2, 3}));
    auto [quo, rem] = Poly::divmod(Poly(std::vector<Rational>{-1, 0, 1}), Poly(std::vector<Rational>{-2, 1}));
    CHECK(quo == Poly(std::vector<Rational>{2, 1}));
    CHECK(rem == Poly(3));
    CHECK_THROWS_AS(Poly::exact_div(p, Poly(std::vector<Rational>{0, 1})), DomainError);
    CHECK(p.str() == "t^2 + 2*t + 1");
}

TEST_CASE("Laurent polynomial normalization and arithmetic") {
    const LaurentPoly a = t_pow(2) + t_pow(-1, 3);
    CHECK(a.low() == -1);
    CHECK(a.high() == 2);
    CHECK(a.coeff(-1) == 3);
    CHECK(a.coeff(0) == 0);
    CHECK(a.eval(Rational(2)) == make_rational(11, 2));
    CHECK((a - a).is_zero());
    const LaurentPoly shifted = LaurentPoly::from_coeffs(-3, {0, 0, 5, 1});
    CHECK(shifted.low() == -1);
    CHECK(shifted == t_pow(-1, 5) + t_pow(0));
    CHECK(LaurentPoly::exact_div(a * shifted, shifted) == a);
}

TEST_CASE("laurent_det examples") {
    CHECK(laurent_det(LaurentMatrix::identity(2)) == LaurentPoly(1));
    LaurentMatrix diag(2, 2);
    diag(0, 0) = t_pow(1);
    diag(1, 1) = t_pow(-1);
    CHECK(laurent_det(diag) == LaurentPoly(1));
    CHECK_THROWS_AS(laurent_det(LaurentMatrix(2, 3)), DimensionError);
}

TEST_CASE("laurent_det matches evaluation followed by det_bareiss") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> expo(-2, 2), num(1, 90), den(1, 10);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                LaurentPoly e;
                for (int k = 0; k < 2; ++k) e += LaurentPoly::monomial(random_rational(rng), expo(rng));
                m(i, j) = e;
            }
        const LaurentPoly d = laurent_det(m);
        for (int s = 0; s < 3; ++s) {
            const Rational t0 = 1 + make_rational(num(rng), den(rng));
            if (t0 > 10) continue;
            REQUIRE(d.eval(t0) == det_bareiss(evaluate(m, t0)));
        }
        REQUIRE(d == cofactor_det(m));
    }
}

TEST_CASE("sturm_count examples") {
    CHECK(sturm_count(LaurentPoly::from_coeffs(0, {-2, 1}), Rational(1), true) == 1);
    CHECK(sturm_count(LaurentPoly::from_coeffs(0, {1, 0, 1}), Rational(1), true) == 0);
    CHECK(sturm_count(LaurentPoly(0, from_roots({3, 5})), Rational(4), true) == 1);
    CHECK(sturm_count(from_roots({3, 5}), Rational(3), Rational(5)) == 0);
    CHECK(sturm_count(from_roots({3, 3, 5}), Rational(1)) == 2);
    CHECK(sturm_count(t_pow(-2) * LaurentPoly(0, from_roots({2})), Rational(1), true) == 1);
    CHECK_THROWS_AS(sturm_count(Poly(), Rational(1)), UndefinedCountError);
}

TEST_CASE("sturm_count matches constructed root sets") {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<long> rn(-40, 40), nroots(1, 6), lo_num(0, 40);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> roots;
        const long k = nroots(rng);
        for (long i = 0; i < k; ++i) roots.push_back(make_rational(rn(rng), 8));
        Poly p = from_roots(roots);
        if (trial % 2 == 0) {
            const long a = rn(rng);
            p = p * Poly(std::vector<Rational>{make_rational(a * a + 1, 16), make_rational(a, 2), 1});  // no real roots
        }
        REQUIRE(p.degree() <= 8);
        const Rational lo = make_rational(lo_num(rng), 8) - 2;
        const std::optional<Rational> hi = trial % 3 == 0 ? std::optional<Rational>(lo + 3) : std::nullopt;
        std::vector<Rational> distinct;
        for (const auto& r : roots) {
            bool seen = false;
            for (const auto& d : distinct) seen = seen || d == r;
            if (!seen && r > lo && (!hi || r < *hi)) distinct.push_back(r);
        }
        REQUIRE(sturm_count(p, lo, hi) == static_cast<int>(distinct.size()));
    }
}

TEST_CASE("isolate_roots returns one root per interval") {
    const Poly p = from_roots({make_rational(3, 2), 2, make_rational(21, 10), 7});
    const auto iv = isolate_roots(p, Rational(1));
    REQUIRE(iv.size() == 4);
    for (const auto& [a, b] : iv) CHECK(sturm_count(p, a, b) + (p.eval(b) == 0 ? 1 : 0) == 1);
    CHECK(isolate_roots(p, Rational(1), Rational(2)).size() == 1);
}

TEST_CASE("Taylor shift and Descartes counts") {
    const Poly p(std::vector<Rational>{1, 2, 1});  // (t+1)^2
    CHECK(taylor_shift(p, Rational(1)) == std::vector<Rational>{4, 4, 1});
    CHECK(descartes_variations(from_roots({2, 3}), Rational(1)) == 2);
    CHECK(descartes_variations(from_roots({0, make_rational(1, 2)}), Rational(1)) == 0);
    CHECK(count_roots_above(from_roots({1, 1, 4}), Rational(1)) == 1);
    CHECK_THROWS_AS(descartes_variations(Poly(), Rational(1)), UndefinedCountError);
}

TEST_CASE("count_roots_above matches sturm_count") {
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<long> rn(-30, 40), nroots(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> roots;
        const long k = nroots(rng);
        for (long i = 0; i < k; ++i) roots.push_back(make_rational(rn(rng), 8));
        Poly p = from_roots(roots);
        if (trial % 2 == 0) p = p * Poly(std::vector<Rational>{5, -2, 1});  // roots 1 +- 2i
        const Rational lo = make_rational(rn(rng), 10);
        REQUIRE(count_roots_above(p, lo) == sturm_count(p, lo));
        REQUIRE(Poly(taylor_shift(p, lo)).eval(Rational(3)) == p.eval(lo + 3));
    }
}
