#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace srcirc;

namespace {

std::vector<Rational> R(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("coefficient vectors validate their input") {
    CHECK_THROWS_AS(CoeffVector(R({0, 1})), InputError);
    CHECK_THROWS_AS(CoeffVector(R({1})), InputError);
    const CoeffVector c(R({1, 2, 3}));
    CHECK(c.g() == 2);
    CHECK(c.full() == R({1, 2, 3, 2, 1}));
    CHECK(c.value_at_one() == 9);
    CHECK(from_full(c.full()) == c);
    CHECK_THROWS_AS(from_full(R({1, 2, 3})), InputError);
}

TEST_CASE("log-scale rejects values that kill an endpoint") {
    CHECK_THROWS_AS(LogScale(Rational(0)), DomainError);
    CHECK_THROWS_AS(LogScale(Rational(-1)), DomainError);
    const CoeffVector c(R({1, 0, 0}));
    CHECK_THROWS_AS(embed_simple(c, LogScale(make_rational(1, 2))), DomainError);
    CHECK_THROWS_AS(embed_simple(c, LogScale(Rational(1))), DomainError);
    CHECK_NOTHROW(embed_simple(c, LogScale(make_rational(1, 3))));
}

TEST_CASE("embed_simple examples") {
    CHECK(embed_simple(CoeffVector(R({1, 0})), LogScale(Rational(2))).entries() == R({-1, 0, 3}));
    CHECK(embed_simple(CoeffVector(R({1, -3})), LogScale(Rational(2))).entries() == R({-1, -3, 3}));
    CHECK(embed_simple(CoeffVector(R({1, 0, 2})), LogScale(Rational(2))).entries() == R({-3, 0, 2, 0, 5}));
    const SymbolVector C = embed_simple(CoeffVector(R({1, 0, 2})), LogScale(Rational(2)));
    CHECK(C.at(2) == -3);
    CHECK(C.at(-2) == 5);
    CHECK(C.reflected().at(2) == 5);
}

TEST_CASE("embed_simple endpoint and sign laws") {
    std::mt19937_64 rng(21);
    for (int g = 1; g <= 6; ++g)
        for (int trial = 0; trial < 30; ++trial) {
            const CoeffVector c = testing_support::random_coeffs(rng, g);
            const Rational L = testing_support::random_nonzero_rational(rng) * testing_support::random_nonzero_rational(rng);
            const Rational Lpos = L < 0 ? Rational(-L) : L;
            bool bad = false;
            for (int m = 1; m <= g; ++m) bad = bad || Lpos * m == 1;
            if (bad) continue;
            const SymbolVector C = embed_simple(c, LogScale(Lpos));
            REQUIRE(C.at(g) == c[0] * (1 - g * Lpos));
            REQUIRE(C.at(-g) == c[0] * (1 + g * Lpos));
            REQUIRE(C.at(g) != 0);
            if (Lpos * g > 1) {
                REQUIRE(sgn(C.at(g)) == -sgn(c[0]));
                REQUIRE(sgn(C.at(-g)) == sgn(c[0]));
            }
            REQUIRE(C.sum() == c.value_at_one());
        }
}

TEST_CASE("embed_omega examples") {
    CHECK(embed_omega(CoeffVector(R({1, 2})), Rational(2)).entries() ==
          std::vector<Rational>{make_rational(1, 2), 2, 2});
    CHECK(embed_omega(CoeffVector(R({1, 0})), Rational(3)).entries() ==
          std::vector<Rational>{make_rational(1, 3), 0, 3});
    CHECK_THROWS_AS(embed_omega(CoeffVector(R({1, 0})), Rational(1)), DomainError);
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const int g = 1 + trial % 6;
        const CoeffVector c = testing_support::random_coeffs(rng, g);
        const Rational t = 1 + make_rational(1 + trial, 7);
        const SymbolVector C = embed_omega(c, t);
        for (int m = 1; m <= g; ++m) REQUIRE(C.at(m) * C.at(-m) == c[static_cast<std::size_t>(g - m)] * c[static_cast<std::size_t>(g - m)]);
    }
}

TEST_CASE("symbolic omega embedding matches substitution") {
    const LaurentSymbolVector S = embed_omega_symbolic(CoeffVector(R({1, 2})));
    CHECK(S.at(1) == LaurentPoly::monomial(Rational(1), -1));
    CHECK(S.at(0) == LaurentPoly(2));
    CHECK(S.at(-1) == LaurentPoly::monomial(Rational(1), 1));
    CHECK(evaluate(S, Rational(2)) == embed_omega(CoeffVector(R({1, 2})), Rational(2)));
    const LaurentSymbolVector S2 = embed_omega_symbolic(CoeffVector(R({1, 1, 1})));
    for (int m = -2; m <= 2; ++m) CHECK(S2.at(m) == LaurentPoly::monomial(Rational(1), -m));
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const CoeffVector c = testing_support::random_coeffs(rng, 1 + trial % 6);
        const Rational t = 1 + make_rational(3 + trial, 5);
        REQUIRE(evaluate(embed_omega_symbolic(c), t) == embed_omega(c, t));
    }
}
