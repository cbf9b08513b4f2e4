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

ExtRational Q(long p, long q = 1) { return ExtRational(make_rational(p, q)); }

}  // namespace

TEST_CASE("P_k examples") {
    CHECK(build_Pk(0, Rational(7)) == RatMatrix::identity(2));
    CHECK(build_Pk(1, Rational(3)) == RatMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, -3}}));
    CHECK(det_bareiss(build_Pk(1, Rational(5))) == -5);
    CHECK(det_bareiss(build_Pk(3, Rational(2))) == -8);
    CHECK(det_bareiss(build_Pk(2, Rational(3))) == 6);
    CHECK_THROWS_AS(build_Pk(-1, Rational(1)), DimensionError);
}

TEST_CASE("det P_k matches the closed form") {
    std::mt19937_64 rng(41);
    for (int k = 0; k <= 12; ++k)
        for (int trial = 0; trial < 4; ++trial) {
            const Rational m = testing_support::random_nonzero_rational(rng);
            REQUIRE(det_bareiss(build_Pk(k, m)) == det_Pk_closed_form(k, m));
        }
}

TEST_CASE("Q_k examples and shape") {
    CHECK(build_Qk(0) == RatMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, -1}}));
    CHECK(build_Qk(1) == RatMatrix::from_rows({{1, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, -1}, {0, 0, 0, 0, 0, 0}}));
    for (int k = 0; k <= 10; ++k) {
        const RatMatrix Qk = build_Qk(k);
        CHECK(Qk.rows() == static_cast<std::size_t>(2 * k + 2));
        CHECK(Qk.cols() == static_cast<std::size_t>(2 * k + 4));
    }
}

TEST_CASE("closed-form P_k^{-1} Q_k") {
    const RatMatrix expected = RatMatrix::from_rows({{1, 0, 1, 0, 0, 0},
                                                     {0, 1, 0, 0, 0, 0},
                                                     {0, 0, 0, 1, 0, -1},
                                                     {0, make_rational(1, 2), 0, 0, 0, 0}});
    CHECK(pinv_times_q(1, Rational(2)) == expected);
    CHECK_THROWS_AS(pinv_times_q(2, Rational(0)), DomainError);
    std::mt19937_64 rng(42);
    for (int k = 0; k <= 12; ++k)
        for (int trial = 0; trial < 3; ++trial) {
            const Rational m = testing_support::random_nonzero_rational(rng);
            REQUIRE(build_Pk(k, m) * pinv_times_q(k, m) == build_Qk(k));
        }
}

TEST_CASE("rows 1 and k+2 of P_k^{-1} Q_k do not depend on the parameter") {
    for (int k = 0; k <= 8; ++k) {
        const RatMatrix a = pinv_times_q(k, Rational(3));
        const RatMatrix b = pinv_times_q(k, make_rational(-2, 7));
        const std::size_t rows[] = {0, static_cast<std::size_t>(k + 1)};
        for (std::size_t r : rows)
            for (std::size_t j = 0; j < a.cols(); ++j) REQUIRE(a(r, j) == b(r, j));
    }
}

TEST_CASE("initial vectors") {
    const OmegaVector w = omega0(SymbolVector(R({-1, 0, 3})));
    CHECK(w.level == 0);
    CHECK(w.entries == R({3, 0, -1, 3, 0, -1}));
    std::mt19937_64 rng(43);
    for (int g = 1; g <= 6; ++g) {
        const OmegaVector v = omega0(embed_simple(testing_support::random_coeffs(rng, g), LogScale()));
        REQUIRE(v.entries.size() == static_cast<std::size_t>(4 * g + 2));
        for (int i = 0; i < 2 * g + 1; ++i)
            REQUIRE(v.entries[static_cast<std::size_t>(i)] == v.entries[static_cast<std::size_t>(i + 2 * g + 1)]);
    }
    const OmegaVector o = omega0_omega(CoeffVector(R({1, 2})), Rational(2));
    CHECK(o.entries == std::vector<Rational>{2, 2, make_rational(1, 2), 2, 2, make_rational(1, 2)});
    CHECK(o.entries == omega0(embed_omega(CoeffVector(R({1, 2})), Rational(2))).entries);
    CHECK_THROWS_AS(omega0_omega(CoeffVector(R({1, 2})), Rational(1)), DomainError);
}

TEST_CASE("recursion on a three-term symbol") {
    const RecursionResult r = run_recursion(omega0(SymbolVector(R({-1, 0, 3}))), 1);
    CHECK(r.chain.gammas == std::vector<Rational>{make_rational(1, 2), make_rational(1, 2)});
    REQUIRE(r.terminal);
    CHECK(*r.terminal == 2);
    CHECK(delta_from_gammas(r.chain.gammas, Rational(2)) == std::vector<ExtRational>{Q(1), Q(1)});
}

TEST_CASE("first recursion step matches the closed-form level-one vector") {
    std::mt19937_64 rng(44);
    for (int g = 1; g <= 5; ++g)
        for (int trial = 0; trial < 10; ++trial) {
            const SymbolVector C = embed_simple(testing_support::random_coeffs(rng, g), LogScale());
            const OmegaVector w0 = omega0(C);
            const RecursionResult res = try_run_recursion(w0, g);
            if (res.chain.gammas.empty()) continue;
            const Rational gamma = res.chain.gammas[0];
            const OmegaVector w1 = recursion_step(w0, g, gamma);
            REQUIRE(w1.entries.size() == static_cast<std::size_t>(4 * g));
            const std::size_t gg = static_cast<std::size_t>(g);
            REQUIRE(w1.entries[0] == C.at(-g) + C.at(g));
            REQUIRE(w1.entries[gg] == C.at(0));
            for (int j = 1; j < g; ++j) {
                const Rational s = C.at(-j) + C.at(j), d = C.at(-j) - C.at(j);
                REQUIRE(w1.entries[gg - static_cast<std::size_t>(j)] == (s + gamma * d) / 2);
                REQUIRE(w1.entries[gg + static_cast<std::size_t>(j)] == (s - gamma * d) / 2);
            }
            REQUIRE(w1.entries[2 * gg] == C.at(-g) - C.at(g));
            REQUIRE(w1.entries[3 * gg] == C.at(0) / gamma);
        }
}

TEST_CASE("recursion and determinant routes agree") {
    std::mt19937_64 rng(45);
    int compared = 0;
    for (int g = 1; g <= 6; ++g)
        for (int trial = 0; trial < (g <= 4 ? 25 : 8); ++trial) {
            const CoeffVector c = testing_support::random_coeffs(rng, g);
            const RecursiveDeltas rec = delta_simple_recursive(c);
            const DeltaReport det = delta_simple(c);
            bool clean = true;
            for (const auto& r : det.records) clean = clean && r.det_plus != 0 && r.det_minus != 0;
            if (!clean) continue;
            REQUIRE(rec.run.completed());
            REQUIRE(rec.deltas == det.deltas());
            REQUIRE(*rec.run.terminal == embed_simple(c, LogScale()).sum());
            ++compared;
        }
    CHECK(compared > 80);
}

TEST_CASE("recursion on the degree-four example") {
    const RecursiveDeltas r = delta_simple_recursive(CoeffVector(R({1, 1, 1})));
    REQUIRE(r.run.completed());
    CHECK(r.deltas == std::vector<ExtRational>{Q(1), Q(5, 3), Q(2), Q(5)});
    CHECK(*r.run.terminal == 5);
}

TEST_CASE("recursion on an off-circle symbol") {
    const SymbolVector C(R({-1, -3, 3}));
    const RecursionResult r = try_run_recursion(omega0(C), 1);
    if (r.completed()) {
        const auto d = delta_from_gammas(r.chain.gammas, Rational(2));
        CHECK(d == delta_report(C, Rational(2)).deltas());
        CHECK_FALSE(d[1].is_positive_finite());
    } else {
        CHECK_THROWS_AS(run_recursion(omega0(C), 1), RecursionBreakdown);
    }
}

TEST_CASE("placeholder extraction gives the same chain") {
    std::mt19937_64 rng(46);
    for (int g = 1; g <= 5; ++g)
        for (int trial = 0; trial < 10; ++trial) {
            const OmegaVector w0 = omega0(embed_simple(testing_support::random_coeffs(rng, g), LogScale()));
            const RecursionResult res = try_run_recursion(w0, g);
            OmegaVector w = w0;
            for (std::size_t i = 0; i < res.chain.gammas.size(); ++i) {
                REQUIRE(gamma_via_placeholder(w, g) == res.chain.gammas[i]);
                w = recursion_step(w, g, res.chain.gammas[i]);
            }
        }
}

TEST_CASE("omega recursion reproduces the sampled deltas") {
    const RecursiveDeltas r = delta_omega_recursive(CoeffVector(R({1, 2})), Rational(2));
    REQUIRE(r.run.completed());
    CHECK(r.deltas == std::vector<ExtRational>{Q(1), Q(9)});
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const CoeffVector c = testing_support::random_coeffs(rng, 1 + trial % 5);
        const Rational t = 1 + make_rational(1 + trial % 7, 4);
        const RecursiveDeltas rec = delta_omega_recursive(c, t);
        const DeltaReport det = delta_omega(c, t);
        bool clean = true;
        for (const auto& x : det.records) clean = clean && x.det_plus != 0 && x.det_minus != 0;
        if (!clean) continue;
        REQUIRE(rec.run.completed());
        REQUIRE(rec.deltas == det.deltas());
    }
}

TEST_CASE("breakdown is reported with its level") {
    // gamma_1 has numerator C_{-g} + C_g = 0
    const RecursionResult r = try_run_recursion(omega0(SymbolVector(R({-1, 1, 1}))), 1);
    REQUIRE(r.breakdown);
    CHECK(r.breakdown->level == 0);
    CHECK_FALSE(r.completed());
    CHECK_THROWS_AS(run_recursion(omega0(SymbolVector(R({-1, 1, 1}))), 1), RecursionBreakdown);
    CHECK_THROWS_AS(try_run_recursion(OmegaVector{1, R({1, 2, 3, 4})}, 1), DimensionError);
}
