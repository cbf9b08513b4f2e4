#ifndef SRCIRC_RECURSION_HPP
#define SRCIRC_RECURSION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srcirc/criterion.hpp"
#include "srcirc/embedding.hpp"
#include "srcirc/exact/matrix.hpp"
#include "srcirc/exact/rational.hpp"

namespace srcirc {

namespace detail {

/// Rows of the folding maps V^+ (sign = +1) and V^- (sign = -1) acting on
/// vectors of length k+1. Row 1 keeps v_1; row i >= 2 forms
/// v_i + sign * v_{k+3-i}. The self-paired middle row appears only for
/// sign = +1. Each row lists (column, coefficient) pairs, 0-based.
inline std::vector<std::vector<std::pair<std::size_t, int>>> fold_rows(int k, int sign) {
    std::vector<std::vector<std::pair<std::size_t, int>>> rows;
    rows.push_back({{0, 1}});
    for (int i = 2; i <= k + 1; ++i) {
        const int j = k + 3 - i;
        if (j < i) break;
        if (j == i) {
            if (sign > 0) rows.push_back({{static_cast<std::size_t>(i - 1), 1}});
            break;
        }
        rows.push_back({{static_cast<std::size_t>(i - 1), 1}, {static_cast<std::size_t>(j - 1), sign}});
    }
    return rows;
}

}  // namespace detail

/// The (2k+2)-square matrix [V^+ 0; 0 V^-; [0|I_k] [0|-m I_k]].
inline RatMatrix build_Pk(int k, const Rational& m) {
    if (k < 0) throw DimensionError("k must be nonnegative");
    const std::size_t kk = static_cast<std::size_t>(k);
    const std::size_t size = 2 * kk + 2;
    RatMatrix P(size, size);
    std::size_t row = 0;
    for (const auto& r : detail::fold_rows(k, +1)) {
        for (auto [col, coef] : r) P(row, col) = coef;
        ++row;
    }
    for (const auto& r : detail::fold_rows(k, -1)) {
        for (auto [col, coef] : r) P(row, kk + 1 + col) = coef;
        ++row;
    }
    for (std::size_t i = 0; i < kk; ++i, ++row) {
        P(row, 1 + i) = 1;
        P(row, kk + 2 + i) = -m;
    }
    return P;
}

/// The (2k+2) x (2k+4) matrix [W^+ 0; 0 W^-; 0 0], where W^+- extend V^+-
/// by a column k+2 whose only entry is +-1 in the first row.
inline RatMatrix build_Qk(int k) {
    if (k < 0) throw DimensionError("k must be nonnegative");
    const std::size_t kk = static_cast<std::size_t>(k);
    RatMatrix Q(2 * kk + 2, 2 * kk + 4);
    std::size_t row = 0;
    for (int sign : {+1, -1}) {
        const std::size_t offset = sign > 0 ? 0 : kk + 2;
        bool first = true;
        for (const auto& r : detail::fold_rows(k, sign)) {
            for (auto [col, coef] : r) Q(row, offset + col) = coef;
            if (first) Q(row, offset + kk + 1) = sign;
            first = false;
            ++row;
        }
    }
    return Q;
}

/// P_k(m)^{-1} Q_k assembled from its closed-form blocks
/// [[M1, M2], [M3, M4]], each (k+1) x (k+2).
inline RatMatrix pinv_times_q(int k, const Rational& m) {
    if (k < 0) throw DimensionError("k must be nonnegative");
    if (m == 0) throw DomainError("P_k(0) is singular");
    const std::size_t kk = static_cast<std::size_t>(k);
    const std::size_t half = kk + 1;
    const std::size_t width = kk + 2;
    RatMatrix R(2 * half, 2 * width);
    const Rational h = make_rational(1, 2);
    const Rational m2 = m / 2;
    const Rational inv2m = 1 / (2 * m);
    R(0, 0) = 1;
    R(0, kk + 1) = 1;
    R(half, width) = 1;
    R(half, width + kk + 1) = -1;
    for (std::size_t i = 1; i < half; ++i) {
        const std::size_t j = kk + 1 - i;  // 0-based partner of i
        R(i, i) += h;
        R(i, j) += h;
        R(i, width + i) += m2;
        R(i, width + j) -= m2;
        R(half + i, i) += inv2m;
        R(half + i, j) += inv2m;
        R(half + i, width + i) += h;
        R(half + i, width + j) -= h;
    }
    return R;
}

/// det P_k(m) in closed form: for k = 2j+1 it is eps 2^j m^{j+1} with
/// eps = +1 iff j = 2,3 mod 4; for k = 2j it is eps 2^j m^j with
/// eps = +1 iff j = 0,1 mod 4.
inline Rational det_Pk_closed_form(int k, const Rational& m) {
    if (k < 0) throw DimensionError("k must be nonnegative");
    const int j = k / 2;
    const bool odd = k % 2 == 1;
    const int r = j % 4;
    const int eps = odd ? ((r == 2 || r == 3) ? 1 : -1) : ((r == 0 || r == 1) ? 1 : -1);
    Rational v(eps);
    for (int i = 0; i < j; ++i) v *= 2;
    for (int i = 0; i < (odd ? j + 1 : j); ++i) v *= m;
    return v;
}

/// Level-n vector of the recursion, length 4g - 2n + 2 (1-based accessors
/// mirror the update formulas).
struct OmegaVector {
    int level = 0;
    std::vector<Rational> entries;

    const Rational& at1(std::size_t i) const { return entries.at(i - 1); }
};

/// Two copies of C_{-g}, ..., C_g.
inline OmegaVector omega0(const SymbolVector& C) {
    OmegaVector v;
    const int g = C.g();
    for (int copy = 0; copy < 2; ++copy)
        for (int m = -g; m <= g; ++m) v.entries.push_back(C.at(m));
    return v;
}

/// omega0 of the omega embedding at t.
inline OmegaVector omega0_omega(const CoeffVector& c, const Rational& t) { return omega0(embed_omega(c, t)); }

struct Breakdown {
    /// Level n at which gamma_{n+1} could not be formed.
    int level = 0;
    Rational numerator;
    Rational denominator;
    std::string reason;
};

struct RecursionBreakdown : Error {
    explicit RecursionBreakdown(Breakdown b)
        : Error("recursion-breakdown", "recursion breaks down at level " + std::to_string(b.level) + ": " + b.reason),
          info(std::move(b)) {}
    Breakdown info;
};

struct GammaChain {
    std::vector<Rational> gammas;
    /// Denominators Omega_n(2g-n+2) - Omega_n(4g-2n+2), one per step.
    std::vector<Rational> denominators;
};

struct RecursionResult {
    GammaChain chain;
    std::optional<Breakdown> breakdown;
    /// Omega_{2g}(1); set only when the recursion completes.
    std::optional<Rational> terminal;
    OmegaVector last;

    bool completed() const { return !breakdown.has_value(); }
};

namespace detail {

inline std::pair<Rational, Rational> gamma_parts(const OmegaVector& w, int g) {
    const std::size_t n = static_cast<std::size_t>(w.level);
    const std::size_t gg = static_cast<std::size_t>(g);
    Rational num = w.at1(1) + w.at1(2 * gg - n + 1);
    Rational den = w.at1(2 * gg - n + 2) - w.at1(4 * gg - 2 * n + 2);
    return {std::move(num), std::move(den)};
}

}  // namespace detail

/// One step Omega_n -> Omega_{n+1} with parameter m.
inline OmegaVector recursion_step(const OmegaVector& w, int g, const Rational& m) {
    const int k = 2 * g - (w.level + 1);
    OmegaVector next;
    next.level = w.level + 1;
    next.entries = pinv_times_q(k, m) * w.entries;
    return next;
}

/// gamma_{n+1} read from the product with a placeholder parameter: rows 1
/// and k+2 of P_k(m)^{-1} Q_k do not involve m.
inline Rational gamma_via_placeholder(const OmegaVector& w, int g) {
    const OmegaVector probe = recursion_step(w, g, Rational(1));
    const std::size_t half = probe.entries.size() / 2;
    const Rational& den = probe.entries[half];
    if (den == 0) throw DomainError("placeholder step has zero denominator");
    return probe.entries[0] / den;
}

/// Runs the recursion to level 2g, stopping at the first zero denominator
/// or zero gamma.
inline RecursionResult try_run_recursion(const OmegaVector& omega_0, int g) {
    if (omega_0.level != 0 || omega_0.entries.size() != static_cast<std::size_t>(4 * g + 2))
        throw DimensionError("initial vector must have level 0 and length 4g+2");
    RecursionResult res;
    OmegaVector w = omega_0;
    for (int n = 0; n < 2 * g; ++n) {
        auto [num, den] = detail::gamma_parts(w, g);
        res.chain.denominators.push_back(den);
        if (den == 0 || num == 0) {
            res.breakdown = Breakdown{n, num, den, den == 0 ? "zero denominator" : "gamma vanishes"};
            res.last = std::move(w);
            return res;
        }
        const Rational gamma = num / den;
        res.chain.gammas.push_back(gamma);
        w = recursion_step(w, g, gamma);
    }
    res.terminal = w.entries.at(0);
    res.last = std::move(w);
    return res;
}

/// As try_run_recursion, throwing RecursionBreakdown on failure.
inline RecursionResult run_recursion(const OmegaVector& omega_0, int g) {
    RecursionResult res = try_run_recursion(omega_0, g);
    if (res.breakdown) throw RecursionBreakdown(*res.breakdown);
    return res;
}

/// Alternating quotient D_1 = gamma_1, D_n = gamma_n / D_{n-1}, scaled by
/// odd_scale at odd n.
inline std::vector<ExtRational> delta_from_gammas(const std::vector<Rational>& gammas, const Rational& odd_scale) {
    std::vector<ExtRational> out;
    ExtRational prev(Rational(1));
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        ExtRational cur = prev.is_finite() ? ExtRational::ratio(gammas[i], prev.value()) : ExtRational::indeterminate();
        out.push_back(i % 2 == 0 ? cur * ExtRational(odd_scale) : cur);
        prev = std::move(cur);
    }
    return out;
}

struct RecursiveDeltas {
    RecursionResult run;
    /// Empty when the recursion broke down.
    std::vector<ExtRational> deltas;
};

inline RecursiveDeltas delta_simple_recursive(const CoeffVector& c, const LogScale& L = LogScale()) {
    RecursiveDeltas out;
    out.run = try_run_recursion(omega0(embed_simple(c, L)), c.g());
    if (out.run.completed()) out.deltas = delta_from_gammas(out.run.chain.gammas, Rational(c.g() * L.value()));
    return out;
}

inline RecursiveDeltas delta_omega_recursive(const CoeffVector& c, const Rational& t) {
    RecursiveDeltas out;
    out.run = try_run_recursion(omega0_omega(c, t), c.g());
    if (out.run.completed()) out.deltas = delta_from_gammas(out.run.chain.gammas, omega_odd_factor(c.g(), t));
    return out;
}

}  // namespace srcirc

#endif  // SRCIRC_RECURSION_HPP
