#ifndef SRCIRC_CRITERION_HPP
#define SRCIRC_CRITERION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srcirc/embedding.hpp"
#include "srcirc/exact/matrix.hpp"
#include "srcirc/exact/rational.hpp"

namespace srcirc {

/// Lower-triangular Toeplitz pair of size 2g+1. E^+ has first column
/// C_{-g}, C_{-g+1}, ..., C_g; E^- has first column C_g, ..., C_{-g}.
template <class T>
std::pair<Matrix<T>, Matrix<T>> build_E_plus_minus(const SymbolVectorT<T>& C) {
    const int g = C.g();
    const std::size_t size = static_cast<std::size_t>(2 * g + 1);
    Matrix<T> plus(size, size), minus(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const int d = static_cast<int>(i - j);
            plus(i, j) = C.at(-g + d);
            minus(i, j) = C.at(g - d);
        }
    return {std::move(plus), std::move(minus)};
}

/// Size x size matrix with the n x n antidiagonal identity in its top-left
/// corner.
inline RatMatrix build_Jn(int n, std::size_t size) {
    if (n < 1 || static_cast<std::size_t>(n) > size) throw DimensionError("J_n index out of range");
    RatMatrix J(size, size);
    for (int i = 0; i < n; ++i) J(static_cast<std::size_t>(i), static_cast<std::size_t>(n - 1 - i)) = 1;
    return J;
}

/// E^+ + sign * E^- J_n, assembled without a matrix product: right
/// multiplication by J_n reverses the first n columns of E^- and zeroes the
/// rest.
template <class T>
Matrix<T> plus_minus_matrix(const Matrix<T>& plus, const Matrix<T>& minus, int n, int sign) {
    Matrix<T> out = plus;
    const std::size_t nn = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < nn; ++j) {
            const T& e = minus(i, nn - 1 - j);
            if (sign > 0) out(i, j) += e;
            else out(i, j) -= e;
        }
    return out;
}

/// det(E^+ + E^- J_n) and det(E^+ - E^- J_n) for one n.
struct DetPair {
    Rational plus;
    Rational minus;
};

inline DetPair det_pair(const SymbolVector& C, int n) {
    const int g = C.g();
    if (n < 1 || n > 2 * g) throw DimensionError("n must lie in 1..2g");
    const auto [plus, minus] = build_E_plus_minus(C);
    return {det_bareiss(plus_minus_matrix(plus, minus, n, +1)), det_bareiss(plus_minus_matrix(plus, minus, n, -1))};
}

/// Delta_n = det(E^+ + E^- J_n) / det(E^+ - E^- J_n).
inline ExtRational capital_delta(const SymbolVector& C, int n) {
    const DetPair d = det_pair(C, n);
    return ExtRational::ratio(d.plus, d.minus);
}

/// All Delta_1..Delta_2g.
inline std::vector<ExtRational> capital_deltas(const SymbolVector& C) {
    std::vector<ExtRational> out;
    for (int n = 1; n <= 2 * C.g(); ++n) out.push_back(capital_delta(C, n));
    return out;
}

/// gamma_n = Delta_{n-1} Delta_n with Delta_0 = 1.
inline ExtRational gamma_from_delta(const SymbolVector& C, int n) {
    const ExtRational prev = n == 1 ? ExtRational(Rational(1)) : capital_delta(C, n - 1);
    return prev * capital_delta(C, n);
}

inline std::vector<ExtRational> gammas_from_deltas(const std::vector<ExtRational>& Delta) {
    std::vector<ExtRational> out;
    ExtRational prev(Rational(1));
    for (const auto& d : Delta) {
        out.push_back(prev * d);
        prev = d;
    }
    return out;
}

/// True iff 0 < Delta_n < inf for every n.
inline bool hb_check(const SymbolVector& C) {
    for (int n = 1; n <= 2 * C.g(); ++n)
        if (!capital_delta(C, n).is_positive_finite()) return false;
    return true;
}

struct DeltaRecord {
    int n = 0;
    Rational det_plus;
    Rational det_minus;
    ExtRational Delta;
    ExtRational delta;
};

struct DeltaReport {
    int g = 0;
    Provenance provenance;
    /// Scale applied to odd-n ratios: gL, or (t^{2g}-1)/(t^{2g}+1).
    Rational odd_factor;
    std::vector<DeltaRecord> records;

    std::vector<ExtRational> deltas() const {
        std::vector<ExtRational> out;
        for (const auto& r : records) out.push_back(r.delta);
        return out;
    }

    std::vector<ExtRational> Deltas() const {
        std::vector<ExtRational> out;
        for (const auto& r : records) out.push_back(r.Delta);
        return out;
    }

    /// First n with delta_n outside (0, inf).
    std::optional<int> first_failure() const {
        for (const auto& r : records)
            if (!r.delta.is_positive_finite()) return r.n;
        return std::nullopt;
    }
};

inline DeltaReport delta_report(const SymbolVector& C, const Rational& odd_factor) {
    DeltaReport rep;
    rep.g = C.g();
    rep.provenance = C.provenance();
    rep.odd_factor = odd_factor;
    const auto [plus, minus] = build_E_plus_minus(C);
    for (int n = 1; n <= 2 * C.g(); ++n) {
        DeltaRecord r;
        r.n = n;
        r.det_plus = det_bareiss(plus_minus_matrix(plus, minus, n, +1));
        r.det_minus = det_bareiss(plus_minus_matrix(plus, minus, n, -1));
        r.Delta = ExtRational::ratio(r.det_plus, r.det_minus);
        r.delta = n % 2 == 1 ? r.Delta * ExtRational(odd_factor) : r.Delta;
        rep.records.push_back(std::move(r));
    }
    return rep;
}

/// delta_n(c) with C from the simple embedding at log-scale L.
inline DeltaReport delta_simple(const CoeffVector& c, const LogScale& L = LogScale()) {
    return delta_report(embed_simple(c, L), Rational(c.g() * L.value()));
}

/// (t^{2g} - 1)/(t^{2g} + 1), equal to (t^g - t^{-g})/(t^g + t^{-g}).
inline Rational omega_odd_factor(int g, const Rational& t) {
    Rational p(1);
    for (int i = 0; i < 2 * g; ++i) p *= t;
    return Rational((p - 1) / (p + 1));
}

/// delta_n(c; t) with C from the omega embedding at t > 1.
inline DeltaReport delta_omega(const CoeffVector& c, const Rational& t) {
    return delta_report(embed_omega(c, t), omega_odd_factor(c.g(), t));
}

enum class VerdictClass {
    SimpleOnCircle,
    /// Simple-roots test failed; on-circle status not yet decided.
    NotSimple,
    OnCircleNotSimple,
    OffCircle,
    /// Every sampled t passed; not a proof for all t > 1.
    ConsistentWithOnCircle,
    Degenerate,
    Inconclusive,
};

inline std::string to_string(VerdictClass v) {
    switch (v) {
        case VerdictClass::SimpleOnCircle: return "SimpleOnCircle";
        case VerdictClass::NotSimple: return "NotSimple";
        case VerdictClass::OnCircleNotSimple: return "OnCircleNotSimple";
        case VerdictClass::OffCircle: return "OffCircle";
        case VerdictClass::ConsistentWithOnCircle: return "ConsistentWithOnCircle";
        case VerdictClass::Degenerate: return "Degenerate";
        case VerdictClass::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

struct Verdict {
    VerdictClass cls = VerdictClass::Inconclusive;
    std::optional<int> witness_n;
    std::optional<Rational> witness_t;
    std::string reason;
    std::vector<DeltaReport> reports;
};

/// Simple roots on the circle iff 0 < delta_n(c) < inf for all n.
inline Verdict verdict_simple(const CoeffVector& c, const LogScale& L = LogScale()) {
    Verdict v;
    v.reports.push_back(delta_simple(c, L));
    const DeltaReport& rep = v.reports.back();
    if (auto n = rep.first_failure()) {
        const DeltaRecord& r = rep.records[static_cast<std::size_t>(*n - 1)];
        v.witness_n = n;
        if (r.delta.is_indeterminate()) {
            v.cls = VerdictClass::Degenerate;
            v.reason = "0/0 determinant ratio at n=" + std::to_string(*n);
        } else {
            v.cls = VerdictClass::NotSimple;
            v.reason = "delta_" + std::to_string(*n) + " = " + r.delta.str();
        }
        return v;
    }
    v.cls = VerdictClass::SimpleOnCircle;
    return v;
}

/// 1 + 2^{-k} for k = 1..10, then 2 and 4.
inline std::vector<Rational> default_grid() {
    std::vector<Rational> grid;
    for (int k = 1; k <= 10; ++k) grid.push_back(1 + make_rational(1, 1L << k));
    grid.push_back(Rational(2));
    grid.push_back(Rational(4));
    return grid;
}

/// Necessary on-circle condition checked at finitely many t: OffCircle with
/// witness (n, t) on the first sample (in grid order) where some
/// delta_n(c; t) leaves (0, inf), else ConsistentWithOnCircle.
inline Verdict verdict_on_circle_sampled(const CoeffVector& c, const std::vector<Rational>& grid = default_grid()) {
    if (grid.empty()) throw InputError("sample grid is empty");
    for (const auto& t : grid)
        if (t <= 1) throw InputError("grid points must exceed 1");
    Verdict v;
    for (const auto& t : grid) {
        v.reports.push_back(delta_omega(c, t));
        if (auto n = v.reports.back().first_failure()) {
            v.cls = VerdictClass::OffCircle;
            v.witness_n = n;
            v.witness_t = t;
            v.reason = "delta_" + std::to_string(*n) + "(c; " + to_string(t) +
                       ") = " + v.reports.back().records[static_cast<std::size_t>(*n - 1)].delta.str();
            return v;
        }
    }
    v.cls = VerdictClass::ConsistentWithOnCircle;
    return v;
}

}  // namespace srcirc

#endif  // SRCIRC_CRITERION_HPP
