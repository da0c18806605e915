#pragma once

#include "tpriordan/arrays.hpp"
#include "tpriordan/series.hpp"
#include "tpriordan/tp.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace tpr {

/// Rows k1 < k2 and column n >= 1 of [1/(1 - alpha t), f], alpha > 0.
struct AlphaProbe {
    std::size_t k1 = 0;
    std::size_t k2 = 1;
    std::size_t n = 1;
    Rational alpha;
};

/// alpha^k1 f_{k2-n+1} - alpha^k2 f_{k1-n+1}: the minor on rows {k1, k2} and
/// columns {0, n} of [1/(1 - alpha t), f].
Rational alpha_minor(const TruncatedSeries& f, const AlphaProbe& probe);

/// The same minor read off the constructed quasi-array.
Rational alpha_minor_from_matrix(const TruncatedSeries& f, const AlphaProbe& probe);

/// Exact form of the critical alpha for a probe: the minor is negative iff
/// alpha^exponent * lower > upper, i.e. alpha exceeds ratio^(1/exponent).
struct AlphaThreshold {
    Rational lower; ///< f_{k1-n+1}
    Rational upper; ///< f_{k2-n+1}
    Rational ratio; ///< upper / lower
    unsigned exponent = 1;

    bool exceeded_by(const Rational& alpha) const;
};

/// Requires both referenced coefficients to be positive.
AlphaThreshold alpha_threshold(const TruncatedSeries& f, std::size_t k1, std::size_t k2, std::size_t n);

/// Coefficients (beta^{n+1} - alpha^{n+1})/(beta - alpha) of 1/((1 - alpha t)(1 - beta t)).
/// Equal poles are rejected: expand (1 - alpha t)^{-2} with gf_coeffs instead.
TruncatedSeries two_pole_coeffs(const Rational& alpha, const Rational& beta, std::size_t degree);

/// alpha^2 + beta^2 + alpha beta - ratio (alpha + beta). Positive exactly when the
/// minor on rows {1,2}, columns {0,1} of [1/((1-alpha t)(1-beta t)), t + ratio t^2]
/// is negative.
Rational region_value(const Rational& alpha, const Rational& beta, const Rational& ratio);

/// Inclusive arithmetic progression min, min+step, ... <= max.
struct GridSpec {
    Rational min;
    Rational max;
    Rational step;

    std::vector<Rational> values() const;
};

struct RegionPoint {
    Rational alpha;
    Rational beta;
    Rational ratio;
    Rational value;
    Rational oracle_minor;
    bool negative_minor_found = false;

    /// sign(value) == -sign(oracle_minor).
    bool agrees() const;
};

struct RegionScan {
    std::vector<RegionPoint> points;
    std::vector<std::string> diagnostics;
};

/// Scans beta > alpha > 0 over the grid product in (alpha, beta) order with
/// f = t + ratio t^2. Points with alpha = beta or alpha <= 0 are skipped with a
/// diagnostic; points with alpha > beta are outside the region and ignored.
RegionScan region_scan(const Rational& ratio, const GridSpec& alpha, const GridSpec& beta);

/// CSV with columns alpha,beta,value,quadratic_sign,oracle_minor,agree.
std::string region_scan_csv(const RegionScan& scan);

struct QuadraticVerdict {
    bool criterion = false;       ///< g1 alpha - g2 >= 0
    bool hypotheses_hold = false; ///< alpha > 0, g0, g1, g2 > 0, g1^2 - 4 g0 g2 < 0
    std::vector<std::string> violations;
    Rational key_minor; ///< g1 alpha - g2, rows {1,2} x cols {0,1}
};

/// TP criterion for [g0 + g1 t + g2 t^2, t/(1 - alpha t)]. Hypothesis
/// violations are reported, not fatal.
QuadraticVerdict quadratic_g_verdict(const Rational& g0, const Rational& g1, const Rational& g2,
                                     const Rational& alpha);

/// The quasi-array [g0 + g1 t + g2 t^2, t/(1 - alpha t)] as a relaxed spec.
RiordanSpec quadratic_g_spec(const Rational& g0, const Rational& g1, const Rational& g2, const Rational& alpha);

using SpecFamily = std::function<RiordanSpec(std::span<const Rational>)>;

/// [1/(1 - alpha t), f]; parameters {alpha}.
SpecFamily geometric_g_family(RationalGF f);
/// [1/((1 - alpha t)(1 - beta t)), f]; parameters {alpha, beta}.
SpecFamily two_pole_g_family(RationalGF f);
/// tp_family_construct; parameters {w0, w1, z0, z1}.
SpecFamily tp_family();

/// Cartesian product of parameter axes, last axis fastest.
std::vector<std::vector<Rational>> grid_product(std::span<const std::vector<Rational>> axes);

struct SearchBudget {
    std::size_t n = 6;
    std::size_t max_order = 4;
};

struct SearchHit {
    std::vector<Rational> params;
    TPReport report;
};

/// Every grid point (in grid order) whose quasi truncation has a negative
/// minor within the budget.
std::vector<SearchHit> search_counterexample(const SpecFamily& family,
                                             std::span<const std::vector<Rational>> grid,
                                             const SearchBudget& budget);

} // namespace tpr
