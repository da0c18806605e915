#pragma once

#include "tpriordan/arrays.hpp"
#include "tpriordan/matrix.hpp"
#include "tpriordan/series.hpp"

#include <cstddef>
#include <string>

namespace tpr {

enum class ProductionSource { Riordan, Quasi };

/// Coefficient sequences of a production matrix.
///
/// Quasi source: [g, f] J = [g, f] without its first row, where J has the
/// W-sequence in column 0, the Z-sequence in column 1 and a = (1, 0, ...)
/// descending from row k-1 in column k >= 2.
/// Riordan source: (g, f) P = (g, f) without its first row, with the
/// Z-sequence in column 0 and the A-sequence descending from row k-1 in
/// column k >= 1; `w` is unused and empty (degree 0, value 0).
struct ProductionData {
    TruncatedSeries a;
    TruncatedSeries z;
    TruncatedSeries w;
    ProductionSource source = ProductionSource::Quasi;
};

/// A(t) = t / fbar(t), so that f = t A(f). Known to degree N - 1.
TruncatedSeries a_sequence(const TruncatedSeries& f);

/// Z(t) = (g(fbar) - 1) / (fbar g(fbar)), so that g = 1/(1 - t Z(f)).
/// Known to degree N - 1.
TruncatedSeries z_sequence_riordan(const TruncatedSeries& g, const TruncatedSeries& f);

ProductionData riordan_production(const TruncatedSeries& g, const TruncatedSeries& f);

/// W and Z of [g, f] from the seeds w_0 = g_1, z_0 = f_1:
///   Z = (f - z_0 t g)/f + z_0,   W = ((1 - w_0 t) g - 1)/f + w_0.
/// Both quotients must have vanishing constant term; a violation (for
/// example g(0) != 1 from a relaxed spec) raises an Error naming it.
/// The sequences are known to degree N - 1.
ProductionData quasi_production(const TruncatedSeries& g, const TruncatedSeries& f);

/// The (n+1)x(n+1) leading block of the production matrix.
Matrix production_matrix(const ProductionData& pd, std::size_t n);

/// [g, f]_n J_n equals rows 1..n+1 of [g, f]_{n+1} (columns 0..n).
bool production_check(const RiordanSpec& spec, std::size_t n);
bool production_check(const SeriesPair& pair, std::size_t n);

/// (g, f)_n P_n equals rows 1..n+1 of (g, f)_{n+1} (columns 0..n).
bool riordan_production_check(const RiordanSpec& spec, std::size_t n);

struct CriterionResult {
    bool holds = false;
    std::string reason;
};

/// J is TP iff w_k = z_k = 0 for k >= 2, w_0, w_1, z_0, z_1 >= 0 and
/// w_0 z_1 - w_1 z_0 >= 0.
CriterionResult j_tp_criterion(const TruncatedSeries& w, const TruncatedSeries& z);

struct FamilyParams {
    Rational w0;
    Rational w1;
    Rational z0;
    Rational z1;
};

/// The pair with A = 1, Z = z0 + z1 t, W = w0 + w1 t:
///   g = (1 - z1 t)/D,  f = z0 t/D,  D = (w0 z1 - w1 z0) t^2 - (w0 + z1) t + 1.
/// Any parameter values are accepted; z0 must be nonzero.
RiordanSpec tp_family_construct(const FamilyParams& p);

/// The common denominator D(t) before normalization.
Polynomial family_denominator(const FamilyParams& p);

/// Discriminant (w0 - z1)^2 + 4 w1 z0 of D.
Rational family_discriminant(const FamilyParams& p);

/// Whether the parameters satisfy the nonnegativity and determinant conditions.
bool family_preconditions_hold(const FamilyParams& p);

} // namespace tpr
