#pragma once

#include "seshadri/polynomial.hpp"
#include "seshadri/variety.hpp"

namespace seshadri {

/// Which formula produced a delta polynomial. All of them agree identically
/// on their domain of validity; the specialized ones exist as independent
/// routes for cross-checking.
enum class DeltaFormula { General, Codim1, Surface, Curve, Codim2 };

std::string to_string(DeltaFormula f);

/// The invariant delta_eta(Y, A) as an exact polynomial in eta, of degree at
/// most k - 2.
struct EtaPolynomial {
    UniPoly poly;
    DeltaFormula provenance;
};

/// The summand of the general formula at index t:
///   integral over Y of s_{y-k+t+2}(N) . c1(A_Y)^{k-t-2},
/// zero when the Segre order is negative or exceeds y. Requires 0 <= t <= k-2.
Rational segre_integral(const VarietyData& v, int t);

/// Intersection numbers on the blow-up of X along Y, pushed down to Y:
///   E^{k-r} . c1(A*)^r = (-1)^{k-r-1} s_{y-r}(N) . c1(A_Y)^r integrated,
/// and 0 for r >= y + 1. Requires 0 <= r <= k.
Rational blowup_intersection(const VarietyData& v, int r);

/// General formula: coefficient of eta^t is -binomial(k-2, t) times
/// segre_integral(v, t).
EtaPolynomial delta_poly(const VarietyData& v);

/// delta_eta evaluated exactly at a rational eta.
Rational delta_at(const VarietyData& v, const Rational& eta);

/// Codimension-one closed form: integral of c1(N) . (c1(A_Y) - eta c1(N))^{k-2},
/// expanded binomially. Requires y = k - 1 (throws NotCodimensionOne).
EtaPolynomial delta_codim1_poly(const VarietyData& v);

/// Surface closed form (y = 2), in terms of c1(N)^2 - c2(N), c1(N).c1(A_Y)
/// and the degree.
EtaPolynomial delta_surface_poly(const VarietyData& v);

/// Curve closed form (y = 1): eta^{k-3} (eta deg N - (k-2) d).
EtaPolynomial delta_curve_poly(const VarietyData& v);

/// Codimension-two closed forms for k = 4, 5, 6, written in the Chern
/// classes of N (which vanish above order 2 for a rank-2 bundle).
EtaPolynomial delta_codim2_poly(const VarietyData& v);

/// For N = L + M decomposable with polarization L + M and codimension 2:
///   delta_1(Y, A) = sum over j = 1..y-1 of the integral of L^{y-j} . M^j
/// (empty sum for y = 1). Preconditions are checked exactly.
Rational delta1_decomposable(const VarietyData& v, const CycleClass& L, const CycleClass& M);

/// Schur-form delta_1 for a rank-2 bundle E on Y of dimension k - 2:
///   k = 4: c2, k = 5: c1 c2, k = 6: c2 (c1^2 - c2), k = 7: c1 c2 (c1^2 - 2 c2),
/// each integrated over Y. Throws UnsupportedK outside 4 <= k <= 7.
Rational schur_delta1(const ChernSeries& bundle, int k);

/// Replaces A by A^s (s >= 1), scaling the polarization class and the
/// Seshadri information, and checks the scaling law
///   delta_{s eta}(Y, A^s) = s^{k-2} delta_eta(Y, A)
/// coefficient-wise before returning the scaled data.
VarietyData scale_delta(const VarietyData& v, long s);

/// delta polynomial of a finite cover of degree degf >= 1: the polynomial
/// scales by the degree.
EtaPolynomial finite_cover_delta(const VarietyData& v, long degf);

} // namespace seshadri
