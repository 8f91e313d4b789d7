#pragma once

#include "seshadri/polynomial.hpp"

#include <optional>
#include <vector>

namespace seshadri {

/// One isolated real root: either pinned exactly (lo == hi, a rational root)
/// or bracketed by an open interval (lo, hi) on which the squarefree part
/// changes sign exactly once.
struct IsolatedRoot {
    Rational lo;
    Rational hi;
    bool exact;
};

/// A root-free subinterval of the query interval together with the exact
/// sign of p at its midpoint.
struct GapSample {
    Rational lo;
    Rational hi;
    Rational sample;
    int sign;
};

struct PositivityAnalysis {
    std::optional<Rational> witness; // p(witness) > 0 exactly, strictly inside I
    int distinct_roots = 0;          // distinct real roots of p strictly inside I
    std::vector<IsolatedRoot> roots;
    std::vector<GapSample> samples;  // one per maximal root-free region, left to right
};

/// Number of distinct real roots of p strictly inside the open interval I.
/// The squarefree part is taken internally; roots at the endpoints do not
/// count. Throws ZeroPolynomial when p is identically zero.
int sturm_count(const UniPoly& p, const OpenInterval& I);

/// Isolates the distinct real roots of p strictly inside I into pairwise
/// disjoint closures, ordered left to right and strictly inside I.
std::vector<IsolatedRoot> isolate_roots(const UniPoly& p, const OpenInterval& I);

/// Full sign analysis of p on I: every maximal root-free region gets one
/// exact sample. The witness, when present, is the midpoint of the widest
/// sampled gap with p > 0 (leftmost on ties), so output is deterministic.
PositivityAnalysis analyze_positivity(const UniPoly& p, const OpenInterval& I);

/// Some rational w strictly inside I with p(w) > 0 exactly, if any point of
/// I has p > 0; empty otherwise. The zero polynomial yields no witness.
std::optional<Rational> exists_positive(const UniPoly& p, const OpenInterval& I);

} // namespace seshadri
