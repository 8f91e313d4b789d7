#pragma once

#include "seshadri/rational.hpp"

#include <vector>

namespace seshadri {

/// What is known about the Seshadri constant of (Y, A): either the exact
/// value, or only that the constant is at least the stored value. The value
/// is strictly positive in both cases.
struct SeshadriInfo {
    enum class Bound { Exact, LowerBound };

    static SeshadriInfo exact(Rational value);
    static SeshadriInfo lower_bound(Rational value);

    bool is_exact() const { return bound == Bound::Exact; }

    Bound bound;
    Rational value;
};

/// Complete intersection of hypersurfaces of the given degrees: the
/// constant equals 1 over the largest degree. Throws EmptyDegrees.
SeshadriInfo seshadri_complete_intersection(const std::vector<long>& degrees);

/// Y defined by A in degree t gives the lower bound 1/t. For non-linear
/// subvarieties of projective space cut out by quadrics the bound is sharp:
/// quadratic_sharp with t = 2 yields the exact value 1/2 (any other t with
/// the flag set throws SharpFlagInvalid).
SeshadriInfo seshadri_defined_in_degree(long t, bool quadratic_sharp);

/// Constant under polarization powers: epsilon(Y, A^s) = s * epsilon(Y, A).
SeshadriInfo scale_seshadri(const SeshadriInfo& info, long s);

} // namespace seshadri
