#include "seshadri/seshadri_info.hpp"

#include "seshadri/errors.hpp"

namespace seshadri {

SeshadriInfo SeshadriInfo::exact(Rational value) {
    if (value.sign() <= 0) throw Error("Seshadri constant must be positive");
    return {Bound::Exact, std::move(value)};
}

SeshadriInfo SeshadriInfo::lower_bound(Rational value) {
    if (value.sign() <= 0) throw Error("Seshadri lower bound must be positive");
    return {Bound::LowerBound, std::move(value)};
}

SeshadriInfo seshadri_complete_intersection(const std::vector<long>& degrees) {
    if (degrees.empty()) throw EmptyDegrees();
    long max_degree = 1;
    for (long d : degrees) {
        if (d < 1) throw BadParams("complete-intersection degrees must be positive");
        max_degree = std::max(max_degree, d);
    }
    return SeshadriInfo::exact(Rational(1, max_degree));
}

SeshadriInfo seshadri_defined_in_degree(long t, bool quadratic_sharp) {
    if (t < 1) throw BadParams("defining degree t must be >= 1");
    if (quadratic_sharp) {
        if (t != 2) throw SharpFlagInvalid();
        return SeshadriInfo::exact(Rational(1, 2));
    }
    return SeshadriInfo::lower_bound(Rational(1, t));
}

SeshadriInfo scale_seshadri(const SeshadriInfo& info, long s) {
    if (s < 1) throw BadParams("scaling factor must be >= 1");
    return {info.bound, Rational(s) * info.value};
}

} // namespace seshadri
