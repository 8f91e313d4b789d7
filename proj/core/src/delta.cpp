#include "seshadri/delta.hpp"

#include "seshadri/errors.hpp"


namespace seshadri {

std::string to_string(DeltaFormula f) {
    switch (f) {
    case DeltaFormula::General: return "general";
    case DeltaFormula::Codim1: return "codim1";
    case DeltaFormula::Surface: return "surface";
    case DeltaFormula::Curve: return "curve";
    case DeltaFormula::Codim2: return "codim2";
    }
    return "?";
}

Rational segre_integral(const VarietyData& v, int t) {
    const int k = v.ambient_dimension();
    const int y = v.dimension();
    if (t < 0 || t > k - 2) throw PreconditionViolated("segre_integral needs 0 <= t <= k-2");
    const int order = y - k + t + 2;
    if (order < 0 || order > y) return Rational(0);
    const ChernSeries s = segre_from_chern(v.normal());
    return integrate(mul(s.at(order), power(v.polarization(), static_cast<unsigned>(k - t - 2))));
}

Rational blowup_intersection(const VarietyData& v, int r) {
    const int k = v.ambient_dimension();
    const int y = v.dimension();
    if (r < 0 || r > k) throw PreconditionViolated("blowup_intersection needs 0 <= r <= k");
    if (r >= y + 1) return Rational(0);
    const ChernSeries s = segre_from_chern(v.normal());
    const Rational value = integrate(mul(s.at(y - r), power(v.polarization(), static_cast<unsigned>(r))));
    return (k - r - 1) % 2 == 0 ? value : -value;
}

EtaPolynomial delta_poly(const VarietyData& v) {
    const int k = v.ambient_dimension();
    std::vector<Rational> coeffs(static_cast<std::size_t>(k - 1), Rational(0));
    for (int t = 0; t <= k - 2; ++t)
        coeffs[static_cast<std::size_t>(t)] =
            -(binomial(static_cast<unsigned>(k - 2), static_cast<unsigned>(t)) * segre_integral(v, t));
    return {UniPoly(std::move(coeffs)), DeltaFormula::General};
}

Rational delta_at(const VarietyData& v, const Rational& eta) { return delta_poly(v).poly.evaluate(eta); }

EtaPolynomial delta_codim1_poly(const VarietyData& v) {
    const int k = v.ambient_dimension();
    if (v.codimension() != 1) throw NotCodimensionOne();
    const CycleClass& c1n = v.normal().at(1);
    std::vector<Rational> coeffs(static_cast<std::size_t>(k - 1), Rational(0));
    for (int j = 0; j <= k - 2; ++j) {
        const Rational integral = integrate(mul(power(c1n, static_cast<unsigned>(j + 1)),
                                                power(v.polarization(), static_cast<unsigned>(k - 2 - j))));
        Rational c = binomial(static_cast<unsigned>(k - 2), static_cast<unsigned>(j)) * integral;
        if (j % 2 != 0) c = -c;
        coeffs[static_cast<std::size_t>(j)] = c;
    }
    return {UniPoly(std::move(coeffs)), DeltaFormula::Codim1};
}

EtaPolynomial delta_surface_poly(const VarietyData& v) {
    const int k = v.ambient_dimension();
    if (v.dimension() != 2) throw PreconditionViolated("surface form needs y = 2");
    const CycleClass& c1 = v.normal().at(1);
    const CycleClass& c2 = v.normal().at(2);
    const Rational i2 = integrate(mul(c1, c1) - c2);
    const Rational i1 = integrate(mul(c1, v.polarization()));
    const Rational d = v.degree();
    const UniPoly inner({Rational((k - 2) * (k - 3), 2) * d, Rational(-(k - 2)) * i1, i2});
    return {(-inner).shifted(k - 4), DeltaFormula::Surface};
}

EtaPolynomial delta_curve_poly(const VarietyData& v) {
    const int k = v.ambient_dimension();
    if (v.dimension() != 1) throw PreconditionViolated("curve form needs y = 1");
    const Rational deg_n = integrate(v.normal().at(1));
    const Rational d = v.degree();
    const UniPoly inner({Rational(-(k - 2)) * d, deg_n});
    return {inner.shifted(k - 3), DeltaFormula::Curve};
}

EtaPolynomial delta_codim2_poly(const VarietyData& v) {
    const int k = v.ambient_dimension();
    if (v.codimension() != 2) throw PreconditionViolated("codimension-two forms need k - y = 2");
    if (k < 4 || k > 6) throw PreconditionViolated("codimension-two closed forms cover k = 4, 5, 6");
    const CycleClass& c1 = v.normal().at(1);
    const CycleClass& c2 = v.normal().at(2);
    const CycleClass& h = v.polarization();
    const CycleClass c1sq_minus_c2 = mul(c1, c1) - c2;
    const CycleClass s3_neg = Rational(2) * mul(c1, c2) - power(c1, 3); // 2 c1 c2 - c1^3
    const Rational d = v.degree();

    std::vector<Rational> c;
    switch (k) {
    case 4:
        c = {-d, Rational(2) * integrate(mul(c1, h)), -integrate(c1sq_minus_c2)};
        break;
    case 5:
        c = {-d, Rational(3) * integrate(mul(c1, power(h, 2))), Rational(-3) * integrate(mul(c1sq_minus_c2, h)),
             -integrate(s3_neg)};
        break;
    default:
        c = {-d, Rational(4) * integrate(mul(c1, power(h, 3))),
             Rational(-6) * integrate(mul(c1sq_minus_c2, power(h, 2))), Rational(-4) * integrate(mul(s3_neg, h)),
             integrate(Rational(3) * mul(mul(c1, c1), c2) - mul(c2, c2) - power(c1, 4))};
        break;
    }
    return {UniPoly(std::move(c)), DeltaFormula::Codim2};
}

Rational delta1_decomposable(const VarietyData& v, const CycleClass& L, const CycleClass& M) {
    if (v.codimension() != 2) throw PreconditionViolated("decomposable form needs codimension 2");
    const ChernSeries expected = whitney(ChernSeries::line_bundle(L), ChernSeries::line_bundle(M));
    if (!(v.normal() == expected))
        throw PreconditionViolated("normal bundle series must be the sum of the two line bundles");
    if (!(v.polarization() == L + M)) throw PreconditionViolated("polarization must equal L + M");
    const int y = v.dimension();
    Rational sum(0);
    for (int j = 1; j <= y - 1; ++j)
        sum += integrate(mul(power(L, static_cast<unsigned>(y - j)), power(M, static_cast<unsigned>(j))));
    return sum;
}

Rational schur_delta1(const ChernSeries& bundle, int k) {
    if (k < 4 || k > 7) throw UnsupportedK(k);
    if (bundle.kind() != SeriesKind::Chern) throw KindMismatch("Schur form needs a Chern series");
    if (bundle.rank() != 2) throw PreconditionViolated("Schur delta_1 forms are for rank-2 bundles");
    if (bundle.presentation()->dimension() != k - 2)
        throw PreconditionViolated("bundle must live on Y of dimension k - 2");
    const CycleClass& c1 = bundle.at(1);
    const CycleClass& c2 = bundle.at(2);
    switch (k) {
    case 4: return integrate(c2);
    case 5: return integrate(mul(c1, c2));
    case 6: return integrate(mul(c2, mul(c1, c1) - c2));
    default: return integrate(mul(mul(c1, c2), mul(c1, c1) - Rational(2) * c2));
    }
}

VarietyData scale_delta(const VarietyData& v, long s) {
    if (s < 1) throw PreconditionViolated("scaling factor must be >= 1");
    std::optional<SeshadriInfo> info = v.seshadri();
    if (info) info = scale_seshadri(*info, s);
    VarietyData scaled(v.name(), v.ambient_dimension(), v.chow(), v.normal(), Rational(s) * v.polarization(),
                       std::move(info), v.ambient_projective_space());
    const UniPoly base = delta_poly(v).poly;
    const UniPoly at_scaled_eta = delta_poly(scaled).poly.scale_argument(Rational(s));
    const Rational factor = Rational(s).pow(static_cast<unsigned long>(v.ambient_dimension() - 2));
    if (!(at_scaled_eta == factor * base)) throw Error("scaling law violated; internal inconsistency");
    return scaled;
}

EtaPolynomial finite_cover_delta(const VarietyData& v, long degf) {
    if (degf < 1) throw PreconditionViolated("covering degree must be >= 1");
    EtaPolynomial p = delta_poly(v);
    return {Rational(degf) * p.poly, p.provenance};
}

} // namespace seshadri
