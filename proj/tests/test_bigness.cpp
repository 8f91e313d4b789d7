#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seshadri/bigness.hpp"
#include "seshadri/catalog.hpp"
#include "seshadri/errors.hpp"

using namespace seshadri;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

UniPoly poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return UniPoly(std::move(c));
}

EtaPolynomial eta(UniPoly p) { return {std::move(p), DeltaFormula::General}; }

} // namespace

TEST_CASE("complete intersection rule") {
    const SeshadriInfo a = seshadri_complete_intersection({3, 2, 2});
    CHECK(a.is_exact());
    CHECK(a.value == q(1, 3));
    const SeshadriInfo b = seshadri_complete_intersection({1});
    CHECK(b.is_exact());
    CHECK(b.value == q(1));
    CHECK(seshadri_complete_intersection({9, 2, 2}).value == q(1, 9));
    CHECK_THROWS_AS(seshadri_complete_intersection({}), EmptyDegrees);
    CHECK_THROWS_AS(seshadri_complete_intersection({2, 0}), BadParams);
}

TEST_CASE("defined-in-degree rule") {
    const SeshadriInfo sharp = seshadri_defined_in_degree(2, true);
    CHECK(sharp.is_exact());
    CHECK(sharp.value == q(1, 2));
    const SeshadriInfo cubic = seshadri_defined_in_degree(3, false);
    CHECK_FALSE(cubic.is_exact());
    CHECK(cubic.value == q(1, 3));
    CHECK_THROWS_AS(seshadri_defined_in_degree(3, true), SharpFlagInvalid);
    CHECK_THROWS_AS(seshadri_defined_in_degree(0, false), BadParams);
}

TEST_CASE("scaling the constant") {
    CHECK(scale_seshadri(SeshadriInfo::exact(q(1, 2)), 2).value == q(1));
    CHECK(scale_seshadri(SeshadriInfo::exact(q(1, 2)), 2).is_exact());
    const SeshadriInfo lb = scale_seshadri(SeshadriInfo::lower_bound(q(1, 3)), 3);
    CHECK_FALSE(lb.is_exact());
    CHECK(lb.value == q(1));
    const SeshadriInfo same = scale_seshadri(SeshadriInfo::lower_bound(q(2, 7)), 1);
    CHECK(same.value == q(2, 7));
    CHECK_THROWS_AS(scale_seshadri(SeshadriInfo::exact(q(1)), 0), BadParams);
}

TEST_CASE("decide_bigness on the scroll family") {
    for (long e = 0; e <= 8; ++e) {
        const VarietyData v = build_entry("scroll", {{"e", e}});
        const BignessVerdict verdict = decide_bigness(delta_poly(v), *v.seshadri());
        if (e <= 4) {
            CHECK(verdict.kind == BignessVerdict::Kind::Big);
            REQUIRE(verdict.witness.has_value());
            CHECK(*verdict.value == delta_poly(v).poly.evaluate(*verdict.witness));
            CHECK(verdict.value->sign() > 0);
            CHECK(*verdict.witness > q(0));
            CHECK(*verdict.witness < q(1, 2));
        } else {
            CHECK(verdict.kind == BignessVerdict::Kind::NotBig);
            CHECK_FALSE(verdict.witness.has_value());
        }
    }
}

TEST_CASE("decide_bigness on the complete intersections") {
    const VarietyData big = build_entry("ci_surface_p5", {{"d1", 3}, {"d2", 2}, {"d3", 2}});
    CHECK(decide_bigness(delta_poly(big), *big.seshadri()).kind == BignessVerdict::Kind::Big);

    const VarietyData never = build_entry("ci_surface_p5", {{"d1", 9}, {"d2", 2}, {"d3", 2}});
    const BignessVerdict verdict = decide_bigness(delta_poly(never), *never.seshadri());
    CHECK(verdict.kind == BignessVerdict::Kind::NotBig); // exact constant: a sound negative
    CHECK(verdict.evidence.distinct_roots == 0);
}

TEST_CASE("lower bounds cannot conclude not-big") {
    const VarietyData elliptic = build_entry("elliptic_scroll", ParamMap{});
    const BignessVerdict verdict = decide_bigness(delta_poly(elliptic), *elliptic.seshadri());
    CHECK(verdict.kind == BignessVerdict::Kind::Big);
    CHECK(*verdict.witness < q(1, 3));

    // same polynomial, but a bound so small the positive window is missed
    const BignessVerdict inconclusive =
        decide_bigness(delta_poly(elliptic), SeshadriInfo::lower_bound(q(1, 10)));
    CHECK(inconclusive.kind == BignessVerdict::Kind::Inconclusive);
    CHECK(*inconclusive.checked_up_to == q(1, 10));

    // with an exact constant the same failure is a definitive no
    const BignessVerdict no = decide_bigness(delta_poly(elliptic), SeshadriInfo::exact(q(1, 10)));
    CHECK(no.kind == BignessVerdict::Kind::NotBig);
}

TEST_CASE("zero polynomial yields no witness") {
    CHECK(decide_bigness(eta(UniPoly()), SeshadriInfo::exact(q(1, 2))).kind == BignessVerdict::Kind::NotBig);
    CHECK(decide_bigness(eta(UniPoly()), SeshadriInfo::lower_bound(q(1, 2))).kind ==
          BignessVerdict::Kind::Inconclusive);
}

TEST_CASE("positivity at the bound itself never counts") {
    // p(eta) = eta is positive at 1/2 and below; p(eta) = eta - 1/2 only at 1/2.
    CHECK(decide_bigness(eta(poly({0, 1})), SeshadriInfo::exact(q(1, 2))).kind == BignessVerdict::Kind::Big);
    const UniPoly touches = UniPoly({q(-1, 2), q(1)});
    CHECK(decide_bigness(eta(touches), SeshadriInfo::exact(q(1, 2))).kind == BignessVerdict::Kind::NotBig);
}

TEST_CASE("enlarging a lower bound is monotone") {
    // positive exactly on (1/3, 1/2)
    const UniPoly window = UniPoly({q(-1, 6), q(5, 6), q(-1)});
    REQUIRE(window.evaluate(q(5, 12)).sign() > 0);
    const EtaPolynomial p = eta(window);
    CHECK(decide_bigness(p, SeshadriInfo::lower_bound(q(1, 4))).kind == BignessVerdict::Kind::Inconclusive);
    CHECK(decide_bigness(p, SeshadriInfo::lower_bound(q(2, 5))).kind == BignessVerdict::Kind::Big);
    CHECK(decide_bigness(p, SeshadriInfo::lower_bound(q(1))).kind == BignessVerdict::Kind::Big);
}

TEST_CASE("verdict carries usable evidence") {
    const VarietyData v = build_entry("segre_p2p1", ParamMap{});
    const BignessVerdict verdict = decide_bigness(delta_poly(v), *v.seshadri());
    CHECK(verdict.kind == BignessVerdict::Kind::Big);
    CHECK(verdict.evidence.samples.size() == static_cast<std::size_t>(verdict.evidence.distinct_roots) + 1);
    bool witness_sampled = false;
    for (const GapSample& s : verdict.evidence.samples)
        if (s.sample == *verdict.witness) witness_sampled = s.sign > 0;
    CHECK(witness_sampled);
}

TEST_CASE("projective-space annotation") {
    const VarietyData v = build_entry("veronese", ParamMap{});
    BignessVerdict verdict = decide_bigness(delta_poly(v), *v.seshadri());
    CHECK_FALSE(verdict.annotation.has_value());
    verdict = annotate_projective_space(std::move(verdict));
    REQUIRE(verdict.annotation.has_value());
    CHECK(verdict.annotation->find("ample") != std::string::npos);

    BignessVerdict negative = decide_bigness(eta(poly({-1})), SeshadriInfo::exact(q(1)));
    negative = annotate_projective_space(std::move(negative));
    CHECK_FALSE(negative.annotation.has_value());
}
