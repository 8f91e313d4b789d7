#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seshadri/catalog.hpp"
#include "seshadri/delta.hpp"
#include "seshadri/errors.hpp"

#include <array>
#include <thread>

using namespace seshadri;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

UniPoly poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return UniPoly(std::move(c));
}

/// Curve of degree d in a surface (k = 2, y = 1) with a line-bundle normal
/// of the given degree: the smallest codimension-one situation.
VarietyData curve_in_surface(long normal_degree, long degree) {
    ChowPresentation::TableSpec spec;
    spec.basis = {{"1", 0}, {"pt", 1}};
    spec.point_name = "pt";
    const auto pres = ChowPresentation::table(spec);
    const CycleClass pt = CycleClass::basis_element(pres, "pt");
    const ChernSeries normal = ChernSeries::line_bundle(q(normal_degree) * pt);
    return VarietyData("curve", 2, pres, normal, q(degree) * pt, std::nullopt);
}

/// Surface in a threefold (k = 3, y = 2) whose normal line bundle has
/// self-intersection zero but positive pairing with the polarization.
VarietyData surface_with_square_zero_normal(long m, long ambient_degree) {
    ChowPresentation::TableSpec spec;
    spec.basis = {{"1", 0}, {"C", 1}, {"A", 1}, {"pt", 2}};
    spec.point_name = "pt";
    spec.products[{1, 1}] = {};                // C.C = 0
    spec.products[{1, 2}] = {{3, q(m)}};       // C.A = m pt
    spec.products[{2, 2}] = {{3, q(ambient_degree)}};
    const auto pres = ChowPresentation::table(spec);
    const ChernSeries normal = ChernSeries::line_bundle(CycleClass::basis_element(pres, "C"));
    return VarietyData("square_zero", 3, pres, normal, CycleClass::basis_element(pres, "A"), std::nullopt);
}

} // namespace

TEST_CASE("segre_integral") {
    const VarietyData veronese = build_entry("veronese", ParamMap{});
    CHECK(segre_integral(veronese, 3) == q(51)); // integral of c1(N)^2 - c2(N) = 81 - 30
    CHECK(segre_integral(veronese, 0) == q(0));  // negative Segre order contributes zero
    CHECK(segre_integral(veronese, 1) == q(4));  // s_0 . pol^2 = deg

    const VarietyData segre = build_entry("segre_p2p1", ParamMap{});
    CHECK(segre_integral(segre, 1) == q(-10)); // s_1 = -c_1(N)

    CHECK_THROWS_AS(segre_integral(veronese, -1), PreconditionViolated);
    CHECK_THROWS_AS(segre_integral(veronese, 4), PreconditionViolated);
}

TEST_CASE("blowup_intersection") {
    const VarietyData veronese = build_entry("veronese", ParamMap{});
    // vanishing beyond the dimension of the center
    for (int r = veronese.dimension() + 1; r <= veronese.ambient_dimension(); ++r)
        CHECK(blowup_intersection(veronese, r) == q(0));
    // r = 2: sign (-1)^{5-2-1} = +1 on s_0 . pol^2 = deg = 4
    CHECK(blowup_intersection(veronese, 2) == q(4));

    // curve in a surface: E^2 . 1 = (-1) s_1(N) integrated = deg N
    const VarietyData curve = curve_in_surface(7, 3);
    CHECK(blowup_intersection(curve, 0) == q(7));

    CHECK_THROWS_AS(blowup_intersection(curve, -1), PreconditionViolated);
    CHECK_THROWS_AS(blowup_intersection(curve, 3), PreconditionViolated);
}

TEST_CASE("blow-up expansion reproduces delta") {
    for (const char* name : {"veronese", "segre_p2p1", "elliptic_scroll"}) {
        const VarietyData v = build_entry(name, ParamMap{});
        const int k = v.ambient_dimension();
        for (const Rational& eta : {q(1, 3), q(2, 7), q(1)}) {
            Rational acc(0);
            Rational eta_power(1);
            for (int t = 0; t <= k - 2; ++t) {
                const Rational term = binomial(static_cast<unsigned>(k - 2), static_cast<unsigned>(t)) * eta_power *
                                      blowup_intersection(v, k - t - 2);
                acc += (t % 2 == 0 ? term : -term);
                eta_power *= eta;
            }
            CHECK(acc == delta_at(v, eta));
        }
    }
}

TEST_CASE("delta polynomials of the worked examples") {
    CHECK(delta_poly(build_entry("segre_p2p1", ParamMap{})).poly == poly({-3, 30, -72, 48}));
    CHECK(delta_poly(build_entry("elliptic_scroll", ParamMap{})).poly == poly({0, -18, 90, -90}));
    CHECK(delta_poly(build_entry("segre_p3p1", ParamMap{})).poly == poly({0, -20, 180, -520, 600, -240}));
    CHECK(delta_poly(build_entry("scroll", {{"e", 1}})).poly ==
          poly({-3, 20, -24})); // (1/2)(-48 eta^2 + 40 eta - 6)
    const EtaPolynomial vp = delta_poly(build_entry("veronese", ParamMap{}));
    CHECK(vp.poly == poly({0, -12, 54, -51}));
    CHECK(vp.provenance == DeltaFormula::General);
}

TEST_CASE("delta degree stays within k - 2") {
    for (const auto& entry : {"veronese", "segre_p2p2", "elliptic_scroll"}) {
        const VarietyData v = build_entry(entry, ParamMap{});
        CHECK(delta_poly(v).poly.degree() <= v.ambient_dimension() - 2);
    }
    for (long e = 0; e <= 8; ++e) {
        const VarietyData v = build_entry("scroll", {{"e", e}});
        CHECK(delta_poly(v).poly.degree() <= v.ambient_dimension() - 2);
    }
}

TEST_CASE("delta_at on the worked examples") {
    CHECK(delta_at(build_entry("veronese", ParamMap{}), q(1, 2)) == q(9, 8));
    CHECK(delta_at(build_entry("veronese_projected", ParamMap{}), q(1, 3)) == q(5, 3));
    CHECK(delta_at(build_entry("elliptic_scroll", ParamMap{}), q(1, 3)) == q(2, 3));
}

TEST_CASE("codimension-one closed form") {
    // k = 2, y = 1: constant polynomial deg N
    const VarietyData curve = curve_in_surface(5, 2);
    const EtaPolynomial p = delta_codim1_poly(curve);
    CHECK(p.poly == UniPoly::constant(q(5)));
    CHECK(p.provenance == DeltaFormula::Codim1);
    CHECK(delta_poly(curve).poly == p.poly);

    // k = 3 surface with square-zero normal: constant m, no eta term
    const VarietyData surface = surface_with_square_zero_normal(4, 2);
    CHECK(delta_codim1_poly(surface).poly == UniPoly::constant(q(4)));
    CHECK(delta_poly(surface).poly == UniPoly::constant(q(4)));

    // vanishing first Chern class: identically zero polynomial
    ChowPresentation::TableSpec spec;
    spec.basis = {{"1", 0}, {"pt", 1}};
    spec.point_name = "pt";
    const auto pres = ChowPresentation::table(spec);
    const VarietyData zero_normal("zero_normal", 2, pres,
                                  ChernSeries::line_bundle(CycleClass::zero(pres)),
                                  q(3) * CycleClass::basis_element(pres, "pt"), std::nullopt);
    CHECK(delta_codim1_poly(zero_normal).poly.is_zero());

    CHECK_THROWS_AS(delta_codim1_poly(build_entry("veronese", ParamMap{})), NotCodimensionOne);
}

TEST_CASE("specialized closed forms match the general polynomial") {
    // curve form
    const VarietyData curve = build_entry("decomposable_rank2", {{"y", 1}, {"d1", 2}, {"d2", 3}});
    CHECK(delta_curve_poly(curve).poly == delta_poly(curve).poly);

    // surface form on surfaces of very different codimension
    for (const char* name : {"veronese", "veronese_projected", "elliptic_scroll"}) {
        const VarietyData v = build_entry(name, ParamMap{});
        CHECK(delta_surface_poly(v).poly == delta_poly(v).poly);
    }
    for (long e = 0; e <= 6; ++e) {
        const VarietyData v = build_entry("scroll", {{"e", e}});
        CHECK(delta_surface_poly(v).poly == delta_poly(v).poly);
    }

    // codimension-two forms for k = 4, 5, 6
    const VarietyData k4 = build_entry("ci_codim2", {{"k", 4}, {"d1", 3}, {"d2", 2}});
    CHECK(delta_codim2_poly(k4).poly == delta_poly(k4).poly);
    const VarietyData k5 = build_entry("ci_codim2", {{"k", 5}, {"d1", 4}, {"d2", 2}});
    CHECK(delta_codim2_poly(k5).poly == delta_poly(k5).poly);
    const VarietyData k6 = build_entry("decomposable_rank2", {{"y", 4}, {"d1", 2}, {"d2", 2}});
    CHECK(delta_codim2_poly(k6).poly == delta_poly(k6).poly);

    CHECK_THROWS_AS(delta_surface_poly(curve), PreconditionViolated);
    CHECK_THROWS_AS(delta_curve_poly(k4), PreconditionViolated);
    CHECK_THROWS_AS(delta_codim2_poly(build_entry("veronese", ParamMap{})), PreconditionViolated);
    const VarietyData k7 = build_entry("decomposable_rank2", {{"y", 5}, {"d1", 2}, {"d2", 2}});
    CHECK_THROWS_AS(delta_codim2_poly(k7), PreconditionViolated);
}

TEST_CASE("decomposable delta_1") {
    {
        const VarietyData v = build_entry("decomposable_rank2", {{"y", 1}, {"d1", 2}, {"d2", 3}});
        const CycleClass h = q(6) * CycleClass::basis_element(v.chow(), "pt");
        CHECK(delta1_decomposable(v, q(2) * h, q(3) * h) == q(0)); // empty sum
    }
    {
        const VarietyData v = build_entry("decomposable_rank2", {{"y", 2}, {"d1", 3}, {"d2", 2}});
        const CycleClass h = CycleClass::basis_element(v.chow(), "H");
        CHECK(delta1_decomposable(v, q(3) * h, q(2) * h) == q(36)); // (d1 d2)^2
        CHECK(delta1_decomposable(v, q(3) * h, q(2) * h) == delta_at(v, q(1)));
        // swapped classes violate the whitney precondition only if they differ
        CHECK_THROWS_AS(delta1_decomposable(v, q(2) * h, q(2) * h), PreconditionViolated);
        CHECK_THROWS_AS(delta1_decomposable(v, q(4) * h, q(1) * h), PreconditionViolated);
    }
    CHECK_THROWS_AS(delta1_decomposable(build_entry("veronese", ParamMap{}),
                                        CycleClass::zero(build_entry("veronese", ParamMap{}).chow()),
                                        CycleClass::zero(build_entry("veronese", ParamMap{}).chow())),
                    PreconditionViolated);
}

TEST_CASE("Schur forms of delta_1") {
    for (long y = 2; y <= 5; ++y) {
        const VarietyData v = build_entry("decomposable_rank2", {{"y", y}, {"d1", 3}, {"d2", 2}});
        const CycleClass h = CycleClass::basis_element(v.chow(), "H");
        const Rational expected = delta1_decomposable(v, q(3) * h, q(2) * h);
        CHECK(schur_delta1(v.normal(), v.ambient_dimension()) == expected);
        CHECK(delta_at(v, q(1)) == expected);
    }
    const VarietyData v = build_entry("decomposable_rank2", {{"y", 2}, {"d1", 2}, {"d2", 2}});
    CHECK(schur_delta1(v.normal(), 4) == q(16)); // c2 of O(2)+O(2) on a degree-4 surface
    CHECK_THROWS_AS(schur_delta1(v.normal(), 3), UnsupportedK);
    CHECK_THROWS_AS(schur_delta1(v.normal(), 8), UnsupportedK);
    CHECK_THROWS_AS(schur_delta1(v.normal(), 5), PreconditionViolated); // wrong dimension for k = 5
    const VarietyData r3 = build_entry("ci_surface_p5", {{"d1", 2}, {"d2", 2}, {"d3", 2}});
    CHECK_THROWS_AS(schur_delta1(r3.normal(), 4), PreconditionViolated); // rank 3 bundle
}

TEST_CASE("two-variable sum identity in a truncated polynomial ring") {
    for (int y = 1; y <= 8; ++y) {
        const auto pres = ChowPresentation::multi_projective({y, y});
        const CycleClass b1 = multiprojective_hyperplane(pres, 0);
        const CycleClass b2 = multiprojective_hyperplane(pres, 1);
        CycleClass lhs = CycleClass::zero(pres);
        for (int t = 0; t <= y; ++t) {
            CycleClass inner = CycleClass::zero(pres);
            for (int i = 0; i <= t; ++i)
                inner = inner + mul(power(b1, static_cast<unsigned>(i)), power(b2, static_cast<unsigned>(t - i)));
            const CycleClass term = binomial(static_cast<unsigned>(y), static_cast<unsigned>(t)) *
                                    mul(power(b1 + b2, static_cast<unsigned>(y - t)), inner);
            lhs = lhs + (t % 2 == 0 ? -term : term);
        }
        CycleClass rhs = CycleClass::zero(pres);
        for (int j = 1; j <= y - 1; ++j)
            rhs = rhs + mul(power(b1, static_cast<unsigned>(y - j)), power(b2, static_cast<unsigned>(j)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("polarization scaling") {
    const VarietyData veronese = build_entry("veronese", ParamMap{});
    const UniPoly base = delta_poly(veronese).poly;

    const VarietyData unchanged = scale_delta(veronese, 1);
    CHECK(delta_poly(unchanged).poly == base);

    const VarietyData doubled = scale_delta(veronese, 2);
    const UniPoly scaled = delta_poly(doubled).poly;
    const int k = veronese.ambient_dimension();
    for (int t = 0; t <= k - 2; ++t)
        CHECK(scaled.coeff(static_cast<unsigned>(t)) ==
              q(2).pow(static_cast<unsigned long>(k - 2 - t)) * base.coeff(static_cast<unsigned>(t)));
    CHECK(scaled.scale_argument(q(2)) == q(8) * base); // evaluation at 2 eta scales by 2^{k-2}
    CHECK(doubled.seshadri()->value == q(1)); // epsilon scales along

    for (const char* name : {"segre_p2p1", "elliptic_scroll", "ci_surface_p5"}) {
        const ParamMap params = std::string(name) == "ci_surface_p5" ? ParamMap{{"d1", 3}, {"d2", 2}, {"d3", 2}}
                                                                     : ParamMap{};
        const VarietyData v = build_entry(name, params);
        const VarietyData tripled = scale_delta(v, 3);
        CHECK(delta_poly(tripled).poly.scale_argument(q(3)) ==
              q(3).pow(static_cast<unsigned long>(v.ambient_dimension() - 2)) * delta_poly(v).poly);
    }
    CHECK_THROWS_AS(scale_delta(veronese, 0), PreconditionViolated);
}

TEST_CASE("finite covers scale delta by the degree") {
    const VarietyData veronese = build_entry("veronese", ParamMap{});
    CHECK(finite_cover_delta(veronese, 1).poly == delta_poly(veronese).poly);
    // degree-2 cover: the double plane branched over a sextic-like situation
    const EtaPolynomial doubled = finite_cover_delta(veronese, 2);
    CHECK(doubled.poly == q(2) * delta_poly(veronese).poly);
    CHECK(doubled.poly.evaluate(q(1, 2)) == q(9, 4));
    for (long n = 1; n <= 5; ++n)
        CHECK(finite_cover_delta(veronese, n).poly == q(n) * delta_poly(veronese).poly);
    CHECK_THROWS_AS(finite_cover_delta(veronese, 0), PreconditionViolated);
}

TEST_CASE("shared immutable data is safe to use from several threads") {
    const VarietyData v = build_entry("segre_p2p2", ParamMap{});
    const UniPoly expected = delta_poly(v).poly;
    std::vector<std::thread> workers;
    std::array<bool, 4> ok{};
    for (std::size_t t = 0; t < ok.size(); ++t)
        workers.emplace_back([&, t] {
            bool good = true;
            for (int i = 0; i < 25; ++i) {
                good = good && delta_poly(v).poly == expected;
                good = good && segre_integral(v, 2) == segre_integral(v, 2);
            }
            ok[t] = good;
        });
    for (auto& w : workers) w.join();
    for (bool good : ok) CHECK(good);
}

TEST_CASE("variety validation") {
    const auto pres = ChowPresentation::multi_projective({2});
    const CycleClass pol = q(2) * multiprojective_hyperplane(pres, 0);
    const ChernSeries tangent = tangent_series(pres);
    // wrong normal rank for the claimed ambient dimension
    CHECK_THROWS_AS(VarietyData("bad", 6, pres, normal_from_euler(5, pol, tangent), pol, std::nullopt),
                    SchemaError);
    // dimension bounds: y must be at most k - 1
    CHECK_THROWS_AS(VarietyData("bad", 2, pres, normal_from_euler(5, pol, tangent), pol, std::nullopt),
                    SchemaError);
    // polarization must be codimension 1
    CHECK_THROWS_AS(VarietyData("bad", 5, pres, normal_from_euler(5, pol, tangent), power(pol, 2), std::nullopt),
                    SchemaError);
    // degree must be positive: a ring whose "hyperplane" has negative square
    ChowPresentation::TableSpec spec;
    spec.basis = {{"1", 0}, {"H", 1}, {"pt", 2}};
    spec.point_name = "pt";
    spec.products[{1, 1}] = {{2, q(-2)}};
    const auto neg = ChowPresentation::table(spec);
    const CycleClass h = CycleClass::basis_element(neg, "H");
    CHECK_THROWS_AS(VarietyData("bad", 3, neg, ChernSeries::line_bundle(h), h, std::nullopt), SchemaError);
}
