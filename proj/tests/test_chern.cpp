#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seshadri/chern.hpp"
#include "seshadri/errors.hpp"

using namespace seshadri;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

CycleClass h(const PresentationPtr& pres, std::size_t factor) { return multiprojective_hyperplane(pres, factor); }

} // namespace

TEST_CASE("series construction enforces the invariants") {
    const auto pres = ChowPresentation::multi_projective({2, 1});
    const CycleClass unit = CycleClass::unit(pres);
    CHECK_NOTHROW(ChernSeries::chern(2, pres, {unit, h(pres, 0)}));
    // order-0 must be the unit class
    CHECK_THROWS_AS(ChernSeries::chern(2, pres, {q(2) * unit, h(pres, 0)}), Error);
    // homogeneity by order
    CHECK_THROWS_AS(ChernSeries::chern(2, pres, {unit, mul(h(pres, 0), h(pres, 1))}), Error);
    // chern coefficients above the rank must vanish
    CHECK_THROWS_AS(
        ChernSeries::chern(1, pres, {unit, h(pres, 0), mul(h(pres, 0), h(pres, 1))}), Error);
    CHECK_NOTHROW(ChernSeries::segre(1, pres, {unit, h(pres, 0), mul(h(pres, 0), h(pres, 1))}));
    CHECK_THROWS_AS(ChernSeries::chern(0, pres, {unit}), Error);
    CHECK_THROWS_AS(ChernSeries::line_bundle(mul(h(pres, 0), h(pres, 1))), Error);
}

TEST_CASE("segre of a line bundle is the alternating geometric series") {
    const auto pres = ChowPresentation::multi_projective({2, 2});
    const CycleClass c1 = h(pres, 0) + q(2) * h(pres, 1);
    const ChernSeries s = segre_from_chern(ChernSeries::line_bundle(c1));
    for (int j = 0; j <= pres->dimension(); ++j) {
        const CycleClass expected = (j % 2 == 0 ? q(1) : q(-1)) * power(c1, static_cast<unsigned>(j));
        CHECK(s.at(j) == expected);
    }
}

TEST_CASE("segre recurrence reproduces the closed forms") {
    const auto pres = ChowPresentation::multi_projective({2, 2});
    const CycleClass c1 = q(2) * h(pres, 0) + q(1) * h(pres, 1);
    const CycleClass c2 = q(3) * mul(h(pres, 0), h(pres, 0)) + q(1) * mul(h(pres, 0), h(pres, 1));
    const ChernSeries c = ChernSeries::chern(2, pres, {CycleClass::unit(pres), c1, c2});
    const ChernSeries s = segre_from_chern(c);
    CHECK(s.at(1) == -c1);
    CHECK(s.at(2) == mul(c1, c1) - c2);
    CHECK(s.at(3) == q(2) * mul(c1, c2) - power(c1, 3)); // c3 = 0 for rank 2
    CHECK(s.at(4) == q(-3) * mul(mul(c1, c1), c2) + power(c1, 4) + mul(c2, c2));
    CHECK(s.kind() == SeriesKind::Segre);
    CHECK_THROWS_AS(segre_from_chern(s), KindMismatch);
}

TEST_CASE("series inversion is an involution") {
    const auto pres = ChowPresentation::multi_projective({2, 1});
    const CycleClass c1 = q(3) * h(pres, 0) + q(4) * h(pres, 1);
    const CycleClass c2 = q(3) * mul(h(pres, 0), h(pres, 0)) + q(6) * mul(h(pres, 0), h(pres, 1));
    const ChernSeries c = ChernSeries::chern(2, pres, {CycleClass::unit(pres), c1, c2});
    CHECK(chern_from_segre(segre_from_chern(c)) == c);

    // trivial series
    const ChernSeries trivial = ChernSeries::chern(1, pres, {CycleClass::unit(pres)});
    CHECK(segre_from_chern(trivial).at(1).is_zero());
    CHECK(chern_from_segre(segre_from_chern(trivial)) == trivial);

    // rank-1 segre with s1 = -c1 inverts to (1, c1)
    const ChernSeries geom = segre_from_chern(ChernSeries::line_bundle(c1));
    const ChernSeries back = chern_from_segre(geom);
    CHECK(back.at(1) == c1);
    for (int i = 2; i <= pres->dimension(); ++i) CHECK(back.at(i).is_zero());
    CHECK_THROWS_AS(chern_from_segre(back), KindMismatch);
}

TEST_CASE("whitney sums") {
    const auto pres = ChowPresentation::multi_projective({2, 1});
    const CycleClass l = q(1) * h(pres, 0);
    const CycleClass m = q(2) * h(pres, 1);

    // segre of a sum of line bundles: (-1)^t sum_i c1(L)^i c1(M)^{t-i}
    const ChernSeries sl = segre_from_chern(ChernSeries::line_bundle(l));
    const ChernSeries sm = segre_from_chern(ChernSeries::line_bundle(m));
    const ChernSeries sum = whitney(sl, sm);
    for (int t = 0; t <= pres->dimension(); ++t) {
        CycleClass expected = CycleClass::zero(pres);
        for (int i = 0; i <= t; ++i)
            expected = expected + mul(power(l, static_cast<unsigned>(i)), power(m, static_cast<unsigned>(t - i)));
        CHECK(sum.at(t) == (t % 2 == 0 ? q(1) : q(-1)) * expected);
    }
    CHECK(sum.rank() == 2);

    // adding a trivial line bundle changes no coefficient
    const ChernSeries a = ChernSeries::line_bundle(l);
    const ChernSeries with_trivial = whitney(a, ChernSeries::line_bundle(CycleClass::zero(pres)));
    for (int t = 0; t <= pres->dimension(); ++t) CHECK(with_trivial.at(t) == a.at(t));

    // c2 of O(3,0) + O(0,2)
    const ChernSeries decomposable =
        whitney(ChernSeries::line_bundle(q(3) * h(pres, 0)), ChernSeries::line_bundle(q(2) * h(pres, 1)));
    CHECK(decomposable.at(2) == q(6) * mul(h(pres, 0), h(pres, 1)));

    CHECK_THROWS_AS(whitney(a, sl), KindMismatch);
    const auto other = ChowPresentation::multi_projective({1, 1});
    CHECK_THROWS_AS(whitney(a, ChernSeries::line_bundle(h(other, 0))), PresentationMismatch);
}

TEST_CASE("tangent series of the built-in presentations") {
    {
        const auto pres = ChowPresentation::multi_projective({2, 1});
        const ChernSeries t = tangent_series(pres);
        CHECK(t.at(1) == q(3) * h(pres, 0) + q(2) * h(pres, 1));
        CHECK(t.at(2) == q(3) * mul(h(pres, 0), h(pres, 0)) + q(6) * mul(h(pres, 0), h(pres, 1)));
        CHECK(t.rank() == 3);
    }
    {
        const auto pres = ChowPresentation::hirzebruch(2);
        const ChernSeries t = tangent_series(pres);
        CHECK(t.at(1) == q(2) * CycleClass::basis_element(pres, "C0") + q(4) * CycleClass::basis_element(pres, "F"));
        CHECK(integrate(t.at(2)) == q(4));
    }
    {
        const auto pres = ChowPresentation::multi_projective({3, 1});
        const ChernSeries t = tangent_series(pres);
        CHECK(t.at(1) == q(4) * h(pres, 0) + q(2) * h(pres, 1));
        CHECK(t.at(4) == q(8) * mul(power(h(pres, 0), 3), h(pres, 1)));
    }
    ChowPresentation::TableSpec spec;
    spec.basis = {{"1", 0}, {"H", 1}, {"pt", 2}};
    spec.point_name = "pt";
    spec.products[{1, 1}] = {{2, q(1)}};
    CHECK_THROWS_AS(tangent_series(ChowPresentation::table(spec)), UnsupportedPresentation);
}

TEST_CASE("normal bundles from the ambient restriction identity") {
    {
        // Veronese surface in P^5
        const auto pres = ChowPresentation::multi_projective({2});
        const CycleClass pol = q(2) * h(pres, 0);
        const ChernSeries n = normal_from_euler(5, pol, tangent_series(pres));
        CHECK(n.rank() == 3);
        CHECK(n.at(1) == q(9) * h(pres, 0));
        CHECK(integrate(n.at(2)) == q(30));
    }
    {
        // Segre P^2 x P^1 in P^5
        const auto pres = ChowPresentation::multi_projective({2, 1});
        const CycleClass pol = h(pres, 0) + h(pres, 1);
        const ChernSeries n = normal_from_euler(5, pol, tangent_series(pres));
        CHECK(n.rank() == 2);
        CHECK(n.at(1) == q(3) * h(pres, 0) + q(4) * h(pres, 1));
        CHECK(n.at(2) == q(3) * mul(h(pres, 0), h(pres, 0)) + q(6) * mul(h(pres, 0), h(pres, 1)));
        CHECK(n.at(3).is_zero()); // rank-2 consistency of the input data
    }
    {
        // Segre P^2 x P^2 in P^8
        const auto pres = ChowPresentation::multi_projective({2, 2});
        const CycleClass h1 = h(pres, 0), h2 = h(pres, 1);
        const ChernSeries n = normal_from_euler(8, h1 + h2, tangent_series(pres));
        CHECK(n.rank() == 4);
        CHECK(n.at(1) == q(6) * h1 + q(6) * h2);
        CHECK(n.at(2) == q(15) * mul(h1, h1) + q(27) * mul(h1, h2) + q(15) * mul(h2, h2));
        CHECK(n.at(3) == q(45) * mul(mul(h1, h1), h2) + q(45) * mul(h1, mul(h2, h2)));
        CHECK(n.at(4) == q(36) * mul(mul(h1, h1), mul(h2, h2)));
    }
    {
        const auto pres = ChowPresentation::multi_projective({2});
        const CycleClass pol = q(2) * h(pres, 0);
        CHECK_THROWS_AS(normal_from_euler(2, pol, tangent_series(pres)), PreconditionViolated);
        CHECK_THROWS_AS(normal_from_euler(5, pol, segre_from_chern(tangent_series(pres))), KindMismatch);
    }
}

TEST_CASE("euler consistency: tangent times normal is the restricted ambient series") {
    const auto pres = ChowPresentation::multi_projective({2});
    const CycleClass pol = q(2) * h(pres, 0);
    const ChernSeries tangent = tangent_series(pres);
    const ChernSeries normal = normal_from_euler(5, pol, tangent);
    const ChernSeries ambient = projective_space_restriction(5, pol);
    CHECK(whitney(tangent, normal) == ambient);
    for (int i = 0; i <= pres->dimension(); ++i)
        CHECK(ambient.at(i) == binomial(6, static_cast<unsigned>(i)) * power(pol, static_cast<unsigned>(i)));
}
