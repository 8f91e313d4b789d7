#include "seshadri/verify.hpp"

#include "seshadri/bigness.hpp"
#include "seshadri/chern.hpp"
#include "seshadri/delta.hpp"
#include "seshadri/errors.hpp"
#include "seshadri/roots.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace seshadri {

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(),
                                                  [](const CheckResult& c) { return !c.pass; }));
}

namespace {

std::string display(const Rational& r) { return r.to_string(); }
std::string display(const UniPoly& p) { return p.to_string(); }
std::string display(const CycleClass& c) { return c.to_string(); }
std::string display(const std::string& s) { return s; }
std::string display(int v) { return std::to_string(v); }

struct Reporter {
    VerifyReport& report;
    std::optional<std::string> only;
    std::string entry;

    bool enabled() const { return !only || *only == entry; }

    template <typename T>
    void equal(const std::string& check, const std::string& source, const T& expected, const T& got) {
        if (!enabled()) return;
        report.checks.push_back({entry, check, source, expected == got, display(expected), display(got)});
    }

    void holds(const std::string& check, const std::string& source, bool condition, const std::string& got) {
        if (!enabled()) return;
        report.checks.push_back({entry, check, source, condition, "true", got});
    }

    void tally(const std::string& check, const std::string& source, int passed, int total) {
        if (!enabled()) return;
        report.checks.push_back({entry, check, source, passed == total,
                                 std::to_string(total) + "/" + std::to_string(total),
                                 std::to_string(passed) + "/" + std::to_string(total)});
    }
};

// ------------------------------------------------------------------
// Mutation smoke-test plumbing: the structure constants eligible for a
// perturbation are the non-unit products landing in top codimension of the
// table-presented entries (those survive table validation and feed straight
// into the verified integrals).
// ------------------------------------------------------------------

struct MutationTarget {
    std::string entry;
    ParamMap params;
};

const std::vector<MutationTarget>& mutation_targets() {
    static const std::vector<MutationTarget> targets = {
        {"elliptic_scroll", {}},
        {"ci_surface_p5", {{"d1", 3}, {"d2", 2}, {"d3", 2}}},
    };
    return targets;
}

std::vector<std::pair<std::size_t, std::size_t>> eligible_pairs(const ChowPresentation& pres) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < pres.basis_size(); ++i) {
        if (i == pres.unit_index()) continue;
        for (std::size_t j = i; j < pres.basis_size(); ++j) {
            if (j == pres.unit_index()) continue;
            if (pres.element(i).codim + pres.element(j).codim == pres.dimension()) out.emplace_back(i, j);
        }
    }
    return out;
}

struct Context {
    Reporter rep;
    std::optional<std::pair<std::size_t, std::size_t>> mutate; // (target index, pair index)

    VarietyData build(const std::string& name, const ParamMap& params = {}) const {
        VarietyData v = build_entry(name, params);
        if (mutate) {
            const MutationTarget& target = mutation_targets()[mutate->first];
            if (target.entry == name && target.params == params) {
                const auto pairs = eligible_pairs(*v.chow());
                const auto [i, j] = pairs.at(mutate->second);
                return v.with_presentation(with_perturbed_product(v.chow(), i, j, Rational(1)));
            }
        }
        return v;
    }
};

std::string verdict_kind(const VarietyData& v, const EtaPolynomial& p) {
    return to_string(decide_bigness(p, *v.seshadri()).kind);
}

// ------------------------------------------------------------------
// Entry checks. Expected polynomials and numbers are the published closed
// forms of each family; nothing here is recomputed through the code paths
// under test.
// ------------------------------------------------------------------

void check_ci_codim2(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "ci_codim2";
    if (!rep.enabled()) return;
    for (long k : {4L, 5L}) {
        for (long d1 = 1; d1 <= 6; ++d1) {
            for (long d2 = 1; d2 <= d1; ++d2) {
                const VarietyData v = ctx.build("ci_codim2", {{"k", k}, {"d1", d1}, {"d2", d2}});
                const Rational d(d1 * d2);
                const std::string tag = "k=" + std::to_string(k) + ",d1=" + std::to_string(d1) +
                                        ",d2=" + std::to_string(d2);
                const EtaPolynomial dp = delta_poly(v);
                UniPoly expected_poly;
                Rational expected_at_eps;
                if (k == 4) {
                    expected_poly = UniPoly({-d, Rational(2 * (d1 + d2)) * d, Rational(-(d1 * d1 + d1 * d2 + d2 * d2)) * d});
                    const Rational q(d2, d1);
                    expected_at_eps = d * (q - q * q);
                } else {
                    expected_poly = UniPoly({-d, Rational(3 * (d1 + d2)) * d, Rational(-3 * (d1 * d1 + d1 * d2 + d2 * d2)) * d,
                                             Rational(d1 * d1 * d1 + d1 * d1 * d2 + d1 * d2 * d2 + d2 * d2 * d2) * d});
                    const Rational q(d2, d1);
                    expected_at_eps = d * q * (q - Rational(1)) * (q - Rational(1));
                }
                rep.equal(tag + ": delta polynomial", "codim-2 complete intersection closed form", expected_poly,
                          dp.poly);
                rep.equal(tag + ": delta at 1/d1",
                          k == 4 ? "fourfold closed form d(d2/d1 - d2^2/d1^2)"
                                 : "fivefold closed form (d d2/d1)(d2/d1 - 1)^2",
                          expected_at_eps, dp.poly.evaluate(Rational(1, d1)));
                const BignessVerdict verdict = decide_bigness(dp, *v.seshadri());
                rep.equal(tag + ": verdict", "codimension-2 complete intersections are Seshadri big",
                          std::string("big"), to_string(verdict.kind));
                if (d1 == d2 && verdict.witness) {
                    const long c = k == 4 ? 3 : 4;
                    const bool inside = *verdict.witness > Rational(1, c * d1) && *verdict.witness < Rational(1, d1);
                    rep.holds(tag + ": witness window", "positivity window (1/" + std::to_string(c) +
                                                             "d1, 1/d1) in the equal-degree case",
                              inside, verdict.witness->to_string());
                }
            }
        }
    }
}

void check_ci_surface_p5(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "ci_surface_p5";
    if (!rep.enabled()) return;
    auto run = [&](long d1, long d2, long d3, bool expect_big) {
        const VarietyData v = ctx.build("ci_surface_p5", {{"d1", d1}, {"d2", d2}, {"d3", d3}});
        const Rational d(d1 * d2 * d3);
        const std::string tag = "(" + std::to_string(d1) + "," + std::to_string(d2) + "," + std::to_string(d3) + ")";
        const long q = d1 * d1 + d2 * d2 + d3 * d3 + d1 * d2 + d1 * d3 + d2 * d3;
        const long s = d1 + d2 + d3;
        const UniPoly expected = UniPoly({Rational(0), Rational(-3) * d, Rational(3 * s) * d, Rational(-q) * d});
        const EtaPolynomial dp = delta_poly(v);
        rep.equal(tag + ": delta polynomial", "surface CI in P^5: delta = d eta (-(sum d_i d_j) eta^2 + 3(sum d_i) eta - 3)",
                  expected, dp.poly);
        rep.equal(tag + ": verdict", "bigness of the (d1,d2,d3) complete intersection surface",
                  std::string(expect_big ? "big" : "not_big"), verdict_kind(v, dp));
        return dp;
    };
    for (long d1 = 1; d1 <= 4; ++d1)
        for (long d2 = 1; d2 <= d1; ++d2)
            for (long d3 = 1; d3 <= d2; ++d3) {
                // Big iff the quadratic factor is somewhere positive on (0, 1/d1);
                // expected side computed from the roots of the closed form below.
                const long q = d1 * d1 + d2 * d2 + d3 * d3 + d1 * d2 + d1 * d3 + d2 * d3;
                const long s = d1 + d2 + d3;
                // f(x) = -q x^2 + 3 s x - 3 has a point > 0 in (0, 1/d1) iff
                // f(1/d1) > 0 or the vertex lies inside with f > 0 there.
                const Rational eps(1, d1);
                const UniPoly f({Rational(-3), Rational(3 * s), Rational(-q)});
                const Rational vertex = Rational(3 * s) / Rational(2 * q);
                bool expect_big = f.evaluate(eps) > Rational(0);
                if (vertex > Rational(0) && vertex < eps && f.evaluate(vertex) > Rational(0)) expect_big = true;
                run(d1, d2, d3, expect_big);
            }

    {
        const VarietyData v = ctx.build("ci_surface_p5", {{"d1", 3}, {"d2", 2}, {"d3", 2}});
        const EtaPolynomial dp = delta_poly(v);
        const UniPoly f = ((Rational(1) / Rational(12)) * dp.poly).shifted(-1);
        rep.equal("(3,2,2): inner quadratic", "degrees (3,2,2): f(x) = -33x^2 + 21x - 3",
                  UniPoly({Rational(-3), Rational(21), Rational(-33)}), f);
        rep.equal("(3,2,2): f(1/3)", "known value f(1/3) = 1/3", Rational(1, 3), f.evaluate(Rational(1, 3)));
        rep.equal("(3,2,2): verdict", "the (3,2,2) complete intersection surface is Seshadri big",
                  std::string("big"), verdict_kind(v, dp));
    }
    {
        const VarietyData v = ctx.build("ci_surface_p5", {{"d1", 9}, {"d2", 2}, {"d3", 2}});
        const EtaPolynomial dp = delta_poly(v);
        const UniPoly f = ((Rational(1) / Rational(36)) * dp.poly).shifted(-1);
        rep.equal("(9,2,2): inner quadratic", "degrees (9,2,2): f(x) = -129x^2 + 39x - 3",
                  UniPoly({Rational(-3), Rational(39), Rational(-129)}), f);
        const Rational discriminant = f.coeff(1) * f.coeff(1) - Rational(4) * f.coeff(2) * f.coeff(0);
        rep.equal("(9,2,2): discriminant", "negative discriminant -27, so f < 0 on all of R", Rational(-27),
                  discriminant);
        rep.equal("(9,2,2): real roots", "no real roots anywhere", 0,
                  sturm_count(f, OpenInterval(Rational(-1000), Rational(1000))));
        rep.equal("(9,2,2): verdict", "the (9,2,2) complete intersection surface is never Seshadri big",
                  std::string("not_big"), verdict_kind(v, dp));
    }
}

void check_scroll(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "scroll";
    if (!rep.enabled()) return;
    for (long e = 0; e <= 8; ++e) {
        const VarietyData v = ctx.build("scroll", {{"e", e}});
        const std::string tag = "e=" + std::to_string(e);
        const auto pres = v.chow();
        const CycleClass c0 = CycleClass::basis_element(pres, "C0");
        const CycleClass fib = CycleClass::basis_element(pres, "F");

        rep.equal(tag + ": degree", "scrolls have minimal degree e+2", Rational(e + 2), v.degree());
        rep.equal(tag + ": c1(N)", "normal bundle determinant (e+2)C0 + (e^2+4e+2)F",
                  Rational(e + 2) * c0 + Rational(e * e + 4 * e + 2) * fib, v.normal().at(1));
        rep.equal(tag + ": integral of c2(N)", "(e+4)(e+3)(e+2)/2 - e^2 - 8e - 12",
                  Rational((e + 4) * (e + 3) * (e + 2), 2) - Rational(e * e + 8 * e + 12),
                  integrate(v.normal().at(2)));
        rep.equal(tag + ": integral of c2(Y)", "topological Euler characteristic 4 of a ruled rational surface",
                  Rational(4), integrate(tangent_series(pres).at(2)));

        const EtaPolynomial dp = delta_poly(v);
        const UniPoly inner({Rational(-e * (e + 1) * (e + 2)), Rational(2 * (e + 1) * (e * e + 5 * e + 4)),
                             Rational(-(e * e * e + 9 * e * e + 22 * e + 16))});
        const UniPoly expected = (Rational(1, 2) * inner).shifted(static_cast<int>(e) - 1);
        rep.equal(tag + ": delta polynomial",
                  "delta = (eta^{e-1}/2)(-(e^3+9e^2+22e+16) eta^2 + 2(e+1)(e^2+5e+4) eta - e(e+1)(e+2))", expected,
                  dp.poly);
        rep.equal(tag + ": delta at 1/2", "closed form (e/2^{e+2})(-e^2+3e+6)",
                  Rational(e) / Rational(2).pow(static_cast<unsigned long>(e) + 2) * Rational(-e * e + 3 * e + 6),
                  dp.poly.evaluate(Rational(1, 2)));
        rep.equal(tag + ": verdict", "scrolls are Seshadri big exactly for 0 <= e <= 4",
                  std::string(e <= 4 ? "big" : "not_big"), verdict_kind(v, dp));
    }
}

void check_veronese(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "veronese";
    if (!rep.enabled()) return;
    const VarietyData v = ctx.build("veronese");
    const CycleClass L = multiprojective_hyperplane(v.chow(), 0);
    rep.equal("c1(N)", "normal bundle determinant O(9)", Rational(9) * L, v.normal().at(1));
    rep.equal("integral of c2(N)", "known value 30", Rational(30), integrate(v.normal().at(2)));
    rep.equal("degree", "the Veronese surface has degree 4", Rational(4), v.degree());
    const EtaPolynomial dp = delta_poly(v);
    rep.equal("delta polynomial", "expansion of the stated integrals: -51 eta^3 + 54 eta^2 - 12 eta",
              UniPoly({Rational(0), Rational(-12), Rational(54), Rational(-51)}), dp.poly);
    rep.equal("delta at 1/2", "known value 9/8", Rational(9, 8), dp.poly.evaluate(Rational(1, 2)));
    rep.equal("seshadri", "minimal-degree surface cut out by quadrics: constant exactly 1/2", Rational(1, 2),
              v.seshadri()->value);
    rep.equal("verdict", "the Veronese surface is Seshadri big", std::string("big"), verdict_kind(v, dp));
}

void check_veronese_projected(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "veronese_projected";
    if (!rep.enabled()) return;
    const VarietyData v = ctx.build("veronese_projected");
    const CycleClass L = multiprojective_hyperplane(v.chow(), 0);
    rep.equal("c1(N)", "normal bundle determinant O(7)", Rational(7) * L, v.normal().at(1));
    rep.equal("integral of c2(N)", "known value 16", Rational(16), integrate(v.normal().at(2)));
    const EtaPolynomial dp = delta_poly(v);
    rep.equal("delta polynomial", "known polynomial -33 eta^2 + 28 eta - 4",
              UniPoly({Rational(-4), Rational(28), Rational(-33)}), dp.poly);
    rep.equal("delta at 1/3", "known value 5/3", Rational(5, 3), dp.poly.evaluate(Rational(1, 3)));
    rep.equal("verdict", "the projected Veronese surface is Seshadri big", std::string("big"), verdict_kind(v, dp));
}

void check_segre_p2p1(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "segre_p2p1";
    if (!rep.enabled()) return;
    const VarietyData v = ctx.build("segre_p2p1");
    const CycleClass h1 = multiprojective_hyperplane(v.chow(), 0);
    const CycleClass h2 = multiprojective_hyperplane(v.chow(), 1);
    const CycleClass& c1 = v.normal().at(1);
    const CycleClass& c2 = v.normal().at(2);
    rep.equal("c1(N)", "normal bundle determinant O(3,4)", Rational(3) * h1 + Rational(4) * h2, c1);
    rep.equal("c2(N)", "known class 3(x row) + 6(line point)",
              Rational(3) * mul(h1, h1) + Rational(6) * mul(h1, h2), c2);
    rep.equal("integral c1(N).h^2", "known value 10", Rational(10),
              integrate(mul(c1, power(v.polarization(), 2))));
    rep.equal("integral (c1^2 - c2).h", "known value 24", Rational(24),
              integrate(mul(mul(c1, c1) - c2, v.polarization())));
    rep.equal("integral (2 c1 c2 - c1^3)", "known value -48", Rational(-48),
              integrate(Rational(2) * mul(c1, c2) - power(c1, 3)));
    const EtaPolynomial dp = delta_poly(v);
    rep.equal("delta polynomial", "known polynomial 48 eta^3 - 72 eta^2 + 30 eta - 3",
              UniPoly({Rational(-3), Rational(30), Rational(-72), Rational(48)}), dp.poly);
    rep.equal("delta at 1/3", "known value 7/9", Rational(7, 9), dp.poly.evaluate(Rational(1, 3)));
    rep.equal("delta at 1/2", "vanishes at the Seshadri constant", Rational(0), dp.poly.evaluate(Rational(1, 2)));
    rep.equal("verdict", "P^2 x P^1 in P^5 is Seshadri big", std::string("big"), verdict_kind(v, dp));
}

void check_segre_p3p1(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "segre_p3p1";
    if (!rep.enabled()) return;
    const VarietyData v = ctx.build("segre_p3p1");
    const CycleClass h1 = multiprojective_hyperplane(v.chow(), 0);
    const CycleClass h2 = multiprojective_hyperplane(v.chow(), 1);
    const ChernSeries tangent = tangent_series(v.chow());
    rep.equal("c1(Y)", "tangent class 4(plane row) + 2(solid point)", Rational(4) * h1 + Rational(2) * h2,
              tangent.at(1));
    rep.equal("c2(Y)", "known class 6(line row) + 8(plane point)",
              Rational(6) * mul(h1, h1) + Rational(8) * mul(h1, h2), tangent.at(2));
    rep.equal("c3(Y)", "known class 4(point row) + 12(line point)",
              Rational(4) * power(h1, 3) + Rational(12) * mul(mul(h1, h1), h2), tangent.at(3));
    rep.equal("c4(Y)", "known class 8(point point)", Rational(8) * mul(power(h1, 3), h2), tangent.at(4));
    rep.equal("c1(N)", "known class 4(plane row) + 6(solid point)", Rational(4) * h1 + Rational(6) * h2,
              v.normal().at(1));
    rep.equal("c2(N)", "known class 6(line row) + 16(plane point)",
              Rational(6) * mul(h1, h1) + Rational(16) * mul(h1, h2), v.normal().at(2));
    rep.equal("c3(N)", "known class 4(point row) + 12(line point)",
              Rational(4) * power(h1, 3) + Rational(12) * mul(mul(h1, h1), h2), v.normal().at(3));
    const EtaPolynomial dp = delta_poly(v);
    rep.equal("delta polynomial", "known polynomial 20 eta (-1 + 9 eta - 26 eta^2 + 30 eta^3 - 12 eta^4)",
              UniPoly({Rational(0), Rational(-20), Rational(180), Rational(-520), Rational(600), Rational(-240)}),
              dp.poly);
    rep.equal("delta at 1/2", "vanishes at the Seshadri constant", Rational(0), dp.poly.evaluate(Rational(1, 2)));
    rep.equal("delta at 1/3", "known value (20/3)(2/27) = 40/81", Rational(40, 81),
              dp.poly.evaluate(Rational(1, 3)));
    rep.equal("verdict", "P^3 x P^1 in P^7 is Seshadri big", std::string("big"), verdict_kind(v, dp));
}

void check_segre_p2p2(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "segre_p2p2";
    if (!rep.enabled()) return;
    const VarietyData v = ctx.build("segre_p2p2");
    const CycleClass h1 = multiprojective_hyperplane(v.chow(), 0);
    const CycleClass h2 = multiprojective_hyperplane(v.chow(), 1);
    rep.equal("c1(N)", "known class 6(line, -) + 6(-, line)", Rational(6) * h1 + Rational(6) * h2, v.normal().at(1));
    rep.equal("c2(N)", "known class 15(point, -) + 27(line, line) + 15(-, point)",
              Rational(15) * mul(h1, h1) + Rational(27) * mul(h1, h2) + Rational(15) * mul(h2, h2),
              v.normal().at(2));
    rep.equal("c3(N)", "known class 45(point, line) + 45(line, point)",
              Rational(45) * mul(mul(h1, h1), h2) + Rational(45) * mul(h1, mul(h2, h2)), v.normal().at(3));
    rep.equal("c4(N)", "known class 36(point, point)", Rational(36) * mul(mul(h1, h1), mul(h2, h2)),
              v.normal().at(4));
    const EtaPolynomial dp = delta_poly(v);
    rep.equal("delta polynomial", "known polynomial 9 eta^2 (-10 + 80 eta - 220 eta^2 + 252 eta^3 - 103 eta^4)",
              UniPoly({Rational(0), Rational(0), Rational(-90), Rational(720), Rational(-1980), Rational(2268),
                       Rational(-927)}),
              dp.poly);
    const UniPoly f = ((Rational(1) / Rational(9)) * dp.poly).shifted(-2);
    rep.equal("inner f(1/2)", "known positive value 1/16", Rational(1, 16), f.evaluate(Rational(1, 2)));
    rep.equal("delta at 1/2", "9 (1/4) f(1/2) = 9/64", Rational(9, 64), dp.poly.evaluate(Rational(1, 2)));
    rep.equal("verdict", "P^2 x P^2 in P^8 is Seshadri big", std::string("big"), verdict_kind(v, dp));
}

void check_elliptic_scroll(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "elliptic_scroll";
    if (!rep.enabled()) return;
    const VarietyData v = ctx.build("elliptic_scroll");
    const auto pres = v.chow();
    const CycleClass f = CycleClass::basis_element(pres, "f");
    const CycleClass s = CycleClass::basis_element(pres, "s");
    rep.equal("degree", "degree 6 elliptic scroll", Rational(6), v.degree());
    rep.equal("c1(N)", "determinant class 18 f + 4 s (sixth power of the cubic pencil and O(4) vertically)",
              Rational(18) * f + Rational(4) * s, v.normal().at(1));
    rep.equal("integral of c2(N)", "re-derived from the ambient restriction identity: 54", Rational(54),
              integrate(v.normal().at(2)));
    const CycleClass& c1 = v.normal().at(1);
    rep.equal("integral (c1^2 - c2)", "known value 90", Rational(90),
              integrate(mul(c1, c1)) - integrate(v.normal().at(2)));
    rep.equal("integral c1(N).h", "known value 30", Rational(30), integrate(mul(c1, v.polarization())));
    const EtaPolynomial dp = delta_poly(v);
    rep.equal("delta polynomial", "known polynomial eta(-90 eta^2 + 90 eta - 18)",
              UniPoly({Rational(0), Rational(-18), Rational(90), Rational(-90)}), dp.poly);
    rep.equal("delta at 1/3", "known value 2/3", Rational(2, 3), dp.poly.evaluate(Rational(1, 3)));
    rep.holds("seshadri bound", "defined in degree 3: lower bound 1/3",
              !v.seshadri()->is_exact() && v.seshadri()->value == Rational(1, 3), v.seshadri()->value.to_string());
    rep.equal("verdict", "the elliptic scroll is Seshadri big (witness below 1/3)", std::string("big"),
              verdict_kind(v, dp));
}

void check_decomposable(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "decomposable_rank2";
    if (!rep.enabled()) return;

    auto reconstruct_lm = [](const VarietyData& v, long d1, long d2) {
        const int y = v.dimension();
        const CycleClass h = y >= 2 ? CycleClass::basis_element(v.chow(), "H")
                                    : Rational(d1 * d2) * CycleClass::basis_element(v.chow(), "pt");
        return std::make_pair(Rational(d1) * h, Rational(d2) * h);
    };

    {
        const VarietyData v = ctx.build("decomposable_rank2", {{"y", 1}, {"d1", 2}, {"d2", 3}});
        const auto [L, M] = reconstruct_lm(v, 2, 3);
        rep.equal("y=1: empty sum", "boundary case: the decomposable sum over j = 1..y-1 is empty", Rational(0),
                  delta1_decomposable(v, L, M));
        rep.equal("y=1: verdict", "no positive value below the lower bound: inconclusive",
                  std::string("inconclusive"), verdict_kind(v, delta_poly(v)));
    }

    const std::vector<std::pair<long, long>> degree_pairs = {{1, 1}, {2, 1}, {3, 2}, {2, 2}, {4, 3}};
    for (long y = 2; y <= 5; ++y) {
        for (const auto& [d1, d2] : degree_pairs) {
            const VarietyData v = ctx.build("decomposable_rank2", {{"y", y}, {"d1", d1}, {"d2", d2}});
            const auto [L, M] = reconstruct_lm(v, d1, d2);
            const std::string tag = "y=" + std::to_string(y) + ",d1=" + std::to_string(d1) +
                                    ",d2=" + std::to_string(d2);
            Rational closed(0);
            for (long j = 1; j <= y - 1; ++j)
                closed += Rational(d1 * d2) * Rational(d1).pow(static_cast<unsigned long>(y - j)) *
                          Rational(d2).pow(static_cast<unsigned long>(j));
            const Rational sum = delta1_decomposable(v, L, M);
            rep.equal(tag + ": decomposable sum", "sum of L^{y-j} M^j integrals over j = 1..y-1", closed, sum);
            rep.equal(tag + ": delta at 1", "the decomposable sum equals delta_1", sum,
                      delta_at(v, Rational(1)));
            rep.equal(tag + ": Schur form", "Schur-determinant form of delta_1 for rank-2 bundles", sum,
                      schur_delta1(v.normal(), v.ambient_dimension()));
            rep.equal(tag + ": verdict", "ample decomposable rank-2 zero loci are Seshadri big",
                      std::string("big"), verdict_kind(v, delta_poly(v)));
        }
    }
}

// ------------------------------------------------------------------
// Property suites (fixed seeds, deterministic).
// ------------------------------------------------------------------

PresentationPtr random_presentation(std::mt19937& rng) {
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0: return ChowPresentation::multi_projective({2, 1});
    case 1: return ChowPresentation::multi_projective({2, 2});
    case 2: return ChowPresentation::multi_projective({3, 1});
    case 3: return ChowPresentation::multi_projective({1, 1, 1});
    case 4: return ChowPresentation::hirzebruch(0);
    default: return ChowPresentation::hirzebruch(2);
    }
}

CycleClass random_homogeneous(std::mt19937& rng, const PresentationPtr& pres, int codim) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    CycleClass out = CycleClass::zero(pres);
    for (std::size_t i = 0; i < pres->basis_size(); ++i)
        if (pres->element(i).codim == codim)
            out = out + Rational(coeff(rng)) * CycleClass::basis_element(pres, pres->element(i).name);
    return out;
}

ChernSeries random_chern(std::mt19937& rng, const PresentationPtr& pres, int rank) {
    std::vector<CycleClass> coeffs{CycleClass::unit(pres)};
    for (int i = 1; i <= pres->dimension(); ++i)
        coeffs.push_back(i <= rank ? random_homogeneous(rng, pres, i) : CycleClass::zero(pres));
    return ChernSeries::chern(rank, pres, std::move(coeffs));
}

void prop_series(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "property";
    if (!rep.enabled()) return;
    std::mt19937 rng(20240517);
    int inverse_ok = 0, roundtrip_ok = 0, closed_ok = 0;
    const int cases = 200;
    for (int n = 0; n < cases; ++n) {
        const PresentationPtr pres = random_presentation(rng);
        const int rank = std::uniform_int_distribution<int>(1, 4)(rng);
        const ChernSeries c = random_chern(rng, pres, rank);
        const ChernSeries s = segre_from_chern(c);

        bool inverse = true;
        for (int m = 0; m <= pres->dimension(); ++m) {
            CycleClass acc = CycleClass::zero(pres);
            for (int i = 0; i <= m; ++i) acc = acc + mul(s.at(i), c.at(m - i));
            const CycleClass want = m == 0 ? CycleClass::unit(pres) : CycleClass::zero(pres);
            if (!(acc == want)) inverse = false;
        }
        inverse_ok += inverse;

        roundtrip_ok += chern_from_segre(s) == c;

        const int y = pres->dimension();
        bool closed = s.at(1) == -c.at(1);
        if (y >= 2) closed = closed && s.at(2) == mul(c.at(1), c.at(1)) - c.at(2);
        if (y >= 3)
            closed = closed && s.at(3) == Rational(2) * mul(c.at(1), c.at(2)) - power(c.at(1), 3) - c.at(3);
        if (y >= 4)
            closed = closed && s.at(4) == Rational(-3) * mul(mul(c.at(1), c.at(1)), c.at(2)) + power(c.at(1), 4) +
                                              mul(c.at(2), c.at(2)) + Rational(2) * mul(c.at(1), c.at(3)) - c.at(4);
        closed_ok += closed;
    }
    rep.tally("series: segre.chern = 1", "the Segre series is the inverse of the Chern series", inverse_ok, cases);
    rep.tally("series: inversion round trip", "chern_from_segre(segre_from_chern(c)) = c", roundtrip_ok, cases);
    rep.tally("series: low-order closed forms", "s1 = -c1, s2 = c1^2-c2, s3 = 2c1c2-c1^3-c3, s4 = ...", closed_ok,
              cases);
}

void prop_whitney(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "property";
    if (!rep.enabled()) return;
    std::mt19937 rng(6021023);
    int comm_ok = 0, assoc_ok = 0;
    const int cases = 30;
    for (int n = 0; n < cases; ++n) {
        const PresentationPtr pres = random_presentation(rng);
        std::uniform_int_distribution<int> rank(1, 3);
        const ChernSeries a = random_chern(rng, pres, rank(rng));
        const ChernSeries b = random_chern(rng, pres, rank(rng));
        const ChernSeries c = random_chern(rng, pres, rank(rng));
        comm_ok += whitney(a, b) == whitney(b, a);
        assoc_ok += whitney(whitney(a, b), c) == whitney(a, whitney(b, c));
    }
    rep.tally("whitney: commutative", "direct sums commute", comm_ok, cases);
    rep.tally("whitney: associative", "direct sums associate", assoc_ok, cases);
}

void prop_two_term_sum(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "property";
    if (!rep.enabled()) return;
    int ok = 0;
    const int max_y = 12;
    for (int y = 1; y <= max_y; ++y) {
        const PresentationPtr pres = ChowPresentation::multi_projective({y, y});
        const CycleClass b1 = multiprojective_hyperplane(pres, 0);
        const CycleClass b2 = multiprojective_hyperplane(pres, 1);
        CycleClass lhs = CycleClass::zero(pres);
        for (int t = 0; t <= y; ++t) {
            CycleClass inner = CycleClass::zero(pres);
            for (int i = 0; i <= t; ++i)
                inner = inner + mul(power(b1, static_cast<unsigned>(i)), power(b2, static_cast<unsigned>(t - i)));
            CycleClass term = binomial(static_cast<unsigned>(y), static_cast<unsigned>(t)) *
                              mul(power(b1 + b2, static_cast<unsigned>(y - t)), inner);
            lhs = lhs + (t % 2 == 0 ? -term : term);
        }
        CycleClass rhs = CycleClass::zero(pres);
        for (int j = 1; j <= y - 1; ++j)
            rhs = rhs + mul(power(b1, static_cast<unsigned>(y - j)), power(b2, static_cast<unsigned>(j)));
        ok += lhs == rhs;
    }
    rep.tally("two-variable sum identity",
              "sum_t (-1)^{t+1} C(y,t) (b1+b2)^{y-t} sum_i b1^i b2^{t-i} = sum_j b1^{y-j} b2^j, checked symbolically",
              ok, max_y);
}

std::vector<std::pair<std::string, ParamMap>> verification_instances() {
    std::vector<std::pair<std::string, ParamMap>> out;
    out.emplace_back("ci_codim2", ParamMap{{"k", 4}, {"d1", 3}, {"d2", 2}});
    out.emplace_back("ci_codim2", ParamMap{{"k", 4}, {"d1", 2}, {"d2", 2}});
    out.emplace_back("ci_codim2", ParamMap{{"k", 5}, {"d1", 3}, {"d2", 2}});
    out.emplace_back("ci_codim2", ParamMap{{"k", 5}, {"d1", 2}, {"d2", 2}});
    out.emplace_back("ci_surface_p5", ParamMap{{"d1", 3}, {"d2", 2}, {"d3", 2}});
    out.emplace_back("ci_surface_p5", ParamMap{{"d1", 9}, {"d2", 2}, {"d3", 2}});
    for (long e = 0; e <= 8; ++e) out.emplace_back("scroll", ParamMap{{"e", e}});
    out.emplace_back("veronese", ParamMap{});
    out.emplace_back("veronese_projected", ParamMap{});
    out.emplace_back("segre_p2p1", ParamMap{});
    out.emplace_back("segre_p3p1", ParamMap{});
    out.emplace_back("segre_p2p2", ParamMap{});
    out.emplace_back("elliptic_scroll", ParamMap{});
    for (long y = 1; y <= 5; ++y) out.emplace_back("decomposable_rank2", ParamMap{{"y", y}, {"d1", 2}, {"d2", 1}});
    return out;
}

void prop_euler(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "property";
    if (!rep.enabled()) return;
    int ok = 0, total = 0;
    for (const auto& inst : verification_instances()) {
        const VarietyData v = ctx.build(inst.first, inst.second);
        std::optional<ChernSeries> tangent;
        if (v.chow()->kind() != ChowPresentation::Kind::Table) {
            tangent = tangent_series(v.chow());
        } else if (inst.first == "elliptic_scroll") {
            tangent = ChernSeries::chern(
                2, v.chow(), {CycleClass::unit(v.chow()), Rational(2) * CycleClass::basis_element(v.chow(), "s")});
        }
        if (!tangent) continue; // complete intersections carry no explicit tangent data
        ++total;
        ok += whitney(*tangent, v.normal()) ==
              projective_space_restriction(v.ambient_dimension(), v.polarization());
    }
    rep.tally("euler: tangent.normal = ambient restriction",
              "whitney(c(T_Y), c(N)) equals the restricted series with binomial(k+1, i) h^i coefficients", ok,
              total);
}

void prop_blowup(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "property";
    if (!rep.enabled()) return;
    int ok = 0, total = 0;
    const std::vector<Rational> etas = {Rational(1, 3), Rational(2, 5), Rational(1)};
    for (const auto& inst : verification_instances()) {
        const VarietyData v = ctx.build(inst.first, inst.second);
        const int k = v.ambient_dimension();
        for (const Rational& eta : etas) {
            ++total;
            Rational acc(0);
            Rational eta_power(1);
            for (int t = 0; t <= k - 2; ++t) {
                Rational term = binomial(static_cast<unsigned>(k - 2), static_cast<unsigned>(t)) * eta_power *
                                blowup_intersection(v, k - t - 2);
                acc += (t % 2 == 0 ? term : -term);
                eta_power *= eta;
            }
            ok += acc == delta_at(v, eta);
        }
        ++total;
        ok += blowup_intersection(v, std::min(v.dimension() + 1, k)) == Rational(0);
    }
    rep.tally("blow-up expansion",
              "sum_t (-1)^t C(k-2,t) eta^t E^{t+2}.A*^{k-2-t} reproduces delta_eta on the whole catalog", ok, total);
}

void prop_scaling(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "property";
    if (!rep.enabled()) return;
    int poly_ok = 0, eps_ok = 0, verdict_ok = 0;
    int total = 0;
    for (const auto& inst : verification_instances()) {
        const VarietyData v = ctx.build(inst.first, inst.second);
        const UniPoly base = delta_poly(v).poly;
        const BignessVerdict verdict = decide_bigness(delta_poly(v), *v.seshadri());
        for (long s = 1; s <= 3; ++s) {
            ++total;
            const VarietyData scaled = scale_delta(v, s);
            const Rational factor = Rational(s).pow(static_cast<unsigned long>(v.ambient_dimension() - 2));
            poly_ok += delta_poly(scaled).poly.scale_argument(Rational(s)) == factor * base;

            const SeshadriInfo scaled_info = scale_seshadri(*v.seshadri(), s);
            eps_ok += scaled_info.value == Rational(s) * v.seshadri()->value &&
                      scaled_info.is_exact() == v.seshadri()->is_exact();

            const BignessVerdict sv = decide_bigness(delta_poly(scaled), scaled_info);
            bool same = sv.kind == verdict.kind;
            if (same && verdict.kind == BignessVerdict::Kind::Big)
                same = *sv.witness == Rational(s) * *verdict.witness && *sv.value == factor * *verdict.value;
            verdict_ok += same;
        }
    }
    rep.tally("scaling: delta law", "delta_{s eta}(Y, A^s) = s^{k-2} delta_eta(Y, A), coefficient-exact", poly_ok,
              total);
    rep.tally("scaling: seshadri law", "epsilon(Y, A^s) = s epsilon(Y, A)", eps_ok, total);
    rep.tally("scaling: verdict invariance", "verdicts unchanged, witnesses scale by s, values by s^{k-2}",
              verdict_ok, total);
}

void prop_finite_cover(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "property";
    if (!rep.enabled()) return;
    int ok = 0, total = 0;
    for (const auto& inst : verification_instances()) {
        const VarietyData v = ctx.build(inst.first, inst.second);
        const EtaPolynomial base = delta_poly(v);
        const BignessVerdict verdict = decide_bigness(base, *v.seshadri());
        for (long degf = 1; degf <= 3; ++degf) {
            ++total;
            const EtaPolynomial covered = finite_cover_delta(v, degf);
            bool good = covered.poly == Rational(degf) * base.poly;
            const BignessVerdict cv = decide_bigness(covered, *v.seshadri());
            good = good && cv.kind == verdict.kind;
            if (good && verdict.kind == BignessVerdict::Kind::Big)
                good = *cv.witness == *verdict.witness && *cv.value == Rational(degf) * *verdict.value;
            ok += good;
        }
    }
    rep.tally("finite covers", "delta scales by the covering degree; verdicts and witnesses unchanged", ok, total);
}

void prop_specialized(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "property";
    if (!rep.enabled()) return;
    int ok = 0, total = 0;
    for (const auto& inst : verification_instances()) {
        const VarietyData v = ctx.build(inst.first, inst.second);
        const UniPoly general = delta_poly(v).poly;
        auto check_form = [&](const EtaPolynomial& p) {
            ++total;
            ok += p.poly == general;
        };
        if (v.dimension() == 1) check_form(delta_curve_poly(v));
        if (v.dimension() == 2) check_form(delta_surface_poly(v));
        if (v.codimension() == 1) check_form(delta_codim1_poly(v));
        if (v.codimension() == 2 && v.ambient_dimension() >= 4 && v.ambient_dimension() <= 6)
            check_form(delta_codim2_poly(v));
    }
    rep.tally("specialized delta formulas",
              "curve, surface, codimension-1 and codimension-2 closed forms agree with the general polynomial", ok,
              total);
}

void prop_schur(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "property";
    if (!rep.enabled()) return;
    std::mt19937 rng(777001);
    std::uniform_int_distribution<long> degree(1, 6);
    int ok = 0, total = 0;
    for (long y = 2; y <= 5; ++y) {
        for (int n = 0; n < 5; ++n) {
            ++total;
            const long d1 = degree(rng);
            const long d2 = degree(rng);
            const VarietyData v = build_entry("decomposable_rank2", {{"y", y}, {"d1", d1}, {"d2", d2}});
            const CycleClass h = CycleClass::basis_element(v.chow(), "H");
            const Rational via_schur = schur_delta1(v.normal(), v.ambient_dimension());
            const Rational via_delta = delta_at(v, Rational(1));
            const Rational via_sum = delta1_decomposable(v, Rational(d1) * h, Rational(d2) * h);
            ok += via_schur == via_delta && via_delta == via_sum;
        }
    }
    rep.tally("Schur delta_1 cross-check",
              "Schur forms for k = 4..7 agree with delta at 1 and with the decomposable sum on random degree pairs",
              ok, total);
}

void prop_exists_positive(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.entry = "property";
    if (!rep.enabled()) return;
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> coeff(-8, 8);
    const OpenInterval interval(Rational(0), Rational(2));
    int agree = 0, sound = 0;
    const int cases = 1000;
    for (int n = 0; n < cases; ++n) {
        const int degree = 2 + (n % 2);
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        bool nonzero = false;
        do {
            for (auto& v : c) v = Rational(coeff(rng));
            nonzero = std::any_of(c.begin(), c.end(), [](const Rational& r) { return !r.is_zero(); });
        } while (!nonzero);
        const UniPoly p(c);

        const auto witness = exists_positive(p, interval);
        bool oracle = false;
        for (long i = 1; i < 2048 && !oracle; ++i) oracle = p.evaluate(Rational(i, 1024)).sign() > 0;
        agree += witness.has_value() == oracle;
        sound += !witness || (p.evaluate(*witness).sign() > 0 && *witness > interval.lo && *witness < interval.hi);
    }
    rep.tally("positivity search vs dense sampling",
              "exists_positive agrees with a step-1/1024 brute-force scan on random quadratics and cubics", agree,
              cases);
    rep.tally("positivity witnesses are exact",
              "every returned witness w satisfies p(w) > 0 exactly and lies strictly inside the interval", sound,
              cases);
}

} // namespace

std::size_t mutation_slot_count() {
    std::size_t count = 0;
    for (const MutationTarget& target : mutation_targets())
        count += eligible_pairs(*build_entry(target.entry, target.params).chow()).size();
    return count;
}

VerifyReport verify_all(const VerifyOptions& options) {
    VerifyReport report;
    Context ctx{Reporter{report, options.only, ""}, std::nullopt};
    if (options.mutate) {
        std::size_t remaining = *options.mutate;
        bool resolved = false;
        for (std::size_t t = 0; t < mutation_targets().size() && !resolved; ++t) {
            const MutationTarget& target = mutation_targets()[t];
            const std::size_t n = eligible_pairs(*build_entry(target.entry, target.params).chow()).size();
            if (remaining < n) {
                ctx.mutate = {t, remaining};
                resolved = true;
            } else {
                remaining -= n;
            }
        }
        if (!resolved) throw BadParams("mutation slot out of range; there are " +
                                       std::to_string(mutation_slot_count()) + " slots");
    }

    check_ci_codim2(ctx);
    check_ci_surface_p5(ctx);
    check_decomposable(ctx);
    check_elliptic_scroll(ctx);
    check_scroll(ctx);
    check_segre_p2p1(ctx);
    check_segre_p2p2(ctx);
    check_segre_p3p1(ctx);
    check_veronese(ctx);
    check_veronese_projected(ctx);

    prop_series(ctx);
    prop_whitney(ctx);
    prop_two_term_sum(ctx);
    prop_euler(ctx);
    prop_blowup(ctx);
    prop_scaling(ctx);
    prop_finite_cover(ctx);
    prop_specialized(ctx);
    prop_schur(ctx);
    prop_exists_positive(ctx);

    if (options.only && report.checks.empty())
        throw BadParams("no checks match '" + *options.only + "' (use an entry name or 'property')");
    return report;
}

} // namespace seshadri
