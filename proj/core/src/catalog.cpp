#include "seshadri/catalog.hpp"

#include "seshadri/chern.hpp"
#include "seshadri/errors.hpp"

#include <algorithm>

namespace seshadri {

namespace {

/// Chow ring of a subvariety cut out in projective space by hypersurfaces:
/// basis 1, H, H^2, ..., H^{y-1}, pt with H^i . H^j = H^{i+j} below the top
/// and H^i . H^j = d0 pt at the top, where d0 is the degree of Y with
/// respect to O(1). For curves (y = 1) the ring degenerates to {1, pt} and
/// the hyperplane class is d0 pt. Returns the presentation and the class H.
std::pair<PresentationPtr, CycleClass> hyperplane_ring(int y, const Rational& d0) {
    ChowPresentation::TableSpec spec;
    spec.basis.push_back({"1", 0});
    std::vector<std::string> names(static_cast<std::size_t>(y) + 1);
    for (int c = 1; c < y; ++c) names[static_cast<std::size_t>(c)] = c == 1 ? "H" : "H^" + std::to_string(c);
    names[static_cast<std::size_t>(y)] = "pt";
    for (int c = 1; c <= y; ++c) spec.basis.push_back({names[static_cast<std::size_t>(c)], c});
    spec.point_name = "pt";
    // Basis index of codimension c is simply c with this layout.
    for (int i = 1; i < y; ++i)
        for (int j = i; j < y; ++j) {
            if (i + j < y)
                spec.products[{static_cast<std::size_t>(i), static_cast<std::size_t>(j)}] = {
                    {static_cast<std::size_t>(i + j), Rational(1)}};
            else if (i + j == y)
                spec.products[{static_cast<std::size_t>(i), static_cast<std::size_t>(j)}] = {
                    {static_cast<std::size_t>(y), d0}};
        }
    auto pres = ChowPresentation::table(std::move(spec));
    CycleClass h = y >= 2 ? CycleClass::basis_element(pres, "H") : d0 * CycleClass::basis_element(pres, "pt");
    return {pres, h};
}

long need(const ParamMap& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw BadParams("missing parameter '" + name + "'");
    return it->second;
}

VarietyData build_ci_codim2(const ParamMap& p) {
    const long k = need(p, "k");
    const long d1 = need(p, "d1");
    const long d2 = need(p, "d2");
    if (k != 4 && k != 5) throw BadParams("ci_codim2 covers ambient dimension k = 4 or 5");
    if (d2 < 1 || d1 < d2) throw BadParams("degrees must satisfy d1 >= d2 >= 1");
    const int y = static_cast<int>(k) - 2;
    auto [pres, h] = hyperplane_ring(y, Rational(d1 * d2));
    ChernSeries normal = whitney(ChernSeries::line_bundle(Rational(d1) * h), ChernSeries::line_bundle(Rational(d2) * h));
    return VarietyData("ci_codim2", static_cast<int>(k), pres, std::move(normal), h,
                       seshadri_complete_intersection({d1, d2}), true);
}

VarietyData build_ci_surface_p5(const ParamMap& p) {
    const long d1 = need(p, "d1");
    const long d2 = need(p, "d2");
    const long d3 = need(p, "d3");
    if (d3 < 1 || d2 < d3 || d1 < d2) throw BadParams("degrees must satisfy d1 >= d2 >= d3 >= 1");
    auto [pres, h] = hyperplane_ring(2, Rational(d1 * d2 * d3));
    ChernSeries normal = whitney(whitney(ChernSeries::line_bundle(Rational(d1) * h),
                                         ChernSeries::line_bundle(Rational(d2) * h)),
                                 ChernSeries::line_bundle(Rational(d3) * h));
    return VarietyData("ci_surface_p5", 5, pres, std::move(normal), h,
                       seshadri_complete_intersection({d1, d2, d3}), true);
}

VarietyData build_scroll(const ParamMap& p) {
    const long e = need(p, "e");
    if (e < 0) throw BadParams("scroll parameter e must be >= 0");
    auto pres = ChowPresentation::hirzebruch(static_cast<int>(e));
    const CycleClass pol =
        CycleClass::basis_element(pres, "C0") + Rational(e + 1) * CycleClass::basis_element(pres, "F");
    const int k = static_cast<int>(e) + 3;
    ChernSeries normal = normal_from_euler(k, pol, tangent_series(pres));
    return VarietyData("scroll", k, pres, std::move(normal), pol, seshadri_defined_in_degree(2, true), true);
}

VarietyData build_veronese(const ParamMap&) {
    auto pres = ChowPresentation::multi_projective({2});
    const CycleClass pol = Rational(2) * multiprojective_hyperplane(pres, 0);
    ChernSeries normal = normal_from_euler(5, pol, tangent_series(pres));
    return VarietyData("veronese", 5, pres, std::move(normal), pol, seshadri_defined_in_degree(2, true), true);
}

VarietyData build_veronese_projected(const ParamMap&) {
    auto pres = ChowPresentation::multi_projective({2});
    const CycleClass pol = Rational(2) * multiprojective_hyperplane(pres, 0);
    ChernSeries normal = normal_from_euler(4, pol, tangent_series(pres));
    return VarietyData("veronese_projected", 4, pres, std::move(normal), pol, seshadri_defined_in_degree(3, false),
                       true);
}

VarietyData build_segre(std::string name, std::vector<int> factors, int k) {
    auto pres = ChowPresentation::multi_projective(std::move(factors));
    CycleClass pol = CycleClass::zero(pres);
    for (std::size_t f = 0; f < pres->factors().size(); ++f) pol = pol + multiprojective_hyperplane(pres, f);
    ChernSeries normal = normal_from_euler(k, pol, tangent_series(pres));
    return VarietyData(std::move(name), k, pres, std::move(normal), pol, seshadri_defined_in_degree(2, true), true);
}

/// Product of an elliptic plane cubic with P^1, sitting in P^5 through the
/// Segre map. Numerical ring: f = fiber over a point of the curve, s = a
/// section (curve times a point), f.s = pt, f^2 = s^2 = 0. The tangent
/// series is 1 + 2s t (the curve factor is tangent-trivial, c2 vanishes);
/// the normal data, including the c2(N) integral, is re-derived from the
/// ambient restriction identity rather than stored.
VarietyData build_elliptic_scroll(const ParamMap&) {
    ChowPresentation::TableSpec spec;
    spec.basis = {{"1", 0}, {"f", 1}, {"s", 1}, {"pt", 2}};
    spec.point_name = "pt";
    spec.products[{1, 1}] = {};
    spec.products[{1, 2}] = {{3, Rational(1)}};
    spec.products[{2, 2}] = {};
    auto pres = ChowPresentation::table(std::move(spec));
    const CycleClass pol =
        Rational(3) * CycleClass::basis_element(pres, "f") + CycleClass::basis_element(pres, "s");
    const ChernSeries tangent = ChernSeries::chern(
        2, pres, {CycleClass::unit(pres), Rational(2) * CycleClass::basis_element(pres, "s")});
    ChernSeries normal = normal_from_euler(5, pol, tangent);
    return VarietyData("elliptic_scroll", 5, pres, std::move(normal), pol, seshadri_defined_in_degree(3, false),
                       true);
}

/// Zero locus of a section of O(d1) + O(d2) on P^{y+2}: the bridge entry for
/// the decomposable rank-2 cross-checks. Polarization is the determinant
/// restricted to Y; the admissible interval extends strictly past 1, so the
/// sound bound carried here is LowerBound(1).
VarietyData build_decomposable_rank2(const ParamMap& p) {
    const long y = need(p, "y");
    const long d1 = need(p, "d1");
    const long d2 = need(p, "d2");
    if (y < 1 || y > 8) throw BadParams("dimension y must be between 1 and 8");
    if (d1 < 1 || d2 < 1) throw BadParams("degrees must be >= 1");
    auto [pres, h] = hyperplane_ring(static_cast<int>(y), Rational(d1 * d2));
    const CycleClass L = Rational(d1) * h;
    const CycleClass M = Rational(d2) * h;
    ChernSeries normal = whitney(ChernSeries::line_bundle(L), ChernSeries::line_bundle(M));
    return VarietyData("decomposable_rank2", static_cast<int>(y) + 2, pres, std::move(normal), L + M,
                       SeshadriInfo::lower_bound(Rational(1)), true);
}

std::vector<CatalogEntry> make_entries() {
    std::vector<CatalogEntry> entries;
    entries.push_back({"ci_codim2",
                       "codimension-2 complete intersection of degrees (d1, d2) in P^k, k = 4 or 5",
                       {{"k", "ambient dimension (4 or 5)", 4, 5},
                        {"d1", "largest hypersurface degree", 1, 1000},
                        {"d2", "second hypersurface degree (d2 <= d1)", 1, 1000}},
                       build_ci_codim2});
    entries.push_back({"ci_surface_p5",
                       "complete intersection surface of degrees (d1, d2, d3) in P^5",
                       {{"d1", "largest degree", 1, 1000},
                        {"d2", "middle degree (d2 <= d1)", 1, 1000},
                        {"d3", "smallest degree (d3 <= d2)", 1, 1000}},
                       build_ci_surface_p5});
    entries.push_back({"decomposable_rank2",
                       "zero locus of a section of O(d1) + O(d2) on P^{y+2}",
                       {{"y", "dimension of Y", 1, 8},
                        {"d1", "first degree", 1, 1000},
                        {"d2", "second degree", 1, 1000}},
                       build_decomposable_rank2});
    entries.push_back({"elliptic_scroll",
                       "elliptic scroll: (plane cubic curve) x P^1 in P^5 via the Segre map",
                       {},
                       build_elliptic_scroll});
    entries.push_back({"scroll",
                       "rational normal scroll: Hirzebruch surface F_e of degree e+2 in P^{e+3}",
                       {{"e", "Hirzebruch parameter (C0^2 = -e)", 0, 60}},
                       build_scroll});
    entries.push_back({"segre_p2p1", "Segre embedding of P^2 x P^1 in P^5", {}, [](const ParamMap&) {
                           return build_segre("segre_p2p1", {2, 1}, 5);
                       }});
    entries.push_back({"segre_p2p2", "Segre embedding of P^2 x P^2 in P^8", {}, [](const ParamMap&) {
                           return build_segre("segre_p2p2", {2, 2}, 8);
                       }});
    entries.push_back({"segre_p3p1", "Segre embedding of P^3 x P^1 in P^7", {}, [](const ParamMap&) {
                           return build_segre("segre_p3p1", {3, 1}, 7);
                       }});
    entries.push_back({"veronese", "Veronese surface in P^5 (P^2 embedded by O(2))", {}, build_veronese});
    entries.push_back({"veronese_projected",
                       "general projection of the Veronese surface to P^4",
                       {},
                       build_veronese_projected});
    std::sort(entries.begin(), entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
    return entries;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t prev = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, prev + (a[i - 1] == b[j - 1] ? 0 : 1)});
            prev = up;
        }
    }
    return row[b.size()];
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = make_entries();
    return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
    const CatalogEntry* best = nullptr;
    std::size_t best_distance = 0;
    for (const CatalogEntry& e : catalog_entries()) {
        if (e.name == name) return e;
        const std::size_t d = edit_distance(e.name, name);
        if (!best || d < best_distance) {
            best = &e;
            best_distance = d;
        }
    }
    throw UnknownEntry(name, best ? best->name : "");
}

VarietyData build_entry(const std::string& name, const ParamMap& params) {
    const CatalogEntry& entry = find_entry(name);
    for (const auto& [key, value] : params) {
        const auto spec = std::find_if(entry.params.begin(), entry.params.end(),
                                       [&](const ParamSpec& s) { return s.name == key; });
        if (spec == entry.params.end()) throw BadParams("entry '" + name + "' has no parameter '" + key + "'");
        if (value < spec->min_value || value > spec->max_value)
            throw BadParams("parameter '" + key + "' must be in [" + std::to_string(spec->min_value) + ", " +
                            std::to_string(spec->max_value) + "]");
    }
    return entry.build(params);
}

VarietyData build_entry(const std::string& name, const std::map<std::string, std::string>& raw_params) {
    ParamMap params;
    for (const auto& [key, text] : raw_params) {
        try {
            std::size_t used = 0;
            const long value = std::stol(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            params[key] = value;
        } catch (const std::exception&) {
            throw BadParams("parameter '" + key + "' must be an integer, got '" + text + "'");
        }
    }
    return build_entry(name, params);
}

} // namespace seshadri
