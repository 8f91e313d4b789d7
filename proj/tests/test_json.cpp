#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seshadri/catalog.hpp"
#include "seshadri/errors.hpp"
#include "seshadri/json_io.hpp"
#include "seshadri/report.hpp"

using namespace seshadri;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

const char* veronese_spec = R"({
  "name": "veronese",
  "k": 5,
  "y": 2,
  "ambient": "projective_space",
  "chow": {"type": "multiproj", "factors": [2]},
  "normal": {"euler": {"k": 5, "h": {"h1^1": "2"}, "tangent": "builtin"}},
  "polarization": {"h1^1": "2"},
  "seshadri": {"rule": "degree", "t": 2, "sharp": true}
})";

std::string compute_fingerprint(const VarietyData& v) {
    const ComputeResult r = run_compute(v, Rational(1, 2), true);
    return render_compute_json(r);
}

void check_field_error(const std::string& text, const std::string& field_prefix) {
    try {
        load_variety_spec(text);
        FAIL_CHECK("expected SchemaError for: " << text);
    } catch (const SchemaError& e) {
        CAPTURE(e.what());
        CHECK(std::string(e.what()).find(field_prefix) == 0);
    }
}

} // namespace

TEST_CASE("loading a variety description with a built-in tangent series") {
    const VarietyData v = load_variety_spec(veronese_spec);
    CHECK(v.name() == "veronese");
    CHECK(v.ambient_dimension() == 5);
    CHECK(v.dimension() == 2);
    CHECK(v.ambient_projective_space());
    CHECK(v.normal().at(1) == q(9) * multiprojective_hyperplane(v.chow(), 0));
    CHECK(v.seshadri()->is_exact());
    CHECK(v.seshadri()->value == q(1, 2));
    CHECK(delta_at(v, q(1, 2)) == q(9, 8));
}

TEST_CASE("loading a normal bundle given as a segre series") {
    const char* text = R"({
      "k": 5, "y": 2,
      "chow": {"type": "multiproj", "factors": [2]},
      "normal": {"kind": "segre", "rank": 3,
                 "coeffs": [{"h1^0": "1"}, {"h1^1": "-9"}, {"h1^2": "51"}]},
      "polarization": {"h1^1": "2"},
      "seshadri": {"exact": "1/2"}
    })";
    const VarietyData v = load_variety_spec(text);
    CHECK(v.normal().kind() == SeriesKind::Chern);
    CHECK(v.normal().at(1) == q(9) * multiprojective_hyperplane(v.chow(), 0));
    CHECK(integrate(v.normal().at(2)) == q(30));
    CHECK(delta_at(v, q(1, 2)) == q(9, 8));
}

TEST_CASE("loading a table presentation") {
    const char* text = R"({
      "k": 5, "y": 2,
      "chow": {"type": "table", "point": "pt",
               "basis": [{"name": "1", "codim": 0}, {"name": "f", "codim": 1},
                          {"name": "s", "codim": 1}, {"name": "pt", "codim": 2}],
               "products": {"f*s": {"pt": "1"}}},
      "normal": {"kind": "chern", "rank": 3,
                 "coeffs": [{"1": "1"}, {"f": "18", "s": "4"}, {"pt": "54"}]},
      "polarization": {"f": "3", "s": "1"},
      "seshadri": {"lower_bound": "1/3"}
    })";
    const VarietyData v = load_variety_spec(text);
    CHECK(v.degree() == q(6));
    CHECK(delta_at(v, q(1, 3)) == q(2, 3));
    CHECK_FALSE(v.seshadri()->is_exact());
}

TEST_CASE("seshadri rules in documents") {
    std::string base = R"({
      "k": 5, "y": 2,
      "chow": {"type": "multiproj", "factors": [2]},
      "normal": {"euler": {"k": 5, "h": {"h1^1": "2"}, "tangent": "builtin"}},
      "polarization": {"h1^1": "2"},
      "seshadri": SESH
    })";
    auto with = [&](const std::string& sesh) {
        std::string text = base;
        return load_variety_spec(text.replace(text.find("SESH"), 4, sesh));
    };
    CHECK(with(R"({"rule": "ci", "degrees": [3, 2, 2]})").seshadri()->value == q(1, 3));
    CHECK(with(R"({"rule": "degree", "t": 3})").seshadri()->value == q(1, 3));
    CHECK_FALSE(with(R"({"rule": "degree", "t": 3})").seshadri()->is_exact());
    CHECK(with(R"({"exact": "2/7"})").seshadri()->value == q(2, 7));
    CHECK_FALSE(with(R"({"lower_bound": "1/5"})").seshadri()->is_exact());
    // domain failures surface as schema errors at the document layer
    CHECK_THROWS_AS(with(R"({"rule": "degree", "t": 3, "sharp": true})"), SchemaError);
    CHECK_THROWS_AS(with(R"({"rule": "nope"})"), SchemaError);
    CHECK_THROWS_AS(with(R"({"guess": "1/2"})"), SchemaError);
}

TEST_CASE("schema errors carry field paths") {
    check_field_error("not json", "");
    check_field_error("[]", "");
    check_field_error(R"({"k": 5})", "y");
    check_field_error(R"({"k": 5, "y": 0, "chow": {"type": "multiproj", "factors": [2]}})", "y");
    check_field_error(R"({"k": 5, "y": "2"})", "y");
    check_field_error(R"({"k": 5, "y": 3, "chow": {"type": "multiproj", "factors": [2]}})", "y");
    check_field_error(R"({"k": 5, "y": 2, "chow": {"type": "weird"}})", "chow.type");
    check_field_error(R"({"k": 5, "y": 2, "chow": {"type": "multiproj", "factors": []}})", "chow.factors");
    const std::string good_chow = R"({"type": "multiproj", "factors": [2]})";
    check_field_error(R"({"k": 5, "y": 2, "chow": )" + good_chow + "}", "polarization");
    check_field_error(R"({"k": 5, "y": 2, "chow": )" + good_chow + R"(, "polarization": {"nope": "1"}})",
                      "polarization.nope");
    check_field_error(R"({"k": 5, "y": 2, "chow": )" + good_chow + R"(, "polarization": {"h1^1": "1.5"}})",
                      "polarization.h1^1");
    check_field_error(R"({"k": 5, "y": 2, "chow": )" + good_chow + R"(, "polarization": {"h1^1": 2}})",
                      "polarization.h1^1");
    check_field_error(R"({"k": 5, "y": 2, "chow": )" + good_chow +
                          R"(, "polarization": {"h1^1": "2"}, "normal": {"kind": "chern"}})",
                      "normal.rank");
    check_field_error(R"({"k": 5, "y": 2, "chow": )" + good_chow +
                          R"(, "polarization": {"h1^1": "2"},
                          "normal": {"euler": {"k": 5, "h": {"h1^1": "2"}, "tangent": "builtin"}},
                          "ambient": "affine"})",
                      "ambient");
    // euler solving on a table ring without an explicit tangent series
    check_field_error(R"({
      "k": 4, "y": 2,
      "chow": {"type": "table", "point": "pt",
               "basis": [{"name": "1", "codim": 0}, {"name": "H", "codim": 1}, {"name": "pt", "codim": 2}],
               "products": {"H*H": {"pt": "4"}}},
      "normal": {"euler": {"k": 4, "h": {"H": "1"}, "tangent": "builtin"}},
      "polarization": {"H": "1"}})",
                      "normal.euler");
}

TEST_CASE("emit-load round trips are fixed points that recompute identically") {
    const std::vector<std::pair<std::string, ParamMap>> instances = {
        {"veronese", {}},
        {"veronese_projected", {}},
        {"segre_p2p1", {}},
        {"segre_p2p2", {}},
        {"segre_p3p1", {}},
        {"elliptic_scroll", {}},
        {"scroll", {{"e", 4}}},
        {"ci_surface_p5", {{"d1", 3}, {"d2", 2}, {"d3", 2}}},
        {"ci_codim2", {{"k", 5}, {"d1", 3}, {"d2", 2}}},
        {"decomposable_rank2", {{"y", 3}, {"d1", 2}, {"d2", 1}}},
    };
    for (const auto& [name, params] : instances) {
        CAPTURE(name);
        const VarietyData v = build_entry(name, params);
        const std::string emitted = emit_variety_spec(v);
        const VarietyData reloaded = load_variety_spec(emitted);
        CHECK(emit_variety_spec(reloaded) == emitted);
        CHECK(compute_fingerprint(reloaded) == compute_fingerprint(v));
    }
}

TEST_CASE("compute results serialize deterministically") {
    const VarietyData v = build_entry("veronese", ParamMap{});
    CHECK(compute_fingerprint(v) == compute_fingerprint(v));
    const std::string out = compute_fingerprint(v);
    CHECK(out.find("\"9/8\"") != std::string::npos);
    CHECK(out.find("\"verdict\": \"big\"") != std::string::npos);
    CHECK(out.find("annotation") != std::string::npos);
}
