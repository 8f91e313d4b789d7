#include "seshadri/json_io.hpp"

#include "json_detail.hpp"
#include "seshadri/errors.hpp"
#include "seshadri/seshadri_info.hpp"

namespace seshadri {

using nlohmann::json;

namespace detail {

namespace {

const json& need(const json& j, const std::string& key, const std::string& field) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(field + "." + key, "missing required key");
    return *it;
}

long need_integer(const json& j, const std::string& key, const std::string& field) {
    const json& v = need(j, key, field);
    if (!v.is_number_integer()) throw SchemaError(field + "." + key, "expected an integer");
    return v.get<long>();
}

std::string need_string(const json& j, const std::string& key, const std::string& field) {
    const json& v = need(j, key, field);
    if (!v.is_string()) throw SchemaError(field + "." + key, "expected a string");
    return v.get<std::string>();
}

Rational rational_from(const json& v, const std::string& field) {
    if (!v.is_string()) throw SchemaError(field, "rationals must be written as strings, e.g. \"9/8\"");
    try {
        return Rational::from_string(v.get<std::string>());
    } catch (const SchemaError& e) {
        throw SchemaError(field, e.what());
    }
}

} // namespace

json class_to_json(const CycleClass& c) {
    json out = json::object();
    const auto& pres = *c.presentation();
    for (std::size_t i = 0; i < pres.basis_size(); ++i)
        if (!c.coeffs()[i].is_zero()) out[pres.element(i).name] = c.coeffs()[i].to_string();
    return out;
}

CycleClass class_from_json(const json& j, const PresentationPtr& pres, const std::string& field) {
    if (!j.is_object()) throw SchemaError(field, "expected an object mapping basis names to rational strings");
    CycleClass out = CycleClass::zero(pres);
    for (const auto& [key, value] : j.items()) {
        const auto index = pres->find(key);
        if (!index) throw SchemaError(field + "." + key, "unknown basis element");
        out = out + rational_from(value, field + "." + key) * CycleClass::basis_element(pres, key);
    }
    return out;
}

json series_to_json(const ChernSeries& s) {
    json coeffs = json::array();
    for (const CycleClass& c : s.coeffs()) coeffs.push_back(class_to_json(c));
    return json{{"kind", s.kind() == SeriesKind::Chern ? "chern" : "segre"}, {"rank", s.rank()}, {"coeffs", coeffs}};
}

ChernSeries series_from_json(const json& j, const PresentationPtr& pres, const std::string& field) {
    if (!j.is_object()) throw SchemaError(field, "expected a series object");
    const std::string kind = need_string(j, "kind", field);
    if (kind != "chern" && kind != "segre") throw SchemaError(field + ".kind", "must be \"chern\" or \"segre\"");
    const long rank = need_integer(j, "rank", field);
    const json& coeffs = need(j, "coeffs", field);
    if (!coeffs.is_array()) throw SchemaError(field + ".coeffs", "expected an array of classes");
    std::vector<CycleClass> classes;
    classes.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        classes.push_back(class_from_json(coeffs[i], pres, field + ".coeffs[" + std::to_string(i) + "]"));
    try {
        return kind == "chern" ? ChernSeries::chern(static_cast<int>(rank), pres, std::move(classes))
                               : ChernSeries::segre(static_cast<int>(rank), pres, std::move(classes));
    } catch (const Error& e) {
        throw SchemaError(field, e.what());
    }
}

json presentation_to_json(const ChowPresentation& pres) {
    switch (pres.kind()) {
    case ChowPresentation::Kind::MultiProjective:
        return json{{"type", "multiproj"}, {"factors", pres.factors()}};
    case ChowPresentation::Kind::Hirzebruch:
        return json{{"type", "hirzebruch"}, {"e", pres.hirzebruch_e()}};
    case ChowPresentation::Kind::Table:
        break;
    }
    json basis = json::array();
    for (const BasisElement& b : pres.elements()) basis.push_back(json{{"name", b.name}, {"codim", b.codim}});
    json products = json::object();
    for (std::size_t i = 0; i < pres.basis_size(); ++i) {
        if (i == pres.unit_index()) continue;
        for (std::size_t j = i; j < pres.basis_size(); ++j) {
            if (j == pres.unit_index()) continue;
            const SparseClass& p = pres.product(i, j);
            if (p.empty()) continue;
            json value = json::object();
            for (const auto& [k, c] : p) value[pres.element(k).name] = c.to_string();
            products[pres.element(i).name + "*" + pres.element(j).name] = value;
        }
    }
    return json{{"type", "table"},
                {"basis", basis},
                {"point", pres.element(pres.point_index()).name},
                {"products", products}};
}

PresentationPtr presentation_from_json(const json& j, const std::string& field) {
    if (!j.is_object()) throw SchemaError(field, "expected a presentation object");
    const std::string type = need_string(j, "type", field);
    if (type == "multiproj") {
        const json& factors = need(j, "factors", field);
        if (!factors.is_array() || factors.empty()) throw SchemaError(field + ".factors", "expected a nonempty array");
        std::vector<int> dims;
        for (const json& f : factors) {
            if (!f.is_number_integer()) throw SchemaError(field + ".factors", "factor dimensions must be integers");
            dims.push_back(f.get<int>());
        }
        return ChowPresentation::multi_projective(std::move(dims));
    }
    if (type == "hirzebruch") return ChowPresentation::hirzebruch(static_cast<int>(need_integer(j, "e", field)));
    if (type != "table") throw SchemaError(field + ".type", "must be \"multiproj\", \"hirzebruch\" or \"table\"");

    ChowPresentation::TableSpec spec;
    const json& basis = need(j, "basis", field);
    if (!basis.is_array() || basis.empty()) throw SchemaError(field + ".basis", "expected a nonempty array");
    for (const json& b : basis) {
        if (!b.is_object()) throw SchemaError(field + ".basis", "each element needs name and codim");
        const std::string name = need_string(b, "name", field + ".basis");
        if (name.find('*') != std::string::npos)
            throw SchemaError(field + ".basis", "basis names must not contain '*'");
        spec.basis.push_back({name, static_cast<int>(need_integer(b, "codim", field + ".basis"))});
    }
    spec.point_name = need_string(j, "point", field);

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < spec.basis.size(); ++i) index[spec.basis[i].name] = i;

    if (auto it = j.find("products"); it != j.end()) {
        if (!it->is_object()) throw SchemaError(field + ".products", "expected an object");
        for (const auto& [key, value] : it->items()) {
            const auto star = key.find('*');
            if (star == std::string::npos)
                throw SchemaError(field + ".products." + key, "keys look like \"a*b\" with basis names a, b");
            const std::string left = key.substr(0, star);
            const std::string right = key.substr(star + 1);
            const auto li = index.find(left);
            const auto ri = index.find(right);
            if (li == index.end() || ri == index.end())
                throw SchemaError(field + ".products." + key, "unknown basis element in product key");
            if (!value.is_object())
                throw SchemaError(field + ".products." + key, "expected an object mapping basis names to rationals");
            SparseClass entries;
            for (const auto& [name, coeff] : value.items()) {
                const auto ni = index.find(name);
                if (ni == index.end())
                    throw SchemaError(field + ".products." + key + "." + name, "unknown basis element");
                entries.emplace_back(ni->second, rational_from(coeff, field + ".products." + key + "." + name));
            }
            const auto pair = std::minmax(li->second, ri->second);
            spec.products[{pair.first, pair.second}] = std::move(entries);
        }
    }
    return ChowPresentation::table(std::move(spec));
}

} // namespace detail

namespace {

using detail::class_from_json;
using detail::class_to_json;
using detail::presentation_from_json;
using detail::presentation_to_json;
using detail::series_from_json;
using detail::series_to_json;

SeshadriInfo seshadri_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("seshadri", "expected an object");
    try {
        if (auto it = j.find("exact"); it != j.end())
            return SeshadriInfo::exact(Rational::from_string(it->is_string() ? it->get<std::string>() : ""));
        if (auto it = j.find("lower_bound"); it != j.end())
            return SeshadriInfo::lower_bound(Rational::from_string(it->is_string() ? it->get<std::string>() : ""));
        if (auto it = j.find("rule"); it != j.end()) {
            const std::string rule = it->is_string() ? it->get<std::string>() : "";
            if (rule == "ci") {
                const auto degrees = j.find("degrees");
                if (degrees == j.end() || !degrees->is_array())
                    throw SchemaError("seshadri.degrees", "the ci rule needs an array of degrees");
                std::vector<long> d;
                for (const json& v : *degrees) {
                    if (!v.is_number_integer()) throw SchemaError("seshadri.degrees", "degrees must be integers");
                    d.push_back(v.get<long>());
                }
                return seshadri_complete_intersection(d);
            }
            if (rule == "degree") {
                const auto t = j.find("t");
                if (t == j.end() || !t->is_number_integer())
                    throw SchemaError("seshadri.t", "the degree rule needs an integer t");
                bool sharp = false;
                if (auto s = j.find("sharp"); s != j.end()) {
                    if (!s->is_boolean()) throw SchemaError("seshadri.sharp", "expected a boolean");
                    sharp = s->get<bool>();
                }
                return seshadri_defined_in_degree(t->get<long>(), sharp);
            }
            throw SchemaError("seshadri.rule", "must be \"ci\" or \"degree\"");
        }
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError("seshadri", e.what());
    }
    throw SchemaError("seshadri", "expected exact, lower_bound, or a rule");
}

} // namespace

VarietyData load_variety_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("", "expected a JSON object");

    std::string name;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw SchemaError("name", "expected a string");
        name = it->get<std::string>();
    }
    const auto k_it = doc.find("k");
    if (k_it == doc.end() || !k_it->is_number_integer()) throw SchemaError("k", "expected an integer");
    const int k = k_it->get<int>();
    const auto y_it = doc.find("y");
    if (y_it == doc.end() || !y_it->is_number_integer()) throw SchemaError("y", "expected an integer");
    const int y = y_it->get<int>();
    if (y < 1 || y > k - 1) throw SchemaError("y", "dimension must satisfy 1 <= y <= k-1");

    const auto chow_it = doc.find("chow");
    if (chow_it == doc.end()) throw SchemaError("chow", "missing required key");
    const PresentationPtr pres = presentation_from_json(*chow_it, "chow");
    if (pres->dimension() != y)
        throw SchemaError("y", "y = " + std::to_string(y) + " does not match the presentation dimension " +
                                   std::to_string(pres->dimension()));

    const auto pol_it = doc.find("polarization");
    if (pol_it == doc.end()) throw SchemaError("polarization", "missing required key");
    const CycleClass polarization = class_from_json(*pol_it, pres, "polarization");

    const auto normal_it = doc.find("normal");
    if (normal_it == doc.end()) throw SchemaError("normal", "missing required key");
    ChernSeries normal = [&]() -> ChernSeries {
        const json& n = *normal_it;
        if (!n.is_object()) throw SchemaError("normal", "expected a series object or {\"euler\": ...}");
        if (auto it = n.find("euler"); it != n.end()) {
            const json& e = *it;
            if (!e.is_object()) throw SchemaError("normal.euler", "expected an object");
            long ek = k;
            if (auto kk = e.find("k"); kk != e.end()) {
                if (!kk->is_number_integer()) throw SchemaError("normal.euler.k", "expected an integer");
                ek = kk->get<long>();
            }
            const auto h_it = e.find("h");
            if (h_it == e.end()) throw SchemaError("normal.euler.h", "missing required key");
            const CycleClass h = class_from_json(*h_it, pres, "normal.euler.h");
            const auto t_it = e.find("tangent");
            if (t_it == e.end()) throw SchemaError("normal.euler.tangent", "missing required key");
            try {
                const ChernSeries tangent = t_it->is_string() && t_it->get<std::string>() == "builtin"
                                                ? tangent_series(pres)
                                                : series_from_json(*t_it, pres, "normal.euler.tangent");
                return normal_from_euler(static_cast<int>(ek), h, tangent);
            } catch (const SchemaError&) {
                throw;
            } catch (const Error& err) {
                throw SchemaError("normal.euler", err.what());
            }
        }
        const ChernSeries series = series_from_json(n, pres, "normal");
        if (series.kind() == SeriesKind::Chern) return series;
        try {
            return chern_from_segre(series);
        } catch (const Error& err) {
            throw SchemaError("normal", err.what());
        }
    }();

    std::optional<SeshadriInfo> info;
    if (auto it = doc.find("seshadri"); it != doc.end()) info = seshadri_from_json(*it);

    bool projective = false;
    if (auto it = doc.find("ambient"); it != doc.end()) {
        if (!it->is_string() || it->get<std::string>() != "projective_space")
            throw SchemaError("ambient", "the only recognized value is \"projective_space\"");
        projective = true;
    }

    return VarietyData(std::move(name), k, pres, std::move(normal), polarization, std::move(info), projective);
}

std::string emit_variety_spec(const VarietyData& v) {
    json doc;
    doc["name"] = v.name();
    doc["k"] = v.ambient_dimension();
    doc["y"] = v.dimension();
    doc["chow"] = presentation_to_json(*v.chow());
    doc["normal"] = series_to_json(v.normal());
    doc["polarization"] = class_to_json(v.polarization());
    if (v.seshadri())
        doc["seshadri"] = json{{v.seshadri()->is_exact() ? "exact" : "lower_bound", v.seshadri()->value.to_string()}};
    if (v.ambient_projective_space()) doc["ambient"] = "projective_space";
    return doc.dump(2) + "\n";
}

} // namespace seshadri
