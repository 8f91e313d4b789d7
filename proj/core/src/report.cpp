#include "seshadri/report.hpp"

#include "json_detail.hpp"

#include <sstream>

namespace seshadri {

using nlohmann::json;

ComputeResult run_compute(const VarietyData& v, const std::optional<Rational>& eta, bool explain) {
    ComputeResult result{v, delta_poly(v), std::nullopt, eta, std::nullopt, {}};
    if (v.seshadri()) {
        BignessVerdict verdict = decide_bigness(result.delta, *v.seshadri());
        if (v.ambient_projective_space()) verdict = annotate_projective_space(std::move(verdict));
        result.verdict = std::move(verdict);
    }
    if (eta) result.eta_value = result.delta.poly.evaluate(*eta);
    if (explain) {
        const int k = v.ambient_dimension();
        for (int t = 0; t <= k - 2; ++t) {
            const Rational b = binomial(static_cast<unsigned>(k - 2), static_cast<unsigned>(t));
            const Rational integral = segre_integral(v, t);
            result.explain.push_back({t, b, integral, -(b * integral)});
        }
    }
    return result;
}

namespace {

json verdict_to_json(const BignessVerdict& v) {
    json out;
    out["verdict"] = to_string(v.kind);
    out["witness"] = v.witness ? json(v.witness->to_string()) : json();
    out["value"] = v.value ? json(v.value->to_string()) : json();
    out["checked_up_to"] = v.checked_up_to ? json(v.checked_up_to->to_string()) : json();
    out["annotation"] = v.annotation ? json(*v.annotation) : json();
    json samples = json::array();
    for (const GapSample& s : v.evidence.samples)
        samples.push_back(json{{"lo", s.lo.to_string()},
                               {"hi", s.hi.to_string()},
                               {"sample", s.sample.to_string()},
                               {"sign", s.sign}});
    out["evidence"] = json{{"distinct_roots", v.evidence.distinct_roots}, {"samples", samples}};
    return out;
}

json seshadri_to_json(const SeshadriInfo& info) {
    return json{{info.is_exact() ? "exact" : "lower_bound", info.value.to_string()}};
}

} // namespace

std::string render_compute_json(const ComputeResult& r) {
    json out;
    out["name"] = r.variety.name();
    out["k"] = r.variety.ambient_dimension();
    out["y"] = r.variety.dimension();
    out["degree"] = r.variety.degree().to_string();
    json coeffs = json::array();
    for (const Rational& c : r.delta.poly.coeffs()) coeffs.push_back(c.to_string());
    out["delta"] = json{{"coefficients", coeffs},
                        {"provenance", to_string(r.delta.provenance)},
                        {"text", r.delta.poly.to_string()}};
    out["seshadri"] = r.variety.seshadri() ? seshadri_to_json(*r.variety.seshadri()) : json();
    out["verdict"] = r.verdict ? verdict_to_json(*r.verdict) : json();
    if (r.eta) out["eta"] = json{{"at", r.eta->to_string()}, {"value", r.eta_value->to_string()}};
    if (!r.explain.empty()) {
        json rows = json::array();
        for (const ExplainRow& row : r.explain)
            rows.push_back(json{{"t", row.t},
                                {"binomial", row.binom.to_string()},
                                {"integral", row.integral.to_string()},
                                {"coefficient", row.coefficient.to_string()}});
        out["explain"] = rows;
    }
    return out.dump(2) + "\n";
}

std::string render_compute_text(const ComputeResult& r) {
    std::ostringstream os;
    const VarietyData& v = r.variety;
    os << "name:    " << (v.name().empty() ? "(unnamed)" : v.name()) << "\n";
    os << "ambient: k = " << v.ambient_dimension() << ", dim Y = " << v.dimension() << " (codimension "
       << v.codimension() << ")\n";
    os << "degree:  " << v.degree() << "\n";
    os << "delta:   " << r.delta.poly.to_string() << "\n";
    if (v.seshadri())
        os << "epsilon: " << (v.seshadri()->is_exact() ? "exactly " : ">= ") << v.seshadri()->value << "\n";
    else
        os << "epsilon: unknown (no seshadri information)\n";
    if (r.eta) os << "delta(" << *r.eta << ") = " << *r.eta_value << "\n";
    if (r.verdict) {
        os << "verdict: " << to_string(r.verdict->kind);
        if (r.verdict->witness) os << "  witness eta = " << *r.verdict->witness << ", delta = " << *r.verdict->value;
        if (r.verdict->checked_up_to) os << "  (no positive value found below " << *r.verdict->checked_up_to << ")";
        os << "\n";
        if (r.verdict->annotation) os << "         " << *r.verdict->annotation << "\n";
    } else {
        os << "verdict: skipped (provide seshadri information to decide bigness)\n";
    }
    if (!r.explain.empty()) {
        os << "terms (coefficient of eta^t is -binomial(k-2,t) * integral):\n";
        os << "    t  binomial  integral  coefficient\n";
        for (const ExplainRow& row : r.explain)
            os << "    " << row.t << "  " << row.binom << "  " << row.integral << "  " << row.coefficient << "\n";
    }
    return os.str();
}

std::string render_report_text(const VerifyReport& report) {
    std::ostringstream os;
    for (const CheckResult& c : report.checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.entry << " :: " << c.check;
        if (!c.pass) os << "\n      expected " << c.expected << "\n      got      " << c.got;
        os << "\n";
    }
    os << (report.all_pass() ? "all checks passed" : "FAILURES: " + std::to_string(report.failures())) << " ("
       << report.checks.size() << " checks)\n";
    return os.str();
}

std::string render_report_json_lines(const VerifyReport& report) {
    std::ostringstream os;
    for (const CheckResult& c : report.checks) {
        const json line{{"entry", c.entry}, {"check", c.check},       {"source", c.source},
                        {"pass", c.pass},   {"expected", c.expected}, {"got", c.got}};
        os << line.dump() << "\n";
    }
    return os.str();
}

} // namespace seshadri
