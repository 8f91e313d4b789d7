#include "seshadri/catalog.hpp"
#include "seshadri/errors.hpp"
#include "seshadri/json_io.hpp"
#include "seshadri/report.hpp"
#include "seshadri/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using namespace seshadri;

int emit_or_compute(const VarietyData& v, bool emit_spec, bool as_json, bool explain,
                    const std::optional<std::string>& eta_text) {
    if (emit_spec) {
        std::cout << emit_variety_spec(v);
        return 0;
    }
    std::optional<Rational> eta;
    if (eta_text) eta = Rational::from_string(*eta_text);
    const ComputeResult result = run_compute(v, eta, explain);
    std::cout << (as_json ? render_compute_json(result) : render_compute_text(result));
    return 0;
}

std::map<std::string, std::string> parse_entry_params(const std::vector<std::string>& extras) {
    std::map<std::string, std::string> params;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        std::string key = extras[i];
        if (key.rfind("--", 0) != 0) throw BadParams("expected --<param> <value>, got '" + key + "'");
        key = key.substr(2);
        if (const auto eq = key.find('='); eq != std::string::npos) {
            params[key.substr(0, eq)] = key.substr(eq + 1);
            continue;
        }
        if (++i >= extras.size()) throw BadParams("missing value for --" + key);
        params[key] = extras[i];
    }
    return params;
}

void print_catalog_list() {
    for (const CatalogEntry& e : catalog_entries()) {
        std::cout << e.name << "\n    " << e.summary << "\n";
        for (const ParamSpec& p : e.params)
            std::cout << "    --" << p.name << " <int in [" << p.min_value << ", " << p.max_value << "]>  " << p.doc
                      << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for Seshadri bigness of polarized submanifolds"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand(
        "compute", "compute the delta polynomial and the bigness verdict from a JSON variety description");
    std::string path;
    compute->add_option("file", path, "variety description file (JSON)")->required();
    bool c_json = false, c_explain = false, c_emit = false;
    std::optional<std::string> c_eta;
    compute->add_flag("--json", c_json, "machine-readable output");
    compute->add_flag("--explain", c_explain, "print the per-term breakdown of the delta polynomial");
    compute->add_flag("--emit-spec", c_emit, "re-emit the normalized variety description and exit");
    compute->add_option("--eta", c_eta, "additionally evaluate delta at this rational, e.g. --eta 1/3");

    auto* catalog = app.add_subcommand("catalog", "built-in worked examples");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list the entries with their parameters");
    auto* run = catalog->add_subcommand("run", "build an entry and compute its invariants");
    std::string entry_name;
    run->add_option("name", entry_name, "catalog entry name")->required();
    bool r_json = false, r_explain = false, r_emit = false;
    std::optional<std::string> r_eta;
    run->add_flag("--json", r_json, "machine-readable output");
    run->add_flag("--explain", r_explain, "print the per-term breakdown of the delta polynomial");
    run->add_flag("--emit-spec", r_emit, "emit the entry as a variety description and exit");
    run->add_option("--eta", r_eta, "additionally evaluate delta at this rational");
    run->allow_extras();

    auto* verify = app.add_subcommand(
        "verify-paper", "recompute every built-in example and compare against its known exact values");
    std::optional<std::string> only;
    verify->add_option("--only", only, "restrict to one entry name (or 'property' for the property suites)");
    bool v_json = false;
    verify->add_flag("--json", v_json, "JSON-lines output, one check per line");
    std::optional<std::size_t> mutate;
    verify->add_option("--mutate", mutate,
                       "self-test: perturb the n-th eligible structure constant; the run must then report failures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) {
            std::ifstream in(path);
            if (!in) {
                std::cerr << "error: cannot read '" << path << "'\n";
                return 2;
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return emit_or_compute(load_variety_spec(buffer.str()), c_emit, c_json, c_explain, c_eta);
        }
        if (list->parsed()) {
            print_catalog_list();
            return 0;
        }
        if (run->parsed()) {
            const VarietyData v = build_entry(entry_name, parse_entry_params(run->remaining()));
            return emit_or_compute(v, r_emit, r_json, r_explain, r_eta);
        }
        if (verify->parsed()) {
            VerifyOptions options;
            options.only = only;
            options.mutate = mutate;
            const VerifyReport report = verify_all(options);
            std::cout << (v_json ? render_report_json_lines(report) : render_report_text(report));
            return report.all_pass() ? 0 : 1;
        }
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
