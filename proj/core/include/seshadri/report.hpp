#pragma once

#include "seshadri/bigness.hpp"
#include "seshadri/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seshadri {

/// One row of the --explain table: the summand of the general formula at
/// index t, so a reader can re-derive the polynomial by hand.
struct ExplainRow {
    int t;
    Rational binom;
    Rational integral;
    Rational coefficient;
};

struct ComputeResult {
    VarietyData variety;
    EtaPolynomial delta;
    std::optional<BignessVerdict> verdict; // absent without Seshadri information
    std::optional<Rational> eta;
    std::optional<Rational> eta_value;
    std::vector<ExplainRow> explain;
};

ComputeResult run_compute(const VarietyData& v, const std::optional<Rational>& eta, bool explain);

std::string render_compute_text(const ComputeResult& r);
std::string render_compute_json(const ComputeResult& r);

std::string render_report_text(const VerifyReport& report);
/// One JSON object per line, one line per check.
std::string render_report_json_lines(const VerifyReport& report);

} // namespace seshadri
