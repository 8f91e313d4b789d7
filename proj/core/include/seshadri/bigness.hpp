#pragma once

#include "seshadri/delta.hpp"
#include "seshadri/roots.hpp"

#include <optional>
#include <string>

namespace seshadri {

/// Outcome of the bigness test, with the root-isolation evidence attached.
/// Big carries a rational witness w, strictly inside the admissible
/// interval, with delta(w) > 0 exactly. NotBig is only issued when the
/// Seshadri constant is known exactly; with a mere lower bound b the
/// negative outcome is Inconclusive(checked_up_to = b).
struct BignessVerdict {
    enum class Kind { Big, NotBig, Inconclusive };

    Kind kind;
    std::optional<Rational> witness;
    std::optional<Rational> value;
    std::optional<Rational> checked_up_to;
    PositivityAnalysis evidence;
    std::optional<std::string> annotation;

    bool is_big() const { return kind == Kind::Big; }
};

std::string to_string(BignessVerdict::Kind kind);

/// Tests for some eta in the open interval (0, b) with delta_eta > 0, where
/// b is the known Seshadri value (constant or lower bound). Positivity at b
/// itself never counts: the interval is strictly open.
BignessVerdict decide_bigness(const EtaPolynomial& p, const SeshadriInfo& info);

/// Attaches the projective-space note to Big verdicts: inside P^k, Seshadri
/// bigness and ampleness with respect to O(1) coincide.
BignessVerdict annotate_projective_space(BignessVerdict verdict);

} // namespace seshadri
