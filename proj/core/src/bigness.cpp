#include "seshadri/bigness.hpp"

namespace seshadri {

std::string to_string(BignessVerdict::Kind kind) {
    switch (kind) {
    case BignessVerdict::Kind::Big: return "big";
    case BignessVerdict::Kind::NotBig: return "not_big";
    case BignessVerdict::Kind::Inconclusive: return "inconclusive";
    }
    return "?";
}

BignessVerdict decide_bigness(const EtaPolynomial& p, const SeshadriInfo& info) {
    BignessVerdict verdict;
    const OpenInterval interval(Rational(0), info.value);
    verdict.evidence = analyze_positivity(p.poly, interval);
    if (verdict.evidence.witness) {
        verdict.kind = BignessVerdict::Kind::Big;
        verdict.witness = verdict.evidence.witness;
        verdict.value = p.poly.evaluate(*verdict.witness);
    } else if (info.is_exact()) {
        verdict.kind = BignessVerdict::Kind::NotBig;
    } else {
        verdict.kind = BignessVerdict::Kind::Inconclusive;
        verdict.checked_up_to = info.value;
    }
    return verdict;
}

BignessVerdict annotate_projective_space(BignessVerdict verdict) {
    if (verdict.kind == BignessVerdict::Kind::Big)
        verdict.annotation = "=> Seshadri O(1)-ample (for submanifolds of projective space, "
                             "Seshadri bigness and ampleness coincide)";
    return verdict;
}

} // namespace seshadri
