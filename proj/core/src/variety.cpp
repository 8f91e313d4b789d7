#include "seshadri/variety.hpp"

#include "seshadri/errors.hpp"

namespace seshadri {

VarietyData::VarietyData(std::string name, int k, PresentationPtr chow, ChernSeries normal, CycleClass polarization,
                         std::optional<SeshadriInfo> seshadri, bool ambient_projective_space)
    : name_(std::move(name)), k_(k), chow_(std::move(chow)), normal_(std::move(normal)),
      polarization_(std::move(polarization)), seshadri_(std::move(seshadri)),
      ambient_projective_space_(ambient_projective_space) {
    if (!chow_) throw SchemaError("chow", "missing Chow presentation");
    const int y = chow_->dimension();
    if (k_ < 2) throw SchemaError("k", "ambient dimension must satisfy k >= 2");
    if (y < 1 || y > k_ - 1) throw SchemaError("y", "dimension must satisfy 1 <= y <= k-1");
    if (!(*normal_.presentation() == *chow_)) throw SchemaError("normal", "normal bundle lives on a different ring");
    if (normal_.kind() != SeriesKind::Chern) throw SchemaError("normal", "normal bundle series must have kind chern");
    if (normal_.rank() != k_ - y)
        throw SchemaError("normal", "normal bundle rank must be k - y = " + std::to_string(k_ - y) + ", got " +
                                        std::to_string(normal_.rank()));
    if (!(*polarization_.presentation() == *chow_))
        throw SchemaError("polarization", "polarization lives on a different ring");
    if (polarization_.is_zero() || !polarization_.is_homogeneous(1))
        throw SchemaError("polarization", "polarization must be a nonzero class of codimension 1");
    if (degree().sign() <= 0)
        throw SchemaError("polarization", "degree of Y with respect to the polarization must be positive");
}

Rational VarietyData::degree() const { return integrate(power(polarization_, static_cast<unsigned>(dimension()))); }

VarietyData VarietyData::with_name(std::string name) const {
    VarietyData copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

VarietyData VarietyData::with_seshadri(SeshadriInfo info) const {
    VarietyData copy = *this;
    copy.seshadri_ = std::move(info);
    return copy;
}

VarietyData VarietyData::with_presentation(const PresentationPtr& pres) const {
    if (pres->basis_size() != chow_->basis_size()) throw Error("replacement presentation has a different basis");
    std::vector<CycleClass> coeffs;
    coeffs.reserve(normal_.coeffs().size());
    for (const CycleClass& c : normal_.coeffs()) coeffs.emplace_back(pres, c.coeffs());
    ChernSeries normal = ChernSeries::chern(normal_.rank(), pres, std::move(coeffs));
    CycleClass polarization(pres, polarization_.coeffs());
    return VarietyData(name_, k_, pres, std::move(normal), std::move(polarization), seshadri_,
                       ambient_projective_space_);
}

} // namespace seshadri
