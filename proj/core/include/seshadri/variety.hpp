#pragma once

#include "seshadri/chern.hpp"
#include "seshadri/seshadri_info.hpp"

#include <optional>
#include <string>

namespace seshadri {

/// Everything the invariants depend on: a submanifold Y of dimension y in a
/// polarized manifold (X, A) of dimension k, described by a Chow
/// presentation of Y, the Chern series of the normal bundle N (rank k - y),
/// and the restricted polarization class c1(A_Y).
class VarietyData {
public:
    VarietyData(std::string name, int k, PresentationPtr chow, ChernSeries normal, CycleClass polarization,
                std::optional<SeshadriInfo> seshadri, bool ambient_projective_space = false);

    const std::string& name() const { return name_; }
    int ambient_dimension() const { return k_; }
    int dimension() const { return chow_->dimension(); }
    int codimension() const { return k_ - dimension(); }
    const PresentationPtr& chow() const { return chow_; }
    const ChernSeries& normal() const { return normal_; }
    const CycleClass& polarization() const { return polarization_; }
    const std::optional<SeshadriInfo>& seshadri() const { return seshadri_; }
    bool ambient_projective_space() const { return ambient_projective_space_; }

    /// d = integral of c1(A_Y)^y, the degree of Y with respect to A.
    Rational degree() const;

    VarietyData with_name(std::string name) const;
    VarietyData with_seshadri(SeshadriInfo info) const;
    /// Same data re-expressed on another presentation with an identical
    /// basis (used by the mutation smoke tests).
    VarietyData with_presentation(const PresentationPtr& pres) const;

private:
    std::string name_;
    int k_;
    PresentationPtr chow_;
    ChernSeries normal_;
    CycleClass polarization_;
    std::optional<SeshadriInfo> seshadri_;
    bool ambient_projective_space_;
};

} // namespace seshadri
