#pragma once

#include "seshadri/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seshadri {

struct BasisElement {
    std::string name;
    int codim;
};

/// Sparse cycle class written on the basis: list of (basis index, coefficient).
using SparseClass = std::vector<std::pair<std::size_t, Rational>>;

/// A finite graded basis for the Chow ring of Y with exact structure
/// constants. Three flavours: products of projective spaces P^{n_1} x ... x
/// P^{n_r} (basis: monomials in the hyperplane pullbacks), Hirzebruch
/// surfaces (basis 1, C0, F, pt with C0.C0 = -e pt, C0.F = pt, F.F = 0), and
/// user-supplied multiplication tables. Tables are validated at load:
/// grading, unit law, commutativity, and full associativity.
class ChowPresentation {
public:
    enum class Kind { MultiProjective, Hirzebruch, Table };

    struct TableSpec {
        std::vector<BasisElement> basis;
        std::string point_name;
        /// Products of non-unit basis pairs; either key order accepted,
        /// omitted pairs default to zero. Unit products are implied.
        std::map<std::pair<std::size_t, std::size_t>, SparseClass> products;
    };

    static std::shared_ptr<const ChowPresentation> multi_projective(std::vector<int> factors);
    static std::shared_ptr<const ChowPresentation> hirzebruch(int e);
    static std::shared_ptr<const ChowPresentation> table(TableSpec spec);

    Kind kind() const { return kind_; }
    int dimension() const { return dimension_; }
    std::size_t basis_size() const { return basis_.size(); }
    const std::vector<BasisElement>& elements() const { return basis_; }
    const BasisElement& element(std::size_t i) const { return basis_[i]; }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(const std::string& name) const;
    std::size_t unit_index() const { return unit_; }
    std::size_t point_index() const { return point_; }

    /// Structure constants of element(i) * element(j).
    const SparseClass& product(std::size_t i, std::size_t j) const { return products_[i * basis_.size() + j]; }

    const std::vector<int>& factors() const;
    int hirzebruch_e() const;

    friend bool operator==(const ChowPresentation& a, const ChowPresentation& b);

private:
    ChowPresentation() = default;
    void index_names();
    void validate_table() const;

    Kind kind_ = Kind::Table;
    int dimension_ = 0;
    std::vector<BasisElement> basis_;
    std::map<std::string, std::size_t, std::less<>> by_name_;
    std::vector<SparseClass> products_; // dense (i, j) -> sparse class, symmetric
    std::size_t unit_ = 0;
    std::size_t point_ = 0;
    std::vector<int> factors_; // MultiProjective only
    int e_ = 0;                // Hirzebruch only
};

using PresentationPtr = std::shared_ptr<const ChowPresentation>;

/// Returns a copy of a Table presentation with the product of basis pair
/// (i, j) shifted by delta times the point class; the copy is re-validated.
/// Used by the verification harness for mutation smoke tests.
PresentationPtr with_perturbed_product(const PresentationPtr& pres, std::size_t i, std::size_t j,
                                       const Rational& delta);

/// An exact cycle class on a fixed presentation: a coefficient vector over
/// the graded basis. Immutable value type; all arithmetic is exact.
class CycleClass {
public:
    CycleClass(PresentationPtr pres, std::vector<Rational> coeffs);
    static CycleClass zero(PresentationPtr pres);
    static CycleClass unit(PresentationPtr pres);
    static CycleClass basis_element(PresentationPtr pres, const std::string& name);
    static CycleClass from_sparse(PresentationPtr pres, const SparseClass& entries);

    const PresentationPtr& presentation() const { return pres_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(const std::string& name) const;

    bool is_zero() const;
    /// Codimension of a nonzero homogeneous class; nullopt for zero or mixed.
    std::optional<int> codimension() const;
    bool is_homogeneous(int codim) const;
    CycleClass component(int codim) const;

    friend CycleClass operator+(const CycleClass& a, const CycleClass& b);
    friend CycleClass operator-(const CycleClass& a, const CycleClass& b);
    friend CycleClass operator*(const Rational& s, const CycleClass& a);
    CycleClass operator-() const;
    friend CycleClass operator*(const CycleClass& a, const CycleClass& b);

    friend bool operator==(const CycleClass& a, const CycleClass& b);
    friend bool operator!=(const CycleClass& a, const CycleClass& b) { return !(a == b); }

    std::string to_string() const;

private:
    PresentationPtr pres_;
    std::vector<Rational> c_;
};

/// Graded commutative product; codimensions add, components beyond the
/// dimension of Y truncate to zero. Throws PresentationMismatch.
CycleClass mul(const CycleClass& a, const CycleClass& b);

/// n-fold product; power(c, 0) is the unit class.
CycleClass power(const CycleClass& c, unsigned n);

/// Degree of the zero-cycle part: sum of the top-codimension coefficients
/// (every top basis element is a degree-one point class). Lower-codimension
/// components contribute zero.
Rational integrate(const CycleClass& c);

/// The pullback h_i of the hyperplane class of the i-th projective factor
/// (0-based). Requires a MultiProjective presentation.
CycleClass multiprojective_hyperplane(const PresentationPtr& pres, std::size_t factor);

} // namespace seshadri
