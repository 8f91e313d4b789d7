#pragma once

#include "seshadri/chow.hpp"

#include <vector>

namespace seshadri {

enum class SeriesKind { Chern, Segre };

/// Truncated total characteristic-class series of a bundle on Y: the order-i
/// coefficient is a cycle class of codimension i, stored for i = 0..dim(Y).
/// The order-0 coefficient is always the unit class. For kind Chern the
/// coefficients above the bundle rank vanish; Segre series have no cutoff.
class ChernSeries {
public:
    /// Factories pad a short coefficient list with zeros up to order dim(Y)
    /// and validate homogeneity, the unit leading term, and the rank cutoff.
    static ChernSeries chern(int rank, PresentationPtr pres, std::vector<CycleClass> coeffs);
    static ChernSeries segre(int rank, PresentationPtr pres, std::vector<CycleClass> coeffs);

    /// Chern series (1 + c1 t) of a line bundle with first Chern class c1.
    static ChernSeries line_bundle(const CycleClass& c1);

    SeriesKind kind() const { return kind_; }
    int rank() const { return rank_; }
    const PresentationPtr& presentation() const { return pres_; }
    /// Truncation order: dim(Y).
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const CycleClass& at(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<CycleClass>& coeffs() const { return coeffs_; }

    friend bool operator==(const ChernSeries& a, const ChernSeries& b);
    friend bool operator!=(const ChernSeries& a, const ChernSeries& b) { return !(a == b); }

private:
    ChernSeries(SeriesKind kind, int rank, PresentationPtr pres, std::vector<CycleClass> coeffs);
    SeriesKind kind_;
    int rank_;
    PresentationPtr pres_;
    std::vector<CycleClass> coeffs_;
};

/// Inverse series via the recurrence
///   s_n = -(s_{n-1} c_1 + s_{n-2} c_2 + ... + s_1 c_{n-1} + c_n),
/// so that s_t * c_t = 1 up to the truncation order. Throws KindMismatch
/// unless the input is a Chern series.
ChernSeries segre_from_chern(const ChernSeries& c);

/// Inverse of segre_from_chern (series inversion is an involution).
ChernSeries chern_from_segre(const ChernSeries& s);

/// Coefficient-wise convolution truncated at dim(Y); ranks add. Both series
/// must have the same kind and presentation (total series are multiplicative
/// over direct sums for both Chern and Segre).
ChernSeries whitney(const ChernSeries& a, const ChernSeries& b);

/// The restriction to Y of the tangent series of P^k: coefficients
/// binomial(k+1, i) h^i, where h is the class of O_Y(1).
ChernSeries projective_space_restriction(int k, const CycleClass& h);

/// Chern series of the normal bundle of Y in P^k, solved from
/// (1 + h t)^{k+1} = c_t(T_Y) * c_t(N): divides the left-hand series by the
/// supplied tangent series. h must be the codimension-1 class of O_Y(1) and
/// k > dim(Y); the result has rank k - dim(Y).
ChernSeries normal_from_euler(int k, const CycleClass& h, const ChernSeries& tangent);

/// Built-in tangent Chern series: products of projective spaces get the
/// product of the pulled-back factor series (1 + h_i t)^{n_i + 1}; the
/// Hirzebruch surface F_e gets c1 = 2 C0 + (e+2) F, c2 = 4 pt. Table
/// presentations must supply their tangent series explicitly.
ChernSeries tangent_series(const PresentationPtr& pres);

} // namespace seshadri
