#include "seshadri/chern.hpp"

#include "seshadri/errors.hpp"

namespace seshadri {

ChernSeries::ChernSeries(SeriesKind kind, int rank, PresentationPtr pres, std::vector<CycleClass> coeffs)
    : kind_(kind), rank_(rank), pres_(std::move(pres)), coeffs_(std::move(coeffs)) {
    if (rank_ < 1) throw Error("bundle rank must be >= 1");
    const int y = pres_->dimension();
    if (static_cast<int>(coeffs_.size()) > y + 1) throw Error("series has coefficients beyond the truncation order");
    while (static_cast<int>(coeffs_.size()) < y + 1) coeffs_.push_back(CycleClass::zero(pres_));
    for (int i = 0; i <= y; ++i) {
        const CycleClass& c = coeffs_[static_cast<std::size_t>(i)];
        if (!(c.presentation() == pres_ || *c.presentation() == *pres_)) throw PresentationMismatch();
        if (!c.is_homogeneous(i))
            throw Error("order-" + std::to_string(i) + " coefficient is not homogeneous of codimension " +
                        std::to_string(i));
    }
    if (!(coeffs_[0] == CycleClass::unit(pres_))) throw Error("order-0 coefficient must be the unit class");
    if (kind_ == SeriesKind::Chern)
        for (int i = rank_ + 1; i <= y; ++i)
            if (!coeffs_[static_cast<std::size_t>(i)].is_zero())
                throw Error("Chern series of rank " + std::to_string(rank_) + " has a nonzero order-" +
                            std::to_string(i) + " coefficient");
}

ChernSeries ChernSeries::chern(int rank, PresentationPtr pres, std::vector<CycleClass> coeffs) {
    return ChernSeries(SeriesKind::Chern, rank, std::move(pres), std::move(coeffs));
}

ChernSeries ChernSeries::segre(int rank, PresentationPtr pres, std::vector<CycleClass> coeffs) {
    return ChernSeries(SeriesKind::Segre, rank, std::move(pres), std::move(coeffs));
}

ChernSeries ChernSeries::line_bundle(const CycleClass& c1) {
    auto pres = c1.presentation();
    if (!c1.is_homogeneous(1)) throw Error("first Chern class of a line bundle must have codimension 1");
    return chern(1, pres, {CycleClass::unit(pres), c1});
}

bool operator==(const ChernSeries& a, const ChernSeries& b) {
    if (a.kind_ != b.kind_ || a.rank_ != b.rank_) return false;
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
}

namespace {

/// Multiplicative inverse of a series with unit order-0 coefficient,
/// truncated at dim(Y).
std::vector<CycleClass> invert(const std::vector<CycleClass>& c, const PresentationPtr& pres) {
    const std::size_t n = c.size();
    std::vector<CycleClass> inv;
    inv.reserve(n);
    inv.push_back(CycleClass::unit(pres));
    for (std::size_t m = 1; m < n; ++m) {
        CycleClass acc = CycleClass::zero(pres);
        for (std::size_t i = 1; i <= m; ++i) acc = acc + mul(inv[m - i], c[i]);
        inv.push_back(-acc);
    }
    return inv;
}

std::vector<CycleClass> convolve(const std::vector<CycleClass>& a, const std::vector<CycleClass>& b,
                                 const PresentationPtr& pres) {
    const std::size_t n = a.size();
    std::vector<CycleClass> out;
    out.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        CycleClass acc = CycleClass::zero(pres);
        for (std::size_t i = 0; i <= m; ++i) acc = acc + mul(a[i], b[m - i]);
        out.push_back(acc);
    }
    return out;
}

} // namespace

ChernSeries segre_from_chern(const ChernSeries& c) {
    if (c.kind() != SeriesKind::Chern) throw KindMismatch("segre_from_chern needs a Chern series");
    return ChernSeries::segre(c.rank(), c.presentation(), invert(c.coeffs(), c.presentation()));
}

ChernSeries chern_from_segre(const ChernSeries& s) {
    if (s.kind() != SeriesKind::Segre) throw KindMismatch("chern_from_segre needs a Segre series");
    return ChernSeries::chern(s.rank(), s.presentation(), invert(s.coeffs(), s.presentation()));
}

ChernSeries whitney(const ChernSeries& a, const ChernSeries& b) {
    if (a.kind() != b.kind()) throw KindMismatch("whitney sum needs series of the same kind");
    if (!(a.presentation() == b.presentation() || *a.presentation() == *b.presentation()))
        throw PresentationMismatch();
    auto coeffs = convolve(a.coeffs(), b.coeffs(), a.presentation());
    return a.kind() == SeriesKind::Chern ? ChernSeries::chern(a.rank() + b.rank(), a.presentation(), std::move(coeffs))
                                         : ChernSeries::segre(a.rank() + b.rank(), a.presentation(), std::move(coeffs));
}

ChernSeries projective_space_restriction(int k, const CycleClass& h) {
    auto pres = h.presentation();
    if (!h.is_homogeneous(1) || h.is_zero()) throw Error("hyperplane class must be nonzero of codimension 1");
    const int y = pres->dimension();
    std::vector<CycleClass> coeffs;
    coeffs.reserve(static_cast<std::size_t>(y) + 1);
    for (int i = 0; i <= y; ++i) coeffs.push_back(binomial(static_cast<unsigned>(k) + 1, static_cast<unsigned>(i)) *
                                                  power(h, static_cast<unsigned>(i)));
    return ChernSeries::chern(k, pres, std::move(coeffs));
}

ChernSeries normal_from_euler(int k, const CycleClass& h, const ChernSeries& tangent) {
    auto pres = h.presentation();
    const int y = pres->dimension();
    if (k <= y) throw PreconditionViolated("ambient dimension k must exceed dim(Y)");
    if (tangent.kind() != SeriesKind::Chern) throw KindMismatch("tangent series must have kind chern");
    if (!(tangent.at(0) == CycleClass::unit(pres))) throw NonInvertible();
    const ChernSeries ambient = projective_space_restriction(k, h);
    auto coeffs = convolve(ambient.coeffs(), invert(tangent.coeffs(), pres), pres);
    return ChernSeries::chern(k - y, pres, std::move(coeffs));
}

ChernSeries tangent_series(const PresentationPtr& pres) {
    switch (pres->kind()) {
    case ChowPresentation::Kind::MultiProjective: {
        const auto& factors = pres->factors();
        ChernSeries total = [&] {
            // (1 + h_1 t)^{n_1 + 1}, then fold in the remaining factors.
            const CycleClass h = multiprojective_hyperplane(pres, 0);
            std::vector<CycleClass> coeffs;
            for (int i = 0; i <= pres->dimension(); ++i)
                coeffs.push_back(binomial(static_cast<unsigned>(factors[0]) + 1, static_cast<unsigned>(i)) *
                                 power(h, static_cast<unsigned>(i)));
            return ChernSeries::chern(factors[0], pres, std::move(coeffs));
        }();
        for (std::size_t f = 1; f < factors.size(); ++f) {
            const CycleClass h = multiprojective_hyperplane(pres, f);
            std::vector<CycleClass> coeffs;
            for (int i = 0; i <= pres->dimension(); ++i)
                coeffs.push_back(binomial(static_cast<unsigned>(factors[f]) + 1, static_cast<unsigned>(i)) *
                                 power(h, static_cast<unsigned>(i)));
            total = whitney(total, ChernSeries::chern(factors[f], pres, std::move(coeffs)));
        }
        return total;
    }
    case ChowPresentation::Kind::Hirzebruch: {
        const int e = pres->hirzebruch_e();
        const CycleClass c1 = Rational(2) * CycleClass::basis_element(pres, "C0") +
                              Rational(e + 2) * CycleClass::basis_element(pres, "F");
        const CycleClass c2 = Rational(4) * CycleClass::basis_element(pres, "pt");
        return ChernSeries::chern(2, pres, {CycleClass::unit(pres), c1, c2});
    }
    case ChowPresentation::Kind::Table:
        break;
    }
    throw UnsupportedPresentation("no built-in tangent series for table presentations; supply one explicitly");
}

} // namespace seshadri
