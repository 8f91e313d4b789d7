#include "seshadri/chow.hpp"

#include "seshadri/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace seshadri {

namespace {

std::string monomial_name(const std::vector<int>& exponents) {
    std::ostringstream os;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) os << "*";
        os << "h" << (i + 1) << "^" << exponents[i];
    }
    return os.str();
}

void add_sparse(SparseClass& acc, std::size_t index, const Rational& value) {
    for (auto& [i, c] : acc) {
        if (i == index) {
            c += value;
            return;
        }
    }
    acc.emplace_back(index, value);
}

SparseClass normalized(SparseClass s) {
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseClass out;
    for (auto& [i, c] : s) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second.is_zero(); }), out.end());
    return out;
}

} // namespace

void ChowPresentation::index_names() {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].name.empty()) throw SchemaError("chow.basis", "basis element with empty name");
        if (!by_name_.emplace(basis_[i].name, i).second)
            throw SchemaError("chow.basis", "duplicate basis element '" + basis_[i].name + "'");
    }
}

std::shared_ptr<const ChowPresentation> ChowPresentation::multi_projective(std::vector<int> factors) {
    if (factors.empty()) throw SchemaError("chow.factors", "need at least one projective factor");
    for (int n : factors)
        if (n < 1) throw SchemaError("chow.factors", "factor dimensions must be >= 1");

    auto p = std::shared_ptr<ChowPresentation>(new ChowPresentation());
    p->kind_ = Kind::MultiProjective;
    p->factors_ = factors;
    p->dimension_ = std::accumulate(factors.begin(), factors.end(), 0);

    // Basis: all exponent tuples a with 0 <= a_i <= n_i, ordered by total
    // codimension, then lexicographically. Names like "h1^2*h2^0".
    std::vector<std::vector<int>> tuples;
    std::vector<int> current(factors.size(), 0);
    for (;;) {
        tuples.push_back(current);
        std::size_t pos = factors.size();
        while (pos > 0 && current[pos - 1] == factors[pos - 1]) {
            current[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
        ++current[pos - 1];
    }
    auto total = [](const std::vector<int>& t) { return std::accumulate(t.begin(), t.end(), 0); };
    std::sort(tuples.begin(), tuples.end(), [&](const auto& a, const auto& b) {
        if (total(a) != total(b)) return total(a) < total(b);
        return a < b;
    });

    std::map<std::vector<int>, std::size_t> tuple_index;
    for (const auto& t : tuples) {
        tuple_index.emplace(t, p->basis_.size());
        p->basis_.push_back({monomial_name(t), total(t)});
    }
    p->index_names();
    p->unit_ = 0;
    p->point_ = tuple_index.at(factors);

    const std::size_t n = p->basis_.size();
    p->products_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<int> sum(factors.size());
            bool vanish = false;
            for (std::size_t f = 0; f < factors.size(); ++f) {
                sum[f] = tuples[i][f] + tuples[j][f];
                if (sum[f] > factors[f]) vanish = true;
            }
            if (!vanish) p->products_[i * n + j] = {{tuple_index.at(sum), Rational(1)}};
        }
    }
    return p;
}

std::shared_ptr<const ChowPresentation> ChowPresentation::hirzebruch(int e) {
    if (e < 0) throw SchemaError("chow.e", "Hirzebruch parameter e must be >= 0");
    auto p = std::shared_ptr<ChowPresentation>(new ChowPresentation());
    p->kind_ = Kind::Hirzebruch;
    p->e_ = e;
    p->dimension_ = 2;
    p->basis_ = {{"1", 0}, {"C0", 1}, {"F", 1}, {"pt", 2}};
    p->index_names();
    p->unit_ = 0;
    p->point_ = 3;
    const std::size_t n = 4;
    p->products_.resize(n * n);
    auto set = [&](std::size_t i, std::size_t j, SparseClass v) {
        p->products_[i * n + j] = v;
        p->products_[j * n + i] = std::move(v);
    };
    for (std::size_t j = 0; j < n; ++j) set(0, j, {{j, Rational(1)}});
    set(1, 1, e == 0 ? SparseClass{} : SparseClass{{3, Rational(-e)}});
    set(1, 2, {{3, Rational(1)}});
    set(2, 2, {});
    set(1, 3, {});
    set(2, 3, {});
    set(3, 3, {});
    return p;
}

std::shared_ptr<const ChowPresentation> ChowPresentation::table(TableSpec spec) {
    auto p = std::shared_ptr<ChowPresentation>(new ChowPresentation());
    p->kind_ = Kind::Table;
    p->basis_ = spec.basis;
    p->index_names();

    int y = 0;
    std::optional<std::size_t> unit;
    for (std::size_t i = 0; i < p->basis_.size(); ++i) {
        const auto& b = p->basis_[i];
        if (b.codim < 0) throw SchemaError("chow.basis", "'" + b.name + "' has negative codimension");
        y = std::max(y, b.codim);
        if (b.codim == 0) {
            if (unit) throw SchemaError("chow.basis", "more than one codimension-0 element");
            unit = i;
        }
    }
    if (!unit) throw SchemaError("chow.basis", "missing codimension-0 unit element");
    p->unit_ = *unit;
    p->dimension_ = y;

    auto point = p->find(spec.point_name);
    if (!point) throw SchemaError("chow.point", "point class '" + spec.point_name + "' is not a basis element");
    if (p->basis_[*point].codim != y)
        throw SchemaError("chow.point", "point class must have top codimension " + std::to_string(y));
    p->point_ = *point;

    const std::size_t n = p->basis_.size();
    p->products_.resize(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        p->products_[p->unit_ * n + j] = {{j, Rational(1)}};
        p->products_[j * n + p->unit_] = {{j, Rational(1)}};
    }
    std::vector<bool> given(n * n, false);
    for (const auto& [key, value] : spec.products) {
        const auto [i, j] = key;
        if (i >= n || j >= n) throw SchemaError("chow.products", "product index out of range");
        const SparseClass v = normalized(value);
        if (i == p->unit_ || j == p->unit_) {
            if (!(v == p->products_[i * n + j]))
                throw SchemaError("chow.products", "products with the unit are forced by the unit law");
            continue;
        }
        if (given[i * n + j] && !(p->products_[i * n + j] == v))
            throw SchemaError("chow.products", "conflicting values for one product");
        p->products_[i * n + j] = v;
        p->products_[j * n + i] = v;
        given[i * n + j] = given[j * n + i] = true;
    }
    p->validate_table();
    return p;
}

void ChowPresentation::validate_table() const {
    const std::size_t n = basis_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int c = basis_[i].codim + basis_[j].codim;
            for (const auto& [k, coeff] : products_[i * n + j]) {
                if (c > dimension_)
                    throw SchemaError("chow.products", "product of '" + basis_[i].name + "' and '" + basis_[j].name +
                                                           "' must vanish beyond codimension " +
                                                           std::to_string(dimension_));
                if (basis_[k].codim != c)
                    throw SchemaError("chow.products", "product of '" + basis_[i].name + "' and '" + basis_[j].name +
                                                           "' is not homogeneous of codimension " + std::to_string(c));
            }
        }
    }
    // Associativity on all basis triples; the tensor is symmetric by
    // construction so commutativity holds already.
    auto times = [&](const SparseClass& v, std::size_t k) {
        SparseClass out;
        for (const auto& [i, c] : v)
            for (const auto& [m, d] : products_[i * n + k]) add_sparse(out, m, c * d);
        return normalized(out);
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const SparseClass left = times(products_[a * n + b], c);
                SparseClass right;
                for (const auto& [m, d] : products_[b * n + c])
                    for (const auto& [k, f] : products_[a * n + m]) add_sparse(right, k, d * f);
                if (!(left == normalized(right)))
                    throw SchemaError("chow.products", "structure constants are not associative at (" +
                                                           basis_[a].name + ", " + basis_[b].name + ", " +
                                                           basis_[c].name + ")");
            }
}

std::optional<std::size_t> ChowPresentation::find(std::string_view name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::size_t ChowPresentation::index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw SchemaError("", "unknown basis element '" + name + "'");
    return *i;
}

const std::vector<int>& ChowPresentation::factors() const {
    if (kind_ != Kind::MultiProjective) throw Error("presentation is not a product of projective spaces");
    return factors_;
}

int ChowPresentation::hirzebruch_e() const {
    if (kind_ != Kind::Hirzebruch) throw Error("presentation is not a Hirzebruch surface");
    return e_;
}

bool operator==(const ChowPresentation& a, const ChowPresentation& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
    case ChowPresentation::Kind::MultiProjective:
        return a.factors_ == b.factors_;
    case ChowPresentation::Kind::Hirzebruch:
        return a.e_ == b.e_;
    case ChowPresentation::Kind::Table:
        break;
    }
    if (a.dimension_ != b.dimension_ || a.basis_.size() != b.basis_.size() || a.point_ != b.point_) return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
        if (a.basis_[i].name != b.basis_[i].name || a.basis_[i].codim != b.basis_[i].codim) return false;
    for (std::size_t i = 0; i < a.products_.size(); ++i)
        if (!(a.products_[i] == b.products_[i])) return false;
    return true;
}

PresentationPtr with_perturbed_product(const PresentationPtr& pres, std::size_t i, std::size_t j,
                                       const Rational& delta) {
    if (pres->kind() != ChowPresentation::Kind::Table)
        throw Error("structure-constant perturbation needs a table presentation");
    ChowPresentation::TableSpec spec;
    spec.basis = pres->elements();
    spec.point_name = pres->element(pres->point_index()).name;
    const std::size_t n = pres->basis_size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            if (a == pres->unit_index() || b == pres->unit_index()) continue;
            spec.products[{a, b}] = pres->product(a, b);
        }
    SparseClass& target = spec.products[{std::min(i, j), std::max(i, j)}];
    add_sparse(target, pres->point_index(), delta);
    return ChowPresentation::table(std::move(spec));
}

CycleClass::CycleClass(PresentationPtr pres, std::vector<Rational> coeffs) : pres_(std::move(pres)), c_(std::move(coeffs)) {
    if (!pres_) throw Error("cycle class without a presentation");
    if (c_.size() != pres_->basis_size()) throw Error("coefficient vector does not match the basis");
}

CycleClass CycleClass::zero(PresentationPtr pres) {
    std::vector<Rational> c(pres->basis_size(), Rational(0));
    return CycleClass(std::move(pres), std::move(c));
}

CycleClass CycleClass::unit(PresentationPtr pres) {
    CycleClass c = zero(pres);
    c.c_[c.pres_->unit_index()] = Rational(1);
    return c;
}

CycleClass CycleClass::basis_element(PresentationPtr pres, const std::string& name) {
    const std::size_t i = pres->index_of(name);
    CycleClass c = zero(std::move(pres));
    c.c_[i] = Rational(1);
    return c;
}

CycleClass CycleClass::from_sparse(PresentationPtr pres, const SparseClass& entries) {
    CycleClass c = zero(std::move(pres));
    for (const auto& [i, v] : entries) c.c_[i] += v;
    return c;
}

Rational CycleClass::coeff(const std::string& name) const { return c_[pres_->index_of(name)]; }

bool CycleClass::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::optional<int> CycleClass::codimension() const {
    std::optional<int> codim;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        const int c = pres_->element(i).codim;
        if (codim && *codim != c) return std::nullopt;
        codim = c;
    }
    return codim;
}

bool CycleClass::is_homogeneous(int codim) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero() && pres_->element(i).codim != codim) return false;
    return true;
}

CycleClass CycleClass::component(int codim) const {
    CycleClass out = zero(pres_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (pres_->element(i).codim == codim) out.c_[i] = c_[i];
    return out;
}

namespace {

void require_same_presentation(const CycleClass& a, const CycleClass& b) {
    if (a.presentation() == b.presentation()) return;
    if (*a.presentation() == *b.presentation()) return;
    throw PresentationMismatch();
}

} // namespace

CycleClass operator+(const CycleClass& a, const CycleClass& b) {
    require_same_presentation(a, b);
    std::vector<Rational> c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
    return CycleClass(a.presentation(), std::move(c));
}

CycleClass operator-(const CycleClass& a, const CycleClass& b) {
    require_same_presentation(a, b);
    std::vector<Rational> c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
    return CycleClass(a.presentation(), std::move(c));
}

CycleClass operator*(const Rational& s, const CycleClass& a) {
    std::vector<Rational> c = a.coeffs();
    for (auto& v : c) v *= s;
    return CycleClass(a.presentation(), std::move(c));
}

CycleClass CycleClass::operator-() const { return Rational(-1) * *this; }

CycleClass operator*(const CycleClass& a, const CycleClass& b) { return mul(a, b); }

bool operator==(const CycleClass& a, const CycleClass& b) {
    require_same_presentation(a, b);
    return a.c_ == b.c_;
}

CycleClass mul(const CycleClass& a, const CycleClass& b) {
    require_same_presentation(a, b);
    const auto& pres = *a.presentation();
    std::vector<Rational> out(pres.basis_size(), Rational(0));
    for (std::size_t i = 0; i < pres.basis_size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < pres.basis_size(); ++j) {
            if (b.coeffs()[j].is_zero()) continue;
            const Rational scale = a.coeffs()[i] * b.coeffs()[j];
            for (const auto& [k, c] : pres.product(i, j)) out[k] += scale * c;
        }
    }
    return CycleClass(a.presentation(), std::move(out));
}

CycleClass power(const CycleClass& c, unsigned n) {
    CycleClass acc = CycleClass::unit(c.presentation());
    for (unsigned i = 0; i < n; ++i) acc = mul(acc, c);
    return acc;
}

Rational integrate(const CycleClass& c) {
    Rational sum(0);
    const auto& pres = *c.presentation();
    for (std::size_t i = 0; i < pres.basis_size(); ++i)
        if (pres.element(i).codim == pres.dimension()) sum += c.coeffs()[i];
    return sum;
}

CycleClass multiprojective_hyperplane(const PresentationPtr& pres, std::size_t factor) {
    const auto& factors = pres->factors();
    if (factor >= factors.size()) throw Error("projective factor index out of range");
    std::vector<int> exponents(factors.size(), 0);
    exponents[factor] = 1;
    return CycleClass::basis_element(pres, monomial_name(exponents));
}

std::string CycleClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (first) {
            if (c_[i].sign() < 0) os << "-";
        } else {
            os << (c_[i].sign() < 0 ? " - " : " + ");
        }
        const Rational a = c_[i].abs();
        if (pres_->element(i).codim == 0) {
            os << a.to_string();
        } else if (a == Rational(1)) {
            os << pres_->element(i).name;
        } else {
            os << a.to_string() << "*" << pres_->element(i).name;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

} // namespace seshadri
