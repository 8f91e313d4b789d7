#include "seshadri/polynomial.hpp"

#include "seshadri/errors.hpp"

#include <sstream>

namespace seshadri {

UniPoly::UniPoly(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, unsigned power) {
    std::vector<Rational> v(power + 1, Rational(0));
    v[power] = c;
    return UniPoly(std::move(v));
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    std::vector<Rational> r(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw ZeroPolynomial();
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UniPoly(), rem};
    std::vector<Rational> quot(rem.degree() - divisor.degree() + 1, Rational(0));
    const Rational lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const unsigned shift = static_cast<unsigned>(rem.degree() - divisor.degree());
        const Rational factor = rem.leading() / lead;
        quot[shift] = factor;
        rem = rem - UniPoly::monomial(factor, shift) * divisor;
    }
    return {UniPoly(std::move(quot)), rem};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rational(1) / a.leading()) * a;
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero()) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() <= 0) return *this;
    return divmod(g).first;
}

UniPoly UniPoly::scale_argument(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    Rational power(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * power;
        power *= s;
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::shifted(int power) const {
    if (is_zero()) return *this;
    if (power >= 0) return UniPoly::monomial(Rational(1), static_cast<unsigned>(power)) * *this;
    UniPoly q = *this;
    const UniPoly eta({Rational(0), Rational(1)});
    for (int i = 0; i < -power; ++i) {
        auto [quotient, remainder] = q.divmod(eta);
        if (!remainder.is_zero()) throw Error("negative shift does not divide the polynomial");
        q = quotient;
    }
    return q;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const Rational a = c.abs();
        if (i == 0) {
            os << a.to_string();
        } else {
            if (a != Rational(1)) os << a.to_string() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

OpenInterval::OpenInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) throw Error("open interval needs lo < hi");
}

} // namespace seshadri
