#pragma once

#include "seshadri/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace seshadri {

/// Univariate polynomial over the rationals, coefficients stored by
/// ascending power of the variable (the variable is eta throughout).
/// Trailing zero coefficients are stripped; the zero polynomial has an
/// empty coefficient list and degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> ascending_coeffs);
    static UniPoly constant(const Rational& c);
    /// c * eta^power
    static UniPoly monomial(const Rational& c, unsigned power);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;

    Rational evaluate(const Rational& x) const;

    UniPoly derivative() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    friend UniPoly operator*(const Rational& s, const UniPoly& p);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return a.c_ != b.c_; }

    /// Exact euclidean division: returns {quotient, remainder} with
    /// deg(remainder) < deg(divisor). Divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    /// Monic gcd (the zero polynomial when both inputs are zero).
    static UniPoly gcd(UniPoly a, UniPoly b);

    /// p / gcd(p, p'): same distinct roots, all simple.
    UniPoly squarefree_part() const;

    /// p(s * eta): coefficient of eta^t is multiplied by s^t.
    UniPoly scale_argument(const Rational& s) const;

    /// p * eta^power; negative powers must divide exactly.
    UniPoly shifted(int power) const;

    std::string to_string(const std::string& var = "eta") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

/// Open interval (lo, hi), lo < hi. Both endpoints excluded everywhere.
struct OpenInterval {
    OpenInterval(Rational lo_, Rational hi_);
    Rational lo;
    Rational hi;
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    Rational width() const { return hi - lo; }
};

inline Rational evaluate(const UniPoly& p, const Rational& x) { return p.evaluate(x); }

} // namespace seshadri
