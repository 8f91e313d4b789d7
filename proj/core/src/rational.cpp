#include "seshadri/rational.hpp"

#include "seshadri/errors.hpp"

#include <cctype>
#include <ostream>

namespace seshadri {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw SchemaError("", "rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (sgn(den) == 0) throw SchemaError("", "rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    auto slash = text.find('/');
    bool ok = false;
    if (slash == std::string::npos) {
        ok = all_digits(text, start, text.size());
    } else {
        ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
    }
    if (!ok) throw SchemaError("", "'" + text + "' is not a rational (expected \"p\" or \"p/q\")");

    std::string num_text = slash == std::string::npos ? text : text.substr(0, slash);
    if (num_text[0] == '+') num_text.erase(0, 1); // mpz rejects an explicit plus
    mpz_class num(num_text);
    mpz_class den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
    if (sgn(den) == 0) throw SchemaError("", "'" + text + "' has a zero denominator");
    return Rational(num, den);
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

} // namespace seshadri
