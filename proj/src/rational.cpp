#include "schroeder/rational.hpp"

#include <cctype>
#include <cmath>

namespace schroeder {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Integer Rational::to_integer() const {
    if (!is_integer())
        throw std::domain_error("rational " + str() + " is not an integer");
    return value_.get_num();
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
}

Rational Rational::pow(long exp) const {
    if (exp == 0) return Rational(1);
    bool invert = exp < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-(exp + 1)) + 1
                             : static_cast<unsigned long>(exp);
    if (invert && is_zero()) throw DivisionByZero();
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), e);
    return invert ? Rational(den, num) : Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_int(den) || den.front() == '-')
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (!is_int(num))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
    return Rational(n, d);
}

Integer binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial requires n >= 0");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

double log_integer(const Integer& z) {
    // z ~ frac * 2^exp with frac in [0.5, 1)
    long exp = 0;
    double frac = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(frac) + static_cast<double>(exp) * M_LN2;
}

}  // namespace

double log_rational(const Rational& q) {
    if (q.sign() <= 0) throw std::domain_error("log of non-positive rational");
    return log_integer(q.numerator()) - log_integer(q.denominator());
}

}  // namespace schroeder
