#include "ulrich/rational.hpp"

#include <limits>

namespace ulrich {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto to_z = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_int(text))
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        return Rational(to_z(text));
    }
    auto num = trim(text.substr(0, slash));
    auto den = trim(text.substr(slash + 1));
    if (!valid_int(num) || !valid_int(den))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Integer d = to_z(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(to_z(num), d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

Integer Rational::to_integer() const {
    if (!is_integer())
        throw DomainError("rational " + str() + " is not an integer");
    return value_.get_num();
}

long long Rational::to_int64() const {
    Integer z = to_integer();
    if (!z.fits_slong_p())
        throw DomainError("integer " + z.get_str() + " does not fit in 64 bits");
    return z.get_si();
}

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binom_int(const Integer& l, long m) {
    if (m < 0)
        throw DomainError("binomial with negative lower index");
    // mpz_bin_ui implements the falling-factorial convention for negative l.
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

Rational binom_rational(const Rational& l, long m) {
    if (m < 0)
        throw DomainError("binomial with negative lower index");
    if (l.is_integer())
        return Rational(binom_int(l.to_integer(), m));
    Rational acc = 1;
    for (long j = 0; j < m; ++j)
        acc *= l - Rational(j);
    return acc / Rational(factorial(static_cast<unsigned>(m)));
}

} // namespace ulrich
