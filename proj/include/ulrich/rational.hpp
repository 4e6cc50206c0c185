#ifndef ULRICH_RATIONAL_HPP
#define ULRICH_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ulrich {

using Integer = mpz_class;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(unsigned v) : value_(v) {}
    Rational(unsigned long v) : value_(v) {}
    Rational(long long v) : value_(Integer(std::to_string(v))) {}
    Rational(const Integer& v) : value_(v) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Parses "a" or "a/b" (optionally signed). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Exact conversion; throws DomainError if not an integer or out of range.
    long long to_int64() const;
    Integer to_integer() const;
    double to_double() const { return value_.get_d(); }
    std::string str() const { return value_.get_str(); }

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    mpq_class value_{0};
};

Rational pow(const Rational& base, unsigned exponent);

/// Generalized binomial coefficient l(l-1)...(l-m+1)/m! for any integer l.
/// Throws DomainError when m < 0.
Integer binom_int(const Integer& l, long m);
inline Integer binom_int(long long l, long m) { return binom_int(Integer(std::to_string(l)), m); }

/// Same falling-factorial binomial with a rational top argument.
Rational binom_rational(const Rational& l, long m);

Integer factorial(unsigned n);

} // namespace ulrich

#endif
