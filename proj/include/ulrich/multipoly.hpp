#ifndef ULRICH_MULTIPOLY_HPP
#define ULRICH_MULTIPOLY_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ulrich/rational.hpp"

#ifndef ULRICH_MAX_VARS
#define ULRICH_MAX_VARS 12
#endif

namespace ulrich {

inline constexpr unsigned kMaxVars = ULRICH_MAX_VARS;
inline constexpr unsigned kExponentBits = 5;
inline constexpr unsigned kMaxExponent = (1u << kExponentBits) - 1;
static_assert(kMaxVars * kExponentBits <= 60, "packed exponents must leave a carry bit");

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotDivisibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ExponentOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

using ExponentVector = std::vector<unsigned>;

/// Exponent vector packed 5 bits per variable, x1 in the most significant
/// field. Integer order on the packed word is lexicographic order on the
/// exponent vectors.
class Monomial {
public:
    constexpr Monomial() = default;
    static Monomial from_exponents(std::span<const unsigned> exps);
    static constexpr Monomial from_packed(std::uint64_t bits) { return Monomial(bits); }

    unsigned exponent(unsigned var) const {
        return static_cast<unsigned>((bits_ >> shift(var)) & kMaxExponent);
    }
    Monomial with_exponent(unsigned var, unsigned e) const;
    unsigned total_degree() const;
    ExponentVector exponents(unsigned nvars) const;

    /// Product of monomials; throws ExponentOverflow past kMaxExponent.
    Monomial operator*(Monomial o) const;

    std::uint64_t packed() const { return bits_; }
    friend constexpr auto operator<=>(Monomial, Monomial) = default;

    static constexpr unsigned shift(unsigned var) {
        return kExponentBits * (kMaxVars - 1 - var);
    }

private:
    constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

struct Term {
    Monomial monomial;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in variables x1..x_nvars. Terms are stored in
/// strictly decreasing lexicographic order with no zero coefficients, so
/// equality is structural.
class MultiPoly {
public:
    explicit MultiPoly(unsigned nvars);

    static MultiPoly constant(unsigned nvars, const Rational& c);
    static MultiPoly variable(unsigned nvars, unsigned var);
    static MultiPoly monomial(unsigned nvars, const ExponentVector& exps, const Rational& c = 1);
    /// Builds from unsorted terms; like monomials are combined.
    static MultiPoly from_terms(unsigned nvars, std::vector<Term> terms);

    unsigned nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    Rational coefficient_of(const ExponentVector& exps) const;
    Rational coefficient_of(Monomial m) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(MultiPoly a);

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    Rational eval(std::span<const Rational> point) const;
    Rational eval(std::span<const long> point) const;

    /// Sets x_{k+1} = ... = x_s = 1 and returns a polynomial in k variables.
    MultiPoly substitute_ones(unsigned k) const;
    /// Quotient by x1*...*xs; throws NotDivisibleError when some term
    /// misses a variable.
    MultiPoly divide_all_vars() const;
    /// Returns the polynomial obtained by renaming x_i to x_{perm[i]}.
    MultiPoly permute(std::span<const unsigned> perm) const;
    /// Same polynomial viewed in more variables.
    MultiPoly extend(unsigned nvars) const;

    /// "c * x1^a1*...*xs^as" terms joined by " + ", canonical order; "0" for zero.
    std::string to_string() const;
    static MultiPoly parse(std::string_view text, unsigned nvars);

private:
    void check_same(const MultiPoly& o) const;

    unsigned nvars_;
    std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

/// Power sum sum_i x_i in nvars variables, handy for linear forms.
MultiPoly sum_of_variables(unsigned nvars);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

} // namespace ulrich

#endif
