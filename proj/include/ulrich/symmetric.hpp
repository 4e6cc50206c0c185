#ifndef ULRICH_SYMMETRIC_HPP
#define ULRICH_SYMMETRIC_HPP

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include "ulrich/multipoly.hpp"
#include "ulrich/rational.hpp"
#include "ulrich/report.hpp"

namespace ulrich {

/// Weakly decreasing tuple of positive integers. The empty partition 1^0
/// indexes the constant 1.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<unsigned> parts);
    explicit Partition(std::vector<unsigned> parts);

    /// The partition 1^k.
    static Partition ones(unsigned k);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    unsigned weight() const;
    std::string name() const; // "m31", "m1111", "1" for the empty partition

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
};

/// Monomial symmetric polynomial m_lambda in s variables; zero when lambda
/// has more parts than variables.
MultiPoly monomial_sym(const Partition& lambda, unsigned s);

inline constexpr std::size_t kBasisSize = 12;

/// {m4, m31, m22, m211, m1111, m3, m21, m111, m2, m11, m1, 1}
const std::array<Partition, kBasisSize>& degree4_basis();

class NotSymmetricError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Coordinates a1..a12 of a symmetric polynomial of degree <= 4 in s >= 4
/// variables with respect to degree4_basis().
struct SymExpansion {
    unsigned s = 4;
    std::array<Rational, kBasisSize> coeffs{};

    MultiPoly reconstruct() const;
    friend bool operator==(const SymExpansion&, const SymExpansion&) = default;
};

/// Invariance under x1<->x2 and under the cycle x1->x2->...->xs->x1, which
/// together generate the symmetric group.
bool is_symmetric(const MultiPoly& p);

/// Reads the leading monomial of each basis element degree by degree,
/// subtracts, and requires a zero residual.
SymExpansion expand_direct(const MultiPoly& g);

/// Specializes x5 = ... = xs = 1, expands in four variables and solves the
/// triangular restriction system for a1..a12. For s = 4 this is expand_direct.
SymExpansion expand_via_restriction(const MultiPoly& g);

/// Four-variable coefficients b1..b12 implied by a1..a12 after setting
/// x5 = ... = xs = 1 (the forward direction of the restriction system).
std::array<Rational, kBasisSize> restricted_coefficients(const SymExpansion& e);

/// The thirteen product rules among m1, m11, m2, m3, m21, m111 up to degree 4.
Report verify_tf2_table(unsigned s);

/// The restriction formulas for single basis elements under
/// x5 = ... = xs = 1, plus reconstruction of every basis element through the
/// full restriction system. Requires s >= 5.
Report verify_restriction_identities(unsigned s);

} // namespace ulrich

#endif
