#ifndef ULRICH_CI_INVARIANTS_HPP
#define ULRICH_CI_INVARIANTS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ulrich/rational.hpp"

namespace ulrich {

class InvalidConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Smooth complete intersection X of dimension n in P^{n+s} cut out by
/// hypersurfaces of the given degrees, together with the rank r of a
/// hypothetical Ulrich bundle on X.
struct CIConfig {
    int n = 4;
    std::vector<long> degrees;
    long r = 2;

    unsigned s() const { return static_cast<unsigned>(degrees.size()); }
    long S() const;       // sum of degrees
    long S_prime() const; // sum over i < j of d_i d_j
    Integer d() const;    // product of degrees
    long i_X() const { return n + static_cast<long>(s()) + 1 - S(); }

    /// Same X with degrees padded by 1's up to s_target entries.
    CIConfig padded_to(unsigned s_target) const;

    /// n >= 2, r >= 1, at least one degree, all degrees >= 1 and d >= 2.
    void validate() const;

    friend bool operator==(const CIConfig&, const CIConfig&) = default;
};

std::string degrees_str(const std::vector<long>& degrees); // "2,2,3"

/// K_X = (S - s - n - 1) H.
long canonical_coeff(const CIConfig& cfg);
/// c_2(X) = [C(n+s+1, 2) + S(S - s - n - 1) - S'] H^2.
Integer c2X_coeff(const CIConfig& cfg);
/// u with c_1(E) = uH, u = r(S - s)/2.
Rational det_twist(const CIConfig& cfg);
/// True when r(S - s) is odd, so that c_1(E) cannot be an integral multiple of H.
bool parity_obstruction(const CIConfig& cfg);

/// deg Z = (rd/24)[(3r-2)S^2 - 6(r-1)sS + 3(r-1)s^2 - s - 2S'].
Rational deg_Z(const CIConfig& cfg);
/// deg Z from the general formula in D = uH, K_X and c_2(X):
/// d[u^2/2 - uk/2 - r(3n^2+5n+2)/24 + r k^2/12 + r c_2/12], k the canonical coefficient.
Rational deg_Z_general(const CIConfig& cfg);

/// e with c_2(E) = eH^2; equals deg Z / d.
Rational c2_E_coeff(const CIConfig& cfg);

/// chi(O_X(m)) = C(m+N, N) + sum_{T nonempty} (-1)^(|T|+N) C(d_T - m - 1, N), N = n + s.
Integer chi_OX(const CIConfig& cfg, long m);
/// chi(O_Z(m)) from the complete-intersection formula. Throws DomainError
/// when u is not an integer.
Integer chi_OZ(const CIConfig& cfg, long m);
/// chi(O_Z(m)) = C(m+N,N) - rd C(m-u+n,n) + (r-1) C(m-u+N,N) - chi(J_X(m)) - (r-1) chi(J_X(m-u)),
/// with chi(J_X(m)) = C(m+N,N) - chi(O_X(m)).
Integer chi_OZ_general(const CIConfig& cfg, long m);
/// chi(E(m)) = rd C(m+n, n).
Integer chi_E(const CIConfig& cfg, long m);

struct SerreCheck {
    long p = 0;
    Integer lhs; // (-1)^(n-1) chi(J_{Z/X}(D - pH))
    Integer rhs; // (r-1) chi(K_X + pH)
};
/// Both sides of (-1)^(n-1) chi(J_{Z/X}(D - pH)) = (r-1) chi(K_X + pH) for p = 1..n.
std::vector<SerreCheck> serre_consistency(const CIConfig& cfg);

/// c_2(Z) for r = 3 in terms of K_Z.H_Z and deg Z:
/// -(1/8)[49S^2 - 104sS - 32(n+1)S + 52s^2 + 32ns + 35s + 4n^2 + 12n + 8 + 6S'] deg Z
/// + (4S - 4s - n - 1) K_Z.H_Z.
Rational c2_Z_rank3(const CIConfig& cfg, const Rational& KH);

struct SurfaceData {
    Rational KH;          // K_Z . H_Z
    Rational K2;          // K_Z^2
    Rational c2;          // c_2(Z)
    Rational chi_noether; // (K_Z^2 + c_2(Z))/12
    Rational chi_hilb;    // chi(O_Z) from the Hilbert polynomial
    Rational difference() const { return chi_noether - chi_hilb; }
};

/// n = 4, r = 2: K_Z = (2S - 2s - 5)H_Z and c_2(Z) from S, s, S'.
SurfaceData rank2_surface_data(const CIConfig& cfg);
/// n = 4, r = 3: K_Z.H_Z = -2 chi(O_Z(1)) + 2 chi(O_Z) + deg Z,
/// K_Z^2 = 5(S-s-2) K_Z.H_Z - (25/4)(S-s-2)^2 deg Z and c_2(Z) from c2_Z_rank3.
SurfaceData rank3_surface_data(const CIConfig& cfg);

} // namespace ulrich

#endif
