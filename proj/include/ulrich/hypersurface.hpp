#ifndef ULRICH_HYPERSURFACE_HPP
#define ULRICH_HYPERSURFACE_HPP

#include "ulrich/rational.hpp"

namespace ulrich {

/// h^0(O_{P^k}(l)): C(l+k, k) for l >= 0 and 0 otherwise.
Integer h0_projective(long k, long l);

/// Hilbert polynomial of the codimension 2 subvariety Z in P^{n+1} attached
/// to a rank 2 Ulrich bundle on a degree d hypersurface:
/// P(m) = C(m+n+1, n+1) - (2d-1) C(m-d+n+1, n) - C(m-2d+n+2, n+1).
Integer hypersurface_hilb(int n, long d, long m);

/// Hilbert function of the same Z read off its minimal free resolution:
/// h(m) = h0(O_{P^{n+1}}(m)) - (2d-1) h0(O_{P^n}(m-d+1)) - h0(O_{P^{n+1}}(m-2d+1)).
Integer hypersurface_hilbert_function(int n, long d, long m);

/// 0 -> S(-2d+1) -> S(-d)^(2d-1) -> S(-d+1)^(2d-1) -> I_Z -> 0
struct Resolution {
    long generator_degree = 0; // d - 1
    long generators = 0;       // 2d - 1
    long syzygy_degree = 0;    // d
    long syzygies = 0;         // 2d - 1
    long socle_degree = 0;     // 2d - 1
    Integer h0_ideal_d_minus_1; // h0(J_Z(d-1)) = 2d - 1
    Integer h0_ideal_d;         // h0(J_Z(d)) = (n+1)(2d-1)
    Integer h0_OZ_d_minus_1;    // C(d+n, n+1) - 2d + 1
    Integer h0_normal;          // h0(N_{Z/P^{n+1}}), from the resolution
    Integer h0_normal_closed;   // (2d-1)[(n+2)(d-1) - 2d + 1]
};
Resolution hypersurface_resolution(int n, long d);

struct DimensionCheck {
    int n = 0;
    long d = 0;
    Integer lhs;          // C(d+n+1, n+1) - 1 + 2d - 1
    Integer rhs;          // nd(2d-1) - 1
    Integer rhs_from_parts; // h0(N) + (n+1)(2d-1) - 1
    bool contradiction = false; // lhs > rhs
};
/// n in {2, 3, 4}, d >= 2.
DimensionCheck hyper3_dimension_check(int n, long d);

/// k-th forward difference of P at m.
Integer hilb_difference(int n, long d, long m, int k);

} // namespace ulrich

#endif
