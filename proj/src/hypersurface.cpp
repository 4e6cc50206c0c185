#include "ulrich/hypersurface.hpp"

#include <stdexcept>
#include <string>

namespace ulrich {

namespace {

Integer binom(long top, long m) { return binom_int(static_cast<long long>(top), m); }

void check(int n, long d) {
    if (n < 2) throw std::invalid_argument("hypersurface needs n >= 2");
    if (d < 2) throw std::invalid_argument("hypersurface needs d >= 2");
}

} // namespace

Integer h0_projective(long k, long l) { return l >= 0 ? binom(l + k, k) : Integer(0); }

Integer hypersurface_hilb(int n, long d, long m) {
    check(n, d);
    return binom(m + n + 1, n + 1) - (2 * d - 1) * binom(m - d + n + 1, n) -
           binom(m - 2 * d + n + 2, n + 1);
}

Integer hypersurface_hilbert_function(int n, long d, long m) {
    check(n, d);
    return h0_projective(n + 1, m) - (2 * d - 1) * h0_projective(n, m - d + 1) -
           h0_projective(n + 1, m - 2 * d + 1);
}

Resolution hypersurface_resolution(int n, long d) {
    check(n, d);
    Resolution res;
    res.generator_degree = d - 1;
    res.generators = 2 * d - 1;
    res.syzygy_degree = d;
    res.syzygies = 2 * d - 1;
    res.socle_degree = 2 * d - 1;
    // dim (I_Z)_t = sum over the resolution of +-dim S_{t - shift}.
    auto ideal_dim = [&](long t) -> Integer {
        return res.generators * h0_projective(n + 1, t - res.generator_degree) -
               res.syzygies * h0_projective(n + 1, t - res.syzygy_degree) +
               h0_projective(n + 1, t - res.socle_degree);
    };
    res.h0_ideal_d_minus_1 = ideal_dim(d - 1);
    res.h0_ideal_d = ideal_dim(d);
    res.h0_OZ_d_minus_1 = hypersurface_hilbert_function(n, d, d - 1);
    const long g = 2 * d - 1;
    res.h0_normal = g * res.h0_OZ_d_minus_1 + binom(g, 2) * binom(n + 2, n + 1) -
                    g * binom(d + n, n + 1);
    res.h0_normal_closed = Integer(g) * ((n + 2) * (d - 1) - 2 * d + 1);
    return res;
}

DimensionCheck hyper3_dimension_check(int n, long d) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("the dimension count applies to n in {2,3,4}, got " +
                                    std::to_string(n));
    check(n, d);
    DimensionCheck c;
    c.n = n;
    c.d = d;
    c.lhs = binom(d + n + 1, n + 1) - 1 + 2 * d - 1;
    c.rhs = Integer(n) * d * (2 * d - 1) - 1;
    c.rhs_from_parts = hypersurface_resolution(n, d).h0_normal + (n + 1) * (2 * d - 1) - 1;
    c.contradiction = c.lhs > c.rhs;
    return c;
}

Integer hilb_difference(int n, long d, long m, int k) {
    if (k < 0) throw std::invalid_argument("difference order must be non-negative");
    // sum_j (-1)^(k-j) C(k, j) P(m + j)
    Integer total = 0;
    for (int j = 0; j <= k; ++j) {
        Integer term = binom(k, j) * hypersurface_hilb(n, d, m + j);
        if ((k - j) % 2) total -= term;
        else total += term;
    }
    return total;
}

} // namespace ulrich
