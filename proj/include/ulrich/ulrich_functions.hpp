#ifndef ULRICH_ULRICH_FUNCTIONS_HPP
#define ULRICH_ULRICH_FUNCTIONS_HPP

#include "ulrich/multipoly.hpp"
#include "ulrich/rational.hpp"

namespace ulrich {

struct UlrichFnParams {
    unsigned s = 1;
    long r = 2;
    long m = 0;
};

/// a_s(m) = binom(m+s+4, s+4) + sum_{k=1}^s (-1)^(k+s) sum_{|T|=k} binom(x_T - m - 1, s+4),
/// where x_T is the sum of the variables indexed by T.
MultiPoly build_a(unsigned s, long m);

/// a_s evaluated at the polynomial twist m - (r/2)(x_1 + ... + x_s - s).
MultiPoly build_a_shifted(unsigned s, long r, long m);

/// b_s = -r x_1...x_s binom((r/2)(x_1 + ... + x_s - s) - m - 1, 4).
MultiPoly build_b(unsigned s, long r, long m);

/// f_{s,r,m} = a_s(m) + (r-1) a_s(m - (r/2)(sum x_i - s)) + b_s.
MultiPoly build_f(unsigned s, long r, long m);
inline MultiPoly build_f(const UlrichFnParams& p) { return build_f(p.s, p.r, p.m); }

MultiPoly build_g4(unsigned s);
MultiPoly build_delta(unsigned s);
MultiPoly build_h(unsigned s);
MultiPoly build_k(unsigned s);
MultiPoly build_c(unsigned s);
MultiPoly build_chi_prime(unsigned s);

/// The whole family at once; h is built a single time and shared by k, c
/// and chi'.
struct GiFamily {
    MultiPoly g4, delta, h, k, c, chi_prime;
};
GiFamily build_gi(unsigned s);

/// q_{s,b} = b m4 + 10 m22 - 10 s m2 + s(5s - b + 5).
MultiPoly build_q(unsigned s, long b);

} // namespace ulrich

#endif
