#ifndef ULRICH_TESTS_ORACLES_HPP
#define ULRICH_TESTS_ORACLES_HPP

// Independent reference computations. Nothing here reuses the fast
// construction paths of the library.

#include <vector>

#include "ulrich/binomial.hpp"
#include "ulrich/ci_invariants.hpp"
#include "ulrich/multipoly.hpp"
#include "ulrich/rational.hpp"

namespace oracle {

using ulrich::Integer;
using ulrich::MultiPoly;
using ulrich::Rational;

// l(l-1)...(l-m+1)/m!, one factor at a time.
inline Rational falling_binom(const Rational& l, long m) {
    Rational acc = 1;
    for (long i = 0; i < m; ++i) acc = acc * (l - Rational(i)) / Rational(i + 1);
    return acc;
}

inline MultiPoly subset_sum_vars(unsigned s, unsigned mask) {
    MultiPoly p(s);
    for (unsigned i = 0; i < s; ++i)
        if (mask & (1u << i)) p += MultiPoly::variable(s, i);
    return p;
}

// sum over nonempty T of (-1)^(|T|+s) binom(x_T + shift, N), literally.
inline MultiPoly literal_subset_sum(unsigned s, const MultiPoly& shift, long N) {
    MultiPoly acc(s);
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        const int k = __builtin_popcount(mask);
        MultiPoly term = ulrich::binom_poly(subset_sum_vars(s, mask) + shift, N);
        if ((k + static_cast<int>(s)) % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

// f_{s,r,m} written out term by term with 2^s - 1 binomials per sum.
inline MultiPoly literal_f(unsigned s, long r, long m) {
    const long N = s + 4;
    const Rational rho = Rational(r) / Rational(2);
    const MultiPoly sum = ulrich::sum_of_variables(s);
    const MultiPoly one = MultiPoly::constant(s, 1);

    MultiPoly a = MultiPoly::constant(s, Rational(ulrich::binom_int(m + N, N)));
    a += literal_subset_sum(s, MultiPoly::constant(s, Rational(-m - 1)), N);

    // a_s at the twist m - rho(sum - s)
    const MultiPoly twist = MultiPoly::constant(s, Rational(m)) - rho * (sum - Rational(long(s)) * one);
    MultiPoly shifted = ulrich::binom_poly(twist + Rational(N) * one, N);
    shifted += literal_subset_sum(s, Rational(-1) * twist - one, N);

    MultiPoly prod = one;
    for (unsigned i = 0; i < s; ++i) prod *= MultiPoly::variable(s, i);
    MultiPoly b = Rational(-r) * prod * ulrich::binom_poly(Rational(-1) * twist - one, 4);

    return a + Rational(r - 1) * shifted + b;
}

// chi(O_X(m)) from the Koszul complex: sum_T (-1)^|T| chi(O_{P^N}(m - d_T)).
inline Integer koszul_chi_OX(const std::vector<long>& degrees, int n, long m) {
    const long N = n + static_cast<long>(degrees.size());
    Rational acc = 0;
    for (unsigned mask = 0; mask < (1u << degrees.size()); ++mask) {
        long dT = 0;
        for (std::size_t i = 0; i < degrees.size(); ++i)
            if (mask & (1u << i)) dT += degrees[i];
        const Rational t = falling_binom(Rational(m - dT + N), N);
        if (__builtin_popcount(mask) % 2) acc -= t;
        else acc += t;
    }
    return acc.to_integer();
}

// r = 2 hypersurface: deg Z = d(2d-1)(d-1)/6.
inline Rational deg_Z_hypersurface(long d) { return Rational(d * (2 * d - 1) * (d - 1)) / Rational(6); }

} // namespace oracle

#endif
