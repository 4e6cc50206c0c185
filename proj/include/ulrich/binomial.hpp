#ifndef ULRICH_BINOMIAL_HPP
#define ULRICH_BINOMIAL_HPP

#include <span>
#include <vector>

#include "ulrich/multipoly.hpp"
#include "ulrich/rational.hpp"

namespace ulrich {

/// binom(L, m) = L(L-1)...(L-m+1)/m! for a polynomial argument, expanded by
/// multiplying one falling factor at a time.
MultiPoly binom_poly(const MultiPoly& arg, long m);

/// Coefficients g_0..g_m of the univariate polynomial t -> binom(t + c, m).
std::vector<Rational> shifted_binomial_coefficients(const Rational& c, unsigned m);

/// binom(w_1 x_1 + ... + w_s x_s + c, m) expanded directly through the
/// multinomial theorem. Equal to binom_poly on the same linear form.
MultiPoly binom_linear(std::span<const Rational> weights, const Rational& c, unsigned m);

/// sum over nonempty T of {1..s} of
///   (-1)^(|T|+s) binom(sum_{i in T} x_i + rho (x_1+...+x_s) + c, m).
/// The signed subset sum factors variable by variable, so every coefficient
/// is computed in closed form instead of expanding 2^s - 1 binomials.
MultiPoly alternating_subset_binomial_sum(unsigned s, const Rational& rho, const Rational& c,
                                          unsigned m);

} // namespace ulrich

#endif
