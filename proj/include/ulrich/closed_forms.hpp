#ifndef ULRICH_CLOSED_FORMS_HPP
#define ULRICH_CLOSED_FORMS_HPP

#include <array>
#include <string>
#include <vector>

#include "ulrich/rational.hpp"
#include "ulrich/symmetric.hpp"

namespace ulrich {

using BasisCoeffs = std::array<Rational, kBasisSize>;

/// A stated expansion F = m_{1^s} * scale * [sum_i coeffs(s)_i basis_i(s)],
/// with each bracket coefficient a polynomial in s. These tables are used
/// only to check the polynomials built from their definitions.
struct ClosedForm {
    std::string name;
    Rational scale;
    BasisCoeffs (*coeffs)(long s);
};

BasisCoeffs gl1_f20(long s); // f_{s,2,0}, scale 1/360
BasisCoeffs gl1_f30(long s); // f_{s,3,0}, scale 1/1920
BasisCoeffs gl1_f31(long s); // f_{s,3,1}, scale 1/1920

BasisCoeffs gl2_g4(long s);        // scale 5/1728
BasisCoeffs gl2_delta(long s);     // scale 1/8
BasisCoeffs gl2_h(long s);         // scale 1/8
BasisCoeffs gl2_k(long s);         // scale 5/32
BasisCoeffs gl2_c(long s);         // scale 1/64
BasisCoeffs gl2_chi_prime(long s); // scale 1/768

/// The four-variable brackets p_{4,2,0}, p_{4,3,0}, p_{4,3,1} with every
/// coefficient written out as an integer.
BasisCoeffs p4_f20();
BasisCoeffs p4_f30();
BasisCoeffs p4_f31();

const std::vector<ClosedForm>& gl1_closed_forms(); // order (2,0), (3,0), (3,1)
const std::vector<ClosedForm>& gl2_closed_forms(); // order g4, delta, h, k, c, chi'

/// m_{1^s} * scale * sum coeffs_i basis_i(s), valid for every s >= 1 (basis
/// elements with more parts than variables vanish).
MultiPoly closed_form_polynomial(const ClosedForm& form, unsigned s);

} // namespace ulrich

#endif
