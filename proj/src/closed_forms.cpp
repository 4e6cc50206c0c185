#include "ulrich/closed_forms.hpp"

namespace ulrich {

namespace {

Rational frac(long num, long den) { return Rational(Integer(num), Integer(den)); }

} // namespace

BasisCoeffs gl1_f20(long s) {
    const Rational x(s);
    return {66,
            225,
            320,
            600,
            1125,
            -75 * (3 * x + 4),
            -150 * (4 * x + 5),
            -225 * (5 * x + 6),
            10 * (30 * x * x + 73 * x + 35),
            frac(75, 2) * (15 * x * x + 35 * x + 14),
            -frac(75, 2) * x * (x + 1) * (5 * x + 12),
            frac(1, 8) * x * (375 * x * x * x + 1650 * x * x + 1505 * x - 698)};
}

BasisCoeffs gl1_f30(long s) {
    const Rational x(s);
    return {1683,
            6060,
            8770,
            16860,
            32400,
            -60 * (101 * x + 95),
            -60 * (281 * x + 255),
            -3600 * (9 * x + 8),
            10 * (843 * x * x + 1496 * x + 490),
            60 * (270 * x * x + 469 * x + 140),
            -60 * x * (90 * x * x + 229 * x + 125),
            x * (1350 * x * x * x + 4470 * x * x + 3305 * x - 698)};
}

BasisCoeffs gl1_f31(long s) {
    const Rational x(s);
    return {1683,
            6060,
            8770,
            16860,
            32400,
            -60 * (101 * x + 133),
            -60 * (281 * x + 357),
            -720 * (45 * x + 56),
            10 * (843 * x * x + 2108 * x + 994),
            60 * (270 * x * x + 661 * x + 284),
            -60 * x * (90 * x * x + 325 * x + 263),
            x * (1350 * x * x * x + 6390 * x * x + 7265 * x - 1418)};
}

BasisCoeffs gl2_g4(long s) {
    const Rational x(s);
    return {64,
            216,
            308,
            576,
            1080,
            -72 * (3 * x + 4),
            -144 * (4 * x + 5),
            -216 * (5 * x + 6),
            4 * (72 * x * x + 175 * x + 84),
            36 * (15 * x * x + 35 * x + 14),
            -36 * x * (x + 1) * (5 * x + 12),
            x * (3 * x - 1) * (3 * x + 7) * (5 * x + 12)};
}

BasisCoeffs gl2_delta(long s) {
    const Rational x(s);
    return {0, 0, 0, 0, 0, 0, 0, 0, 7, 12, -12 * x, 6 * x * x - x};
}

BasisCoeffs gl2_h(long s) {
    const Rational x(s);
    return {0,
            0,
            0,
            0,
            0,
            19,
            51,
            96,
            -(51 * x + 35),
            -12 * (8 * x + 5),
            3 * x * (16 * x + 19),
            -x * (16 * x * x + 27 * x - 5)};
}

BasisCoeffs gl2_k(long s) {
    const Rational x(s);
    return {41,
            150,
            218,
            422,
            816,
            -2 * (75 * x + 76),
            -2 * (211 * x + 204),
            -48 * (17 * x + 16),
            211 * x * x + 401 * x + 140,
            2 * (204 * x * x + 377 * x + 120),
            -2 * x * (68 * x * x + 185 * x + 108),
            x * (x + 2) * (34 * x * x + 53 * x - 10)};
}

BasisCoeffs gl2_c(long s) {
    const Rational x(s);
    return {265,
            924,
            1330,
            2524,
            4800,
            -4 * (231 * x + 190),
            -4 * (631 * x + 510),
            -960 * (5 * x + 4),
            2 * (631 * x * x + 986 * x + 280),
            4 * (600 * x * x + 929 * x + 240),
            -4 * x * (200 * x * x + 449 * x + 210),
            x * (200 * x * x * x + 578 * x * x + 363 * x - 80)};
}

BasisCoeffs gl2_chi_prime(long s) {
    const Rational x(s);
    return {675,
            2424,
            3510,
            6744,
            12960,
            -24 * (101 * x + 95),
            -24 * (281 * x + 255),
            -1440 * (9 * x + 8),
            2 * (1686 * x * x + 2991 * x + 980),
            24 * (270 * x * x + 469 * x + 140),
            -24 * x * (90 * x * x + 229 * x + 125),
            x * (540 * x * x * x + 1788 * x * x + 1323 * x - 280)};
}

BasisCoeffs p4_f20() {
    return {66, 225, 320, 600, 1125, -1200, -3150, -5850, 8070, 14775, -24000, 27861};
}

BasisCoeffs p4_f30() {
    return {1683,    6060,   8770,    16860,   32400,   -29940,
            -82740, -158400, 199620,  380160,  -595440, 681768};
}

BasisCoeffs p4_f31() {
    return {1683,    6060,   8770,    16860,   32400,   -32220,
            -88860, -169920, 229140,  434880,  -720720, 865128};
}

const std::vector<ClosedForm>& gl1_closed_forms() {
    static const std::vector<ClosedForm> forms{
        {"f_{s,2,0}", frac(1, 360), gl1_f20},
        {"f_{s,3,0}", frac(1, 1920), gl1_f30},
        {"f_{s,3,1}", frac(1, 1920), gl1_f31},
    };
    return forms;
}

const std::vector<ClosedForm>& gl2_closed_forms() {
    static const std::vector<ClosedForm> forms{
        {"g_{4,s}", frac(5, 1728), gl2_g4}, {"delta_s", frac(1, 8), gl2_delta},
        {"h_s", frac(1, 8), gl2_h},         {"k_s", frac(5, 32), gl2_k},
        {"c_s", frac(1, 64), gl2_c},        {"chi'_s", frac(1, 768), gl2_chi_prime},
    };
    return forms;
}

MultiPoly closed_form_polynomial(const ClosedForm& form, unsigned s) {
    const auto coeffs = form.coeffs(static_cast<long>(s));
    const auto& basis = degree4_basis();
    MultiPoly bracket(s);
    for (std::size_t i = 0; i < kBasisSize; ++i)
        if (!coeffs[i].is_zero()) bracket += coeffs[i] * monomial_sym(basis[i], s);
    return form.scale * (monomial_sym(Partition::ones(s), s) * bracket);
}

} // namespace ulrich
