#include "ulrich/ulrich_functions.hpp"

#include <vector>

#include "ulrich/binomial.hpp"
#include "ulrich/symmetric.hpp"

namespace ulrich {

namespace {

void check_s(unsigned s) {
    if (s < 1 || s > kMaxVars)
        throw DimensionError("s must lie in 1.." + std::to_string(kMaxVars));
}

MultiPoly constant(unsigned s, const Rational& c) { return MultiPoly::constant(s, c); }

MultiPoly m_ones(unsigned s) { return monomial_sym(Partition::ones(s), s); }

} // namespace

MultiPoly build_a(unsigned s, long m) {
    check_s(s);
    const unsigned n = s + 4;
    MultiPoly out = alternating_subset_binomial_sum(s, Rational(0), Rational(-m - 1), n);
    out += constant(s, Rational(binom_int(static_cast<long long>(m) + n, n)));
    return out;
}

MultiPoly build_a_shifted(unsigned s, long r, long m) {
    check_s(s);
    const unsigned n = s + 4;
    const Rational rho(Integer(r), Integer(2));
    const Rational rho_s = rho * Rational(static_cast<long>(s));
    std::vector<Rational> weights(s, -rho);
    MultiPoly out = binom_linear(weights, Rational(m) + rho_s + Rational(static_cast<long>(n)), n);
    out += alternating_subset_binomial_sum(s, rho, -rho_s - Rational(m) - Rational(1), n);
    return out;
}

MultiPoly build_b(unsigned s, long r, long m) {
    check_s(s);
    const Rational rho(Integer(r), Integer(2));
    MultiPoly arg = rho * sum_of_variables(s);
    arg -= constant(s, rho * Rational(static_cast<long>(s)) + Rational(m) + Rational(1));
    return Rational(-r) * (m_ones(s) * binom_poly(arg, 4));
}

MultiPoly build_f(unsigned s, long r, long m) {
    if (r < 2) throw std::invalid_argument("f_{s,r,m} needs r >= 2");
    MultiPoly f = build_a(s, m);
    f += Rational(r - 1) * build_a_shifted(s, r, m);
    f += build_b(s, r, m);
    return f;
}

MultiPoly build_q(unsigned s, long b) {
    check_s(s);
    const Rational S(static_cast<long>(s));
    MultiPoly q = Rational(b) * monomial_sym(Partition{4}, s);
    q += Rational(10) * monomial_sym(Partition{2, 2}, s);
    q -= Rational(10) * S * monomial_sym(Partition{2}, s);
    q += constant(s, S * (Rational(5) * S - Rational(b) + Rational(5)));
    return q;
}

MultiPoly build_g4(unsigned s) {
    check_s(s);
    const MultiPoly m1 = sum_of_variables(s);
    const MultiPoly m11 = monomial_sym(Partition{1, 1}, s);
    const MultiPoly m1_2 = m1 * m1, m1_3 = m1_2 * m1, m1_4 = m1_3 * m1;
    const Rational S(static_cast<long>(s));
    const Rational S2 = S * S, S3 = S2 * S, S4 = S3 * S;
    auto R = [](long v) { return Rational(v); };

    MultiPoly bracket = constant(s, R(45) * S4 + R(198) * S3 + R(181) * S2 - R(84) * S);
    bracket += R(-180) * S3 * m1 + R(288) * S2 * m1_2 - R(216) * S * m1_3 + R(64) * m1_4;
    bracket += R(-612) * S2 * m1 - R(36) * S2 * m11 + R(700) * S * m1_2;
    bracket += R(72) * S * (m1 * m11) - R(288) * m1_3 - R(40) * (m1_2 * m11);
    bracket += R(-432) * S * m1 - R(140) * S * m11 + R(336) * m1_2 + R(144) * (m1 * m11);
    bracket += R(4) * (m11 * m11) - R(168) * m11;
    return Rational(Integer(5), Integer(1728)) * (m_ones(s) * bracket);
}

MultiPoly build_delta(unsigned s) {
    check_s(s);
    const MultiPoly m1 = sum_of_variables(s);
    const MultiPoly m11 = monomial_sym(Partition{1, 1}, s);
    const Rational S(static_cast<long>(s));
    MultiPoly bracket = Rational(7) * (m1 * m1) - Rational(12) * S * m1 - Rational(2) * m11;
    bracket += constant(s, Rational(6) * S * S - S);
    return Rational(Integer(1), Integer(8)) * (m_ones(s) * bracket);
}

namespace {

MultiPoly h_from(unsigned s, const MultiPoly& delta) {
    MultiPoly h = Rational(-2) * build_f(s, 3, 1);
    h += Rational(2) * build_f(s, 3, 0);
    h += delta;
    return h;
}

// m1 - s - 2
MultiPoly shifted_m1(unsigned s) {
    return sum_of_variables(s) - constant(s, Rational(static_cast<long>(s) + 2));
}

MultiPoly k_from(unsigned s, const MultiPoly& h, const MultiPoly& delta) {
    const MultiPoly t = shifted_m1(s);
    return Rational(5) * (t * h) - Rational(Integer(25), Integer(4)) * (t * t * delta);
}

MultiPoly c_from(unsigned s, const MultiPoly& h, const MultiPoly& delta) {
    const MultiPoly m1 = sum_of_variables(s);
    const MultiPoly m11 = monomial_sym(Partition{1, 1}, s);
    const Rational S(static_cast<long>(s));
    MultiPoly lin = Rational(4) * m1 - constant(s, Rational(4) * S + Rational(5));
    MultiPoly quad = Rational(49) * (m1 * m1) - Rational(8) * (Rational(13) * S + Rational(20)) * m1;
    quad += Rational(6) * m11;
    quad += constant(s, Rational(52) * S * S + Rational(163) * S + Rational(120));
    return lin * h - Rational(Integer(1), Integer(8)) * (quad * delta);
}

} // namespace

MultiPoly build_h(unsigned s) { return h_from(s, build_delta(s)); }

MultiPoly build_k(unsigned s) {
    const MultiPoly delta = build_delta(s);
    return k_from(s, h_from(s, delta), delta);
}

MultiPoly build_c(unsigned s) {
    const MultiPoly delta = build_delta(s);
    return c_from(s, h_from(s, delta), delta);
}

MultiPoly build_chi_prime(unsigned s) { return build_gi(s).chi_prime; }

GiFamily build_gi(unsigned s) {
    MultiPoly delta = build_delta(s);
    MultiPoly h = h_from(s, delta);
    MultiPoly k = k_from(s, h, delta);
    MultiPoly c = c_from(s, h, delta);
    MultiPoly chi = Rational(Integer(1), Integer(12)) * (k + c);
    return GiFamily{build_g4(s), std::move(delta), std::move(h), std::move(k), std::move(c),
                    std::move(chi)};
}

} // namespace ulrich
