#include "ulrich/ci_invariants.hpp"

#include <numeric>
#include <sstream>

namespace ulrich {

namespace {

Rational R(long v) { return Rational(v); }

Integer binom(long top, long m) { return binom_int(static_cast<long long>(top), m); }

int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

// Calls fn(|T|, d_T) for every nonempty subset T of the degrees.
template <class Fn>
void for_each_subset(const std::vector<long>& degrees, Fn fn) {
    const std::size_t s = degrees.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
        long sum = 0;
        int size = 0;
        for (std::size_t i = 0; i < s; ++i)
            if (mask & (std::uint64_t{1} << i)) {
                sum += degrees[i];
                ++size;
            }
        fn(size, sum);
    }
}

long integral_u(const CIConfig& cfg) {
    if (parity_obstruction(cfg))
        throw DomainError("c_1(E) = (r/2)(S-s)H is not integral for r=" + std::to_string(cfg.r) +
                          ", degrees " + degrees_str(cfg.degrees));
    return cfg.r * (cfg.S() - static_cast<long>(cfg.s())) / 2;
}

void require(const CIConfig& cfg, int n, long r) {
    if (cfg.n != n || cfg.r != r)
        throw InvalidConfig("expected n=" + std::to_string(n) + ", r=" + std::to_string(r));
}

} // namespace

long CIConfig::S() const { return std::accumulate(degrees.begin(), degrees.end(), 0L); }

long CIConfig::S_prime() const {
    long total = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        for (std::size_t j = i + 1; j < degrees.size(); ++j) total += degrees[i] * degrees[j];
    return total;
}

Integer CIConfig::d() const {
    Integer p = 1;
    for (long v : degrees) p *= v;
    return p;
}

CIConfig CIConfig::padded_to(unsigned s_target) const {
    CIConfig out = *this;
    while (out.degrees.size() < s_target) out.degrees.push_back(1);
    return out;
}

void CIConfig::validate() const {
    if (n < 2) throw InvalidConfig("n must be at least 2");
    if (r < 1) throw InvalidConfig("rank must be at least 1");
    if (degrees.empty()) throw InvalidConfig("at least one degree is required");
    if (degrees.size() > 62) throw InvalidConfig("too many degrees");
    for (long v : degrees)
        if (v < 1) throw InvalidConfig("degrees must be positive");
    if (d() < 2) throw InvalidConfig("the degree d = prod d_i must be at least 2");
}

std::string degrees_str(const std::vector<long>& degrees) {
    std::ostringstream os;
    for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
    return os.str();
}

long canonical_coeff(const CIConfig& cfg) {
    return cfg.S() - static_cast<long>(cfg.s()) - cfg.n - 1;
}

Integer c2X_coeff(const CIConfig& cfg) {
    const long S = cfg.S();
    return binom(cfg.n + static_cast<long>(cfg.s()) + 1, 2) + Integer(S) * canonical_coeff(cfg) -
           Integer(cfg.S_prime());
}

Rational det_twist(const CIConfig& cfg) {
    return Rational(Integer(cfg.r * (cfg.S() - static_cast<long>(cfg.s()))), Integer(2));
}

bool parity_obstruction(const CIConfig& cfg) {
    return (cfg.r * (cfg.S() - static_cast<long>(cfg.s()))) % 2 != 0;
}

Rational deg_Z(const CIConfig& cfg) {
    const Rational r = R(cfg.r), S = R(cfg.S()), s = R(cfg.s()), Sp = R(cfg.S_prime());
    Rational bracket = (3 * r - 2) * S * S - 6 * (r - 1) * s * S + 3 * (r - 1) * s * s - s - 2 * Sp;
    return r * Rational(cfg.d()) / R(24) * bracket;
}

Rational deg_Z_general(const CIConfig& cfg) {
    const Rational u = det_twist(cfg), k = R(canonical_coeff(cfg)), r = R(cfg.r), n = R(cfg.n);
    const Rational c2 = Rational(c2X_coeff(cfg));
    Rational per_H = u * u / 2 - u * k / 2 - r * (3 * n * n + 5 * n + 2) / 24 + r * k * k / 12 +
                     r * c2 / 12;
    return Rational(cfg.d()) * per_H;
}

Rational c2_E_coeff(const CIConfig& cfg) { return deg_Z(cfg) / Rational(cfg.d()); }

Integer chi_OX(const CIConfig& cfg, long m) {
    const long N = cfg.n + static_cast<long>(cfg.s());
    Integer total = binom(m + N, N);
    for_each_subset(cfg.degrees, [&](int size, long dT) {
        total += parity_sign(size + N) * binom(dT - m - 1, N);
    });
    return total;
}

Integer chi_OZ(const CIConfig& cfg, long m) {
    const long u = integral_u(cfg);
    const long n = cfg.n, N = n + static_cast<long>(cfg.s());
    const Integer rd = cfg.r * cfg.d();
    Integer total = binom(m + N, N);
    total += parity_sign(n + 1) * rd * binom(u - m - 1, n);
    total += parity_sign(N) * (cfg.r - 1) * binom(u - m - 1, N);
    for_each_subset(cfg.degrees, [&](int size, long dT) {
        total += parity_sign(size + N) * (binom(dT - m - 1, N) + (cfg.r - 1) * binom(dT + u - m - 1, N));
    });
    return total;
}

Integer chi_OZ_general(const CIConfig& cfg, long m) {
    const long u = integral_u(cfg);
    const long n = cfg.n, N = n + static_cast<long>(cfg.s());
    auto chi_J = [&](long t) -> Integer { return binom(t + N, N) - chi_OX(cfg, t); };
    return binom(m + N, N) - cfg.r * cfg.d() * binom(m - u + n, n) + (cfg.r - 1) * binom(m - u + N, N) -
           chi_J(m) - (cfg.r - 1) * chi_J(m - u);
}

Integer chi_E(const CIConfig& cfg, long m) { return cfg.r * cfg.d() * binom(m + cfg.n, cfg.n); }

std::vector<SerreCheck> serre_consistency(const CIConfig& cfg) {
    const long u = integral_u(cfg);
    const long k = canonical_coeff(cfg);
    std::vector<SerreCheck> out;
    for (long p = 1; p <= cfg.n; ++p) {
        SerreCheck c;
        c.p = p;
        c.lhs = parity_sign(cfg.n - 1) * (chi_OX(cfg, u - p) - chi_OZ(cfg, u - p));
        c.rhs = (cfg.r - 1) * chi_OX(cfg, k + p);
        out.push_back(std::move(c));
    }
    return out;
}

Rational c2_Z_rank3(const CIConfig& cfg, const Rational& KH) {
    const Rational S = R(cfg.S()), s = R(cfg.s()), Sp = R(cfg.S_prime()), n = R(cfg.n);
    Rational bracket = 49 * S * S - 104 * s * S - 32 * (n + 1) * S + 52 * s * s + 32 * n * s + 35 * s +
                       4 * n * n + 12 * n + 8 + 6 * Sp;
    return -bracket / 8 * deg_Z(cfg) + (4 * S - 4 * s - n - 1) * KH;
}

SurfaceData rank2_surface_data(const CIConfig& cfg) {
    require(cfg, 4, 2);
    const Rational S = R(cfg.S()), s = R(cfg.s()), Sp = R(cfg.S_prime());
    const Rational deg = deg_Z(cfg);
    const Rational kz = 2 * S - 2 * s - 5;
    SurfaceData out;
    out.KH = kz * deg;
    out.K2 = kz * kz * deg;
    out.c2 = (120 + 115 * s + 27 * s * s - 120 * S - 54 * s * S + 32 * S * S - 10 * Sp) / 12 * deg;
    out.chi_noether = (out.K2 + out.c2) / 12;
    out.chi_hilb = Rational(chi_OZ(cfg, 0));
    return out;
}

SurfaceData rank3_surface_data(const CIConfig& cfg) {
    require(cfg, 4, 3);
    const Rational S = R(cfg.S()), s = R(cfg.s());
    const Rational deg = deg_Z(cfg);
    const Rational chi0 = Rational(chi_OZ(cfg, 0)), chi1 = Rational(chi_OZ(cfg, 1));
    const Rational t = S - s - 2;
    SurfaceData out;
    out.KH = -2 * chi1 + 2 * chi0 + deg;
    out.K2 = 5 * t * out.KH - Rational(Integer(25), Integer(4)) * t * t * deg;
    out.c2 = c2_Z_rank3(cfg, out.KH);
    out.chi_noether = (out.K2 + out.c2) / 12;
    out.chi_hilb = chi0;
    return out;
}

} // namespace ulrich
