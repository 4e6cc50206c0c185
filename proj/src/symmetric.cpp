#include "ulrich/symmetric.hpp"

#include <algorithm>
#include <numeric>

namespace ulrich {

Partition::Partition(std::initializer_list<unsigned> parts)
    : Partition(std::vector<unsigned>(parts)) {}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::ones(unsigned k) { return Partition(std::vector<unsigned>(k, 1)); }

unsigned Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

std::string Partition::name() const {
    if (parts_.empty()) return "1";
    std::string n = "m";
    for (unsigned p : parts_) n += std::to_string(p);
    return n;
}

MultiPoly monomial_sym(const Partition& lambda, unsigned s) {
    MultiPoly out(s);
    if (lambda.length() > s) return out;
    ExponentVector exps(s, 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    std::vector<Term> terms;
    do {
        terms.push_back({Monomial::from_exponents(exps), Rational(1)});
    } while (std::next_permutation(exps.begin(), exps.end()));
    return MultiPoly::from_terms(s, std::move(terms));
}

const std::array<Partition, kBasisSize>& degree4_basis() {
    static const std::array<Partition, kBasisSize> basis{
        Partition{4},    Partition{3, 1}, Partition{2, 2},    Partition{2, 1, 1},
        Partition{1, 1, 1, 1}, Partition{3}, Partition{2, 1}, Partition{1, 1, 1},
        Partition{2},    Partition{1, 1}, Partition{1},       Partition{}};
    return basis;
}

MultiPoly SymExpansion::reconstruct() const {
    MultiPoly out(s);
    const auto& basis = degree4_basis();
    for (std::size_t i = 0; i < kBasisSize; ++i)
        if (!coeffs[i].is_zero()) out += coeffs[i] * monomial_sym(basis[i], s);
    return out;
}

bool is_symmetric(const MultiPoly& p) {
    const unsigned s = p.nvars();
    if (s == 1) return true;
    std::vector<unsigned> swap(s), cycle(s);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (unsigned i = 0; i < s; ++i) cycle[i] = (i + 1) % s;
    return p.permute(swap) == p && p.permute(cycle) == p;
}

namespace {

void check_expandable(const MultiPoly& g) {
    if (g.nvars() < 4)
        throw DimensionError("degree-4 symmetric basis needs at least 4 variables");
    if (g.total_degree() > 4)
        throw std::domain_error("symmetric expansion needs degree <= 4, got " +
                                std::to_string(g.total_degree()));
    if (!is_symmetric(g)) throw NotSymmetricError("polynomial is not symmetric");
}

Rational binom_small(unsigned t, unsigned k) { return Rational(binom_int(static_cast<long long>(t), k)); }

} // namespace

SymExpansion expand_direct(const MultiPoly& g) {
    check_expandable(g);
    const unsigned s = g.nvars();
    const auto& basis = degree4_basis();
    SymExpansion e;
    e.s = s;
    MultiPoly residual = g;
    // Basis elements are listed by decreasing degree; the leading monomial
    // x^lambda of m_lambda appears in no other basis element.
    for (std::size_t i = 0; i < kBasisSize; ++i) {
        ExponentVector lead(s, 0);
        std::copy(basis[i].parts().begin(), basis[i].parts().end(), lead.begin());
        e.coeffs[i] = residual.coefficient_of(lead);
        if (!e.coeffs[i].is_zero()) residual -= e.coeffs[i] * monomial_sym(basis[i], s);
    }
    if (!residual.is_zero())
        throw std::logic_error("nonzero residual after symmetric expansion: " + residual.to_string());
    return e;
}

std::array<Rational, kBasisSize> restricted_coefficients(const SymExpansion& e) {
    const auto& a = e.coeffs;
    const unsigned t = e.s - 4;
    const Rational t1 = t, t2 = binom_small(t, 2), t3 = binom_small(t, 3), t4 = binom_small(t, 4);
    std::array<Rational, kBasisSize> b;
    for (int i = 0; i < 5; ++i) b[i] = a[i];
    b[5] = a[5] + t1 * a[1];
    b[6] = a[6] + t1 * a[3];
    b[7] = a[7] + t1 * a[4];
    b[8] = a[8] + t1 * (a[2] + a[6]) + t2 * a[3];
    b[9] = a[9] + t1 * (a[3] + a[7]) + t2 * a[4];
    b[10] = a[10] + t1 * (a[1] + a[6] + a[9]) + t2 * (2 * a[3] + a[7]) + t3 * a[4];
    b[11] = a[11] + t1 * (a[0] + a[5] + a[8] + a[10]) +
            t2 * (2 * a[1] + a[2] + 2 * a[6] + a[9]) + t3 * (3 * a[3] + a[7]) + t4 * a[4];
    return b;
}

SymExpansion expand_via_restriction(const MultiPoly& g) {
    check_expandable(g);
    const unsigned s = g.nvars();
    if (s == 4) return expand_direct(g);
    const auto b = expand_direct(g.substitute_ones(4)).coeffs;
    const unsigned t = s - 4;
    const Rational t1 = t, t2 = binom_small(t, 2), t3 = binom_small(t, 3), t4 = binom_small(t, 4);
    SymExpansion e;
    e.s = s;
    auto& a = e.coeffs;
    for (int i = 0; i < 5; ++i) a[i] = b[i];
    a[5] = b[5] - t1 * a[1];
    a[6] = b[6] - t1 * a[3];
    a[7] = b[7] - t1 * a[4];
    a[8] = b[8] - t1 * (a[2] + a[6]) - t2 * a[3];
    a[9] = b[9] - t1 * (a[3] + a[7]) - t2 * a[4];
    a[10] = b[10] - t1 * (a[1] + a[6] + a[9]) - t2 * (2 * a[3] + a[7]) - t3 * a[4];
    a[11] = b[11] - t1 * (a[0] + a[5] + a[8] + a[10]) -
            t2 * (2 * a[1] + a[2] + 2 * a[6] + a[9]) - t3 * (3 * a[3] + a[7]) - t4 * a[4];
    if (e.reconstruct() != g)
        throw std::logic_error("restriction expansion does not reproduce the polynomial");
    return e;
}

Report verify_tf2_table(unsigned s) {
    Report r;
    r.lemma = "tf2";
    r.parameters["s"] = s;
    auto m = [s](std::initializer_list<unsigned> parts) { return monomial_sym(Partition(parts), s); };
    const MultiPoly m1 = m({1}), m11 = m({1, 1}), m2 = m({2}), m3 = m({3}), m21 = m({2, 1}),
                    m111 = m({1, 1, 1});
    const MultiPoly m4 = m({4}), m31 = m({3, 1}), m22 = m({2, 2}), m211 = m({2, 1, 1}),
                    m1111 = m({1, 1, 1, 1});
    auto R = [](long v) { return Rational(v); };

    struct Identity {
        const char* name;
        MultiPoly lhs, rhs;
    };
    const std::vector<Identity> table{
        {"(1) m1^2 = m2 + 2m11", m1 * m1, m2 + R(2) * m11},
        {"(2) m1^3 = m3 + 3m21 + 6m111", pow(m1, 3), m3 + R(3) * m21 + R(6) * m111},
        {"(3) m1^4 = m4 + 4m31 + 6m22 + 12m211 + 24m1111", pow(m1, 4),
         m4 + R(4) * m31 + R(6) * m22 + R(12) * m211 + R(24) * m1111},
        {"(4) m1 m11 = m21 + 3m111", m1 * m11, m21 + R(3) * m111},
        {"(5) m1^2 m11 = m31 + 2m22 + 5m211 + 12m1111", m1 * m1 * m11,
         m31 + R(2) * m22 + R(5) * m211 + R(12) * m1111},
        {"(6) m11^2 = m22 + 2m211 + 6m1111", m11 * m11, m22 + R(2) * m211 + R(6) * m1111},
        {"(7) m1 m3 = m4 + m31", m1 * m3, m4 + m31},
        {"(8) m1 m21 = m31 + 2m22 + 2m211", m1 * m21, m31 + R(2) * m22 + R(2) * m211},
        {"(9) m1 m111 = m211 + 4m1111", m1 * m111, m211 + R(4) * m1111},
        {"(10) m1 m2 = m3 + m21", m1 * m2, m3 + m21},
        {"(11) m1^2 m2 = m4 + 2m31 + 2m22 + 2m211", m1 * m1 * m2,
         m4 + R(2) * m31 + R(2) * m22 + R(2) * m211},
        {"(12) m2^2 = m4 + 2m22", m2 * m2, m4 + R(2) * m22},
        {"(13) m2 m11 = m31 + m211", m2 * m11, m31 + m211},
    };
    for (const auto& id : table) {
        MultiPoly diff = id.lhs - id.rhs;
        r.add(id.name, diff.is_zero(), diff.is_zero() ? "" : "lhs - rhs = " + diff.to_string());
    }
    return r;
}

Report verify_restriction_identities(unsigned s) {
    if (s < 5) throw DimensionError("restriction identities need s >= 5");
    Report r;
    r.lemma = "tf2bis";
    r.parameters["s"] = s;
    const Rational t = s - 4;
    const Rational t2 = binom_small(s - 4, 2);
    auto big = [s](const Partition& p) { return monomial_sym(p, s).substitute_ones(4); };
    auto small = [](const Partition& p) { return monomial_sym(p, 4); };
    auto c = [](const Rational& v) { return MultiPoly::constant(4, v); };
    auto record = [&r](const std::string& name, const MultiPoly& lhs, const MultiPoly& rhs) {
        MultiPoly diff = lhs - rhs;
        r.add(name, diff.is_zero(), diff.is_zero() ? "" : "difference " + diff.to_string());
    };

    for (unsigned i = 1; i <= 4; ++i)
        record("m" + std::to_string(i) + "(s)|1 = m" + std::to_string(i) + "(4) + (s-4)",
               big(Partition{i}), small(Partition{i}) + c(t));
    for (unsigned i = 1; i <= 4; ++i) {
        MultiPoly rhs(4);
        for (unsigned j = 0; j <= i; ++j)
            rhs += binom_small(s - 4, j) * (i - j == 0 ? c(1) : small(Partition::ones(i - j)));
        record(Partition::ones(i).name() + "(s)|1 = sum_j C(s-4,j) m_{1^(i-j)}(4)",
               big(Partition::ones(i)), rhs);
    }
    record("m31(s)|1", big(Partition{3, 1}),
           small(Partition{3, 1}) + t * small(Partition{3}) + t * small(Partition{1}) +
               c(t * (t - 1)));
    record("m22(s)|1", big(Partition{2, 2}),
           small(Partition{2, 2}) + t * small(Partition{2}) + c(t2));
    record("m211(s)|1", big(Partition{2, 1, 1}),
           small(Partition{2, 1, 1}) + t * small(Partition{2, 1}) + t2 * small(Partition{2}) +
               t * small(Partition{1, 1}) + t * (t - 1) * small(Partition{1}) +
               c(t * binom_small(s - 5, 2)));
    record("m21(s)|1", big(Partition{2, 1}),
           small(Partition{2, 1}) + t * small(Partition{2}) + t * small(Partition{1}) +
               c(t * (t - 1)));

    // Full restriction system: each basis element and one generic combination.
    const auto& basis = degree4_basis();
    auto check_rel = [&](const SymExpansion& e, const std::string& name) {
        SymExpansion restricted;
        restricted.s = 4;
        restricted.coeffs = restricted_coefficients(e);
        record(name, e.reconstruct().substitute_ones(4), restricted.reconstruct());
    };
    for (std::size_t k = 0; k < kBasisSize; ++k) {
        SymExpansion e;
        e.s = s;
        e.coeffs[k] = 1;
        check_rel(e, "rel on " + basis[k].name());
    }
    SymExpansion generic;
    generic.s = s;
    for (std::size_t k = 0; k < kBasisSize; ++k)
        generic.coeffs[k] = Rational(static_cast<long>(k * k + 1), static_cast<long>(k + 2));
    check_rel(generic, "rel on generic combination");
    return r;
}

} // namespace ulrich
