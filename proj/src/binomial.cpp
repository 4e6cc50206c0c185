#include "ulrich/binomial.hpp"

namespace ulrich {

namespace {

// Expands sum_alpha ( sum_k scale[k][|alpha|] * prod_i table[k][i][alpha_i] ) x^alpha
// over all alpha with |alpha| <= max_degree. Exponents of x1 are visited from
// high to low, so terms come out in canonical (decreasing) order.
class CompositionExpander {
public:
    using Table = std::vector<std::vector<Rational>>; // [var][exponent]

    CompositionExpander(unsigned nvars, unsigned max_degree, std::vector<Table> tables,
                        std::vector<std::vector<Rational>> scales)
        : nvars_(nvars), max_degree_(max_degree), tables_(std::move(tables)),
          scales_(std::move(scales)), partial_(nvars + 1, std::vector<Rational>(tables_.size())) {}

    MultiPoly run() {
        for (auto& p : partial_[0]) p = 1;
        visit(0, 0, Monomial{});
        return MultiPoly::from_terms(nvars_, std::move(out_));
    }

private:
    void visit(unsigned var, unsigned degree, Monomial mono) {
        if (var == nvars_) {
            Rational c = 0;
            for (std::size_t k = 0; k < tables_.size(); ++k)
                if (!scales_[k][degree].is_zero() && !partial_[var][k].is_zero())
                    c += scales_[k][degree] * partial_[var][k];
            if (!c.is_zero()) out_.push_back({mono, std::move(c)});
            return;
        }
        for (int e = static_cast<int>(max_degree_ - degree); e >= 0; --e) {
            bool all_zero = true;
            for (std::size_t k = 0; k < tables_.size(); ++k) {
                partial_[var + 1][k] = partial_[var][k] * tables_[k][var][e];
                all_zero = all_zero && partial_[var + 1][k].is_zero();
            }
            if (all_zero) continue;
            visit(var + 1, degree + e, mono.with_exponent(var, e));
        }
    }

    unsigned nvars_;
    unsigned max_degree_;
    std::vector<Table> tables_;
    std::vector<std::vector<Rational>> scales_;
    std::vector<std::vector<Rational>> partial_;
    std::vector<Term> out_;
};

std::vector<Rational> inverse_factorials(unsigned m) {
    std::vector<Rational> inv(m + 1);
    for (unsigned e = 0; e <= m; ++e) inv[e] = Rational(Integer(1), factorial(e));
    return inv;
}

} // namespace

MultiPoly binom_poly(const MultiPoly& arg, long m) {
    if (m < 0) throw DomainError("binomial with negative lower index");
    MultiPoly acc = MultiPoly::constant(arg.nvars(), 1);
    for (long j = 0; j < m; ++j) {
        acc *= arg - MultiPoly::constant(arg.nvars(), Rational(j));
        acc *= Rational(Integer(1), Integer(j + 1));
    }
    return acc;
}

std::vector<Rational> shifted_binomial_coefficients(const Rational& c, unsigned m) {
    std::vector<Rational> g{Rational(1)};
    for (unsigned k = 0; k < m; ++k) {
        // Multiply by (t + c - k) / (k + 1).
        Rational shift = (c - Rational(static_cast<long>(k)));
        Rational inv(Integer(1), Integer(k + 1));
        std::vector<Rational> next(g.size() + 1);
        for (std::size_t j = 0; j < g.size(); ++j) {
            next[j + 1] += g[j] * inv;
            next[j] += g[j] * shift * inv;
        }
        g = std::move(next);
    }
    return g;
}

MultiPoly binom_linear(std::span<const Rational> weights, const Rational& c, unsigned m) {
    const unsigned nvars = static_cast<unsigned>(weights.size());
    auto g = shifted_binomial_coefficients(c, m);
    auto inv_fact = inverse_factorials(m);
    CompositionExpander::Table table(nvars, std::vector<Rational>(m + 1));
    for (unsigned i = 0; i < nvars; ++i) {
        Rational p = 1;
        for (unsigned e = 0; e <= m; ++e) {
            table[i][e] = p * inv_fact[e];
            p *= weights[i];
        }
    }
    std::vector<Rational> scale(m + 1);
    for (unsigned j = 0; j <= m; ++j) scale[j] = g[j] * Rational(factorial(j));
    return CompositionExpander(nvars, m, {std::move(table)}, {std::move(scale)}).run();
}

MultiPoly alternating_subset_binomial_sum(unsigned s, const Rational& rho, const Rational& c,
                                          unsigned m) {
    auto g = shifted_binomial_coefficients(c, m);
    auto inv_fact = inverse_factorials(m);
    const Rational one_plus = rho + Rational(1);
    std::vector<Rational> all_sets(m + 1), empty_set(m + 1);
    for (unsigned e = 0; e <= m; ++e) {
        Rational in_t = pow(one_plus, e);
        Rational out_t = pow(rho, e);
        // Element i contributes rho^e when absent from T and -(1+rho)^e when present.
        all_sets[e] = (out_t - in_t) * inv_fact[e];
        empty_set[e] = out_t * inv_fact[e];
    }
    CompositionExpander::Table t_all(s, all_sets), t_empty(s, empty_set);
    const Rational sign = (s % 2 == 0) ? Rational(1) : Rational(-1);
    std::vector<Rational> scale_all(m + 1), scale_empty(m + 1);
    for (unsigned j = 0; j <= m; ++j) {
        Rational base = g[j] * Rational(factorial(j)) * sign;
        scale_all[j] = base;
        scale_empty[j] = -base;
    }
    return CompositionExpander(s, m, {std::move(t_all), std::move(t_empty)},
                               {std::move(scale_all), std::move(scale_empty)})
        .run();
}

} // namespace ulrich
