#include "ulrich/appendix.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "ulrich/closed_forms.hpp"
#include "ulrich/symmetric.hpp"
#include "ulrich/ulrich_functions.hpp"

namespace ulrich {

namespace {

std::string fn_name(long r, long m) {
    return "f_{s," + std::to_string(r) + "," + std::to_string(m) + "}";
}

Json rm_params(unsigned s, long r, long m) {
    Json p;
    p["s"] = s;
    p["r"] = r;
    p["m"] = m;
    return p;
}

void require_s4(unsigned s, const char* what) {
    if (s < 4) throw DimensionError(std::string(what) + " needs s >= 4");
}

// Compares a computed coefficient vector with a stated one entry by entry.
void compare_coeffs(Report& report, const std::string& prefix, const BasisCoeffs& got,
                    const BasisCoeffs& want) {
    const auto& basis = degree4_basis();
    for (std::size_t i = 0; i < kBasisSize; ++i) {
        bool ok = got[i] == want[i];
        report.add(prefix + " " + basis[i].name(), ok,
                   ok ? "" : "computed " + got[i].str() + ", stated " + want[i].str());
    }
}

std::string tuple_str(const std::vector<long>& t) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ')';
    return os.str();
}

MultiPoly derivative(const MultiPoly& p, unsigned var) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        unsigned e = t.monomial.exponent(var);
        if (e == 0) continue;
        terms.push_back({t.monomial.with_exponent(var, e - 1), t.coeff * Rational(static_cast<long>(e))});
    }
    return MultiPoly::from_terms(p.nvars(), std::move(terms));
}

} // namespace

Report verify_tf0(unsigned s, long r, long m) {
    Report report;
    report.lemma = "tf0";
    report.parameters = rm_params(s, r, m);
    const MultiPoly f = build_f(s, r, m);
    report.add(fn_name(r, m) + " symmetric", is_symmetric(f));
    for (unsigned k = 1; k < s; ++k) {
        bool ok = f.substitute_ones(k) == build_f(k, r, m);
        report.add("restriction to k=" + std::to_string(k), ok);
    }
    return report;
}

Report verify_tf1(unsigned s, long r, long m) {
    Report report;
    report.lemma = "tf1";
    report.parameters = rm_params(s, r, m);
    const MultiPoly f = build_f(s, r, m);
    try {
        MultiPoly p = f.divide_all_vars();
        report.add("x1...xs divides " + fn_name(r, m), true);
        // x_i | f for each i separately: the quotient times x1..xs gives f back.
        report.add("quotient reconstructs " + fn_name(r, m),
                   p * monomial_sym(Partition::ones(s), s) == f);
    } catch (const NotDivisibleError& e) {
        report.add("x1...xs divides " + fn_name(r, m), false, e.what());
    }
    return report;
}

Report verify_tf2bis(unsigned s, unsigned samples, std::uint64_t seed) {
    Report report = verify_restriction_identities(s);
    report.parameters["samples"] = samples;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 6);
    unsigned agree = 0;
    std::string first_bad;
    for (unsigned i = 0; i < samples; ++i) {
        SymExpansion e;
        e.s = s;
        for (auto& c : e.coeffs) c = Rational(Integer(num(rng)), Integer(den(rng)));
        const MultiPoly g = e.reconstruct();
        const SymExpansion direct = expand_direct(g), restricted = expand_via_restriction(g);
        if (direct == e && restricted == e) ++agree;
        else if (first_bad.empty()) first_bad = "sample " + std::to_string(i);
    }
    report.add("expand_direct = expand_via_restriction on " + std::to_string(samples) +
                   " random symmetric polynomials",
               agree == samples, first_bad);
    return report;
}

Report verify_gl1(unsigned s) {
    require_s4(s, "gl1");
    Report report;
    report.lemma = "gl1";
    report.parameters["s"] = s;
    const std::pair<long, long> rm[] = {{2, 0}, {3, 0}, {3, 1}};
    const BasisCoeffs g2[] = {p4_f20(), p4_f30(), p4_f31()};
    const auto& forms = gl1_closed_forms();
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const auto [r, m] = rm[i];
        MultiPoly p = build_f(s, r, m).divide_all_vars();
        p *= Rational(1) / forms[i].scale;
        const SymExpansion direct = expand_direct(p);
        compare_coeffs(report, "p" + fn_name(r, m).substr(1), direct.coeffs, forms[i].coeffs(s));
        if (s > 4)
            report.add("p" + fn_name(r, m).substr(1) + " restriction route agrees",
                       expand_via_restriction(p) == direct);
        else
            compare_coeffs(report, "p_{4," + std::to_string(r) + "," + std::to_string(m) + "} integer",
                           direct.coeffs, g2[i]);
    }
    return report;
}

Report verify_gl2(unsigned s) {
    Report report;
    report.lemma = "gl2";
    report.parameters["s"] = s;
    const GiFamily gi = build_gi(s);
    const MultiPoly* built[] = {&gi.g4, &gi.delta, &gi.h, &gi.k, &gi.c, &gi.chi_prime};
    const auto& forms = gl2_closed_forms();
    if (s < 4) report.parameters["mode"] = "polynomial";
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (s < 4) {
            MultiPoly diff = *built[i] - closed_form_polynomial(forms[i], s);
            report.add(forms[i].name + " polynomial identity", diff.is_zero(),
                       diff.is_zero() ? "" : "difference " + diff.to_string());
            continue;
        }
        MultiPoly p = built[i]->divide_all_vars();
        p *= Rational(1) / forms[i].scale;
        compare_coeffs(report, forms[i].name, expand_direct(p).coeffs, forms[i].coeffs(s));
    }
    return report;
}

Report verify_gl4(unsigned s) {
    require_s4(s, "gl4");
    Report report;
    report.lemma = "gl4";
    report.parameters["s"] = s;
    const GiFamily gi = build_gi(s);
    const MultiPoly ones = monomial_sym(Partition::ones(s), s);
    {
        MultiPoly lhs = gi.g4 - build_f(s, 2, 0);
        MultiPoly rhs = Rational(Integer(1), Integer(4320)) * (ones * build_q(s, 8));
        MultiPoly diff = lhs - rhs;
        report.add("(1) g_{4,s} - f_{s,2,0} = m_{1^s} q_{s,8}/4320", diff.is_zero(),
                   diff.is_zero() ? "" : "difference " + diff.to_string());
    }
    {
        MultiPoly lhs = gi.chi_prime - build_f(s, 3, 0);
        MultiPoly rhs = Rational(Integer(1), Integer(3840)) * (ones * build_q(s, 9));
        MultiPoly diff = lhs - rhs;
        report.add("(2) chi'_s - f_{s,3,0} = m_{1^s} q_{s,9}/3840", diff.is_zero(),
                   diff.is_zero() ? "" : "difference " + diff.to_string());
    }
    return report;
}

std::uint64_t ScanResult::total_tuples() const {
    std::uint64_t n = 0;
    for (const auto& row : rows) n += row.tuples;
    return n;
}

std::vector<std::vector<long>> decreasing_tuples(unsigned s, unsigned d_max) {
    std::vector<std::vector<long>> out;
    if (s == 0 || d_max == 0) return out;
    std::vector<long> t(s, 1);
    // Odometer over weakly decreasing tuples, emitted in increasing lex order.
    for (;;) {
        out.push_back(t);
        int i = static_cast<int>(s) - 1;
        // Find the rightmost position that can still grow.
        while (i >= 0 && (t[i] == static_cast<long>(d_max) || (i > 0 && t[i] == t[i - 1]))) --i;
        if (i < 0) break;
        ++t[i];
        for (unsigned j = i + 1; j < s; ++j) t[j] = 1;
    }
    return out;
}

ScanResult run_cg_scan(const ScanOptions& options) {
    if (options.s_min < 2 || options.s_max < options.s_min)
        throw std::invalid_argument("scan needs 2 <= s_min <= s_max");
    if (options.s_max > kMaxVars) throw DimensionError("scan s exceeds the variable limit");
    if (options.d_max < 2) throw std::invalid_argument("scan needs d_max >= 2");
    if (options.workers < 1) throw std::invalid_argument("scan needs at least one worker");

    ScanResult result;
    result.options = options;
    for (long b : options.bs) {
        for (unsigned s = options.s_min; s <= options.s_max; ++s) {
            const MultiPoly q = build_q(s, b);
            const auto tuples = decreasing_tuples(s, options.d_max);
            std::vector<Rational> values(tuples.size());
            const std::size_t workers = std::min<std::size_t>(options.workers, tuples.size());
            auto work = [&](std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i)
                    values[i] = q.eval(std::span<const long>(tuples[i]));
            };
            if (workers <= 1) {
                work(0, tuples.size());
            } else {
                std::vector<std::thread> pool;
                const std::size_t chunk = (tuples.size() + workers - 1) / workers;
                for (std::size_t w = 0; w < workers; ++w) {
                    std::size_t begin = w * chunk, end = std::min(tuples.size(), begin + chunk);
                    if (begin < end) pool.emplace_back(work, begin, end);
                }
                for (auto& th : pool) th.join();
            }

            ScanRow row;
            row.b = b;
            row.s = s;
            bool have_min = false;
            for (std::size_t i = 0; i < tuples.size(); ++i) {
                const bool all_ones = tuples[i].front() == 1; // decreasing, so max entry is 1
                if (options.keep_values) result.values.push_back({b, tuples[i], values[i]});
                if (all_ones) {
                    row.all_ones_value = values[i];
                    continue;
                }
                ++row.tuples;
                if (!have_min || values[i] < row.min_value) {
                    row.min_value = values[i];
                    row.argmin = tuples[i];
                    have_min = true;
                }
                if (values[i].sign() <= 0) result.violations.push_back({b, tuples[i], values[i]});
            }
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

Report scan_report(const ScanResult& result) {
    Report report;
    report.lemma = "cg";
    report.parameters["s_min"] = result.options.s_min;
    report.parameters["s_max"] = result.options.s_max;
    report.parameters["d_max"] = result.options.d_max;
    report.parameters["b"] = result.options.bs;
    report.parameters["tuples"] = result.total_tuples();
    for (const auto& row : result.rows) {
        const std::string tag = "b=" + std::to_string(row.b) + " s=" + std::to_string(row.s);
        report.add(tag + " all-ones value is 0", row.all_ones_value.is_zero(),
                   "q(1,...,1) = " + row.all_ones_value.str());
        report.add(tag + " positive on " + std::to_string(row.tuples) + " tuples",
                   row.min_value.sign() > 0,
                   "min " + row.min_value.str() + " at " + tuple_str(row.argmin));
    }
    if (!result.violations.empty()) {
        const auto& v = result.violations.front();
        report.witness = "b=" + std::to_string(v.b) + " " + tuple_str(v.tuple) + " q=" + v.value.str();
    }
    return report;
}

Report verify_cg_scan(unsigned s_max, unsigned d_max, unsigned workers) {
    ScanOptions options;
    options.s_max = s_max;
    options.d_max = d_max;
    options.workers = workers;
    return scan_report(run_cg_scan(options));
}

Report verify_cg_induction(unsigned s, long b) {
    if (s < 2) throw DimensionError("cg induction needs s >= 2");
    if (s + 1 > kMaxVars) throw DimensionError("cg induction s exceeds the variable limit");
    Report report;
    report.lemma = "cg-induction";
    report.parameters["s"] = s;
    report.parameters["b"] = b;
    const Rational S(static_cast<long>(s)), B(b);

    // (a) q_{s+1,b} = q_{s,b} + b x^4 + 10 x^2 [m2(s) - s - 1] - 10 m2(s) + 10s - b + 10, x = x_{s+1}
    {
        const unsigned n = s + 1;
        const MultiPoly x = MultiPoly::variable(n, s);
        const MultiPoly m2 = monomial_sym(Partition{2}, s).extend(n);
        MultiPoly rhs = build_q(s, b).extend(n);
        rhs += B * pow(x, 4);
        rhs += Rational(10) * (x * x * (m2 - MultiPoly::constant(n, S + Rational(1))));
        rhs -= Rational(10) * m2;
        rhs += MultiPoly::constant(n, Rational(10) * S - B + Rational(10));
        MultiPoly diff = build_q(n, b) - rhs;
        report.add("recursion q_{s+1,b} = q_{s,b} + r_b(x_{s+1})", diff.is_zero(),
                   diff.is_zero() ? "" : "difference " + diff.to_string());
    }

    // r_b as a polynomial in (M, t) with M standing for m2(s)(d_1..d_s).
    const MultiPoly M = MultiPoly::variable(2, 0), t = MultiPoly::variable(2, 1);
    MultiPoly rb = B * pow(t, 4);
    rb += Rational(10) * (t * t * (M - MultiPoly::constant(2, S + Rational(1))));
    rb -= Rational(10) * M;
    rb += MultiPoly::constant(2, Rational(10) * S - B + Rational(10));

    // (b) r_b(1) = 0 identically in M.
    {
        MultiPoly at_one = rb.substitute_ones(1);
        report.add("r_b(1) = 0", at_one.is_zero(), at_one.is_zero() ? "" : at_one.to_string());
    }

    // (c) r_b'(t) = 4b t^3 + 20 t (M - s - 1), positive for t >= 1 when M >= s + 1.
    const MultiPoly drb = derivative(rb, 1);
    {
        MultiPoly expected = Rational(4) * B * pow(t, 3);
        expected += Rational(20) * (t * (M - MultiPoly::constant(2, S + Rational(1))));
        report.add("r_b'(t) = 4bt^3 + 20t(M - s - 1)", drb == expected);
    }
    {
        bool ok = true;
        std::string where;
        for (long mv = s + 1; mv <= static_cast<long>(s) + 60 && ok; ++mv)
            for (long tv = 1; tv <= 16 && ok; ++tv) {
                const long pt[] = {mv, tv};
                if (drb.eval(std::span<const long>(pt)).sign() <= 0 ||
                    rb.eval(std::span<const long>(pt)).sign() < 0) {
                    ok = false;
                    where = "M=" + std::to_string(mv) + " t=" + std::to_string(tv);
                }
            }
        report.add("r_b' > 0 and r_b >= 0 on samples t >= 1, M >= s+1", ok, where);
    }
    {
        // Tuples with product >= 2 have m2 >= s + 3 >= s + 1.
        bool ok = true;
        std::string where;
        for (const auto& d : decreasing_tuples(s, 6)) {
            if (d.front() == 1) continue;
            long m2 = 0;
            for (long v : d) m2 += v * v;
            if (m2 < static_cast<long>(s) + 1) {
                ok = false;
                where = tuple_str(d);
                break;
            }
        }
        report.add("m2(d) >= s+1 when prod d >= 2", ok, where);
    }
    {
        // All-ones base: M = s gives r_b(d) = b d^4 - 10 d^2 - b + 10.
        bool ok = true;
        std::string where;
        for (long dv = 2; dv <= 30 && ok; ++dv) {
            const long pt[] = {static_cast<long>(s), dv};
            Rational v = rb.eval(std::span<const long>(pt));
            Rational closed = B * Rational(dv * dv * dv * dv) - Rational(10 * dv * dv) - B + Rational(10);
            if (v != closed || v.sign() <= 0) {
                ok = false;
                where = "d=" + std::to_string(dv) + " value " + v.str();
            }
        }
        report.add("r_b(d) = bd^4 - 10d^2 - b + 10 > 0 for d >= 2 at all-ones", ok, where);
    }
    return report;
}

} // namespace ulrich
