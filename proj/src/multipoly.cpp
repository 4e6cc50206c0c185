#include "ulrich/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace ulrich {

namespace {

constexpr std::uint64_t carry_mask() {
    std::uint64_t m = 0;
    for (unsigned k = 1; k <= kMaxVars; ++k)
        m |= std::uint64_t{1} << (kExponentBits * k);
    return m;
}

void sort_and_combine(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Term acc = std::move(terms[i]);
        std::size_t j = i + 1;
        for (; j < terms.size() && terms[j].monomial == acc.monomial; ++j)
            acc.coeff += terms[j].coeff;
        if (!acc.coeff.is_zero())
            terms[out++] = std::move(acc);
        i = j;
    }
    terms.resize(out);
}

} // namespace

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
    if (exps.size() > kMaxVars)
        throw DimensionError("too many variables for packed monomial");
    std::uint64_t bits = 0;
    for (unsigned i = 0; i < exps.size(); ++i) {
        if (exps[i] > kMaxExponent)
            throw ExponentOverflow("exponent " + std::to_string(exps[i]) + " exceeds packed width");
        bits |= std::uint64_t{exps[i]} << shift(i);
    }
    return Monomial(bits);
}

Monomial Monomial::with_exponent(unsigned var, unsigned e) const {
    if (e > kMaxExponent)
        throw ExponentOverflow("exponent exceeds packed width");
    std::uint64_t cleared = bits_ & ~(std::uint64_t{kMaxExponent} << shift(var));
    return Monomial(cleared | (std::uint64_t{e} << shift(var)));
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned i = 0; i < kMaxVars; ++i) d += exponent(i);
    return d;
}

ExponentVector Monomial::exponents(unsigned nvars) const {
    ExponentVector v(nvars);
    for (unsigned i = 0; i < nvars; ++i) v[i] = exponent(i);
    return v;
}

Monomial Monomial::operator*(Monomial o) const {
    std::uint64_t s = bits_ + o.bits_;
    if ((bits_ ^ o.bits_ ^ s) & carry_mask())
        throw ExponentOverflow("exponent overflow in monomial product");
    return Monomial(s);
}

MultiPoly::MultiPoly(unsigned nvars) : nvars_(nvars) {
    if (nvars == 0 || nvars > kMaxVars)
        throw DimensionError("variable count " + std::to_string(nvars) + " outside 1.." +
                             std::to_string(kMaxVars));
}

MultiPoly MultiPoly::constant(unsigned nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned var) {
    MultiPoly p(nvars);
    if (var >= nvars) throw DimensionError("variable index out of range");
    p.terms_.push_back({Monomial{}.with_exponent(var, 1), Rational(1)});
    return p;
}

MultiPoly MultiPoly::monomial(unsigned nvars, const ExponentVector& exps, const Rational& c) {
    MultiPoly p(nvars);
    if (exps.size() != nvars) throw DimensionError("exponent vector length mismatch");
    if (!c.is_zero()) p.terms_.push_back({Monomial::from_exponents(exps), c});
    return p;
}

MultiPoly MultiPoly::from_terms(unsigned nvars, std::vector<Term> terms) {
    MultiPoly p(nvars);
    for (const auto& t : terms)
        for (unsigned v = nvars; v < kMaxVars; ++v)
            if (t.monomial.exponent(v) != 0)
                throw DimensionError("term uses a variable beyond nvars");
    sort_and_combine(terms);
    p.terms_ = std::move(terms);
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.total_degree()));
    return d;
}

Rational MultiPoly::coefficient_of(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial key) { return t.monomial > key; });
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return Rational(0);
}

Rational MultiPoly::coefficient_of(const ExponentVector& exps) const {
    if (exps.size() != nvars_) throw DimensionError("exponent vector length mismatch");
    for (unsigned e : exps)
        if (e > kMaxExponent) return Rational(0);
    return coefficient_of(Monomial::from_exponents(exps));
}

void MultiPoly::check_same(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " +
                             std::to_string(o.nvars_) + " variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->monomial > a->monomial) {
            out.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (!c.is_zero()) out.push_back({a->monomial, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MultiPoly operator-(MultiPoly a) {
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly out(a.nvars_);
    if (a.is_zero() || b.is_zero()) return out;
    if (a.size() == 1 || b.size() == 1) {
        const MultiPoly& single = a.size() == 1 ? a : b;
        const MultiPoly& other = a.size() == 1 ? b : a;
        const Term& s = single.terms_.front();
        out.terms_.reserve(other.size());
        // Multiplying by one monomial preserves the order.
        for (const auto& t : other.terms_)
            out.terms_.push_back({t.monomial * s.monomial, t.coeff * s.coeff});
        return out;
    }
    std::unordered_map<std::uint64_t, Rational> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            Monomial m = ta.monomial * tb.monomial;
            acc[m.packed()] += ta.coeff * tb.coeff;
        }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (!c.is_zero()) terms.push_back({Monomial::from_packed(k), std::move(c)});
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.monomial > y.monomial; });
    out.terms_ = std::move(terms);
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw DimensionError("evaluation point length mismatch");
    int deg = std::max(total_degree(), 0);
    std::vector<std::vector<Rational>> powers(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        powers[i].reserve(deg + 1);
        powers[i].push_back(Rational(1));
        for (int e = 1; e <= deg; ++e) powers[i].push_back(powers[i].back() * point[i]);
    }
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (unsigned i = 0; i < nvars_; ++i) {
            unsigned e = t.monomial.exponent(i);
            if (e) v *= powers[i][e];
        }
        sum += v;
    }
    return sum;
}

Rational MultiPoly::eval(std::span<const long> point) const {
    std::vector<Rational> q(point.begin(), point.end());
    return eval(q);
}

MultiPoly MultiPoly::substitute_ones(unsigned k) const {
    if (k < 1 || k > nvars_)
        throw DimensionError("substitute_ones: k=" + std::to_string(k) + " outside 1.." +
                             std::to_string(nvars_));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = t.monomial;
        for (unsigned v = k; v < nvars_; ++v) m = m.with_exponent(v, 0);
        out.push_back({m, t.coeff});
    }
    return from_terms(k, std::move(out));
}

MultiPoly MultiPoly::divide_all_vars() const {
    std::uint64_t ones = 0;
    for (unsigned v = 0; v < nvars_; ++v) ones |= std::uint64_t{1} << Monomial::shift(v);
    MultiPoly out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        for (unsigned v = 0; v < nvars_; ++v)
            if (t.monomial.exponent(v) == 0)
                throw NotDivisibleError("term misses x" + std::to_string(v + 1));
        // Subtracting 1 from every field never borrows across fields here.
        out.terms_.push_back({Monomial::from_packed(t.monomial.packed() - ones), t.coeff});
    }
    return out;
}

MultiPoly MultiPoly::permute(std::span<const unsigned> perm) const {
    if (perm.size() != nvars_) throw DimensionError("permutation length mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (unsigned v = 0; v < nvars_; ++v) m = m.with_exponent(perm[v], t.monomial.exponent(v));
        out.push_back({m, t.coeff});
    }
    return from_terms(nvars_, std::move(out));
}

MultiPoly MultiPoly::extend(unsigned nvars) const {
    if (nvars < nvars_) throw DimensionError("extend cannot drop variables");
    MultiPoly out(nvars);
    out.terms_ = terms_;
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff << " *";
        for (unsigned v = 0; v < nvars_; ++v)
            os << (v ? "*" : " ") << 'x' << (v + 1) << '^' << t.monomial.exponent(v);
    }
    return os.str();
}

MultiPoly MultiPoly::parse(std::string_view text, unsigned nvars) {
    MultiPoly p(nvars);
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("polynomial parse error: " + why);
    };
    std::string s(text);
    if (s == "0") return p;
    std::vector<std::string> pieces;
    for (std::size_t pos = 0;;) {
        auto next = s.find(" + ", pos);
        pieces.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    std::vector<Term> terms;
    for (const auto& piece : pieces) {
        auto star = piece.find(" * ");
        Rational c = Rational::parse(piece.substr(0, star));
        ExponentVector exps(nvars, 0);
        if (star != std::string::npos) {
            std::string rest = piece.substr(star + 3);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                auto next = rest.find('*', pos);
                std::string factor = rest.substr(pos, next == std::string::npos ? std::string::npos
                                                                                 : next - pos);
                if (factor.size() < 2 || factor[0] != 'x') fail("bad factor '" + factor + "'");
                auto caret = factor.find('^');
                unsigned var = 0, e = 1;
                try {
                    var = static_cast<unsigned>(std::stoul(factor.substr(1, caret - 1)));
                    if (caret != std::string::npos)
                        e = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
                } catch (const std::exception&) {
                    fail("bad factor '" + factor + "'");
                }
                if (var < 1 || var > nvars) fail("variable x" + std::to_string(var) + " out of range");
                exps[var - 1] += e;
                if (next == std::string::npos) break;
                pos = next + 1;
            }
        }
        terms.push_back({Monomial::from_exponents(exps), c});
    }
    return from_terms(nvars, std::move(terms));
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
    MultiPoly acc = MultiPoly::constant(p.nvars(), 1);
    for (unsigned i = 0; i < e; ++i) acc *= p;
    return acc;
}

MultiPoly sum_of_variables(unsigned nvars) {
    MultiPoly p(nvars);
    for (unsigned v = 0; v < nvars; ++v) p += MultiPoly::variable(nvars, v);
    return p;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

} // namespace ulrich
