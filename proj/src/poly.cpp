#include "utcell/poly.hpp"

#include "json.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace utcell {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(const Root& r, int exp) {
    if (exp < 0) throw std::invalid_argument("Monomial::var: negative exponent");
    Monomial m;
    if (exp > 0) m.factors.emplace_back(r, exp);
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [r, e] : factors) d += e;
    return d;
}

int Monomial::exponent(const Root& r) const {
    for (const auto& [v, e] : factors)
        if (v == r) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < factors.size() || j < other.factors.size()) {
        if (j == other.factors.size() ||
            (i < factors.size() && root_after(factors[i].first, other.factors[j].first))) {
            out.factors.push_back(factors[i++]);
        } else if (i == factors.size() || root_after(other.factors[j].first, factors[i].first)) {
            out.factors.push_back(other.factors[j++]);
        } else {
            out.factors.emplace_back(factors[i].first, factors[i].second + other.factors[j].second);
            ++i; ++j;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    std::size_t j = 0;
    for (const auto& [v, e] : factors) {
        while (j < other.factors.size() && root_after(other.factors[j].first, v)) ++j;
        if (j == other.factors.size() || !(other.factors[j].first == v) || other.factors[j].second < e)
            return false;
    }
    return true;
}

Monomial Monomial::divide(const Monomial& other) const {
    Monomial out;
    std::size_t j = 0;
    for (const auto& [v, e] : factors) {
        int sub = 0;
        while (j < other.factors.size() && root_after(other.factors[j].first, v)) ++j;
        if (j < other.factors.size() && other.factors[j].first == v) sub = other.factors[j].second;
        if (e < sub) throw std::invalid_argument("Monomial::divide: not divisible");
        if (e > sub) out.factors.emplace_back(v, e - sub);
    }
    return out;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        const Root& ra = a.factors[i].first;
        const Root& rb = b.factors[j].first;
        if (ra == rb) {
            if (a.factors[i].second != b.factors[j].second)
                return a.factors[i].second > b.factors[j].second;
            ++i; ++j;
        } else if (root_after(ra, rb)) {
            return true;   // a carries the earlier variable
        } else {
            return false;
        }
    }
    return i < a.factors.size();
}

std::string Monomial::to_text() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (!first) os << '*';
        first = false;
        os << "x[" << it->first.row << ',' << it->first.col << ']';
        if (it->second != 1) os << '^' << it->second;
    }
    return os.str();
}

// ------------------------------------------------------------------- Point

Point Point::make(int n, const std::map<Root, Rational, SuccDesc>& entries) {
    Point p;
    p.n = n;
    for (const auto& [r, v] : entries) {
        if (!r.positive() || !r.within(n))
            throw std::invalid_argument("Point: entry " + to_string(r) + " is not below the diagonal");
        if (v != 0) p.entries[r] = v;
    }
    return p;
}

Rational Point::get(const Root& r) const {
    auto it = entries.find(r);
    return it == entries.end() ? Rational(0) : it->second;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
    if (c != 0) terms_[Monomial::one()] = c;
}

Poly Poly::var(const Root& r) {
    if (!r.positive()) throw std::invalid_argument("Poly::var: root must be positive");
    Poly p;
    p.terms_[Monomial::var(r)] = 1;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Poly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
    return std::nullopt;
}

std::pair<Monomial, Rational> Poly::leading() const {
    if (terms_.empty()) throw std::logic_error("Poly::leading: zero polynomial");
    return *terms_.begin();
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

RootSet Poly::support() const {
    RootSet out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors) out.insert(v);
    return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            out.add_term(m1.times(m2), c1 * c2);
    return out;
}

Poly Poly::scale(const Rational& c) const {
    Poly out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly out(Rational(1));
    for (int k = 0; k < e; ++k) out = out * *this;
    return out;
}

Poly Poly::derivative(const Root& r) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(r);
        if (e == 0) continue;
        out.add_term(m.divide(Monomial::var(r)), c * e);
    }
    return out;
}

Rational Poly::evaluate(const Point& p) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [var, e] : m.factors) {
            Rational x = p.get(var);
            for (int k = 0; k < e; ++k) v *= x;
            if (v == 0) break;
        }
        total += v;
    }
    return total;
}

RatFn Poly::substitute(const Root& r, const RatFn& value) const {
    // Horner in the substituted variable keeps the RatFn work shallow.
    std::map<int, Poly> by_exp;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(r);
        Monomial rest = e > 0 ? m.divide(Monomial::var(r, e)) : m;
        by_exp[e].add_term(rest, c);
    }
    RatFn out;
    int cur = -1;
    for (auto it = by_exp.rbegin(); it != by_exp.rend(); ++it) {
        if (cur < 0) {
            out = RatFn(it->second);
            cur = it->first;
        } else {
            while (cur > it->first) { out = out * value; --cur; }
            out = out + RatFn(it->second);
        }
    }
    while (cur > 0) { out = out * value; --cur; }
    if (cur < 0) return RatFn();
    return out;
}

RatFn Poly::substitute_all(const std::map<Root, RatFn, SuccDesc>& images) const {
    std::map<Root, std::vector<RatFn>, SuccDesc> powers;
    auto power = [&](const Root& r, int e) -> RatFn {
        auto& cache = powers[r];
        if (cache.empty()) cache.push_back(RatFn(Poly(Rational(1))));
        auto it = images.find(r);
        const RatFn base = it == images.end() ? RatFn::var(r) : it->second;
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * base);
        return cache[static_cast<std::size_t>(e)];
    };
    RatFn out;
    for (const auto& [m, c] : terms_) {
        RatFn term{Poly(c)};
        for (const auto& [v, e] : m.factors) term = term * power(v, e);
        out = out + term;
    }
    return out;
}

Rational Poly::content_unit() const {
    if (terms_.empty()) return Rational(1);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading().second < 0) content = -content;
    return content;
}

Poly Poly::primitive_part() const {
    if (terms_.empty()) return *this;
    return scale(1 / content_unit());
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("Poly::divide_exact: division by zero polynomial");
    Poly quotient;
    Poly rem = *this;
    const auto [dm, dc] = divisor.leading();
    while (!rem.is_zero()) {
        const auto [rm, rc] = rem.leading();
        if (!dm.divides(rm)) return std::nullopt;
        Monomial qm = rm.divide(dm);
        Rational qc = rc / dc;
        Poly qt;
        qt.add_term(qm, qc);
        quotient = quotient + qt;
        rem = rem - qt * divisor;
    }
    return quotient;
}

std::string Poly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_one()) {
            os << rational_to_string(a);
        } else {
            if (a != 1) os << rational_to_string(a) << '*';
            os << m.to_text();
        }
    }
    return os.str();
}

std::string Poly::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json vars = nlohmann::json::array();
        for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it)
            vars.push_back({it->first.row, it->first.col, it->second});
        j.push_back({{"coeff", rational_to_string(c)}, {"vars", vars}});
    }
    return j.dump();
}

// ------------------------------------------------------------------- RatFn

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RatFn::normalize() {
    if (den_.is_zero()) throw std::invalid_argument("RatFn: division by zero polynomial");
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    // Shared monomial factor (componentwise min over every term of both).
    auto mono_gcd = [](const Poly& p) {
        Monomial g = p.terms().begin()->first;
        for (const auto& [m, c] : p.terms()) {
            Monomial next;
            for (const auto& [v, e] : g.factors) {
                int o = m.exponent(v);
                if (o > 0) next.factors.emplace_back(v, std::min(e, o));
            }
            g = next;
            if (g.is_one()) break;
        }
        return g;
    };
    Monomial gn = mono_gcd(num_), gd = mono_gcd(den_);
    Monomial shared;
    for (const auto& [v, e] : gn.factors) {
        int o = gd.exponent(v);
        if (o > 0) shared.factors.emplace_back(v, std::min(e, o));
    }
    if (!shared.is_one()) {
        Poly n2, d2;
        for (const auto& [m, c] : num_.terms()) n2.add_term(m.divide(shared), c);
        for (const auto& [m, c] : den_.terms()) d2.add_term(m.divide(shared), c);
        num_ = n2;
        den_ = d2;
    }
    if (!den_.is_constant()) {
        if (auto q = num_.divide_exact(den_)) {
            num_ = *q;
            den_ = Poly(Rational(1));
        }
    }
    Rational t = den_.content_unit();
    den_ = den_.scale(1 / t);
    num_ = num_.scale(1 / t);
}

Poly RatFn::to_poly() const {
    if (auto c = den_.as_constant()) return num_.scale(1 / *c);
    throw std::invalid_argument("RatFn::to_poly: denominator is not constant");
}

RatFn RatFn::operator-() const {
    RatFn out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFn RatFn::operator+(const RatFn& o) const {
    if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
    if (den_ == o.den_) return RatFn(num_ - o.num_, den_);
    return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
    return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.num_.is_zero()) throw std::invalid_argument("RatFn: division by zero");
    return RatFn(num_ * o.den_, den_ * o.num_);
}

bool RatFn::equals(const RatFn& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

Rational RatFn::evaluate(const Point& p) const {
    Rational d = den_.evaluate(p);
    if (d == 0) throw eval_error("RatFn::evaluate: denominator vanishes at the point");
    return num_.evaluate(p) / d;
}

RatFn RatFn::substitute(const Root& r, const RatFn& value) const {
    return num_.substitute(r, value) / den_.substitute(r, value);
}

RatFn RatFn::substitute_all(const std::map<Root, RatFn, SuccDesc>& images) const {
    return num_.substitute_all(images) / den_.substitute_all(images);
}

RootSet RatFn::support() const {
    RootSet out = num_.support();
    for (const Root& r : den_.support()) out.insert(r);
    return out;
}

std::string RatFn::to_text() const {
    if (is_polynomial()) return to_poly().to_text();
    return "(" + num_.to_text() + ") / (" + den_.to_text() + ")";
}

// ----------------------------------------------------------------- Poisson

namespace {

Poly bracket_vars(const Root& a, const Root& b) {
    Poly out;
    if (a.col == b.row) out = out + Poly::var(Root{a.row, b.col});
    if (b.col == a.row) out = out - Poly::var(Root{b.row, a.col});
    return out;
}

} // namespace

Poly poisson(const Poly& f, const Poly& g) {
    Poly out;
    for (const Root& a : f.support()) {
        Poly fa = f.derivative(a);
        for (const Root& b : g.support()) {
            Poly br = bracket_vars(a, b);
            if (br.is_zero()) continue;
            out = out + fa * g.derivative(b) * br;
        }
    }
    return out;
}

RatFn poisson(const RatFn& f, const RatFn& g) {
    auto with_poly = [](const Poly& p, const RatFn& h) -> RatFn {
        RatFn top{poisson(p, h.num())};
        RatFn bot{poisson(p, h.den())};
        return (top * RatFn(h.den()) - RatFn(h.num()) * bot) / RatFn(h.den() * h.den());
    };
    RatFn a = with_poly(f.num(), g);
    RatFn b = with_poly(f.den(), g);
    return (a * RatFn(f.den()) - RatFn(f.num()) * b) / RatFn(f.den() * f.den());
}

Poly cartan_weight_action(int a, const Poly& f) {
    Poly out;
    for (const auto& [m, c] : f.terms()) {
        long k = 0;
        for (const auto& [v, e] : m.factors) {
            if (v.col == a) k += e;
            if (v.row == a) k -= e;
        }
        if (k != 0) out.add_term(m, c * k);
    }
    return out;
}

RatFn cartan_weight_action(int a, const RatFn& f) {
    RatFn top{cartan_weight_action(a, f.num())};
    RatFn bot{cartan_weight_action(a, f.den())};
    return (top * RatFn(f.den()) - RatFn(f.num()) * bot) / RatFn(f.den() * f.den());
}

namespace {

std::optional<std::vector<long>> term_weights(const Poly& f, int n) {
    std::optional<std::vector<long>> common;
    for (const auto& [m, c] : f.terms()) {
        std::vector<long> w(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& [v, e] : m.factors) {
            w[static_cast<std::size_t>(v.col)] += e;
            w[static_cast<std::size_t>(v.row)] -= e;
        }
        if (!common)
            common = w;
        else if (*common != w)
            return std::nullopt;
    }
    if (!common) common = std::vector<long>(static_cast<std::size_t>(n) + 1, 0);
    return common;
}

} // namespace

std::optional<std::vector<long>> weight_vector(const Poly& f, int n) {
    return term_weights(f, n);
}

std::optional<std::vector<long>> weight_vector(const RatFn& f, int n) {
    auto wn = term_weights(f.num(), n);
    auto wd = term_weights(f.den(), n);
    if (!wn || !wd) return std::nullopt;
    std::vector<long> out(wn->size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*wn)[i] - (*wd)[i];
    return out;
}

// ------------------------------------------------------------------ Minors

namespace {

Poly generic_entry(int r, int c, bool shifted) {
    if (r > c) return Poly::var(Root{r, c});
    if (r == c && shifted) return Poly(Rational(1));
    return Poly();
}

Poly det_expand(const std::vector<int>& rows, const std::vector<int>& cols, bool shifted) {
    const std::size_t k = rows.size();
    if (k == 0) return Poly(Rational(1));
    if (k == 1) return generic_entry(rows[0], cols[0], shifted);
    Poly out;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < k; ++j) {
        Poly e = generic_entry(rows[0], cols[j], shifted);
        if (e.is_zero()) continue;
        std::vector<int> sub_cols;
        for (std::size_t c = 0; c < k; ++c)
            if (c != j) sub_cols.push_back(cols[c]);
        Poly cof = det_expand(sub_rows, sub_cols, shifted);
        out = (j % 2 == 0) ? out + e * cof : out - e * cof;
    }
    return out;
}

} // namespace

Poly minor_poly(const MinorSpec& spec, bool shifted, int n) {
    if (spec.rows.size() != spec.cols.size())
        throw std::invalid_argument("minor_poly: row and column sets differ in size");
    std::vector<int> rows = spec.rows, cols = spec.cols;
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    for (int r : rows)
        if (r < 1 || r > n) throw std::invalid_argument("minor_poly: row index out of board");
    for (int c : cols)
        if (c < 1 || c > n) throw std::invalid_argument("minor_poly: column index out of board");
    return det_expand(rows, cols, shifted);
}

// ----------------------------------------------------------- Theta (series)

RatFn theta_generic(const Poly& p, const RatFn& q, const RatFn& a) {
    if (!poisson(RatFn(p), q).equals(RatFn(Poly(Rational(1)))))
        throw std::invalid_argument("theta_generic: {p,q} != 1");
    constexpr int kMaxOrder = 256;
    RatFn sum = a;
    RatFn d = a;
    RatFn qpow{Poly(Rational(1))};
    Rational factorial(1);
    for (int s = 1;; ++s) {
        if (s > kMaxOrder)
            throw std::runtime_error("theta_generic: derivation is not locally nilpotent on the input");
        d = poisson(RatFn(p), d);
        if (d.is_zero()) break;
        qpow = qpow * q;
        factorial *= s;
        RatFn term = d * qpow * RatFn(Poly(Rational(1) / factorial));
        sum = (s % 2 == 1) ? sum - term : sum + term;
    }
    return sum;
}

Rational evaluate(const Poly& f, const Point& p) { return f.evaluate(p); }
Rational evaluate(const RatFn& f, const Point& p) { return f.evaluate(p); }

} // namespace utcell
