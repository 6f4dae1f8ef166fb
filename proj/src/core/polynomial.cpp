#include "hg/core/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hg {

namespace {

struct Registry {
    std::mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

std::size_t parameter_index(const std::string& name) {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.index.find(name);
    if (it != r.index.end()) return it->second;
    r.names.push_back(name);
    r.index.emplace(name, r.names.size() - 1);
    return r.names.size() - 1;
}

const std::string& parameter_name(std::size_t idx) {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    return r.names.at(idx);
}

std::size_t parameter_count() {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    return r.names.size();
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::size_t idx, unsigned e) {
    Monomial m;
    if (e == 0) return m;
    m.e_.assign(idx + 1, 0);
    m.e_[idx] = e;
    return m;
}

void Monomial::trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

unsigned Monomial::total_degree() const {
    unsigned s = 0;
    for (auto x : e_) s += x;
    return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.assign(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += e_[i];
    for (std::size_t i = 0; i < o.e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() > o.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    r.e_ = e_;
    for (std::size_t i = 0; i < o.e_.size(); ++i) r.e_[i] -= o.e_[i];
    r.trim();
    return r;
}

Monomial Monomial::without(std::size_t idx) const {
    Monomial r = *this;
    if (idx < r.e_.size()) {
        r.e_[idx] = 0;
        r.trim();
    }
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    std::size_t n = std::max(a.e_.size(), b.e_.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned x = a.exponent(i), y = b.exponent(i);
        if (x != y) return x < y;
    }
    return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const mpq_class& c) {
    if (c != 0) t_.push_back({Monomial(), c});
}

Polynomial Polynomial::variable(std::size_t idx) {
    Polynomial p;
    p.t_.push_back({Monomial::var(idx), mpq_class(1)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return b.m < a.m; });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().m == t.m) {
            p.t_.back().c += t.c;
        } else {
            if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
    return p;
}

mpq_class Polynomial::constant_value() const { return t_.empty() ? mpq_class(0) : t_[0].c; }

std::vector<std::size_t> Polynomial::variables() const {
    std::set<std::size_t> s;
    for (auto& t : t_)
        for (std::size_t i = 0; i < t.m.width(); ++i)
            if (t.m.exponent(i)) s.insert(i);
    return {s.begin(), s.end()};
}

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (auto& t : t_) d = std::max(d, t.m.exponent(var));
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    auto i = a.terms().begin(), ie = a.terms().end();
    auto j = b.terms().begin(), je = b.terms().end();
    while (i != ie || j != je) {
        if (j == je || (i != ie && j->m < i->m)) {
            out.push_back(*i++);
        } else if (i == ie || i->m < j->m) {
            out.push_back({j->m, subtract ? mpq_class(-j->c) : j->c});
            ++j;
        } else {
            mpq_class c = subtract ? mpq_class(i->c - j->c) : mpq_class(i->c + j->c);
            if (c != 0) out.push_back({i->m, c});
            ++i;
            ++j;
        }
    }
    return Polynomial::from_terms(std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return merge(a, b, false);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return a;
    return merge(a, b, true);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    if (a.t_.size() == 1 && a.t_[0].m.is_one()) return b.scaled(a.t_[0].c);
    if (b.t_.size() == 1 && b.t_[0].m.is_one()) return a.scaled(b.t_[0].c);
    std::vector<Polynomial::Term> out;
    out.reserve(a.t_.size() * b.t_.size());
    for (auto& x : a.t_)
        for (auto& y : b.t_) out.push_back({x.m * y.m, x.c * y.c});
    return Polynomial::from_terms(std::move(out));
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    if (c == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& t : r.t_) t.c *= c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.t_) t.m = t.m * m;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool Polynomial::divides_into(const Polynomial& n, Polynomial* quotient) const {
    if (is_zero()) throw std::domain_error("polynomial division by zero");
    const Term& lt = leading();
    if (t_.size() == 1) {
        std::vector<Term> q;
        q.reserve(n.t_.size());
        for (auto& t : n.t_) {
            if (!lt.m.divides(t.m)) return false;
            q.push_back({t.m / lt.m, t.c / lt.c});
        }
        if (quotient) {
            quotient->t_ = std::move(q);  // order preserved by monomial division
        }
        return true;
    }
    Polynomial r = n;
    std::vector<Term> q;
    while (!r.is_zero()) {
        const Term& rt = r.leading();
        if (!lt.m.divides(rt.m)) return false;
        Term qt{rt.m / lt.m, rt.c / lt.c};
        r = r - times_monomial(qt.m).scaled(qt.c);
        q.push_back(std::move(qt));
    }
    if (quotient) *quotient = from_terms(std::move(q));
    return true;
}

Polynomial Polynomial::divexact(const Polynomial& d) const {
    Polynomial q;
    if (!d.divides_into(*this, &q)) throw std::logic_error("inexact polynomial division");
    return q;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
    for (auto& t : t_) buckets[t.m.exponent(var)].push_back({t.m.without(var), t.c});
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
}

Polynomial Polynomial::from_coefficients(std::size_t var, const std::vector<Polynomial>& cs) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < cs.size(); ++e) {
        Monomial m = Monomial::var(var, static_cast<unsigned>(e));
        for (auto& t : cs[e].t_) terms.push_back({t.m * m, t.c});
    }
    return from_terms(std::move(terms));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(mpq_class(1) / leading().c);
}

mpq_class Polynomial::evaluate(const std::map<std::size_t, mpq_class>& values) const {
    mpq_class s = 0;
    for (auto& t : t_) {
        mpq_class v = t.c;
        for (std::size_t i = 0; i < t.m.width(); ++i) {
            unsigned e = t.m.exponent(i);
            if (!e) continue;
            auto it = values.find(i);
            if (it == values.end())
                throw std::out_of_range("no value for parameter " + parameter_name(i));
            mpq_class p = 1;
            for (unsigned k = 0; k < e; ++k) p *= it->second;
            v *= p;
        }
        s += v;
    }
    return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
    return true;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.t_.size(), b.t_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.t_[i].m != b.t_[i].m) return a.t_[i].m < b.t_[i].m;
        if (a.t_[i].c != b.t_[i].c) return a.t_[i].c < b.t_[i].c;
    }
    return a.t_.size() < b.t_.size();
}

std::string Polynomial::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : t_) {
        mpq_class c = t.c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = (c == 1);
        if (!unit || t.m.is_one()) os << c.get_str();
        bool need_star = !unit;
        for (std::size_t i = 0; i < t.m.width(); ++i) {
            unsigned e = t.m.exponent(i);
            if (!e) continue;
            if (need_star) os << "*";
            os << parameter_name(i);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

// --------------------------------------------------------------------- gcd

namespace {

using Coeffs = std::vector<Polynomial>;

void strip(Coeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Univariate monic Euclid over Q in variable v.
Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b, std::size_t v) {
    auto dense = [v](const Polynomial& p) {
        std::vector<mpq_class> d(p.degree_in(v) + 1);
        for (auto& t : p.terms()) d[t.m.exponent(v)] = t.c;
        return d;
    };
    std::vector<mpq_class> x = dense(a), y = dense(b);
    auto trimq = [](std::vector<mpq_class>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trimq(x);
    trimq(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        // x <- x mod y
        mpq_class inv = mpq_class(1) / y.back();
        while (x.size() >= y.size() && !x.empty()) {
            mpq_class f = x.back() * inv;
            std::size_t shift = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] -= f * y[i];
            x.pop_back();
            trimq(x);
        }
        std::swap(x, y);
    }
    std::vector<Polynomial::Term> terms;
    for (std::size_t e = 0; e < x.size(); ++e)
        if (x[e] != 0) terms.push_back({Monomial::var(v, static_cast<unsigned>(e)), x[e]});
    return Polynomial::from_terms(std::move(terms)).monic();
}

Polynomial content_of(const Coeffs& cs) {
    Polynomial g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) return Polynomial(1);
    }
    return g;
}

Coeffs divide_all(const Coeffs& cs, const Polynomial& d) {
    Coeffs out;
    out.reserve(cs.size());
    for (auto& c : cs) out.push_back(c.divexact(d));
    return out;
}

Coeffs prem(Coeffs a, const Coeffs& b) {
    const Polynomial& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Polynomial la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c = c * lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - la * b[i];
        strip(a);
    }
    return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    auto va = a.variables(), vb = b.variables();
    std::vector<std::size_t> all;
    std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(all));
    if (all.size() == 1) return gcd_univariate(a, b, all[0]);
    std::size_t x = all.front();
    bool in_a = std::binary_search(va.begin(), va.end(), x);
    bool in_b = std::binary_search(vb.begin(), vb.end(), x);
    if (!in_a) return gcd(a, content_of(b.coefficients_in(x)));
    if (!in_b) return gcd(content_of(a.coefficients_in(x)), b);

    Coeffs A = a.coefficients_in(x), B = b.coefficients_in(x);
    Polynomial ca = content_of(A), cb = content_of(B);
    Polynomial c = gcd(ca, cb);
    A = divide_all(A, ca);
    B = divide_all(B, cb);
    if (A.size() < B.size()) std::swap(A, B);
    Coeffs g;
    while (true) {
        Coeffs r = prem(A, B);
        if (r.empty()) {
            g = B;
            break;
        }
        if (r.size() == 1) {
            g = {Polynomial(1)};
            break;
        }
        A = std::move(B);
        B = divide_all(r, content_of(r));
    }
    g = divide_all(g, content_of(g));
    return (c * Polynomial::from_coefficients(x, g)).monic();
}

}  // namespace hg
