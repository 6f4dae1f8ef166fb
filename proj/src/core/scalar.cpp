#include "hg/core/scalar.hpp"

#include <set>
#include <stdexcept>

#include "hg/core/error.hpp"

namespace hg {

Scalar Scalar::make(Polynomial num, Polynomial den) {
    if (num.is_zero()) return Scalar();
    mpq_class lc = den.leading().c;
    if (lc != 1) {
        mpq_class inv = mpq_class(1) / lc;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    if (den.is_constant() && num.is_constant()) return Scalar(num.constant_value() / den.constant_value());
    Scalar s;
    s.f_ = std::make_shared<const Frac>(Frac{std::move(num), std::move(den)});
    return s;
}

Scalar::Scalar(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) return;
    Polynomial g = gcd(num, den);
    *this = make(g.is_constant() ? num : num.divexact(g), g.is_constant() ? den : den.divexact(g));
}

Scalar Scalar::parameter(const std::string& name) { return Scalar(Polynomial::variable(parameter_index(name))); }

Polynomial Scalar::numerator() const { return f_ ? f_->num : Polynomial(c_); }
Polynomial Scalar::denominator() const { return f_ ? f_->den : Polynomial(1); }

std::vector<std::size_t> Scalar::parameters() const {
    if (!f_) return {};
    auto a = f_->num.variables(), b = f_->den.variables();
    std::set<std::size_t> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return {s.begin(), s.end()};
}

Scalar Scalar::operator-() const {
    if (!f_) return Scalar(mpq_class(-c_));
    return make(-f_->num, f_->den);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (!f_) return Scalar(mpq_class(1 / c_));
    return make(f_->den, f_->num);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (!a.f_ && !b.f_) return Scalar(mpq_class(a.c_ + b.c_));
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Polynomial an = a.numerator(), ad = a.denominator();
    Polynomial bn = b.numerator(), bd = b.denominator();
    if (ad == bd) return Scalar(an + bn, ad);
    if (ad.is_constant()) return Scalar::make(an.scaled(1 / ad.constant_value()) * bd + bn, bd);
    if (bd.is_constant()) return Scalar::make(bn.scaled(1 / bd.constant_value()) * ad + an, ad);
    Polynomial g = gcd(ad, bd);
    Polynomial ad_g = ad.divexact(g), bd_g = bd.divexact(g);
    return Scalar(an * bd_g + bn * ad_g, ad_g * bd);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (!a.f_ && !b.f_) return Scalar(mpq_class(a.c_ * b.c_));
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (!a.f_) return Scalar::make(b.f_->num.scaled(a.c_), b.f_->den);
    if (!b.f_) return Scalar::make(a.f_->num.scaled(b.c_), a.f_->den);
    Polynomial g1 = gcd(a.f_->num, b.f_->den);
    Polynomial g2 = gcd(b.f_->num, a.f_->den);
    Polynomial n1 = a.f_->num.divexact(g1), d2 = b.f_->den.divexact(g1);
    Polynomial n2 = b.f_->num.divexact(g2), d1 = a.f_->den.divexact(g2);
    return Scalar::make(n1 * n2, d1 * d2);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.f_ || !b.f_) return !a.f_ && !b.f_ && a.c_ == b.c_;
    return a.f_->num == b.f_->num && a.f_->den == b.f_->den;
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (!a.f_ && !b.f_) return a.c_ < b.c_;
    if (!a.f_ || !b.f_) return !a.f_;
    if (a.f_->num != b.f_->num) return a.f_->num < b.f_->num;
    return a.f_->den < b.f_->den;
}

std::string Scalar::to_string() const {
    if (!f_) return c_.get_str();
    std::string n = f_->num.to_string();
    if (f_->den.is_constant() && f_->den.constant_value() == 1) return n;
    auto wrap = [](const Polynomial& p, const std::string& s) {
        return p.terms().size() > 1 || (p.terms().size() == 1 && p.terms()[0].c != 1 && !p.terms()[0].m.is_one())
                   ? "(" + s + ")"
                   : s;
    };
    return wrap(f_->num, n) + "/" + wrap(f_->den, f_->den.to_string());
}

namespace {

std::map<std::size_t, mpq_class> to_index_map(const Assignment& values) {
    std::map<std::size_t, mpq_class> m;
    for (auto& [k, v] : values) m[parameter_index(k)] = v;
    return m;
}

}  // namespace

mpq_class specialize_raw(const Polynomial& num, const Polynomial& den, const Assignment& values) {
    auto m = to_index_map(values);
    mpq_class d = den.evaluate(m);
    if (d == 0) raise(ErrorKind::DenominatorVanishes, "denominator vanishes at the given point");
    return num.evaluate(m) / d;
}

mpq_class scalar_specialize(const Scalar& s, const Assignment& values) {
    if (s.is_constant()) return s.constant();
    try {
        return specialize_raw(s.numerator(), s.denominator(), values);
    } catch (const std::out_of_range& e) {
        raise(ErrorKind::Precondition, e.what());
    }
}

}  // namespace hg
