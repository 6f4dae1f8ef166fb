#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hg {

// Process-wide parameter registry. Indices are stable once assigned.
std::size_t parameter_index(const std::string& name);
const std::string& parameter_name(std::size_t idx);
std::size_t parameter_count();

// Exponent vector, trailing zeros trimmed.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(std::size_t idx, unsigned e = 1);

    unsigned exponent(std::size_t idx) const { return idx < e_.size() ? e_[idx] : 0; }
    std::size_t width() const { return e_.size(); }
    bool is_one() const { return e_.empty(); }
    unsigned total_degree() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires divides
    Monomial without(std::size_t idx) const;

    // Lexicographic, variable 0 most significant.
    friend bool operator<(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    void trim();
    std::vector<std::uint32_t> e_;
};

// Sparse multivariate polynomial over Q, terms sorted by decreasing monomial.
class Polynomial {
public:
    struct Term {
        Monomial m;
        mpq_class c;
    };

    Polynomial() = default;
    Polynomial(const mpq_class& c);
    Polynomial(long c) : Polynomial(mpq_class(c)) {}
    static Polynomial variable(std::size_t idx);
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    mpq_class constant_value() const;  // requires is_constant
    const std::vector<Term>& terms() const { return t_; }
    const Term& leading() const { return t_.front(); }
    std::vector<std::size_t> variables() const;
    unsigned degree_in(std::size_t var) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const mpq_class& c) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial pow(unsigned e) const;

    // Exact division; throws std::logic_error if not exact.
    Polynomial divexact(const Polynomial& d) const;
    bool divides_into(const Polynomial& n, Polynomial* quotient) const;

    // Coefficients with respect to one variable (index = exponent).
    std::vector<Polynomial> coefficients_in(std::size_t var) const;
    static Polynomial from_coefficients(std::size_t var, const std::vector<Polynomial>& cs);

    // Divides by the leading coefficient.
    Polynomial monic() const;

    mpq_class evaluate(const std::map<std::size_t, mpq_class>& values) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    std::vector<Term> t_;
};

// Monic gcd over Q; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace hg
