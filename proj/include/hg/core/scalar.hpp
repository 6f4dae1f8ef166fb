#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hg/core/polynomial.hpp"

namespace hg {

// Element of Q(parameters). Constants are stored unboxed; non-constant values
// keep num/den coprime with a monic denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : c_(v) {}
    Scalar(const mpq_class& v) : c_(v) {}
    Scalar(const Polynomial& num, const Polynomial& den = Polynomial(1));
    static Scalar parameter(const std::string& name);

    bool is_zero() const { return !f_ && c_ == 0; }
    bool is_one() const { return !f_ && c_ == 1; }
    bool is_constant() const { return !f_; }
    const mpq_class& constant() const { return c_; }  // requires is_constant
    Polynomial numerator() const;
    Polynomial denominator() const;
    std::vector<std::size_t> parameters() const;

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long e) const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // Arbitrary but fixed total order (for canonical sorting only).
    friend bool operator<(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    struct Frac {
        Polynomial num, den;
    };
    static Scalar make(Polynomial num, Polynomial den);  // num/den already coprime
    mpq_class c_;
    std::shared_ptr<const Frac> f_;
};

using Assignment = std::map<std::string, mpq_class>;

// Exact value at a point; DenominatorVanishes if the canonical denominator is 0 there.
mpq_class scalar_specialize(const Scalar& s, const Assignment& values);

// Evaluates a raw num/den pair without cancelling common factors first.
mpq_class specialize_raw(const Polynomial& num, const Polynomial& den, const Assignment& values);

}  // namespace hg
