#pragma once

#include <string>
#include <vector>

#include "hg/core/scalar.hpp"

namespace hg {

// Dense univariate polynomial over Q(parameters); c[i] is the coefficient of x^i.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
    static UPoly constant(const Scalar& s) { return UPoly({s}); }
    static UPoly x() { return UPoly({Scalar(0), Scalar(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Scalar& lead() const { return c_.back(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly scaled(const Scalar& s) const;
    UPoly monic() const;
    // Euclidean division: a = q*b + r with deg r < deg b.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

}  // namespace hg
