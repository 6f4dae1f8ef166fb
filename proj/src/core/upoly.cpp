#include "hg/core/upoly.hpp"

#include <stdexcept>

namespace hg {

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::scaled(const Scalar& s) const {
    std::vector<Scalar> c = c_;
    for (auto& x : c) x *= s;
    return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw std::domain_error("UPoly division by zero");
    std::vector<Scalar> rem = a.c_;
    std::vector<Scalar> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
    Scalar inv = b.lead().inverse();
    while (rem.size() >= b.c_.size() && !rem.empty()) {
        Scalar f = rem.back() * inv;
        std::size_t shift = rem.size() - b.c_.size();
        quo[shift] = f;
        for (std::size_t i = 0; i < b.c_.size(); ++i) rem[shift + i] -= f * b.c_[i];
        rem.pop_back();
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

std::string UPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].to_string() + ")";
        if (i) s += "*x^" + std::to_string(i);
    }
    return s;
}

}  // namespace hg
