#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hg/core/scalar.hpp"

namespace hg {

// Finite linear combination over Q(params), keys sorted in decreasing order so
// the leading key comes first. Zero coefficients are never stored.
template <class Key>
class LinComb {
public:
    using Term = std::pair<Key, Scalar>;

    LinComb() = default;
    LinComb(const Key& k, const Scalar& c = Scalar(1)) {
        if (!c.is_zero()) t_.emplace_back(k, c);
    }
    // Accepts unsorted terms with repeats.
    static LinComb from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return b.first < a.first; });
        LinComb r;
        r.t_.reserve(terms.size());
        for (auto& t : terms) {
            if (!r.t_.empty() && r.t_.back().first == t.first) {
                r.t_.back().second += t.second;
            } else {
                if (!r.t_.empty() && r.t_.back().second.is_zero()) r.t_.pop_back();
                r.t_.push_back(std::move(t));
            }
        }
        if (!r.t_.empty() && r.t_.back().second.is_zero()) r.t_.pop_back();
        return r;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }
    const Key& leading_key() const { return t_.front().first; }
    const Scalar& leading_coeff() const { return t_.front().second; }
    Scalar coeff(const Key& k) const {
        auto it = std::lower_bound(t_.begin(), t_.end(), k, [](const Term& t, const Key& key) { return key < t.first; });
        if (it != t_.end() && it->first == k) return it->second;
        return Scalar();
    }

    LinComb operator-() const {
        LinComb r = *this;
        for (auto& t : r.t_) t.second = -t.second;
        return r;
    }
    LinComb scaled(const Scalar& c) const {
        if (c.is_zero()) return LinComb();
        if (c.is_one()) return *this;
        LinComb r = *this;
        for (auto& t : r.t_) t.second *= c;
        return r;
    }
    // this + c * o
    LinComb axpy(const Scalar& c, const LinComb& o) const {
        if (c.is_zero() || o.is_zero()) return *this;
        LinComb r;
        r.t_.reserve(t_.size() + o.t_.size());
        auto i = t_.begin(), ie = t_.end();
        auto j = o.t_.begin(), je = o.t_.end();
        while (i != ie || j != je) {
            if (j == je || (i != ie && j->first < i->first)) {
                r.t_.push_back(*i++);
            } else if (i == ie || i->first < j->first) {
                r.t_.emplace_back(j->first, c * j->second);
                ++j;
            } else {
                Scalar v = i->second + c * j->second;
                if (!v.is_zero()) r.t_.emplace_back(i->first, std::move(v));
                ++i;
                ++j;
            }
        }
        return r;
    }
    friend LinComb operator+(const LinComb& a, const LinComb& b) { return a.axpy(Scalar(1), b); }
    friend LinComb operator-(const LinComb& a, const LinComb& b) { return a.axpy(Scalar(-1), b); }
    LinComb& operator+=(const LinComb& o) { return *this = axpy(Scalar(1), o); }
    LinComb& operator-=(const LinComb& o) { return *this = axpy(Scalar(-1), o); }

    friend bool operator==(const LinComb& a, const LinComb& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].first != b.t_[i].first || a.t_[i].second != b.t_[i].second) return false;
        return true;
    }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    template <class F>
    auto map_keys(F f) const {
        using K2 = decltype(f(std::declval<Key>()));
        std::vector<std::pair<K2, Scalar>> out;
        out.reserve(t_.size());
        for (auto& t : t_) out.emplace_back(f(t.first), t.second);
        return LinComb<K2>::from_terms(std::move(out));
    }

private:
    std::vector<Term> t_;
};

// Collects terms, then canonicalizes once.
template <class Key>
class Accumulator {
public:
    void add(const Key& k, const Scalar& c) {
        if (!c.is_zero()) t_.emplace_back(k, c);
    }
    void add(const LinComb<Key>& x, const Scalar& c = Scalar(1)) {
        if (c.is_zero()) return;
        for (auto& [k, v] : x) t_.emplace_back(k, c.is_one() ? v : c * v);
    }
    LinComb<Key> take() { return LinComb<Key>::from_terms(std::move(t_)); }
    std::size_t pending() const { return t_.size(); }

private:
    std::vector<std::pair<Key, Scalar>> t_;
};

}  // namespace hg
