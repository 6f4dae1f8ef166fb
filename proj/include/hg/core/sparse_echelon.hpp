#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hg/core/lincomb.hpp"
#include "hg/core/word.hpp"

namespace hg {

struct TWordHash {
    std::size_t operator()(const TWord& t) const noexcept {
        WordHash h;
        std::size_t s = t.n;
        for (std::size_t i = 0; i < t.n; ++i) s = s * 1000003u ^ h(t.w[i]);
        return s;
    }
};

template <class Key>
struct KeyHash;
template <>
struct KeyHash<Word> : WordHash {};
template <>
struct KeyHash<TWord> : TWordHash {};
template <>
struct KeyHash<std::uint32_t> : std::hash<std::uint32_t> {};

// Incremental row echelon basis with monic pivot rows; the pivot of a row is
// its largest key. Reduction eliminates every pivot key (full normal form).
template <class Key>
class SparseEchelon {
public:
    using Vec = LinComb<Key>;

    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    bool is_pivot(const Key& k) const { return pivot_.count(k) != 0; }

    Vec reduce(Vec x) const {
        std::size_t i = 0;
        while (i < x.size()) {
            const Key k = x.terms()[i].first;
            auto it = pivot_.find(k);
            if (it == pivot_.end()) {
                ++i;
                continue;
            }
            Scalar c = x.terms()[i].second;
            x = x.axpy(-c, rows_[it->second]);
            // Keys above k are untouched by the subtraction.
            while (i < x.size() && !(x.terms()[i].first < k)) ++i;
        }
        return x;
    }

    // Returns true if x enlarged the span.
    bool insert(const Vec& x) {
        Vec r = reduce(x);
        if (r.is_zero()) return false;
        r = r.scaled(r.leading_coeff().inverse());
        pivot_.emplace(r.leading_key(), rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

private:
    std::vector<Vec> rows_;
    std::unordered_map<Key, std::size_t, KeyHash<Key>> pivot_;
};

// Rank and kernel of a family of vectors, tracking input combinations.
template <class Key>
class KernelEngine {
public:
    using Vec = LinComb<Key>;
    using Combo = LinComb<std::uint32_t>;

    void add(const Vec& v) {
        Combo tag(static_cast<std::uint32_t>(count_++), Scalar(1));
        Vec x = v;
        std::size_t i = 0;
        while (i < x.size()) {
            const Key k = x.terms()[i].first;
            auto it = pivot_.find(k);
            if (it == pivot_.end()) {
                ++i;
                continue;
            }
            Scalar c = x.terms()[i].second;
            x = x.axpy(-c, rows_[it->second]);
            tag = tag.axpy(-c, tags_[it->second]);
            while (i < x.size() && !(x.terms()[i].first < k)) ++i;
        }
        if (x.is_zero()) {
            kernel_.push_back(std::move(tag));
            return;
        }
        Scalar inv = x.leading_coeff().inverse();
        pivot_.emplace(x.leading_key(), rows_.size());
        rows_.push_back(x.scaled(inv));
        tags_.push_back(tag.scaled(inv));
    }

    // Combination of input indices equal to v, if v lies in their span.
    std::optional<Combo> express(const Vec& v) const {
        Combo tag;
        Vec x = v;
        while (!x.is_zero()) {
            auto it = pivot_.find(x.leading_key());
            if (it == pivot_.end()) return std::nullopt;
            Scalar c = x.leading_coeff();
            x = x.axpy(-c, rows_[it->second]);
            tag = tag.axpy(c, tags_[it->second]);
        }
        return tag;
    }

    std::size_t count() const { return count_; }
    std::size_t rank() const { return rows_.size(); }
    // Each kernel vector is a combination of input indices (sorted descending).
    const std::vector<Combo>& kernel() const { return kernel_; }

private:
    std::size_t count_ = 0;
    std::vector<Vec> rows_;
    std::vector<Combo> tags_;
    std::vector<Combo> kernel_;
    std::unordered_map<Key, std::size_t, KeyHash<Key>> pivot_;
};

}  // namespace hg
