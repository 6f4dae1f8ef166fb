#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hg/core/free_algebra.hpp"
#include "hg/core/sparse_echelon.hpp"

namespace hg {

class QuotientSlice;

struct SliceLimits {
    static constexpr std::size_t kDefaultWordCap = 100000;
    static constexpr int kDefaultDegree = 4;
};

// Finitely presented algebra k<gens>/(relations). Immutable once built; ideal
// slices are computed on demand and cached per level.
class Presentation {
public:
    Presentation(std::string name, Alphabet gens, std::vector<FreeElement> relations);

    const std::string& name() const { return name_; }
    const Alphabet& gens() const { return gens_; }
    const std::vector<FreeElement>& relations() const { return rels_; }
    std::size_t raw_relation_count() const { return raw_count_; }
    FreeElement gen(std::size_t i) const { return FreeElement(gens_.letter(i)); }
    FreeElement gen(const std::string& name) const;

    // Cached slice at exactly this level. DegreeTooLarge if the word count
    // at this level exceeds the cap.
    std::shared_ptr<const QuotientSlice> slice(int level) const;

    std::string canonical_text() const;
    std::string to_string(const FreeElement& x) const { return hg::to_string(x, gens_); }

    std::size_t word_cap = SliceLimits::kDefaultWordCap;

private:
    std::string name_;
    Alphabet gens_;
    std::vector<FreeElement> rels_;
    std::size_t raw_count_ = 0;
    mutable std::mutex mu_;
    mutable std::map<int, std::shared_ptr<const QuotientSlice>> slices_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

inline PresentationPtr make_presentation(std::string name, Alphabet gens, std::vector<FreeElement> rels) {
    return std::make_shared<const Presentation>(std::move(name), std::move(gens), std::move(rels));
}

// Ideal slice I_L = span{u r v : weight <= L} of a presentation, after
// eliminating generators that are linear combinations of smaller ones.
class QuotientSlice {
public:
    QuotientSlice(const Presentation& p, int level);

    int level() const { return level_; }
    const Presentation& presentation() const { return *p_; }
    bool is_zero_algebra() const { return zero_; }

    // Normal form: eliminated generators substituted, then every pivot word
    // reduced away. DegreeTooLarge if the element's weight exceeds the level.
    FreeElement reduce(const FreeElement& x) const;
    const FreeElement& reduce_word(const Word& w) const;
    bool equals(const FreeElement& a, const FreeElement& b) const { return reduce(a - b).is_zero(); }

    // Rows of the echelon basis of the ideal slice (in kept generators).
    const std::vector<FreeElement>& ideal_basis() const { return echelon_.rows(); }
    // Substitution for eliminated generators (empty element if kept).
    const std::vector<std::pair<std::size_t, FreeElement>>& eliminated() const { return elim_; }
    std::vector<std::size_t> kept_generators() const;

    // Non-pivot words of weight <= d in kept generators, increasing deglex.
    std::vector<Word> standard_words(int d) const;
    // dims[k] = number of standard words of weight exactly k, k = 0..level.
    std::vector<std::size_t> quotient_dims() const;
    // Ideal rank in the span of all words of weight exactly k (homogeneous reading).
    std::size_t ideal_rank_in_degree(int k) const;
    // Total number of words of weight <= level in kept generators.
    std::size_t word_count() const { return word_count_; }

private:
    FreeElement substitute(const FreeElement& x) const;
    void enumerate_words(int d, std::vector<Word>& out) const;

    const Presentation* p_;
    int level_;
    bool zero_ = false;
    std::vector<bool> kept_;
    std::vector<std::pair<std::size_t, FreeElement>> elim_;
    std::vector<FreeElement> subst_;  // per generator image (identity if kept)
    std::vector<FreeElement> rels_;   // substituted relations
    SparseEchelon<Word> echelon_;
    std::size_t word_count_ = 0;
    mutable std::mutex memo_mu_;
    mutable std::unordered_map<Word, FreeElement, WordHash> memo_;
};

// Tensor-product reduction: each factor reduced by its own slice. The kernel
// of this map on the span of tensor words is I_1 (x) F + F (x) I_2 (+ ...).
// A null slice leaves its leg unreduced.
TensorElement reduce_tensor(const TensorElement& x, const std::vector<const QuotientSlice*>& slices);

// Explicit tensor product presentation (generators renamed with suffixes,
// cross-commutation relations added).
PresentationPtr tensor_presentation(const Presentation& a, const Presentation& b);

}  // namespace hg
