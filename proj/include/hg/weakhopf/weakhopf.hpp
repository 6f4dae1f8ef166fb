#pragma once

#include <array>
#include <string>
#include <vector>

#include "hg/hopf/cogroupoid.hpp"

namespace hg {

// Tensor word whose legs each live in a block C(i,j); block index = i*n + j.
struct BlockKey {
    std::array<std::uint8_t, TWord::kMaxArity> b{};
    TWord w;

    friend bool operator<(const BlockKey& x, const BlockKey& y) {
        for (std::size_t i = 0; i < x.w.n; ++i)
            if (x.b[i] != y.b[i]) return x.b[i] < y.b[i];
        return x.w < y.w;
    }
    friend bool operator>(const BlockKey& x, const BlockKey& y) { return y < x; }
    friend bool operator==(const BlockKey& x, const BlockKey& y) {
        if (x.w != y.w) return false;
        for (std::size_t i = 0; i < x.w.n; ++i)
            if (x.b[i] != y.b[i]) return false;
        return true;
    }
    friend bool operator!=(const BlockKey& x, const BlockKey& y) { return !(x == y); }
};
using WeakElement = LinComb<BlockKey>;

// H = direct sum of the algebras C(X_i, X_j) over a chosen object list, with
// Delta(a^{ij}) = sum_k Delta^k_{ij}(a), eps = delta_ij eps_i, S = S_{ij}.
class WeakHopfData {
public:
    WeakHopfData(CogroupoidData C, std::vector<std::size_t> objects);

    std::size_t objects() const { return obj_.size(); }
    std::size_t blocks() const { return obj_.size() * obj_.size(); }
    const Presentation& block(std::size_t b) const { return *C_.hom(obj_[b / objects()], obj_[b % objects()]); }
    bool finite() const { return C_.finite; }
    // Finite case: standard-word basis of every block; dimension of H.
    const std::vector<BlockKey>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    // Generators of every block (generator-level checks).
    std::vector<BlockKey> generators() const;

    WeakElement unit(std::size_t arity = 1) const;
    WeakElement element(std::size_t b, const FreeElement& x) const;
    WeakElement multiply(const WeakElement& x, const WeakElement& y) const;  // legwise
    WeakElement delta(const WeakElement& x, std::size_t leg) const;           // splits a leg in two
    WeakElement eps(const WeakElement& x, std::size_t leg) const;             // removes a leg
    WeakElement antipode(const WeakElement& x, std::size_t leg) const;
    WeakElement eps_t(const WeakElement& x) const;  // eps(1_(1) a) 1_(2)
    WeakElement eps_s(const WeakElement& x) const;  // 1_(1) eps(a 1_(2))
    // Blockwise normal form; level 0 means the finite-basis level.
    WeakElement reduce(const WeakElement& x, int level = 0) const;
    std::string to_string(const WeakElement& x) const;

    int basis_level() const { return level_; }

private:
    CogroupoidData C_;
    std::vector<std::size_t> obj_;
    std::vector<BlockKey> basis_;
    int level_ = 2;
};

// Weak Hopf axioms (Bohm-Nikshych-Szlachanyi list), exact on the full basis
// when every block is finite dimensional, otherwise on generators at level d
// with a "truncated" tag.
Certificate check_weak_hopf(const WeakHopfData& W, int d = 2);

// Axiom list recorded in every certificate.
const std::vector<std::string>& weak_hopf_axiom_list();

}  // namespace hg
