#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hg/presentation/certificate.hpp"
#include "hg/presentation/morphism.hpp"

namespace hg {

struct RewriteRule {
    Word lhs;
    FreeElement rhs;  // every word of rhs must be smaller than lhs
};

// Algebra given by a terminating rewrite system; the reducer rewrites the
// leftmost occurrence of any rule until no rule applies.
class NormalFormAlgebra {
public:
    NormalFormAlgebra(std::string name, Alphabet gens, std::vector<RewriteRule> rules);

    const std::string& name() const { return name_; }
    const Alphabet& gens() const { return gens_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    FreeElement normal_form(const FreeElement& x) const;
    const FreeElement& normal_form(const Word& w) const;
    bool is_irreducible(const Word& w) const;
    std::vector<Word> irreducible_words(int d) const;  // weight <= d

    // Every overlap and inclusion ambiguity, both branches normalized.
    Certificate check_confluence() const;
    bool confluent() const;  // cached check_confluence().pass()

    // Same generators and relations lhs - rhs, for cross-checks.
    PresentationPtr as_presentation() const;

    std::size_t step_cap = 1000000;

private:
    // Position and rule of the leftmost match, or npos.
    std::pair<std::size_t, std::size_t> find_match(const Word& w) const;
    FreeElement rewrite_at(const Word& w, std::size_t pos, std::size_t rule) const;

    std::string name_;
    Alphabet gens_;
    std::vector<RewriteRule> rules_;
    mutable std::mutex mu_;
    mutable std::unordered_map<Word, FreeElement, WordHash> memo_;
    mutable int confluent_ = -1;
};

// Quantum torus k_p[t_1^{+-1}, ..., t_n^{+-1}] with t_k t_i = p_ki t_i t_k.
// Letters are ordered t1 < T1 < t2 < T2 < ..., where Ti is the inverse of ti.
NormalFormAlgebra quantum_torus(const std::vector<std::vector<Scalar>>& p);
// Twisted group algebra of (Z/2)^n: t_i^2 = 1, t_j t_i = p_ji t_i t_j.
NormalFormAlgebra twisted_group_algebra(const std::vector<std::vector<Scalar>>& p);

// Maps every relation of P through the generator images and normalizes in
// the target; a pass certifies P is not the zero algebra when the target is.
Certificate quantum_torus_witness(const Presentation& P, const NormalFormAlgebra& target,
                                  const std::vector<FreeElement>& images);

}  // namespace hg
