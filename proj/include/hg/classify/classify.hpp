#pragma once

#include <map>
#include <string>
#include <vector>

#include "hg/families/families.hpp"
#include "hg/presentation/morphism.hpp"

namespace hg {

// F ~ G (F = P G P^t for some invertible P), decided by similarity of the
// asymmetry matrices F^{-1}F^t and G^{-1}G^t. SingularMatrix if either is singular.
bool congruent_test(const ExactMatrix& F, const ExactMatrix& G);
// F = P G P^{-1} for some invertible P, via rational canonical forms.
bool similar_test(const ExactMatrix& F, const ExactMatrix& G);

// Comodule-algebra isomorphism between two Galois objects, with the
// certificate of well-definedness, left C(E,E)-colinearity and degreewise
// bijectivity up to the given level.
struct GaloisIso {
    AlgebraMorphism map;
    Certificate cert;
};

// B(E,F) -> B(E,G), a -> a P^t. CongruenceWitnessInvalid unless F = P G P^t.
GaloisIso build_iso_B(const NamedMatrix& E, const NamedMatrix& F, const NamedMatrix& G, const ExactMatrix& P,
                      int d = 3);
// H(E,F) -> H(E,G), u -> u P^t, v -> v P^{-1}. SimilarityWitnessInvalid unless F = P G P^{-1}.
GaloisIso build_iso_H(const NamedMatrix& E, const NamedMatrix& F, const NamedMatrix& G, const ExactMatrix& P,
                      int d = 3);

// Fusion rules of the simple comodules U_x of H(F), x a word in a (alpha) and
// b (beta); "" is the unit e.
using FusionWord = std::string;
using FusionSum = std::map<FusionWord, long>;  // word -> multiplicity

FusionWord fusion_bar(const FusionWord& x);  // reverse, swapping a and b
FusionSum fusion_decompose(const FusionWord& x, const FusionWord& y);
FusionSum fusion_product(const FusionSum& x, const FusionSum& y);  // bilinear extension
std::vector<FusionWord> fusion_words(std::size_t max_len);

// d_e = 1, d_a = d_b = n, longer words from d_x d_y = sum d_ab with x the
// first letter. `consistent` is false (and `detail` names the pair) if any
// product of words up to max_len violates the rule.
struct FusionDimensions {
    std::map<FusionWord, long> dims;
    bool consistent = true;
    std::string detail;
};
FusionDimensions fusion_dimensions(long n, std::size_t max_len);

}  // namespace hg
