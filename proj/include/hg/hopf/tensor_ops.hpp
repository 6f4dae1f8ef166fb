#pragma once

#include <map>
#include <vector>

#include "hg/presentation/morphism.hpp"

namespace hg {

// Replaces leg i of every term by the image of that leg under f (arity of the
// result: x.arity - 1 + f.arity; must stay <= 3).
TensorElement apply_on_leg(const TensorElement& x, std::size_t i, const AlgebraMorphism& f);
// Multiplies legs i and i+1 into one leg.
TensorElement multiply_legs(const TensorElement& x, std::size_t i);
// Swaps legs i and j.
TensorElement swap_legs(const TensorElement& x, std::size_t i, std::size_t j);
// Multiplies leg i by a on the left and b on the right.
TensorElement sandwich_leg(const TensorElement& x, std::size_t i, const FreeElement& a, const FreeElement& b);
// Arity of a nonzero tensor element (0 if zero).
std::size_t arity_of(const TensorElement& x);

// Middle-out evaluation of Sweedler expressions of the form
//   kept-leg product (x) S(s_k)...S(s_1) o_1...o_k   (forward)
//   kept-leg product (x) o_1...o_k S(s_k)...S(s_1)   (backward)
// over the three-fold coproduct T(m) = inner applied to one leg of outer(m),
// letter by letter. The middle element is reduced after every letter, so the
// collapse s_(1)S(s_(2)) = eps(s) keeps degrees low. Returns kept word ->
// middle element (zero entries dropped).
struct SweedlerPattern {
    const AlgebraMorphism* outer;
    const AlgebraMorphism* inner;
    std::size_t inner_leg;  // leg of outer's image that inner expands
    std::size_t kept_leg, s_leg, o_leg;
    const AlgebraMorphism* antipode;  // applied to the s leg
    bool forward;
    const QuotientSlice* middle;
};
std::map<Word, FreeElement> middle_out(const Word& w, const SweedlerPattern& p);

}  // namespace hg
