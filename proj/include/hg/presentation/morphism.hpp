#pragma once

#include <string>
#include <vector>

#include "hg/presentation/certificate.hpp"
#include "hg/presentation/presentation.hpp"

namespace hg {

// Algebra map (or anti-map) from a presentation into a tensor product of
// presentations, fixed by generator images. An empty target means the base
// field; images then have arity 0.
struct AlgebraMorphism {
    std::string name;
    PresentationPtr source;
    std::vector<PresentationPtr> target;
    bool anti = false;
    std::vector<TensorElement> images;  // one per source generator

    std::size_t arity() const { return target.size(); }

    // Image of a word as the (reversed if anti) product of generator images.
    TensorElement apply_word(const Word& w) const;
    TensorElement apply(const FreeElement& x) const;
    // Same, reducing after every factor multiplication.
    TensorElement apply_reduced(const FreeElement& x, const std::vector<const QuotientSlice*>& slices) const;

    // Single-factor targets: image as a FreeElement.
    FreeElement apply1(const FreeElement& x) const;
};

// Convenience constructors for images.
TensorElement as_tensor(const FreeElement& x);           // arity 1
TensorElement scalar_tensor(const Scalar& s, std::size_t arity);
FreeElement first_factor(const TensorElement& x);        // arity 1 -> FreeElement

// Slices of each target factor at the given level.
std::vector<std::shared_ptr<const QuotientSlice>> target_slices(const std::vector<PresentationPtr>& target,
                                                                 int level);
std::vector<const QuotientSlice*> raw(const std::vector<std::shared_ptr<const QuotientSlice>>& s);

// Per relation: image reduced at level max factor weight of the image.
Certificate check_morphism(const AlgebraMorphism& phi);

// psi o phi; phi must have a single-factor target equal to psi's source.
AlgebraMorphism compose(const AlgebraMorphism& psi, const AlgebraMorphism& phi);

}  // namespace hg
