#pragma once

#include <map>
#include <string>

#include "hg/hopf/cogroupoid.hpp"
#include "hg/presentation/certificate.hpp"

namespace hg {

// Linear functional given by coefficients against standard words of a slice.
struct LinearFunctional {
    std::string name;
    std::map<Word, Scalar> coeffs;
    Scalar operator()(const FreeElement& normal_form) const;
};
// Dual-basis functional of 1 (coefficient of the empty word).
LinearFunctional unit_coefficient_functional();
// Restriction of a counit to the standard words of a slice.
LinearFunctional counit_functional(const AlgebraMorphism& eps, const QuotientSlice& slice);

// Structural maps well-defined (relations respected).
Certificate check_structure_maps(const CogroupoidData& C);

// Coassociativity, counit and antipode diagrams on generators, for every
// object tuple, with tensor equality tested factorwise at level d.
Certificate check_cogroupoid(const CogroupoidData& C, int d);
// Same diagrams for a single Hopf algebra.
Certificate check_hopf(const HopfData& H, int d);

// Anti-multiplicativity of S_{Y,X} on generator pairs and
// Delta^Z_{X,Y} S_{Y,X} = (S_{Z,X} (x) S_{Y,Z}) flip Delta^Z_{Y,X} on generators.
Certificate check_antipode_properties(const CogroupoidData& C, std::size_t X, std::size_t Y, std::size_t Z, int d);

// f o Delta^Z_{X,Y} = id with f(a (x) b) = psi(S_{Y,Z}(a_(2)) b) a_(1), checked on
// every standard word of C(X,Y) up to level d. Precondition error if psi(1) != 1.
Certificate delta_retraction(const CogroupoidData& C, std::size_t X, std::size_t Y, std::size_t Z,
                             const LinearFunctional& psi, int d);

// Coassociativity and counit of a matrix comodule over C(X,X).
Certificate check_comodule(const MatrixComodule& V, const HopfData& H, int d);

// Coaction well defined, coassociative and counital on generators.
Certificate check_comodule_algebra(const ComoduleAlgebra& A, int d);

// Promotes hom-algebra statuses: if some X0 has C(X0,Y) certified nonzero for
// every Y, every hom-algebra is nonzero. Returns a record of the argument.
CheckRecord propagate_connectedness(CogroupoidData& C);

}  // namespace hg
