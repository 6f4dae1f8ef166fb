#pragma once

#include <map>
#include <string>
#include <vector>

#include "hg/core/matrix.hpp"
#include "hg/hopf/cogroupoid.hpp"

namespace hg {

// A term of a complex of A-bimodules: A (x) W (x) A with W spanned by `rank`
// letters of filtration degree `shift`, or A itself (`augmentation`).
// Elements are LinComb<TWord> with legs (a, w, b); A itself uses (a, 1, 1).
struct FreeTerm {
    std::string name;
    std::size_t rank = 1;
    int shift = 0;
    bool augmentation = false;
};

// 0 -> C_3 -> C_2 -> C_1 -> C_0 -> 0 style complex of A-bimodules. d[p] maps
// terms[p+1] -> terms[p]; d[p][k] is the image of 1 (x) w_k (x) 1.
struct EquivariantComplex {
    std::string name;
    PresentationPtr algebra;
    ExactMatrix alpha;
    Scalar t;
    std::vector<FreeTerm> terms;
    std::vector<std::vector<LinComb<TWord>>> d;

    // Bimodule extension of d[p]: a (x) w_k (x) b -> a d[p][k] b.
    LinComb<TWord> apply(std::size_t p, const LinComb<TWord>& x) const;
    std::string to_string(std::size_t p, const LinComb<TWord>& x) const;
};

// A_{alpha,t} = k<x_1..x_n>/(sum alpha_ij x_i x_j - t) and its resolution
// 0 -> A(x)A -gamma-> A(x)V(x)A -d1-> A(x)A -mu-> A -> 0 with
// d1(1(x)x_i(x)1) = x_i(x)1 - 1(x)x_i and
// gamma(1(x)1) = sum alpha_ij (x_i(x)x_j(x)1 + 1(x)x_i(x)x_j).
// Positions: 0 = A, 1 = A(x)A, 2 = A(x)V(x)A, 3 = A(x)A.
EquivariantComplex koszul_complex(const ExactMatrix& alpha, const Scalar& t);

// d o d = 0 on the generators of each term, at level d.
Certificate check_complex(const EquivariantComplex& K, int d);

struct LevelRanks {
    int level = 0;
    std::vector<std::size_t> dims;      // dim F_level C_p
    std::vector<std::size_t> ranks;     // ranks[p] = rank of d: C_{p+1} -> C_p on F_level
    std::vector<long> homology;         // dim ker d_p - rank d_{p+1}; -1 where im is not inside ker
    long euler = 0;                     // sum (-1)^p dims[p]
};
struct ExactnessReport {
    std::vector<LevelRanks> levels;
    bool exact = false;
    Certificate cert;
};
// Ranks of the differentials on the filtered pieces F_L, L = 0..d. Exactness
// at position p and level L means ker d_p = im d_{p+1} on F_L.
ExactnessReport check_exactness(const EquivariantComplex& K, int d);

// Colinearity of every differential value for the coaction x_i -> sum_k x_k (x) h_ki
// on A and on V (h_ki = generator k*n+i of H, the B-family convention); the
// extreme terms carry the trivial comodule. Also checks the coaction on A is an
// algebra map.
Certificate check_equivariance(const EquivariantComplex& K, const HopfData& H, int d);

struct TransportedResolution {
    EquivariantComplex complex;  // over A_{F^{-1},t}
    Certificate cert;
};
// Objects X = E, Y = F of a B cogroupoid. Pushes the differentials of the
// Koszul complex of A_{E^{-1},t} through - box B(E,F) and compares them with
// the direct Koszul complex of A_{F^{-1},t} embedded by a (x) w (x) b ->
// iota(a) theta(w) iota(b), iota = iota_F and theta(y_j) = sum_i v_i (x) a_ij.
TransportedResolution transport_resolution(const CogroupoidData& B, std::size_t X, std::size_t Y, const Scalar& t,
                                           int d);

// Hochschild homology H_0..H_2 of A with coefficients in k_chi (both actions
// through the character chi), from the Koszul complex: k_chi (x)_{A^e} K.
// NoCharacter unless chi passes character_check. Higher H_m vanish because the
// complex has length 2.
struct HochschildDims {
    std::vector<std::size_t> dims;
    Certificate cert;
};
HochschildDims hochschild_dims(const EquivariantComplex& K, const std::map<std::string, Scalar>& chi);

}  // namespace hg
