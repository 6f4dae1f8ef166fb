#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hg/galois/galois.hpp"
#include "hg/hopf/cogroupoid.hpp"

namespace hg {

// Finite-dimensional right-right Yetter-Drinfeld module over a Hopf algebra:
// a matrix comodule plus generator actions v_i <- g = sum_j action[g](j,i) v_j.
struct YDModule {
    std::string name;
    MatrixComodule comodule;
    std::vector<ExactMatrix> action;
    std::size_t dim() const { return comodule.dim(); }
    // Matrix of v -> v <- h (words act letter by letter from the left).
    ExactMatrix act(const FreeElement& h) const;
};

// k with trivial coaction and the counit action.
YDModule trivial_yd(const HopfData& H);
// Module axiom (relations act as zero, exact) and the YD compatibility
// (v <- x)_(0) (x) (v <- x)_(1) = v_(0) <- x_(2) (x) S(x_(1)) v_(1) x_(3) on
// basis vectors and generators, at level d.
Certificate check_yd(const YDModule& V, const HopfData& H, int d);

// A candidate colinear isomorphism W -> V box C(X,Y): target comodule W over
// C(Y,Y) and the images of its basis vectors.
struct ComoduleCandidate {
    MatrixComodule target;
    std::vector<LinComb<TWord>> vectors;
};
// B and H families: w_j = sum_i v_i (x) g_ij with g the first generator block of C(X,Y).
ComoduleCandidate fundamental_candidate(const CogroupoidData& C, std::size_t X, std::size_t Y);

struct TransportedComodule {
    MatrixComodule comodule;  // over C(Y,Y), in the cotensor basis
    CotensorSpace space;
    std::optional<ExactMatrix> base_change;  // columns: candidate vectors in cotensor coordinates
    Certificate cert;
};
// V box C(X,Y) with coaction 1 (x) Delta^Y_{X,Y}. NotStabilized unless the
// cotensor dimension is equal at d-1 and d.
TransportedComodule transport_comodule(const MatrixComodule& V, const CogroupoidData& C, std::size_t X, std::size_t Y,
                                       int d, const ComoduleCandidate* candidate = nullptr);

// Colinear isomorphism V -> W (same Hopf algebra), found as an invertible
// point of the solution space of the colinearity equations.
struct ComoduleIso {
    std::optional<ExactMatrix> map;  // W-coordinates of the images of V's basis (columns)
    std::size_t solution_dim = 0;
    Certificate cert;
};
ComoduleIso find_comodule_iso(const MatrixComodule& V, const MatrixComodule& W, int d);

// Transport X -> Y -> X and certify the result isomorphic to V.
Certificate transport_round_trip(const MatrixComodule& V, const CogroupoidData& C, std::size_t X, std::size_t Y, int d);

// (V box A) (x) (W box A) -> (V (x) W) box A, (v (x) a) (x) (w (x) b) -> v (x) w (x) ab,
// bijective on stabilized bases (A = C(X,Y)).
MatrixComodule tensor_comodule(const MatrixComodule& V, const MatrixComodule& W);
Certificate monoidality_check(const MatrixComodule& V, const MatrixComodule& W, const CogroupoidData& C,
                              std::size_t X, std::size_t Y, int d);

// iota_F : A_{F^{-1},t} -> A_{E^{-1},t} box B(E,F), x_i -> sum_k x_k (x) a_ki, for
// the B cogroupoid objects X = E, Y = F: algebra map, lands in the cotensor,
// B(F)-colinear, bijective onto the cotensor up to level d.
Certificate transport_comodule_algebra(const CogroupoidData& B, std::size_t X, std::size_t Y, const Scalar& t, int d);

// Yetter-Drinfeld structure over C(Y,Y) on V box C(X,Y) (or on all of
// V (x) C(X,Y) when `full_tensor`, which needs a finite cogroupoid):
// (v (x) a) <- b = v <- b_(2) (x) S_{Y,X}(b_(1)) a b_(3).
struct YDTransport {
    YDModule module;  // over C(Y,Y)
    std::vector<LinComb<TWord>> basis;
    Certificate cert;
};
YDTransport yd_structure(const YDModule& V, const CogroupoidData& C, std::size_t X, std::size_t Y, int d,
                         bool full_tensor = false);

// c_{V,W}(v (x) w) = w_(0) (x) v <- w_(1). Checks F~ o c = (c (x) 1) o F~ on all
// pairs of transported basis vectors, F~ the product map of monoidality_check.
Certificate braiding_check(const YDModule& V, const YDModule& W, const CogroupoidData& C, std::size_t X, std::size_t Y,
                           int d);

// For A = C(X,Y) as a bimodule over itself: the C(X,X)-bimodules M'
// (m . h = S(h_(2)) m h_(1)) and M'' (h . m = h_(1) m S(h_(2))), and the
// isomorphisms A^n (x) M <-> H^n (x) M of the Hochschild comparison for n = 1, 2.
// `drop_antipode` replaces S by the identity in the inverse map (a mutation).
Certificate bimodule_transport(const CogroupoidData& C, std::size_t X, std::size_t Y, int d,
                               bool drop_antipode = false);

}  // namespace hg
