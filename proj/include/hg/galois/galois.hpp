#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hg/core/sparse_echelon.hpp"
#include "hg/hopf/cogroupoid.hpp"
#include "hg/presentation/certificate.hpp"

namespace hg {

enum class GaloisSide { Left, Right };
std::string galois_side_name(GaloisSide s);

// Left: C(X,Y) as a left C(X,X)-comodule algebra, kappa_l(a (x) b) = a_(1) (x) a_(2) b.
// Right: C(X,Y) as a right C(Y,Y)-comodule algebra, kappa_r(a (x) b) = a b_(1) (x) b_(2).
// Both composites with the cogroupoid inverse eta are checked on every pair
// of standard words of total weight <= d.
struct GaloisCertificate {
    GaloisSide side = GaloisSide::Left;
    std::size_t X = 0, Y = 0;
    int degree = 0;
    bool kappa_eta = false;  // kappa o eta = id
    bool eta_kappa = false;  // eta o kappa = id
    Certificate cert;
    bool pass() const { return kappa_eta && eta_kappa && cert.pass(); }
};

// kappa_l(a (x) b) in C(X,X) (x) C(X,Y) or kappa_r(a (x) b) in C(X,Y) (x) C(Y,Y),
// reduced at level max(d, weight).
TensorElement canonical_map(const CogroupoidData& C, std::size_t X, std::size_t Y, GaloisSide side,
                            const FreeElement& a, const FreeElement& b, int d);

GaloisCertificate verify_galois(const CogroupoidData& C, std::size_t X, std::size_t Y, GaloisSide side, int d);

// Kernel of a coaction difference, computed stage by stage. Basis vectors have
// one leg per tensor factor (left comodule basis, then C(X,Y) if present).
struct CotensorSpace {
    std::string subject;
    int degree = 0;
    std::vector<Alphabet> factors;
    std::vector<PresentationPtr> legs;  // algebra of each factor, null for a free comodule basis
    std::vector<LinComb<TWord>> basis;
    std::vector<std::size_t> dims;  // dims[k]: dimension of the part of stage <= k
    bool stabilized = false;        // dims[d-1] == dims[d]
    bool zero_algebra = false;
    std::string note;

    std::size_t dim() const { return basis.size(); }
    // Coordinates against `basis`, or nullopt outside the span.
    std::optional<std::vector<Scalar>> coordinates(const LinComb<TWord>& v) const;
    std::string to_string(const LinComb<TWord>& v) const;
    std::string to_string(std::size_t i) const { return to_string(basis[i]); }

    std::shared_ptr<const KernelEngine<TWord>> solver;
};

// V box C(X,Y) for a right matrix comodule V over C(X,X), stage = weight of the
// C(X,Y) factor. Left leg letters v1..vn.
CotensorSpace cotensor(const MatrixComodule& V, const CogroupoidData& C, std::size_t X, std::size_t Y, int d);
// A box C(X,Y) for a right comodule algebra over C(X,X), stage = max of the
// two factor weights.
CotensorSpace cotensor(const ComoduleAlgebra& A, const CogroupoidData& C, std::size_t X, std::size_t Y, int d);

// {b in B_{<= d} : beta(b) = b (x) 1}; basis vectors have a single leg.
CotensorSpace coinvariants(const ComoduleAlgebra& B, int d);

enum class CleftVerdict { NonCleft, Inconclusive };
struct CleftnessResult {
    CleftVerdict verdict = CleftVerdict::Inconclusive;
    std::size_t comodule_dim = 0;
    std::size_t cotensor_dim = 0;
    CotensorSpace space;
    std::string reason;
};
// One-sided: NonCleft iff the stabilized cotensor dimension differs from dim V.
// NotStabilized if the dimension still changes between d-1 and d.
CleftnessResult cleftness_witness(const MatrixComodule& V, const CogroupoidData& C, std::size_t X, std::size_t Y,
                                  int d);

// Substitutes scalars for generators in every relation; passes iff all vanish
// (an algebra map A -> k). Precondition error if a generator is unassigned.
Certificate character_check(const Presentation& A, const std::map<std::string, Scalar>& assignment);

}  // namespace hg
