#pragma once

#include <string>
#include <vector>

#include "hg/core/matrix.hpp"
#include "hg/presentation/morphism.hpp"

namespace hg {

struct HopfData {
    std::string name;
    PresentationPtr algebra;
    AlgebraMorphism delta;     // into algebra (x) algebra
    AlgebraMorphism eps;       // into the base field
    AlgebraMorphism antipode;  // anti-map into algebra
};

// Right comodule V with coaction v_i -> sum_j v_j (x) coeff[j][i].
struct MatrixComodule {
    std::string name;
    PresentationPtr algebra;
    std::vector<std::vector<FreeElement>> coeff;
    std::size_t dim() const { return coeff.size(); }
};

// The trivial one-dimensional comodule.
MatrixComodule trivial_comodule(PresentationPtr algebra);

// Right comodule algebra: coaction is an algebra map A -> A (x) H.
struct ComoduleAlgebra {
    std::string name;
    PresentationPtr algebra;
    HopfData hopf;
    AlgebraMorphism coaction;
};

enum class NonzeroStatus {
    Certified,     // explicit witness (character, normal-form representation, finite basis)
    Unverified,    // invariants match; nonvanishing rests on an external argument
    ExpectedZero,  // invariants differ
};
std::string nonzero_status_name(NonzeroStatus s);

struct HomStatus {
    NonzeroStatus status = NonzeroStatus::Unverified;
    std::string reason;
};

// Finite cogroupoid: hom-algebras C(X,Y) for every ordered pair of objects
// and the structural maps
//   delta(X,Y,Z) : C(X,Y) -> C(X,Z) (x) C(Z,Y)
//   eps(X)       : C(X,X) -> k
//   antipode(X,Y): C(X,Y) -> C(Y,X), an anti-map.
class CogroupoidData {
public:
    std::string family;
    std::vector<std::string> objects;
    bool finite = false;  // hom-algebras finite dimensional, spanned by generators
    std::vector<ExactMatrix> matrices;  // object matrices for the matrix families

    std::size_t size() const { return objects.size(); }
    const PresentationPtr& hom(std::size_t x, std::size_t y) const { return hom_.at(x * size() + y); }
    const AlgebraMorphism& delta(std::size_t x, std::size_t y, std::size_t z) const {
        return delta_.at((x * size() + y) * size() + z);
    }
    const AlgebraMorphism& eps(std::size_t x) const { return eps_.at(x); }
    const AlgebraMorphism& antipode(std::size_t x, std::size_t y) const { return antipode_.at(x * size() + y); }
    const HomStatus& status(std::size_t x, std::size_t y) const { return status_.at(x * size() + y); }
    void set_status(std::size_t x, std::size_t y, HomStatus s) { status_.at(x * size() + y) = std::move(s); }

    // Overrides used to build deliberately broken data for negative tests.
    void replace_delta(std::size_t x, std::size_t y, std::size_t z, AlgebraMorphism f) {
        delta_.at((x * size() + y) * size() + z) = std::move(f);
    }
    void replace_antipode(std::size_t x, std::size_t y, AlgebraMorphism f) { antipode_.at(x * size() + y) = std::move(f); }

    HopfData hopf(std::size_t x) const;
    std::string pair_name(std::size_t x, std::size_t y) const { return "(" + objects[x] + "," + objects[y] + ")"; }

    // Builders supply every hom-algebra first, then the maps between them.
    struct Builder {
        virtual ~Builder() = default;
        virtual PresentationPtr hom(std::size_t x, std::size_t y) = 0;
        virtual std::vector<TensorElement> delta(std::size_t x, std::size_t y, std::size_t z,
                                                 const Presentation& xz, const Presentation& zy) = 0;
        virtual std::vector<TensorElement> eps(std::size_t x) = 0;
        virtual std::vector<TensorElement> antipode(std::size_t x, std::size_t y, const Presentation& yx) = 0;
        virtual HomStatus status(std::size_t x, std::size_t y) = 0;
    };
    static CogroupoidData build(std::string family, std::vector<std::string> objects, Builder& b);

    // Full subcogroupoid on the given objects.
    CogroupoidData restrict_to(const std::vector<std::size_t>& objs) const;

private:
    std::vector<PresentationPtr> hom_;
    std::vector<AlgebraMorphism> delta_, eps_, antipode_;
    std::vector<HomStatus> status_;
};

}  // namespace hg
