#include "doctest.h"
#include "hg/core/error.hpp"
#include "hg/core/expr.hpp"
#include "hg/families/families.hpp"
#include "hg/weakhopf/weakhopf.hpp"

using namespace hg;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

CogroupoidData klein_cogroupoid() {
    FiniteGroup G = cyclic_product({2, 2});
    GroupCocycle s = bilinear_cocycle(G, {2, 2}, {{S("1"), S("1")}, {S("-1"), S("1")}}, "s");
    return make_group_cocycle_cogroupoid(G, {trivial_cocycle(G), s});
}

}  // namespace

TEST_CASE("weak Hopf algebra of the Klein cocycle cogroupoid, two objects") {
    WeakHopfData W(klein_cogroupoid(), {0, 1});
    CHECK(W.dim() == 16);
    CHECK(W.eps(W.unit(), 0) == WeakElement(BlockKey{}, S("2")));
    Certificate c = check_weak_hopf(W);
    CHECK_MESSAGE(c.pass(), c.summary());
    CHECK(c.exact);
    CHECK(c.data["axioms"].size() == weak_hopf_axiom_list().size());
    // Delta(1) has 8 terms 1_(i,k) (x) 1_(k,j), not 1 (x) 1 with 16.
    WeakElement d1 = W.reduce(W.delta(W.unit(), 0));
    CHECK(d1.size() == 8);
    CHECK(W.unit(2).size() == 16);
}

TEST_CASE("single object: an ordinary Hopf algebra") {
    WeakHopfData W(klein_cogroupoid(), {1});
    CHECK(W.dim() == 4);
    Certificate c = check_weak_hopf(W);
    CHECK_MESSAGE(c.pass(), c.summary());
    CHECK(W.reduce(W.delta(W.unit(), 0)) == W.unit(2));
}

TEST_CASE("mutations are detected") {
    CogroupoidData C = klein_cogroupoid();
    SUBCASE("antipode sign flip") {
        AlgebraMorphism S1 = C.antipode(0, 1);
        S1.images[1] = -S1.images[1];
        C.replace_antipode(0, 1, S1);
        CHECK(!check_weak_hopf(WeakHopfData(C, {0, 1})).pass());
    }
    SUBCASE("dropped summand in a comultiplication") {
        AlgebraMorphism D = C.delta(0, 1, 0);
        D.images[2] = TensorElement();
        C.replace_delta(0, 1, 0, D);
        CHECK(!check_weak_hopf(WeakHopfData(C, {0, 1})).pass());
    }
}

TEST_CASE("B cogroupoid with two objects, generator level") {
    NamedMatrix E{"E2", ExactMatrix::parse({{"0", "1"}, {"-1/2", "0"}})};
    ExactMatrix X = ExactMatrix::parse({{"1", "2"}, {"-1", "3"}});
    NamedMatrix F{"F", X.transpose() * E.m * X};
    CHECK(b_invariant(E.m) == b_invariant(F.m));
    WeakHopfData W(make_B({E, F}), {0, 1});
    Certificate c = check_weak_hopf(W, 2);
    CHECK_MESSAGE(c.pass(), c.summary());
    CHECK(!c.exact);
    CHECK(!c.tags.empty());
}
