#include "doctest.h"
#include "hg/core/error.hpp"
#include "hg/core/expr.hpp"
#include "hg/families/families.hpp"
#include "hg/hopf/checks.hpp"
#include "hg/hopf/tensor_ops.hpp"

using namespace hg;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

NamedMatrix Eq() { return {"Eq", ExactMatrix::parse({{"0", "1"}, {"-1/q", "0"}})}; }
NamedMatrix Eq2() { return {"E2", ExactMatrix::parse({{"0", "1"}, {"-1/2", "0"}})}; }
// 3x3 matrix with tr(F^-1 F^t) = -5/2 = -2 - 1/2.
NamedMatrix F3() { return {"F3", ExactMatrix::parse({{"1", "1", "0"}, {"0", "2/11", "0"}, {"0", "0", "1"}})}; }

FiniteGroup klein() { return cyclic_product({2, 2}); }
GroupCocycle klein_sigma(const FiniteGroup& G) {
    return bilinear_cocycle(G, {2, 2}, {{S("1"), S("1")}, {S("-1"), S("1")}}, "s");
}

}  // namespace

TEST_CASE("tensor leg operations") {
    Alphabet A({"x", "y"});
    Word x = A.letter(0), y = A.letter(1);
    TensorElement t = TensorElement(tword({x, y})) + TensorElement(tword({y, x}), S("2"));
    CHECK(arity_of(t) == 2);
    CHECK(multiply_legs(t, 0) == TensorElement(tword({concat(x, y)})) + TensorElement(tword({concat(y, x)}), S("2")));
    CHECK(swap_legs(t, 0, 1) == TensorElement(tword({y, x})) + TensorElement(tword({x, y}), S("2")));
    CHECK(sandwich_leg(TensorElement(tword({x})), 0, FreeElement(y), FreeElement(y)) ==
          TensorElement(tword({concat(concat(y, x), y)})));
}

TEST_CASE("Hopf axioms of O_q(SL2) = B(E_q)") {
    CogroupoidData C = make_B({Eq()});
    Certificate c = check_hopf(C.hopf(0), 3);
    CHECK_MESSAGE(c.pass(), c.summary());
    CHECK(c.degree == 3);

    // Mutation: a sign flip in one coproduct image breaks coassociativity.
    HopfData H = C.hopf(0);
    H.delta.images[1] = -H.delta.images[1];
    Certificate bad = check_hopf(H, 2);
    CHECK(!bad.pass());
    CHECK(bad.first_failure() != nullptr);
}

TEST_CASE("group-cocycle cogroupoid axioms are exact") {
    FiniteGroup G = klein();
    CogroupoidData C = make_group_cocycle_cogroupoid(G, {trivial_cocycle(G), klein_sigma(G)});
    CHECK(C.finite);
    Certificate c = check_cogroupoid(C, 2);
    CHECK_MESSAGE(c.pass(), c.summary());
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) {
            CHECK(C.status(x, y).status == NonzeroStatus::Certified);
            CHECK(C.hom(x, y)->slice(2)->standard_words(2).size() == 4);
        }
    for (std::size_t z = 0; z < 2; ++z) {
        Certificate ap = check_antipode_properties(C, 0, 1, z, 2);
        CHECK_MESSAGE(ap.pass(), ap.summary());
        Certificate r = delta_retraction(C, 0, 1, z, unit_coefficient_functional(), 2);
        CHECK_MESSAGE(r.pass(), r.summary());
    }
}

TEST_CASE("B cogroupoid with a 2x2 and a 3x3 object at q = 2") {
    CHECK(b_invariant(Eq2().m) == S("-5/2"));
    CHECK(b_invariant(F3().m) == S("-5/2"));
    CogroupoidData C = make_B({Eq2(), F3()});
    CHECK(C.status(0, 1).status == NonzeroStatus::Unverified);
    Certificate c = check_cogroupoid(C, 2);
    CHECK_MESSAGE(c.pass(), c.summary());
    Certificate ap = check_antipode_properties(C, 0, 1, 1, 2);
    CHECK_MESSAGE(ap.pass(), ap.summary());
    // psi = eps_Y when Z = Y.
    auto yy = C.hom(1, 1)->slice(2);
    Certificate r = delta_retraction(C, 0, 1, 1, counit_functional(C.eps(1), *yy), 2);
    CHECK_MESSAGE(r.pass(), r.summary());
    Certificate r2 = delta_retraction(C, 0, 1, 0, unit_coefficient_functional(), 2);
    CHECK_MESSAGE(r2.pass(), r2.summary());
}

TEST_CASE("retraction rejects a functional with psi(1) != 1") {
    CogroupoidData C = make_B({Eq2()});
    LinearFunctional bad{"zero", {}};
    CHECK_THROWS_AS(delta_retraction(C, 0, 0, 0, bad, 2), Error);
}

TEST_CASE("comodule checks") {
    CogroupoidData C = make_B({Eq()});
    HopfData H = C.hopf(0);
    Certificate v = check_comodule(fundamental_comodule(C, 0), H, 2);
    CHECK_MESSAGE(v.pass(), v.summary());
    CHECK(check_comodule(trivial_comodule(H.algebra), H, 2).pass());
    MatrixComodule wrong = fundamental_comodule(C, 0);
    std::swap(wrong.coeff[0][1], wrong.coeff[1][0]);
    CHECK(!check_comodule(wrong, H, 2).pass());
}

TEST_CASE("connectedness propagation") {
    FiniteGroup G = klein();
    CogroupoidData C = make_group_cocycle_cogroupoid(G, {trivial_cocycle(G), klein_sigma(G)});
    C.set_status(0, 1, {NonzeroStatus::Unverified, ""});
    C.set_status(1, 0, {NonzeroStatus::Unverified, ""});
    CHECK(!propagate_connectedness(C).pass);
    C.set_status(0, 1, {NonzeroStatus::Certified, "witness"});
    CheckRecord r = propagate_connectedness(C);
    CHECK(r.pass);
    CHECK(C.status(1, 0).status == NonzeroStatus::Certified);
}
