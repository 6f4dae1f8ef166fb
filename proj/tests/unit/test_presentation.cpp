#include "doctest.h"
#include "hg/core/error.hpp"
#include "hg/core/expr.hpp"
#include "hg/presentation/morphism.hpp"
#include "hg/presentation/rewriting.hpp"

using namespace hg;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

FreeElement mul(std::initializer_list<FreeElement> xs) {
    FreeElement r = unit_element();
    for (auto& x : xs) r = multiply(r, x);
    return r;
}

PresentationPtr quantum_plane(const Scalar& q) {
    Alphabet A({"x", "y"});
    FreeElement x(A.letter(0)), y(A.letter(1));
    return make_presentation("quantum plane", A, {mul({y, x}) - mul({x, y}).scaled(q)});
}

PresentationPtr weyl(const Scalar& q) {
    Alphabet A({"x", "y"});
    FreeElement x(A.letter(0)), y(A.letter(1));
    return make_presentation("weyl", A, {mul({y, x}) - mul({x, y}).scaled(q) - unit_element()});
}

// Test-local construction of the relations F^-1 a^t E a = I, a F^-1 a^t E = I.
PresentationPtr bef(const ExactMatrix& E, const ExactMatrix& F) {
    std::size_t m = E.rows(), n = F.rows();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) names.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
    Alphabet A(names);
    auto a = [&](std::size_t i, std::size_t j) { return FreeElement(A.letter(i * n + j)); };
    ExactMatrix Fi = F.inverse();
    std::vector<FreeElement> rels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FreeElement r;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    for (std::size_t s = 0; s < m; ++s)
                        r += multiply(a(l, k), a(s, j)).scaled(Fi(i, k) * E(l, s));
            if (i == j) r -= unit_element();
            rels.push_back(r);
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            FreeElement r;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t s = 0; s < m; ++s)
                        r += multiply(a(i, k), a(s, l)).scaled(Fi(k, l) * E(s, j));
            if (i == j) r -= unit_element();
            rels.push_back(r);
        }
    return make_presentation("B", A, rels);
}

ExactMatrix Eq() { return ExactMatrix::parse({{"0", "1"}, {"-1/q", "0"}}); }

}  // namespace

TEST_CASE("ideal slice: free algebra and quantum plane") {
    Alphabet A({"x", "y"});
    auto free = make_presentation("free", A, {});
    CHECK(free->slice(3)->ideal_basis().empty());
    CHECK(free->slice(3)->quotient_dims() == std::vector<std::size_t>{1, 2, 4, 8});

    auto qp = quantum_plane(S("q"));
    auto s2 = qp->slice(2);
    CHECK(s2->ideal_basis().size() == 1);
    CHECK(s2->quotient_dims() == std::vector<std::size_t>{1, 2, 3});
    CHECK(qp->slice(2).get() == s2.get());  // cached
    CHECK(qp->slice(4)->quotient_dims() == std::vector<std::size_t>{1, 2, 3, 4, 5});
}

TEST_CASE("ideal slice: B(E_q)") {
    auto B = bef(Eq(), Eq());
    CHECK(B->relations().size() == 8);
    // Seven independent relations: the five q-commutations, the quantum
    // determinant and ad - da = (q - 1/q) bc. Degree-2 count 16 - 7 matches
    // the PBW monomials a^2, b^2, c^2, d^2, ab, ac, bc, bd, cd.
    auto rk = rank_and_kernel(B->relations(), 2);
    CHECK(rk.rank == 7);
    CHECK(rk.kernel.size() == 1);
    auto s = B->slice(2);
    CHECK(s->quotient_dims() == std::vector<std::size_t>{1, 4, 9});
    CHECK(s->ideal_rank_in_degree(2) == 7);
    // PBW count at degree 3: monomials b^j c^k a^i or b^j c^k d^l, 20 - 4 = 16.
    CHECK(B->slice(3)->quotient_dims() == std::vector<std::size_t>{1, 4, 9, 16});
    CHECK(!s->is_zero_algebra());
}

TEST_CASE("equality in the quotient") {
    auto qp = quantum_plane(S("q"));
    auto s = qp->slice(2);
    FreeElement x = qp->gen("x"), y = qp->gen("y");
    CHECK(s->equals(mul({x, y}), mul({x, y})));
    CHECK(s->equals(mul({y, x}), mul({x, y}).scaled(S("q"))));
    CHECK(!s->equals(mul({y, x}), mul({x, y})));
    auto w = weyl(S("q"));
    auto sw = w->slice(2);
    CHECK(sw->equals(mul({y, x}), mul({x, y}).scaled(S("q")) + unit_element()));
    CHECK_THROWS_AS(s->reduce(mul({x, x, x})), Error);
}

TEST_CASE("generator elimination and zero algebra") {
    Alphabet A({"x", "y", "z"});
    FreeElement x(A.letter(0)), y(A.letter(1)), z(A.letter(2));
    auto P = make_presentation("lin", A, {z - x - y.scaled(2), mul({y, x}) - mul({x, y})});
    auto s = P->slice(3);
    CHECK(s->eliminated().size() == 1);
    CHECK(s->kept_generators() == std::vector<std::size_t>{0, 1});
    CHECK(s->equals(mul({z, x}), mul({x, x}) + mul({x, y}).scaled(2)));
    CHECK(s->quotient_dims() == std::vector<std::size_t>{1, 2, 3, 4});
    auto Z = make_presentation("zero", A, {x - unit_element(), x - unit_element().scaled(2)});
    CHECK(Z->slice(1)->is_zero_algebra());
    CHECK(Z->slice(1)->reduce(y).is_zero());
}

TEST_CASE("word cap") {
    Alphabet A({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"});
    auto P = make_presentation("big", A, {});
    CHECK_THROWS_AS(P->slice(6), Error);
}

TEST_CASE("tensor presentations") {
    auto kx = make_presentation("k[x]", Alphabet({"x"}), {});
    auto ky = make_presentation("k[y]", Alphabet({"y"}), {});
    auto T = tensor_presentation(*kx, *ky);
    CHECK(T->gens().size() == 2);
    REQUIRE(T->relations().size() == 1);
    FreeElement x = T->gen("x"), y = T->gen("y");
    CHECK(T->relations()[0] == mul({x, y}) - mul({y, x}));

    ExactMatrix G = ExactMatrix::parse({{"1", "2"}, {"-3", "1"}});
    auto B1 = bef(Eq(), G), B2 = bef(G, Eq());
    auto T2 = tensor_presentation(*B1, *B2);
    CHECK(T2->gens().size() == 8);
    CHECK(T2->relations().size() == 8 + 8 + 16);
    CHECK(T2->gens().name(4) == "a11'");

    auto qp = quantum_plane(S("q"));
    auto T3 = tensor_presentation(*qp, *kx);
    CHECK(T3->slice(1)->quotient_dims()[1] == qp->slice(1)->quotient_dims()[1] + kx->slice(1)->quotient_dims()[1]);
}

TEST_CASE("reduce_tensor factorwise") {
    auto qp = quantum_plane(S("q"));
    auto s = qp->slice(2);
    FreeElement x = qp->gen("x"), y = qp->gen("y");
    TensorElement t = tensor(mul({y, x}), mul({y, x})) - tensor(mul({x, y}), mul({x, y})).scaled(S("q^2"));
    CHECK(reduce_tensor(t, {s.get(), s.get()}).is_zero());
}

TEST_CASE("rewriting cross-oracle: quantum plane and torus") {
    Scalar q = S("q");
    std::vector<std::vector<Scalar>> p{{Scalar(1), q.inverse()}, {q, Scalar(1)}};
    // Quantum plane as a rewrite system y x -> q x y.
    Alphabet A({"x", "y"});
    NormalFormAlgebra plane("plane", A, {{concat(A.letter(1), A.letter(0)), FreeElement(concat(A.letter(0), A.letter(1)), q)}});
    CHECK(plane.confluent());
    auto P = plane.as_presentation();
    auto sp = P->slice(5);
    std::vector<std::size_t> irr(6, 0);
    for (auto& w : plane.irreducible_words(5)) ++irr[w.wt];
    CHECK(sp->quotient_dims() == irr);

    NormalFormAlgebra torus = quantum_torus(p);
    CHECK(torus.check_confluence().pass());
    auto TP = torus.as_presentation();
    auto st = TP->slice(3);
    std::vector<std::size_t> irr3(4, 0);
    for (auto& w : torus.irreducible_words(3)) ++irr3[w.wt];
    CHECK(st->quotient_dims() == irr3);
    // Normal forms agree with slice reduction on a sample.
    FreeElement t2(torus.gens().letter(2)), T1(torus.gens().letter(1));
    FreeElement e = mul({t2, T1, t2});
    CHECK(st->reduce(e) == st->reduce(torus.normal_form(e)));
}

TEST_CASE("diamond lemma checks") {
    Scalar q = S("q");
    std::vector<std::vector<Scalar>> p3{{Scalar(1), S("p12"), S("p13")},
                                        {S("p12").inverse(), Scalar(1), S("p23")},
                                        {S("p13").inverse(), S("p23").inverse(), Scalar(1)}};
    auto c = quantum_torus(p3).check_confluence();
    CHECK(c.pass());
    CHECK(c.checks.size() > 20);
    std::vector<std::vector<Scalar>> pm{{Scalar(1), Scalar(-1)}, {Scalar(-1), Scalar(1)}};
    CHECK(twisted_group_algebra(pm).confluent());
    // t2 t1 t1: t2 (t1 t1) -> t2, (t2 t1) t1 -> q^2 t2.
    std::vector<std::vector<Scalar>> bad{{Scalar(1), q.inverse()}, {q, Scalar(1)}};
    auto tg = twisted_group_algebra(bad);
    auto cb = tg.check_confluence();
    CHECK(!cb.pass());
    REQUIRE(cb.first_failure() != nullptr);
    for (auto& rec : cb.checks)
        if (!rec.pass) CHECK((rec.objects == "t2*t1*t1" || rec.objects == "t2*t2*t1"));

    Alphabet A({"x"});
    FreeElement one = unit_element();
    CHECK_THROWS(NormalFormAlgebra("bad", A, {{Word(), one}}));
}

TEST_CASE("morphism certificates and composition") {
    Scalar q = S("q");
    auto qp = quantum_plane(q);
    FreeElement x = qp->gen("x"), y = qp->gen("y");
    AlgebraMorphism scale{"scale", qp, {qp}, false, {as_tensor(x.scaled(2)), as_tensor(y.scaled(3))}};
    CHECK(check_morphism(scale).pass());

    std::vector<std::vector<Scalar>> p{{Scalar(1), q.inverse()}, {q, Scalar(1)}};
    auto torus = quantum_torus(p).as_presentation();
    FreeElement t1 = torus->gen("t1"), t2 = torus->gen("t2");
    AlgebraMorphism into{"into torus", qp, {torus}, false, {as_tensor(t1), as_tensor(t2)}};
    CHECK(check_morphism(into).pass());
    auto comp = compose(into, scale);
    auto cc = check_morphism(comp);
    CHECK(cc.pass());
    CHECK(cc.degree == 2);

    // Wrong images: the relation y x - q x y is not respected.
    AlgebraMorphism wrong{"wrong", qp, {torus}, false, {as_tensor(t2), as_tensor(t1)}};
    auto cw = check_morphism(wrong);
    CHECK(!cw.pass());
    REQUIRE(cw.first_failure() != nullptr);
    CHECK(cw.first_failure()->id == "relation 0");
    CHECK(!cw.first_failure()->detail.empty());

    // Anti-map: quantum plane at q to quantum plane at 1/q.
    auto qpi = quantum_plane(q.inverse());
    AlgebraMorphism anti{"anti", qp, {qpi}, true, {as_tensor(qpi->gen("x")), as_tensor(qpi->gen("y"))}};
    CHECK(check_morphism(anti).pass());
    anti.anti = false;
    CHECK(!check_morphism(anti).pass());

    // Counit-type map to the base field.
    AlgebraMorphism eps{"eps", qp, {}, false, {scalar_tensor(Scalar(0), 0), scalar_tensor(Scalar(5), 0)}};
    CHECK(check_morphism(eps).pass());
}

TEST_CASE("witness into a normal-form algebra") {
    Scalar q = S("q");
    auto qp = quantum_plane(q);
    std::vector<std::vector<Scalar>> p{{Scalar(1), q.inverse()}, {q, Scalar(1)}};
    auto torus = quantum_torus(p);
    FreeElement t1(torus.gens().letter(0)), t2(torus.gens().letter(2));
    CHECK(quantum_torus_witness(*qp, torus, {t1, t2}).pass());
    CHECK(!quantum_torus_witness(*qp, torus, {t1, t2.scaled(-1) + t1}).pass());
    auto bad = twisted_group_algebra(p);
    CHECK_THROWS_AS(quantum_torus_witness(*qp, bad, {t1, t1}), Error);
}
