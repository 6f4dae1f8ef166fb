#include "doctest.h"
#include "hg/core/error.hpp"
#include "hg/core/expr.hpp"
#include "hg/families/families.hpp"
#include "hg/hopf/checks.hpp"

using namespace hg;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

FreeElement mul(const FreeElement& a, const FreeElement& b) { return multiply(a, b); }

ASTMatrix ast2(const char* p12, const std::string& name) {
    return {name, {{S("1"), S(p12)}, {S(p12).inverse(), S("1")}}};
}

// Relations of O_{p,q}(S_2n) written out term by term, independent of the
// R-tensor encoding used by the constructor.
std::vector<FreeElement> s2n_explicit(const Presentation& P, const ASTMatrix& p, const ASTMatrix& q) {
    std::size_t N = 2 * p.size();
    auto x = [&](std::size_t i, std::size_t j) { return P.gen((i - 1) * N + (j - 1)); };
    std::vector<FreeElement> out;
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j)
            for (std::size_t k = 1; k <= N; ++k)
                for (std::size_t l = 1; l <= N; ++l) {
                    Scalar a = q(s2n_star(i) - 1, s2n_star(j) - 1), b = p(s2n_star(l) - 1, s2n_star(k) - 1);
                    std::size_t ip = s2n_prime(i), jp = s2n_prime(j), kp = s2n_prime(k), lp = s2n_prime(l);
                    FreeElement lhs = mul(x(k, j), x(l, i)).scaled(S("3") + a) +
                                      mul(x(k, j), x(l, ip)).scaled(S("1") - a) +
                                      mul(x(k, jp), x(l, i)).scaled(S("1") - a) +
                                      mul(x(k, jp), x(l, ip)).scaled(a - S("1"));
                    FreeElement rhs = mul(x(l, i), x(k, j)).scaled(S("3") + b) +
                                      mul(x(lp, i), x(k, j)).scaled(S("1") - b) +
                                      mul(x(l, i), x(kp, j)).scaled(S("1") - b) +
                                      mul(x(lp, i), x(kp, j)).scaled(b - S("1"));
                    out.push_back(lhs - rhs);
                }
    return out;
}

}  // namespace

TEST_CASE("AST validation") {
    CHECK_NOTHROW(validate_ast(ast2("q", "p")));
    CHECK_NOTHROW(validate_ast(ast2("-1", "p"), true));
    CHECK_THROWS_AS(validate_ast(ast2("q", "p"), true), Error);
    ASTMatrix bad = ast2("2", "b");
    bad.p[1][0] = S("2");
    CHECK_THROWS_AS(validate_ast(bad), Error);
    CHECK_NOTHROW(validate_ast(symbolic_ast(3)));
}

TEST_CASE("B family presentation and invariants") {
    NamedMatrix Eq{"Eq", ExactMatrix::parse({{"0", "1"}, {"-1/q", "0"}})};
    CHECK(b_invariant(Eq.m) == S("-q-1/q"));
    PresentationPtr B = make_B_algebra(Eq, Eq);
    CHECK(B->gens().size() == 4);
    CHECK(B->gens().name(1) == "a12");
    // O_q(SL2): b a = q a b in the quotient (a = a11, b = a12).
    auto s = B->slice(2);
    CHECK(s->equals(mul(B->gen(1), B->gen(0)), mul(B->gen(0), B->gen(1)).scaled(S("q"))));
    NamedMatrix Z{"Z", ExactMatrix::parse({{"0", "0"}, {"0", "1"}})};
    CHECK_THROWS_AS(make_B_algebra(Eq, Z), Error);
}

TEST_CASE("B family: mismatched invariants give the zero algebra at a small level") {
    NamedMatrix E2{"E2", ExactMatrix::parse({{"0", "1"}, {"-1/2", "0"}})};
    NamedMatrix I2{"I", ExactMatrix::identity(2)};
    CogroupoidData C = make_B({E2, I2});
    CHECK(C.status(0, 1).status == NonzeroStatus::ExpectedZero);
    CHECK(!C.hom(0, 1)->slice(1)->is_zero_algebra());
    CHECK(C.hom(0, 1)->slice(2)->is_zero_algebra());
}

TEST_CASE("H family") {
    NamedMatrix Fq{"Fq", ExactMatrix::parse({{"1/q", "0"}, {"0", "q"}})};
    CogroupoidData C = make_H({Fq});
    CHECK(C.hom(0, 0)->gens().size() == 8);
    Certificate h = check_hopf(C.hopf(0), 2);
    CHECK_MESSAGE(h.pass(), h.summary());
    Certificate u = check_comodule(u_comodule(C, 0), C.hopf(0), 2);
    CHECK_MESSAGE(u.pass(), u.summary());

    // Traces differ by 1.
    NamedMatrix G{"G", ExactMatrix::parse({{"1/q", "0", "0"}, {"0", "q", "0"}, {"0", "0", "1"}})};
    CHECK(h_invariants(G.m) != h_invariants(Fq.m));
    CogroupoidData D = make_H({Fq, G});
    CHECK(D.status(0, 1).status == NonzeroStatus::ExpectedZero);
}

TEST_CASE("H cogroupoid with matching invariants") {
    NamedMatrix F{"F", ExactMatrix::parse({{"2", "0"}, {"0", "3"}})};
    // Triangular with the same diagonal: tr = 5, tr^-1 = 5/6 for both.
    NamedMatrix G{"G", ExactMatrix::parse({{"2", "0"}, {"1", "3"}})};
    CogroupoidData C = make_H({F, G});
    CHECK(C.status(0, 1).status == NonzeroStatus::Unverified);
    Certificate c = check_cogroupoid(C, 2);
    CHECK_MESSAGE(c.pass(), c.summary());
}

TEST_CASE("GL family") {
    ASTMatrix one = trivial_ast(2);
    PresentationPtr P = make_GLpq_algebra(one, one);
    CHECK(P->gens().size() == 8);
    CHECK(P->raw_relation_count() == 3 * 16 + 2 * 4);
    auto s = P->slice(2);
    CHECK(s->equals(mul(P->gen(0), P->gen(1)), mul(P->gen(1), P->gen(0))));

    ASTMatrix p = ast2("q", "p");
    PresentationPtr Q = make_GLpq_algebra(p, p);
    auto sq = Q->slice(2);
    // x22 x11 = p_21 q_12 x11 x22 = x11 x22.
    CHECK(sq->equals(mul(Q->gen(3), Q->gen(0)), mul(Q->gen(0), Q->gen(3))));
    // x12 x11 = p_11 q_12 x11 x12 = q x11 x12.
    CHECK(sq->equals(mul(Q->gen(1), Q->gen(0)), mul(Q->gen(0), Q->gen(1)).scaled(S("q"))));

    CogroupoidData C = make_GLpq({one, p});
    CHECK(C.status(0, 1).status == NonzeroStatus::Certified);
    CHECK(C.status(1, 0).status == NonzeroStatus::Certified);
    Certificate c = check_cogroupoid(C, 2);
    CHECK_MESSAGE(c.pass(), c.summary());
}

TEST_CASE("quantum torus witnesses for O_{p,1}(GL_n)") {
    for (std::size_t n : {2u, 3u}) {
        Certificate w = gl_torus_witness(symbolic_ast(n));
        CHECK_MESSAGE(w.pass(), w.summary());
        // x_ij x_ij and y_ij y_ij relations vanish identically; one record per
        // remaining relation plus the target check.
        CHECK(w.checks.size() == 3 * n * n * n * n + 1);
    }
}

TEST_CASE("S_2n family: R tensor and relations") {
    ASTMatrix one = trivial_ast(2);
    CHECK(s2n_prime(1) == 2);
    CHECK(s2n_prime(4) == 3);
    CHECK(s2n_star(3) == 2);
    CHECK(s2n_star(2) == 1);
    CHECK(r_tensor(one, 1, 2, 1, 2).is_zero());  // R^{12}_{12}(1)
    CHECK(r_tensor(one, 2, 1, 1, 2) == S("4"));  // R^{12}_{21}(1)
    CHECK(r_tensor(one, 1, 3, 1, 2).is_zero());  // star mismatch

    ASTMatrix p = ast2("-1", "p");
    for (auto [a, b] : {std::pair{p, one}, std::pair{one, p}, std::pair{p, p}}) {
        PresentationPtr P = make_S2n_algebra(a, b);
        CHECK(P->gens().size() == 16);
        auto s = P->slice(2);
        for (auto& r : s2n_explicit(*P, a, b)) CHECK(s->reduce(r).is_zero());
        // Conversely: idempotent, sum and explicit exchange relations
        // generate every relation of the constructor.
        std::vector<FreeElement> all = s2n_explicit(*P, a, b);
        auto x = [&](std::size_t i, std::size_t j) { return P->gen((i - 1) * 4 + (j - 1)); };
        for (std::size_t i = 1; i <= 4; ++i) {
            FreeElement row = -unit_element(), col = -unit_element();
            for (std::size_t j = 1; j <= 4; ++j) {
                row += x(i, j);
                col += x(j, i);
                for (std::size_t k = 1; k <= 4; ++k) {
                    all.push_back(mul(x(i, j), x(i, k)) - (j == k ? x(i, j) : FreeElement()));
                    all.push_back(mul(x(j, i), x(k, i)) - (j == k ? x(j, i) : FreeElement()));
                }
            }
            all.push_back(row);
            all.push_back(col);
        }
        auto se = make_presentation("explicit", P->gens(), all)->slice(2);
        for (auto& r : P->relations()) CHECK(se->reduce(r).is_zero());
    }
}

TEST_CASE("S_2n family: p = 1 is commutative and the twisted witness passes") {
    ASTMatrix one = trivial_ast(2);
    PresentationPtr P = make_S2n_algebra(one, one);
    auto s = P->slice(2);
    CHECK(s->equals(mul(P->gen(0), P->gen(5)), mul(P->gen(5), P->gen(0))));
    CHECK(s->equals(mul(P->gen(2), P->gen(9)), mul(P->gen(9), P->gen(2))));

    Certificate w = s2n_twisted_witness(ast2("-1", "p"));
    CHECK_MESSAGE(w.pass(), w.summary());
    CHECK_THROWS_AS(make_S2n_algebra(ast2("q", "p"), one), Error);

    CogroupoidData C = make_S2n({one, ast2("-1", "p")});
    CHECK(C.status(0, 1).status == NonzeroStatus::Certified);
    Certificate h = check_hopf(C.hopf(1), 2);
    CHECK_MESSAGE(h.pass(), h.summary());
}

TEST_CASE("k_p polynomial algebra over O_p(S_4)") {
    ASTMatrix p = ast2("-1", "p");
    CogroupoidData C = make_S2n({p});
    ComoduleAlgebra A = make_kp_polynomial(C, 0, p);
    Certificate c = check_comodule_algebra(A, 2);
    CHECK_MESSAGE(c.pass(), c.summary());
    // p = 1 gives the commutative polynomial ring.
    PresentationPtr K = make_kp_algebra(trivial_ast(2));
    auto s = K->slice(2);
    CHECK(s->quotient_dims() == std::vector<std::size_t>{1, 4, 10});
    CHECK(s->equals(mul(K->gen(0), K->gen(2)), mul(K->gen(2), K->gen(0))));
    CHECK(make_kp_algebra(p)->slice(2)->quotient_dims() == std::vector<std::size_t>{1, 4, 10});
}

TEST_CASE("group cocycles") {
    FiniteGroup G = cyclic_product({2, 2});
    CHECK(G.order() == 4);
    CHECK(G.names[0] == "e");
    CHECK(G.names[3] == "g1g2");
    CHECK(G.mul[1][2] == 3);
    CHECK(G.inverse(3) == 3);
    GroupCocycle s = bilinear_cocycle(G, {2, 2}, {{S("1"), S("1")}, {S("-1"), S("1")}}, "s");
    CHECK_NOTHROW(validate_cocycle(G, s));
    // sigma((a,b),(c,d)) = (-1)^{bc}: g2 = (0,1), g1 = (1,0).
    CHECK(s.sigma[2][1] == S("-1"));
    CHECK(s.sigma[1][2] == S("1"));
    GroupCocycle bad = s;
    bad.sigma[1][1] = S("2");
    CHECK_THROWS_AS(validate_cocycle(G, bad), Error);

    // H(s, s) multiplies group-likes untwisted; H(s, 1) is the twisted group algebra.
    PresentationPtr Hss = make_cocycle_algebra(G, s, s);
    auto a = Hss->slice(2);
    CHECK(a->equals(mul(Hss->gen(2), Hss->gen(1)), Hss->gen(3)));
    PresentationPtr Hs1 = make_cocycle_algebra(G, s, trivial_cocycle(G));
    auto b = Hs1->slice(2);
    CHECK(b->equals(mul(Hs1->gen(2), Hs1->gen(1)), -Hs1->gen(3)));
    CHECK(b->equals(Hs1->gen(0), unit_element()));
    CHECK(b->standard_words(2).size() == 4);
}

TEST_CASE("model comodule algebras A_{E^-1,t}") {
    NamedMatrix Eq{"Eq", ExactMatrix::parse({{"0", "1"}, {"-1/q", "0"}})};
    CogroupoidData C = make_B({Eq});
    for (const char* t : {"0", "1"}) {
        ComoduleAlgebra A = make_AMt(C, 0, S(t));
        FreeElement x = A.algebra->gen(0), y = A.algebra->gen(1);
        // E_q^{-1} = ((0, -q), (1, 0)): -q xy + yx = t.
        FreeElement expect = mul(x, y).scaled(S("-q")) + mul(y, x) - scalar_element(S(t));
        CHECK(A.algebra->relations().size() == 1);
        CHECK(A.algebra->slice(2)->reduce(expect).is_zero());
        Certificate c = check_comodule_algebra(A, 2);
        CHECK_MESSAGE(c.pass(), c.summary());
    }
    NamedMatrix R{"R", ExactMatrix::parse({{"2", "1", "0"}, {"-1", "1", "3"}, {"0", "1/2", "2"}})};
    CogroupoidData D = make_B({R});
    Certificate c = check_comodule_algebra(make_AMt(D, 0, S("1")), 2);
    CHECK_MESSAGE(c.pass(), c.summary());
}
