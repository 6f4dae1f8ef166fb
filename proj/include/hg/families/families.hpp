#pragma once

#include <string>
#include <vector>

#include "hg/core/matrix.hpp"
#include "hg/hopf/cogroupoid.hpp"
#include "hg/presentation/rewriting.hpp"

namespace hg {

struct NamedMatrix {
    std::string name;
    ExactMatrix m;
};

using ScalarTable = std::vector<std::vector<Scalar>>;

// p_ii = 1, p_ij p_ji = 1. NotAST otherwise; with plus_minus_one also
// p_ij = p_ji = +-1 (NotPlusMinusOne).
struct ASTMatrix {
    std::string name;
    ScalarTable p;
    std::size_t size() const { return p.size(); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return p[i][j]; }
};
void validate_ast(const ASTMatrix& p, bool plus_minus_one = false);
ASTMatrix trivial_ast(std::size_t n);
// Symbolic AST matrix with upper entries p_ij (parameter names prefix + ij).
ASTMatrix symbolic_ast(std::size_t n, const std::string& prefix = "p");

// Generator name for a matrix entry: prefix + i + j (1-based).
std::string entry_name(const std::string& prefix, std::size_t i, std::size_t j);

// ---- bilinear family B(E,F) ----
// tr(E^{-1} E^t); B(E,F) = 0 when the invariants differ (sizes >= 2).
Scalar b_invariant(const ExactMatrix& E);
PresentationPtr make_B_algebra(const NamedMatrix& E, const NamedMatrix& F);
CogroupoidData make_B(const std::vector<NamedMatrix>& objects);
// V_E over B(E) = C(x,x): coefficients a_ij.
MatrixComodule fundamental_comodule(const CogroupoidData& C, std::size_t x);

// ---- universal cosovereign family H(E,F) ----
std::pair<Scalar, Scalar> h_invariants(const ExactMatrix& E);  // (tr E, tr E^{-1})
PresentationPtr make_H_algebra(const NamedMatrix& E, const NamedMatrix& F);
CogroupoidData make_H(const std::vector<NamedMatrix>& objects);
// U_E over H(E): coefficients u_ij (the u-block of the generators).
MatrixComodule u_comodule(const CogroupoidData& C, std::size_t x);

// ---- multiparametric GL_n family O_{p,q}(GL_n) ----
PresentationPtr make_GLpq_algebra(const ASTMatrix& p, const ASTMatrix& q);
CogroupoidData make_GLpq(const std::vector<ASTMatrix>& objects);
// O_{p,1}(GL_n) -> quantum torus, x_ij, y_ij -> delta_ij t_i, delta_ij t_i^{-1}.
Certificate gl_torus_witness(const ASTMatrix& p);

// ---- twisted S_2n family O_{p,q}(S_2n), generators x_ij, 1 <= i,j <= 2n ----
std::size_t s2n_prime(std::size_t i);  // 1-based
std::size_t s2n_star(std::size_t i);   // 1-based, in 1..n
// R^{kl}_{ij}(p), all indices 1-based.
Scalar r_tensor(const ASTMatrix& p, std::size_t i, std::size_t j, std::size_t k, std::size_t l);
PresentationPtr make_S2n_algebra(const ASTMatrix& p, const ASTMatrix& q);
CogroupoidData make_S2n(const std::vector<ASTMatrix>& objects);
// O_{p,1}(S_2n) -> twisted group algebra of (Z/2)^n.
Certificate s2n_twisted_witness(const ASTMatrix& p);
// k_p[x_1..x_2n]: 4 x_i x_j = (3 + p) x_j x_i + (1 - p)(x_j' x_i + x_j x_i') + (p - 1) x_j' x_i'.
PresentationPtr make_kp_algebra(const ASTMatrix& p);
// k_p[x_1..x_2n] with coaction x_i -> sum_k x_k (x) x_ki over C(x,x) = O_p(S_2n).
ComoduleAlgebra make_kp_polynomial(const CogroupoidData& s2n, std::size_t x, const ASTMatrix& p);

// ---- 2-cocycle cogroupoid of a finite group algebra ----
struct FiniteGroup {
    std::vector<std::string> names;            // names[0] is the identity
    std::vector<std::vector<std::size_t>> mul;  // mul[g][h] = gh
    std::size_t order() const { return names.size(); }
    std::size_t inverse(std::size_t g) const;
};
// Z/n_1 x ... x Z/n_k with elements named by exponents ("e", "g1", "g1g2^2", ...).
FiniteGroup cyclic_product(const std::vector<unsigned>& orders);
// Exponent vector of an element of a cyclic product.
std::vector<unsigned> exponents(const FiniteGroup& G, std::size_t g, const std::vector<unsigned>& orders);

struct GroupCocycle {
    std::string name;
    ScalarTable sigma;  // sigma[g][h]
};
void validate_cocycle(const FiniteGroup& G, const GroupCocycle& s);
GroupCocycle trivial_cocycle(const FiniteGroup& G);
// sigma(x, y) = prod_{i,j} b_ij^(x_i y_j) on a cyclic product.
GroupCocycle bilinear_cocycle(const FiniteGroup& G, const std::vector<unsigned>& orders, const ScalarTable& b,
                              const std::string& name);
PresentationPtr make_cocycle_algebra(const FiniteGroup& G, const GroupCocycle& s, const GroupCocycle& t);
CogroupoidData make_group_cocycle_cogroupoid(const FiniteGroup& G, const std::vector<GroupCocycle>& cocycles);

// ---- model comodule algebra A_{M,t}: sum_ij M_ij x_i x_j = t ----
PresentationPtr make_AMt_algebra(const ExactMatrix& M, const Scalar& t, const std::string& name = "A");
// A_{E^{-1},t} over B(E) = C(x,x), coaction x_i -> sum_k x_k (x) a_ki.
ComoduleAlgebra make_AMt(const CogroupoidData& B, std::size_t x, const Scalar& t);

}  // namespace hg
