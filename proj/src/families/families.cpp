#include "hg/families/families.hpp"

#include "hg/core/error.hpp"
#include "hg/hopf/checks.hpp"

namespace hg {

namespace {

FreeElement gen(const Presentation& P, std::size_t i) { return P.gen(i); }

TensorElement unit0() { return scalar_tensor(Scalar(1), 0); }
TensorElement delta0(bool on) { return on ? unit0() : TensorElement(); }

std::vector<std::string> matrix_names(const std::string& prefix, std::size_t m, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) names.push_back(entry_name(prefix, i + 1, j + 1));
    return names;
}

std::vector<std::string> names_of(const std::vector<NamedMatrix>& objs) {
    std::vector<std::string> out;
    for (auto& o : objs) out.push_back(o.name);
    return out;
}

std::vector<std::string> names_of(const std::vector<ASTMatrix>& objs) {
    std::vector<std::string> out;
    for (auto& o : objs) out.push_back(o.name);
    return out;
}

// Matrix coproduct x_ij -> sum_k x_ik (x) x_kj on blocks of generators with
// offsets given per factor; sizes (m x p) and (p x n).
void matrix_delta(std::vector<TensorElement>& out, const Presentation& xz, const Presentation& zy, std::size_t off_xz,
                  std::size_t off_zy, std::size_t m, std::size_t p, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            TensorElement t;
            for (std::size_t k = 0; k < p; ++k) t += tensor(gen(xz, off_xz + i * p + k), gen(zy, off_zy + k * n + j));
            out.push_back(t);
        }
}

void require_invertible(const NamedMatrix& E) {
    if (!E.m.is_invertible()) raise(ErrorKind::SingularMatrix, "object " + E.name + " is not invertible");
}

class BBuilder : public CogroupoidData::Builder {
public:
    explicit BBuilder(const std::vector<NamedMatrix>& o) : o_(o) {}
    PresentationPtr hom(std::size_t x, std::size_t y) override { return make_B_algebra(o_[x], o_[y]); }
    std::vector<TensorElement> delta(std::size_t x, std::size_t y, std::size_t z, const Presentation& xz,
                                     const Presentation& zy) override {
        std::vector<TensorElement> out;
        matrix_delta(out, xz, zy, 0, 0, dim(x), dim(z), dim(y));
        return out;
    }
    std::vector<TensorElement> eps(std::size_t x) override {
        std::vector<TensorElement> out;
        for (std::size_t i = 0; i < dim(x); ++i)
            for (std::size_t j = 0; j < dim(x); ++j) out.push_back(delta0(i == j));
        return out;
    }
    // S(a) = E^{-1} a^t F with a the generator matrix of B(F,E).
    std::vector<TensorElement> antipode(std::size_t x, std::size_t y, const Presentation& yx) override {
        const ExactMatrix& F = o_[y].m;
        ExactMatrix Ei = o_[x].m.inverse();
        std::size_t m = dim(x), n = dim(y);
        std::vector<TensorElement> out;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                FreeElement s;
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t l = 0; l < n; ++l) s += gen(yx, l * m + k).scaled(Ei(i, k) * F(l, j));
                out.push_back(as_tensor(s));
            }
        return out;
    }
    HomStatus status(std::size_t x, std::size_t y) override {
        if (x == y) return {NonzeroStatus::Certified, "counit is a character"};
        if (b_invariant(o_[x].m) == b_invariant(o_[y].m))
            return {NonzeroStatus::Unverified, "invariants tr(E^-1 E^t) match"};
        return {NonzeroStatus::ExpectedZero, "invariants tr(E^-1 E^t) differ"};
    }

private:
    std::size_t dim(std::size_t x) const { return o_[x].m.rows(); }
    const std::vector<NamedMatrix>& o_;
};

class HBuilder : public CogroupoidData::Builder {
public:
    explicit HBuilder(const std::vector<NamedMatrix>& o) : o_(o) {}
    PresentationPtr hom(std::size_t x, std::size_t y) override { return make_H_algebra(o_[x], o_[y]); }
    std::vector<TensorElement> delta(std::size_t x, std::size_t y, std::size_t z, const Presentation& xz,
                                     const Presentation& zy) override {
        std::size_t m = dim(x), p = dim(z), n = dim(y);
        std::vector<TensorElement> out;
        matrix_delta(out, xz, zy, 0, 0, m, p, n);
        matrix_delta(out, xz, zy, m * p, p * n, m, p, n);
        return out;
    }
    std::vector<TensorElement> eps(std::size_t x) override {
        std::vector<TensorElement> out;
        for (int b = 0; b < 2; ++b)
            for (std::size_t i = 0; i < dim(x); ++i)
                for (std::size_t j = 0; j < dim(x); ++j) out.push_back(delta0(i == j));
        return out;
    }
    // S(u) = v^t, S(v) = E u^t F^{-1}, with u, v the generators of H(F,E).
    std::vector<TensorElement> antipode(std::size_t x, std::size_t y, const Presentation& yx) override {
        const ExactMatrix& E = o_[x].m;
        ExactMatrix Fi = o_[y].m.inverse();
        std::size_t m = dim(x), n = dim(y);
        auto u = [&](std::size_t i, std::size_t j) { return gen(yx, i * m + j); };
        auto v = [&](std::size_t i, std::size_t j) { return gen(yx, n * m + i * m + j); };
        std::vector<TensorElement> out;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) out.push_back(as_tensor(v(j, i)));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                FreeElement s;
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t l = 0; l < n; ++l) s += u(l, k).scaled(E(i, k) * Fi(l, j));
                out.push_back(as_tensor(s));
            }
        return out;
    }
    HomStatus status(std::size_t x, std::size_t y) override {
        if (x == y) return {NonzeroStatus::Certified, "counit is a character"};
        if (h_invariants(o_[x].m) == h_invariants(o_[y].m))
            return {NonzeroStatus::Unverified, "invariants (tr E, tr E^-1) match"};
        return {NonzeroStatus::ExpectedZero, "invariants (tr E, tr E^-1) differ"};
    }

private:
    std::size_t dim(std::size_t x) const { return o_[x].m.rows(); }
    const std::vector<NamedMatrix>& o_;
};

// Shared by the GL and S_2n families: square generator blocks of size n,
// matrix coproduct on each block, counit delta_ij, antipode given per block.
class SquareBlockBuilder : public CogroupoidData::Builder {
public:
    using HomFn = PresentationPtr (*)(const ASTMatrix&, const ASTMatrix&);
    SquareBlockBuilder(const std::vector<ASTMatrix>& o, std::size_t n, std::size_t blocks, HomFn hom)
        : o_(o), n_(n), blocks_(blocks), hom_(hom) {}
    PresentationPtr hom(std::size_t x, std::size_t y) override { return hom_(o_[x], o_[y]); }
    std::vector<TensorElement> delta(std::size_t, std::size_t, std::size_t, const Presentation& xz,
                                     const Presentation& zy) override {
        std::vector<TensorElement> out;
        for (std::size_t b = 0; b < blocks_; ++b) matrix_delta(out, xz, zy, b * n_ * n_, b * n_ * n_, n_, n_, n_);
        return out;
    }
    std::vector<TensorElement> eps(std::size_t) override {
        std::vector<TensorElement> out;
        for (std::size_t b = 0; b < blocks_; ++b)
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) out.push_back(delta0(i == j));
        return out;
    }
    // Transpose, swapping the two blocks when there are two.
    std::vector<TensorElement> antipode(std::size_t, std::size_t, const Presentation& yx) override {
        std::vector<TensorElement> out;
        for (std::size_t b = 0; b < blocks_; ++b)
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    out.push_back(as_tensor(gen(yx, (blocks_ - 1 - b) * n_ * n_ + j * n_ + i)));
        return out;
    }
    HomStatus status(std::size_t x, std::size_t y) override {
        if (x == y) return {NonzeroStatus::Certified, "counit is a character"};
        return {NonzeroStatus::Unverified, "pending connectedness witness"};
    }

private:
    const std::vector<ASTMatrix>& o_;
    std::size_t n_, blocks_;
    HomFn hom_;
};

bool is_trivial(const ASTMatrix& p) {
    for (auto& row : p.p)
        for (auto& v : row)
            if (!v.is_one()) return false;
    return true;
}

// Certifies C(x, 1) for every x by a witness, then spreads by connectedness.
template <class Witness>
void certify_through_trivial(CogroupoidData& C, const std::vector<ASTMatrix>& objs, Witness witness) {
    std::size_t one = objs.size();
    for (std::size_t i = 0; i < objs.size(); ++i)
        if (is_trivial(objs[i])) one = i;
    if (one == objs.size()) return;
    for (std::size_t x = 0; x < objs.size(); ++x) {
        if (x == one) continue;
        Certificate w = witness(objs[x]);
        if (w.pass()) C.set_status(x, one, {NonzeroStatus::Certified, w.kind + " witness"});
    }
    propagate_connectedness(C);
}

std::size_t group_index(const FiniteGroup& G, const std::vector<unsigned>& e, const std::vector<unsigned>& orders) {
    std::size_t idx = 0, mul = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        idx += e[i] * mul;
        mul *= orders[i];
    }
    (void)G;
    return idx;
}

class CocycleBuilder : public CogroupoidData::Builder {
public:
    CocycleBuilder(const FiniteGroup& G, const std::vector<GroupCocycle>& c) : G_(G), c_(c) {}
    PresentationPtr hom(std::size_t x, std::size_t y) override { return make_cocycle_algebra(G_, c_[x], c_[y]); }
    std::vector<TensorElement> delta(std::size_t, std::size_t, std::size_t, const Presentation& xz,
                                     const Presentation& zy) override {
        std::vector<TensorElement> out;
        for (std::size_t g = 0; g < G_.order(); ++g) out.push_back(tensor(gen(xz, g), gen(zy, g)));
        return out;
    }
    std::vector<TensorElement> eps(std::size_t) override {
        return std::vector<TensorElement>(G_.order(), unit0());
    }
    // S_{s,t}(g) = s(g, g^-1) t(g^-1, g)^{-1} g^-1.
    std::vector<TensorElement> antipode(std::size_t x, std::size_t y, const Presentation& yx) override {
        std::vector<TensorElement> out;
        for (std::size_t g = 0; g < G_.order(); ++g) {
            std::size_t gi = G_.inverse(g);
            out.push_back(as_tensor(gen(yx, gi).scaled(c_[x].sigma[g][gi] / c_[y].sigma[gi][g])));
        }
        return out;
    }
    HomStatus status(std::size_t, std::size_t) override {
        return {NonzeroStatus::Certified, "twisted group algebra with associative structure constants"};
    }

private:
    const FiniteGroup& G_;
    const std::vector<GroupCocycle>& c_;
};

}  // namespace

std::string entry_name(const std::string& prefix, std::size_t i, std::size_t j) {
    if (i < 10 && j < 10) return prefix + std::to_string(i) + std::to_string(j);
    return prefix + std::to_string(i) + "_" + std::to_string(j);
}

void validate_ast(const ASTMatrix& p, bool plus_minus_one) {
    std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (p.p[i].size() != n) raise(ErrorKind::NotAST, p.name + ": not square");
        if (!p(i, i).is_one()) raise(ErrorKind::NotAST, p.name + ": diagonal entry is not 1");
        for (std::size_t j = 0; j < n; ++j) {
            if (!(p(i, j) * p(j, i)).is_one()) raise(ErrorKind::NotAST, p.name + ": p_ij p_ji != 1");
            if (plus_minus_one && !(p(i, j).is_one() || (-p(i, j)).is_one()))
                raise(ErrorKind::NotPlusMinusOne, p.name + ": entry is not +-1");
        }
    }
}

ASTMatrix trivial_ast(std::size_t n) { return {"1", ScalarTable(n, std::vector<Scalar>(n, Scalar(1)))}; }

ASTMatrix symbolic_ast(std::size_t n, const std::string& prefix) {
    ASTMatrix p = trivial_ast(n);
    p.name = prefix;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            p.p[i][j] = Scalar::parameter(prefix + std::to_string(i + 1) + std::to_string(j + 1));
            p.p[j][i] = p.p[i][j].inverse();
        }
    return p;
}

// ---- B ----

Scalar b_invariant(const ExactMatrix& E) { return (E.inverse() * E.transpose()).trace(); }

PresentationPtr make_B_algebra(const NamedMatrix& E, const NamedMatrix& F) {
    require_invertible(E);
    require_invertible(F);
    std::size_t m = E.m.rows(), n = F.m.rows();
    Alphabet A(matrix_names("a", m, n));
    auto a = [&](std::size_t i, std::size_t j) { return FreeElement(A.letter(i * n + j)); };
    ExactMatrix Fi = F.m.inverse();
    std::vector<FreeElement> rels;
    // F^{-1} a^t E a = I_n
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FreeElement r;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    for (std::size_t s = 0; s < m; ++s) r += multiply(a(l, k), a(s, j)).scaled(Fi(i, k) * E.m(l, s));
            if (i == j) r -= unit_element();
            rels.push_back(r);
        }
    // a F^{-1} a^t E = I_m
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            FreeElement r;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t s = 0; s < m; ++s) r += multiply(a(i, k), a(s, l)).scaled(Fi(k, l) * E.m(s, j));
            if (i == j) r -= unit_element();
            rels.push_back(r);
        }
    return make_presentation("B(" + E.name + "," + F.name + ")", A, rels);
}

CogroupoidData make_B(const std::vector<NamedMatrix>& objects) {
    BBuilder b(objects);
    CogroupoidData C = CogroupoidData::build("B", names_of(objects), b);
    for (auto& o : objects) C.matrices.push_back(o.m);
    return C;
}

MatrixComodule fundamental_comodule(const CogroupoidData& C, std::size_t x) {
    const PresentationPtr& A = C.hom(x, x);
    std::size_t n = C.matrices.at(x).rows();
    MatrixComodule V{"V_" + C.objects[x], A, {}};
    V.coeff.assign(n, std::vector<FreeElement>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) V.coeff[i][j] = A->gen(i * n + j);
    return V;
}

// ---- H ----

std::pair<Scalar, Scalar> h_invariants(const ExactMatrix& E) { return {E.trace(), E.inverse().trace()}; }

PresentationPtr make_H_algebra(const NamedMatrix& E, const NamedMatrix& F) {
    require_invertible(E);
    require_invertible(F);
    std::size_t m = E.m.rows(), n = F.m.rows();
    std::vector<std::string> names = matrix_names("u", m, n);
    for (auto& s : matrix_names("v", m, n)) names.push_back(s);
    Alphabet A(names);
    auto u = [&](std::size_t i, std::size_t j) { return FreeElement(A.letter(i * n + j)); };
    auto v = [&](std::size_t i, std::size_t j) { return FreeElement(A.letter(m * n + i * n + j)); };
    ExactMatrix Ei = E.m.inverse();
    const ExactMatrix& F_ = F.m;
    std::vector<FreeElement> rels;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            FreeElement r1, r2;
            for (std::size_t k = 0; k < n; ++k) r1 += multiply(u(i, k), v(j, k));
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t s = 0; s < m; ++s) r2 += multiply(v(i, k), u(s, l)).scaled(F_(k, l) * Ei(s, j));
            if (i == j) {
                r1 -= unit_element();
                r2 -= unit_element();
            }
            rels.push_back(r1);
            rels.push_back(r2);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FreeElement r1, r2;
            for (std::size_t k = 0; k < m; ++k) r1 += multiply(v(k, i), u(k, j));
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    for (std::size_t s = 0; s < m; ++s) r2 += multiply(u(l, k), v(s, j)).scaled(F_(i, k) * Ei(l, s));
            if (i == j) {
                r1 -= unit_element();
                r2 -= unit_element();
            }
            rels.push_back(r1);
            rels.push_back(r2);
        }
    return make_presentation("H(" + E.name + "," + F.name + ")", A, rels);
}

CogroupoidData make_H(const std::vector<NamedMatrix>& objects) {
    HBuilder b(objects);
    CogroupoidData C = CogroupoidData::build("H", names_of(objects), b);
    for (auto& o : objects) C.matrices.push_back(o.m);
    return C;
}

MatrixComodule u_comodule(const CogroupoidData& C, std::size_t x) {
    MatrixComodule V = fundamental_comodule(C, x);
    V.name = "U_" + C.objects[x];
    return V;
}

// ---- GL ----

PresentationPtr make_GLpq_algebra(const ASTMatrix& p, const ASTMatrix& q) {
    validate_ast(p);
    validate_ast(q);
    std::size_t n = p.size();
    if (q.size() != n) raise(ErrorKind::NotAST, "AST matrices of different sizes");
    std::vector<std::string> names = matrix_names("x", n, n);
    for (auto& s : matrix_names("y", n, n)) names.push_back(s);
    Alphabet A(names);
    auto x = [&](std::size_t i, std::size_t j) { return FreeElement(A.letter(i * n + j)); };
    auto y = [&](std::size_t i, std::size_t j) { return FreeElement(A.letter(n * n + i * n + j)); };
    std::vector<FreeElement> rels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    rels.push_back(multiply(x(k, l), x(i, j)) - multiply(x(i, j), x(k, l)).scaled(p(k, i) * q(j, l)));
                    rels.push_back(multiply(y(k, l), y(i, j)) - multiply(y(i, j), y(k, l)).scaled(p(k, i) * q(j, l)));
                    rels.push_back(multiply(y(k, l), x(i, j)) - multiply(x(i, j), y(k, l)).scaled(p(i, k) * q(l, j)));
                }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FreeElement r1, r2;
            for (std::size_t k = 0; k < n; ++k) {
                r1 += multiply(x(i, k), y(j, k));
                r2 += multiply(x(k, i), y(k, j));
            }
            if (i == j) {
                r1 -= unit_element();
                r2 -= unit_element();
            }
            rels.push_back(r1);
            rels.push_back(r2);
        }
    return make_presentation("O_{" + p.name + "," + q.name + "}(GL" + std::to_string(n) + ")", A, rels);
}

CogroupoidData make_GLpq(const std::vector<ASTMatrix>& objects) {
    if (objects.empty()) raise(ErrorKind::Precondition, "no objects");
    std::size_t n = objects[0].size();
    SquareBlockBuilder b(objects, n, 2, &make_GLpq_algebra);
    CogroupoidData C = CogroupoidData::build("GL", names_of(objects), b);
    certify_through_trivial(C, objects, gl_torus_witness);
    return C;
}

Certificate gl_torus_witness(const ASTMatrix& p) {
    std::size_t n = p.size();
    PresentationPtr P = make_GLpq_algebra(p, trivial_ast(n));
    NormalFormAlgebra T = quantum_torus(p.p);
    std::vector<FreeElement> images;
    for (int b = 0; b < 2; ++b)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                images.push_back(i == j ? FreeElement(T.gens().letter(2 * i + b)) : FreeElement());
    Certificate c = quantum_torus_witness(*P, T, images);
    c.kind = "quantum torus";
    return c;
}

// ---- S_2n ----

std::size_t s2n_prime(std::size_t i) { return i % 2 == 0 ? i - 1 : i + 1; }
std::size_t s2n_star(std::size_t i) { return i % 2 == 0 ? i / 2 : (i + 1) / 2; }

namespace {
Scalar sign_pow(long e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }
}  // namespace

Scalar r_tensor(const ASTMatrix& p, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    if (s2n_star(i) != s2n_star(l) || s2n_star(j) != s2n_star(k)) return Scalar();
    long il = static_cast<long>(i) - static_cast<long>(l), jk = static_cast<long>(j) - static_cast<long>(k);
    return Scalar(1) + sign_pow(il) + sign_pow(jk) + sign_pow(il + jk) * p(s2n_star(j) - 1, s2n_star(i) - 1);
}

PresentationPtr make_S2n_algebra(const ASTMatrix& p, const ASTMatrix& q) {
    validate_ast(p, true);
    validate_ast(q, true);
    if (p.size() != q.size()) raise(ErrorKind::NotAST, "AST matrices of different sizes");
    std::size_t N = 2 * p.size();
    Alphabet A(matrix_names("x", N, N));
    auto x = [&](std::size_t i, std::size_t j) { return FreeElement(A.letter((i - 1) * N + (j - 1))); };
    std::vector<FreeElement> rels;
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j)
            for (std::size_t k = 1; k <= N; ++k) {
                FreeElement r1 = multiply(x(i, j), x(i, k)), r2 = multiply(x(j, i), x(k, i));
                if (j == k) {
                    r1 -= x(i, j);
                    r2 -= x(j, i);
                }
                rels.push_back(r1);
                rels.push_back(r2);
            }
    for (std::size_t i = 1; i <= N; ++i) {
        FreeElement r1 = -unit_element(), r2 = -unit_element();
        for (std::size_t l = 1; l <= N; ++l) {
            r1 += x(i, l);
            r2 += x(l, i);
        }
        rels.push_back(r1);
        rels.push_back(r2);
    }
    // sum R^{kl}_{ab}(p) x_ai x_bj = sum R^{ab}_{ij}(q) x_ka x_lb
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j)
            for (std::size_t k = 1; k <= N; ++k)
                for (std::size_t l = 1; l <= N; ++l) {
                    FreeElement r;
                    for (std::size_t a = 1; a <= N; ++a)
                        for (std::size_t b = 1; b <= N; ++b) {
                            Scalar c1 = r_tensor(p, a, b, k, l), c2 = r_tensor(q, i, j, a, b);
                            if (!c1.is_zero()) r += multiply(x(a, i), x(b, j)).scaled(c1);
                            if (!c2.is_zero()) r -= multiply(x(k, a), x(l, b)).scaled(c2);
                        }
                    rels.push_back(r);
                }
    return make_presentation("O_{" + p.name + "," + q.name + "}(S" + std::to_string(N) + ")", A, rels);
}

CogroupoidData make_S2n(const std::vector<ASTMatrix>& objects) {
    if (objects.empty()) raise(ErrorKind::Precondition, "no objects");
    SquareBlockBuilder b(objects, 2 * objects[0].size(), 1, &make_S2n_algebra);
    CogroupoidData C = CogroupoidData::build("S2n", names_of(objects), b);
    certify_through_trivial(C, objects, s2n_twisted_witness);
    return C;
}

Certificate s2n_twisted_witness(const ASTMatrix& p) {
    std::size_t n = p.size(), N = 2 * n;
    PresentationPtr P = make_S2n_algebra(p, trivial_ast(n));
    NormalFormAlgebra T = twisted_group_algebra(p.p);
    std::vector<FreeElement> images;
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j) {
            if (s2n_star(i) != s2n_star(j)) {
                images.emplace_back();
                continue;
            }
            FreeElement t(T.gens().letter(s2n_star(i) - 1), sign_pow(static_cast<long>(j) - static_cast<long>(i)));
            images.push_back((unit_element() + t).scaled(Scalar(mpq_class(1, 2))));
        }
    Certificate c = quantum_torus_witness(*P, T, images);
    c.kind = "twisted group algebra";
    return c;
}

PresentationPtr make_kp_algebra(const ASTMatrix& p) {
    validate_ast(p, true);
    std::size_t N = 2 * p.size();
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= N; ++i) names.push_back("x" + std::to_string(i));
    Alphabet A(names);
    auto x = [&](std::size_t i, std::size_t j) { return FreeElement(concat(A.letter(i - 1), A.letter(j - 1))); };
    std::vector<FreeElement> rels;
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j) {
            const Scalar& c = p(s2n_star(i) - 1, s2n_star(j) - 1);
            std::size_t ip = s2n_prime(i), jp = s2n_prime(j);
            rels.push_back(x(i, j).scaled(Scalar(4)) - x(j, i).scaled(Scalar(3) + c) -
                           x(jp, i).scaled(Scalar(1) - c) - x(j, ip).scaled(Scalar(1) - c) -
                           x(jp, ip).scaled(c - Scalar(1)));
        }
    return make_presentation("k_" + p.name + "[x1..x" + std::to_string(N) + "]", A, rels);
}

ComoduleAlgebra make_kp_polynomial(const CogroupoidData& s2n, std::size_t x, const ASTMatrix& p) {
    PresentationPtr A = make_kp_algebra(p);
    HopfData H = s2n.hopf(x);
    std::size_t N = 2 * p.size();
    if (H.algebra->gens().size() != N * N) raise(ErrorKind::Precondition, "size mismatch with the S_2n object");
    AlgebraMorphism alpha{"coaction", A, {A, H.algebra}, false, {}};
    for (std::size_t i = 0; i < N; ++i) {
        TensorElement img;
        for (std::size_t k = 0; k < N; ++k) img += tensor(A->gen(k), H.algebra->gen(k * N + i));
        alpha.images.push_back(img);
    }
    return {A->name(), A, std::move(H), std::move(alpha)};
}

// ---- group cocycles ----

std::size_t FiniteGroup::inverse(std::size_t g) const {
    for (std::size_t h = 0; h < order(); ++h)
        if (mul[g][h] == 0) return h;
    raise(ErrorKind::Precondition, "group element without inverse");
}

FiniteGroup cyclic_product(const std::vector<unsigned>& orders) {
    std::size_t N = 1;
    for (auto o : orders) N *= o;
    FiniteGroup G;
    G.mul.assign(N, std::vector<std::size_t>(N));
    for (std::size_t g = 0; g < N; ++g) {
        auto e = exponents(G, g, orders);
        std::string name;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            name += "g" + std::to_string(i + 1);
            if (e[i] > 1) name += "^" + std::to_string(e[i]);
        }
        G.names.push_back(name.empty() ? "e" : name);
    }
    for (std::size_t g = 0; g < N; ++g)
        for (std::size_t h = 0; h < N; ++h) {
            auto a = exponents(G, g, orders), b = exponents(G, h, orders);
            for (std::size_t i = 0; i < orders.size(); ++i) a[i] = (a[i] + b[i]) % orders[i];
            G.mul[g][h] = group_index(G, a, orders);
        }
    return G;
}

std::vector<unsigned> exponents(const FiniteGroup&, std::size_t g, const std::vector<unsigned>& orders) {
    std::vector<unsigned> e;
    for (auto o : orders) {
        e.push_back(static_cast<unsigned>(g % o));
        g /= o;
    }
    return e;
}

void validate_cocycle(const FiniteGroup& G, const GroupCocycle& s) {
    std::size_t n = G.order();
    if (s.sigma.size() != n) raise(ErrorKind::NotACocycle, s.name + ": wrong table size");
    for (std::size_t g = 0; g < n; ++g) {
        if (s.sigma[g].size() != n) raise(ErrorKind::NotACocycle, s.name + ": wrong table size");
        if (!s.sigma[g][0].is_one() || !s.sigma[0][g].is_one())
            raise(ErrorKind::NotACocycle, s.name + ": not normalized at " + G.names[g]);
        for (std::size_t h = 0; h < n; ++h) {
            if (s.sigma[g][h].is_zero()) raise(ErrorKind::NotACocycle, s.name + ": zero value");
            for (std::size_t l = 0; l < n; ++l)
                if (s.sigma[g][h] * s.sigma[G.mul[g][h]][l] != s.sigma[h][l] * s.sigma[g][G.mul[h][l]])
                    raise(ErrorKind::NotACocycle, s.name + ": cocycle identity fails at (" + G.names[g] + "," +
                                                      G.names[h] + "," + G.names[l] + ")");
        }
    }
}

GroupCocycle trivial_cocycle(const FiniteGroup& G) {
    return {"1", ScalarTable(G.order(), std::vector<Scalar>(G.order(), Scalar(1)))};
}

GroupCocycle bilinear_cocycle(const FiniteGroup& G, const std::vector<unsigned>& orders, const ScalarTable& b,
                              const std::string& name) {
    GroupCocycle s = trivial_cocycle(G);
    s.name = name;
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h) {
            auto x = exponents(G, g, orders), y = exponents(G, h, orders);
            Scalar v(1);
            for (std::size_t i = 0; i < orders.size(); ++i)
                for (std::size_t j = 0; j < orders.size(); ++j) v *= b[i][j].pow(static_cast<long>(x[i] * y[j]));
            s.sigma[g][h] = v;
        }
    return s;
}

PresentationPtr make_cocycle_algebra(const FiniteGroup& G, const GroupCocycle& s, const GroupCocycle& t) {
    validate_cocycle(G, s);
    validate_cocycle(G, t);
    Alphabet A(G.names);
    std::vector<FreeElement> rels;
    rels.push_back(FreeElement(A.letter(0)) - unit_element());
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h)
            rels.push_back(FreeElement(concat(A.letter(g), A.letter(h))) -
                           FreeElement(A.letter(G.mul[g][h]), s.sigma[g][h] / t.sigma[g][h]));
    return make_presentation("H(" + s.name + "," + t.name + ")", A, rels);
}

CogroupoidData make_group_cocycle_cogroupoid(const FiniteGroup& G, const std::vector<GroupCocycle>& cocycles) {
    std::vector<std::string> names;
    for (auto& c : cocycles) names.push_back(c.name);
    CocycleBuilder b(G, cocycles);
    CogroupoidData C = CogroupoidData::build("2-cocycle", names, b);
    C.finite = true;
    return C;
}

// ---- A_{M,t} ----

PresentationPtr make_AMt_algebra(const ExactMatrix& M, const Scalar& t, const std::string& name) {
    std::size_t m = M.rows();
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    Alphabet A(names);
    FreeElement r = -scalar_element(t);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) r += FreeElement(concat(A.letter(i), A.letter(j)), M(i, j));
    return make_presentation(name, A, {r});
}

ComoduleAlgebra make_AMt(const CogroupoidData& B, std::size_t x, const Scalar& t) {
    const ExactMatrix& E = B.matrices.at(x);
    std::size_t m = E.rows();
    PresentationPtr A = make_AMt_algebra(E.inverse(), t, "A(" + B.objects[x] + "^-1," + t.to_string() + ")");
    HopfData H = B.hopf(x);
    AlgebraMorphism alpha{"coaction", A, {A, H.algebra}, false, {}};
    for (std::size_t i = 0; i < m; ++i) {
        TensorElement img;
        for (std::size_t k = 0; k < m; ++k) img += tensor(A->gen(k), H.algebra->gen(k * m + i));
        alpha.images.push_back(img);
    }
    return {A->name(), A, std::move(H), std::move(alpha)};
}

}  // namespace hg
