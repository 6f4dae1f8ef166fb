#include "hg/transport/transport.hpp"

#include <algorithm>
#include <map>

#include "hg/core/error.hpp"
#include "hg/core/parallel.hpp"
#include "hg/families/families.hpp"
#include "hg/hopf/checks.hpp"
#include "hg/hopf/tensor_ops.hpp"

namespace hg {

namespace {

using Vec = LinComb<TWord>;

Alphabet letters(const std::string& prefix, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
    return Alphabet(names);
}

Word letter(std::size_t i) {
    Word w;
    w.len = 1;
    w.wt = 1;
    w.g[0] = static_cast<std::uint8_t>(i);
    return w;
}

int max_leg_weight(const Vec& x, std::size_t leg) {
    int m = 0;
    for (auto& [t, c] : x) m = std::max<int>(m, t.w[leg].wt);
    return m;
}

// Factorwise reduction with one level per leg (null presentation: free leg).
Vec reduce_legs(const Vec& x, const std::vector<PresentationPtr>& legs, const std::vector<int>& levels) {
    std::vector<std::shared_ptr<const QuotientSlice>> sl;
    std::vector<const QuotientSlice*> rs;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        sl.push_back(legs[i] ? legs[i]->slice(levels[i]) : nullptr);
        rs.push_back(sl.back().get());
    }
    return reduce_tensor(x, rs);
}

// Reduction at max(d, weight) on every leg.
Vec reduce_auto(const Vec& x, const std::vector<PresentationPtr>& legs, int d) {
    std::vector<int> lv;
    for (std::size_t i = 0; i < legs.size(); ++i) lv.push_back(std::max(d, max_leg_weight(x, i)));
    return reduce_legs(x, legs, lv);
}

std::string render(const Vec& x, const std::vector<const Alphabet*>& al) { return to_string(x, al); }

// Span of finitely many vectors in V (x) C(X,Y), normal forms at a fixed level.
class Model {
public:
    Model(std::vector<Vec> basis, std::vector<PresentationPtr> legs, int level)
        : legs_(std::move(legs)), level_(level) {
        for (auto& b : basis) {
            Vec r = reduce(b);
            engine_.add(r);
            basis_.push_back(std::move(r));
        }
    }
    Vec reduce(const Vec& v) const { return reduce_legs(v, legs_, std::vector<int>(legs_.size(), level_)); }
    std::optional<std::vector<Scalar>> coords(const Vec& v) const {
        auto combo = engine_.express(reduce(v));
        if (!combo) return std::nullopt;
        std::vector<Scalar> out(basis_.size());
        for (auto& [i, c] : *combo) out[i] = c;
        return out;
    }
    bool independent() const { return engine_.kernel().empty(); }
    std::size_t size() const { return basis_.size(); }
    const Vec& operator[](std::size_t i) const { return basis_[i]; }
    int level() const { return level_; }
    const std::vector<PresentationPtr>& legs() const { return legs_; }

private:
    std::vector<PresentationPtr> legs_;
    int level_;
    std::vector<Vec> basis_;
    KernelEngine<TWord> engine_;
};

// Coefficients h[j][i] with (1 (x) delta)(b_i) = sum_j b_j (x) h[j][i]; delta maps
// the second leg of the model into C(X,Y) (x) C(Y,Y).
std::vector<std::vector<FreeElement>> induced_coaction(const Model& M, const AlgebraMorphism& delta,
                                                       CheckRecord& rec) {
    std::size_t n = M.size();
    std::vector<std::vector<FreeElement>> h(n, std::vector<FreeElement>(n));
    PresentationPtr yy = delta.target[1];
    std::vector<PresentationPtr> legs{M.legs()[0], M.legs()[1], yy};
    for (std::size_t i = 0; i < n && rec.pass; ++i) {
        Accumulator<TWord> acc;
        for (auto& [t, c] : M[i])
            for (auto& [u, dc] : delta.apply_word(t.w[1])) acc.add(tword({t.w[0], u.w[0], u.w[1]}), c * dc);
        Vec x = reduce_legs(acc.take(), legs, {M.level(), M.level(), M.level()});
        std::map<Word, Accumulator<TWord>> groups;
        for (auto& [t, c] : x) groups[t.w[2]].add(tword({t.w[0], t.w[1]}), c);
        for (auto& [u, g] : groups) {
            auto co = M.coords(g.take());
            if (!co) {
                rec.pass = false;
                rec.detail = "coaction of basis vector " + std::to_string(i + 1) + " leaves the span";
                break;
            }
            for (std::size_t j = 0; j < n; ++j)
                if (!(*co)[j].is_zero()) h[j][i] += FreeElement(u, (*co)[j]);
        }
    }
    return h;
}

ExactMatrix from_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t rows) {
    ExactMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

}  // namespace

ExactMatrix YDModule::act(const FreeElement& h) const {
    std::size_t n = dim();
    ExactMatrix out(n, n);
    for (auto& [w, c] : h) {
        ExactMatrix p = ExactMatrix::identity(n);
        for (std::size_t i = 0; i < w.len; ++i) p = action.at(w[i]) * p;
        out = out + p.scaled(c);
    }
    return out;
}

YDModule trivial_yd(const HopfData& H) {
    YDModule V{"k", trivial_comodule(H.algebra), {}};
    for (std::size_t g = 0; g < H.algebra->gens().size(); ++g) {
        TensorElement e = H.eps.apply_word(H.algebra->gens().letter(g));
        ExactMatrix m(1, 1);
        for (auto& [t, c] : e) m(0, 0) += c;
        V.action.push_back(m);
    }
    return V;
}

Certificate check_yd(const YDModule& V, const HopfData& H, int d) {
    Certificate cert;
    cert.kind = "Yetter-Drinfeld module";
    cert.subject = V.name + " over " + H.name;
    cert.degree = d;
    const Presentation& P = *H.algebra;
    if (V.action.size() != P.gens().size())
        raise(ErrorKind::Precondition, "one action matrix per generator is required");
    std::size_t n = V.dim();
    ExactMatrix zero(n, n);
    for (std::size_t r = 0; r < P.relations().size(); ++r) {
        bool ok = V.act(P.relations()[r]) == zero;
        cert.add({"module axiom", P.to_string(P.relations()[r]), -1, ok, ok ? "" : "relation acts nontrivially"});
    }
    Alphabet va = letters("v", n);
    std::vector<const Alphabet*> al{&va, &P.gens()};
    std::vector<PresentationPtr> legs{nullptr, H.algebra};
    for (std::size_t g = 0; g < P.gens().size(); ++g) {
        Word x = P.gens().letter(g);
        ExactMatrix rx = V.act(FreeElement(x));
        TensorElement D = apply_on_leg(H.delta.apply_word(x), 1, H.delta);
        std::vector<std::pair<TWord, Scalar>> terms(D.begin(), D.end());
        std::vector<ExactMatrix> r2;
        for (auto& [t, c] : terms) r2.push_back(V.act(FreeElement(t.w[1])));
        CheckRecord rec{"YD compatibility", P.gens().name(g), d, true, ""};
        for (std::size_t i = 0; i < n && rec.pass; ++i) {
            Vec x_;
            for (std::size_t j = 0; j < n; ++j)
                if (!rx(j, i).is_zero())
                    for (std::size_t k = 0; k < n; ++k)
                        x_ += tensor(FreeElement(va.letter(k)), V.comodule.coeff[k][j].scaled(rx(j, i)));
            for (std::size_t s = 0; s < terms.size(); ++s) {
                auto& [t, c] = terms[s];
                FreeElement Sx = H.antipode.apply1(FreeElement(t.w[0]));
                for (std::size_t k = 0; k < n; ++k) {
                    FreeElement mid = multiply(multiply(Sx, V.comodule.coeff[k][i]), FreeElement(t.w[2]));
                    for (std::size_t j = 0; j < n; ++j)
                        if (!r2[s](j, k).is_zero()) x_ -= tensor(FreeElement(va.letter(j)), mid.scaled(c * r2[s](j, k)));
                }
            }
            Vec res = reduce_auto(x_, legs, d);
            if (!res.is_zero()) {
                rec.pass = false;
                rec.detail = "v" + std::to_string(i + 1) + ": residue " + render(res, al);
            }
        }
        cert.add(rec);
    }
    return cert;
}

ComoduleCandidate fundamental_candidate(const CogroupoidData& C, std::size_t X, std::size_t Y) {
    if (C.family != "B" && C.family != "H")
        raise(ErrorKind::Precondition, "the canonical candidate exists for the B and H families only");
    std::size_t m = C.matrices.at(X).rows(), n = C.matrices.at(Y).rows();
    ComoduleCandidate out;
    out.target = C.family == "B" ? fundamental_comodule(C, Y) : u_comodule(C, Y);
    const Presentation& xy = *C.hom(X, Y);
    for (std::size_t j = 0; j < n; ++j) {
        Vec w;
        for (std::size_t i = 0; i < m; ++i) w += Vec(tword({letter(i), xy.gens().letter(i * n + j)}), Scalar(1));
        out.vectors.push_back(w);
    }
    return out;
}

TransportedComodule transport_comodule(const MatrixComodule& V, const CogroupoidData& C, std::size_t X, std::size_t Y,
                                       int d, const ComoduleCandidate* candidate) {
    TransportedComodule out;
    out.space = cotensor(V, C, X, Y, d);
    const CotensorSpace& sp = out.space;
    if (!sp.stabilized)
        raise(ErrorKind::NotStabilized, sp.subject + ": dimensions " + std::to_string(sp.dims[d - 1]) + ", " +
                                            std::to_string(sp.dims[d]) + " at levels " + std::to_string(d - 1) +
                                            ", " + std::to_string(d));
    Certificate& cert = out.cert;
    cert.kind = "comodule transport";
    cert.subject = V.name + " from " + C.objects[X] + " to " + C.objects[Y];
    cert.degree = d;
    cert.exact = C.finite;
    cert.data["cotensor_dims"] = sp.dims;
    if (!sp.note.empty()) cert.tags.push_back(sp.note);

    Model M(sp.basis, sp.legs, d);
    CheckRecord rec{"induced coaction in span", "", d, true, ""};
    out.comodule = {"Theta(" + V.name + ")", C.hom(Y, Y), induced_coaction(M, C.delta(X, Y, Y), rec)};
    cert.add(rec);
    cert.merge(check_comodule(out.comodule, C.hopf(Y), d));
    std::vector<std::vector<std::string>> coeffs;
    for (auto& row : out.comodule.coeff) {
        coeffs.emplace_back();
        for (auto& e : row) coeffs.back().push_back(C.hom(Y, Y)->to_string(e));
    }
    cert.data["coaction_matrix"] = coeffs;

    if (candidate) {
        std::size_t n = candidate->vectors.size();
        std::vector<std::vector<Scalar>> cols;
        CheckRecord in_span{"candidate lands in the cotensor", "", d, true, ""};
        for (std::size_t j = 0; j < n; ++j) {
            auto co = M.coords(candidate->vectors[j]);
            if (!co) {
                in_span.pass = false;
                in_span.detail = "vector " + std::to_string(j + 1) + " is not in the cotensor";
                break;
            }
            cols.push_back(*co);
        }
        cert.add(in_span);
        if (in_span.pass) {
            ExactMatrix N = from_columns(cols, M.size());
            bool bij = N.is_square() && N.is_invertible();
            cert.add({"candidate bijective onto the cotensor", "", d, bij,
                      bij ? "" : std::to_string(n) + " vectors, cotensor dimension " + std::to_string(M.size())});
            if (bij) out.base_change = N;
        }
        // Colinearity: (1 (x) Delta)(w_j) = sum_k w_k (x) target_kj.
        CheckRecord col{"candidate colinear", candidate->target.name, d, true, ""};
        std::vector<PresentationPtr> legs{nullptr, C.hom(X, Y), C.hom(Y, Y)};
        for (std::size_t j = 0; j < n && col.pass; ++j) {
            Accumulator<TWord> acc;
            for (auto& [t, c] : candidate->vectors[j])
                for (auto& [u, dc] : C.delta(X, Y, Y).apply_word(t.w[1])) acc.add(tword({t.w[0], u.w[0], u.w[1]}), c * dc);
            Vec x = acc.take();
            for (std::size_t k = 0; k < n; ++k)
                for (auto& [t, c] : candidate->vectors[k])
                    for (auto& [w, e] : candidate->target.coeff[k][j]) x -= Vec(tword({t.w[0], t.w[1], w}), c * e);
            Vec r = reduce_auto(x, legs, d);
            if (!r.is_zero()) {
                col.pass = false;
                col.detail = "vector " + std::to_string(j + 1);
            }
        }
        cert.add(col);
    }
    return out;
}

ComoduleIso find_comodule_iso(const MatrixComodule& V, const MatrixComodule& W, int d) {
    ComoduleIso out;
    Certificate& cert = out.cert;
    cert.kind = "comodule isomorphism";
    cert.subject = V.name + " -> " + W.name;
    cert.degree = d;
    if (V.algebra != W.algebra) raise(ErrorKind::Precondition, "comodules over different Hopf algebras");
    std::size_t m = V.dim(), n = W.dim();
    int lvl = d;
    for (auto* M : {&V, &W})
        for (auto& row : M->coeff)
            for (auto& e : row) lvl = std::max(lvl, degree(e));
    auto sl = V.algebra->slice(lvl);
    // Unknown T(a,b) at a*m+b; equation (l,i): sum_j T(j,i) W_lj - sum_k T(l,k) V_ki = 0.
    std::vector<std::map<std::pair<std::size_t, Word>, Scalar>> cols(n * m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            auto& col = cols[a * m + b];
            for (std::size_t l = 0; l < n; ++l)
                for (auto& [w, c] : sl->reduce(W.coeff[l][a])) col[{l * m + b, w}] += c;
            for (std::size_t i = 0; i < m; ++i)
                for (auto& [w, c] : sl->reduce(V.coeff[b][i])) col[{a * m + i, w}] -= c;
        }
    std::map<std::pair<std::size_t, Word>, std::size_t> rows;
    for (auto& c : cols)
        for (auto& [k, v] : c) rows.emplace(k, rows.size());
    std::vector<std::vector<Scalar>> vecs(cols.size(), std::vector<Scalar>(rows.size()));
    for (std::size_t u = 0; u < cols.size(); ++u)
        for (auto& [k, v] : cols[u]) vecs[u][rows[k]] = v;
    RankKernel rk = rank_and_kernel_dense(vecs);
    out.solution_dim = rk.kernel.size();
    cert.data["solution_dim"] = out.solution_dim;
    auto as_matrix = [&](const std::vector<Scalar>& k) {
        ExactMatrix T(n, m);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < m; ++b) T(a, b) = k[a * m + b];
        return T;
    };
    if (m == n && !rk.kernel.empty()) {
        // Deterministic sweep of combinations of the solution basis.
        for (long r = 0; r < 8 && !out.map; ++r) {
            std::vector<Scalar> k(n * m);
            Scalar w(1);
            for (auto& kv : rk.kernel) {
                for (std::size_t u = 0; u < k.size(); ++u) k[u] += w * kv[u];
                w = w * Scalar(r + 2);
                if (r == 0) break;
            }
            ExactMatrix T = as_matrix(k);
            if (T.is_invertible()) out.map = T;
        }
    }
    bool found = out.map.has_value();
    cert.add({"invertible colinear map", "", lvl, found,
              found ? "" : (m != n ? "dimensions differ" : "no invertible point found in the solution space")});
    if (found) {
        // Recheck the chosen map directly.
        const ExactMatrix& T = *out.map;
        bool ok = true;
        for (std::size_t l = 0; l < n && ok; ++l)
            for (std::size_t i = 0; i < m && ok; ++i) {
                FreeElement e;
                for (std::size_t j = 0; j < n; ++j) e += W.coeff[l][j].scaled(T(j, i));
                for (std::size_t k = 0; k < m; ++k) e -= V.coeff[k][i].scaled(T(l, k));
                ok = sl->reduce(e).is_zero();
            }
        cert.add({"colinearity of the map", T.to_string(), lvl, ok, ok ? "" : "recheck failed"});
    }
    return out;
}

Certificate transport_round_trip(const MatrixComodule& V, const CogroupoidData& C, std::size_t X, std::size_t Y,
                                 int d) {
    Certificate cert;
    cert.kind = "transport round trip";
    cert.subject = V.name + ": " + C.objects[X] + " -> " + C.objects[Y] + " -> " + C.objects[X];
    cert.degree = d;
    TransportedComodule there = transport_comodule(V, C, X, Y, d);
    cert.merge(there.cert);
    TransportedComodule back = transport_comodule(there.comodule, C, Y, X, d);
    cert.merge(back.cert);
    ComoduleIso iso = find_comodule_iso(V, back.comodule, d);
    cert.merge(iso.cert);
    return cert;
}

MatrixComodule tensor_comodule(const MatrixComodule& V, const MatrixComodule& W) {
    if (V.algebra != W.algebra) raise(ErrorKind::Precondition, "comodules over different Hopf algebras");
    std::size_t m = V.dim(), n = W.dim();
    MatrixComodule out{V.name + "(x)" + W.name, V.algebra, {}};
    out.coeff.assign(m * n, std::vector<FreeElement>(m * n));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < n; ++k) out.coeff[j * n + l][i * n + k] = multiply(V.coeff[j][i], W.coeff[l][k]);
    return out;
}

namespace {

// (sum v (x) a)(sum w (x) b) -> sum (v,w) (x) ab, with (v,w) the letter v*nw + w.
Vec product_vector(const Vec& x, const Vec& y, std::size_t nw) {
    Accumulator<TWord> acc;
    for (auto& [s, c] : x)
        for (auto& [t, e] : y) acc.add(tword({letter(s.w[0][0] * nw + t.w[0][0]), concat(s.w[1], t.w[1])}), c * e);
    return acc.take();
}

int max_weight(const std::vector<Vec>& vs, std::size_t leg) {
    int m = 0;
    for (auto& v : vs) m = std::max(m, max_leg_weight(v, leg));
    return m;
}

}  // namespace

Certificate monoidality_check(const MatrixComodule& V, const MatrixComodule& W, const CogroupoidData& C,
                              std::size_t X, std::size_t Y, int d) {
    Certificate cert;
    cert.kind = "monoidal structure of transport";
    cert.subject = V.name + ", " + W.name + " from " + C.objects[X] + " to " + C.objects[Y];
    CotensorSpace sv = cotensor(V, C, X, Y, d), sw = cotensor(W, C, X, Y, d);
    if (!sv.stabilized || !sw.stabilized) raise(ErrorKind::NotStabilized, "factor cotensors not stabilized at " + std::to_string(d));
    int dvw = max_weight(sv.basis, 1) + max_weight(sw.basis, 1) + 1;
    cert.degree = dvw;
    CotensorSpace svw = cotensor(tensor_comodule(V, W), C, X, Y, dvw);
    cert.data["dims"] = {sv.dim(), sw.dim(), svw.dim()};
    cert.add({"product cotensor stabilized", "", dvw, svw.stabilized, ""});
    Model M(svw.basis, svw.legs, dvw);
    KernelEngine<TWord> images;
    bool in_span = true;
    for (auto& x : sv.basis)
        for (auto& y : sw.basis) {
            Vec p = M.reduce(product_vector(x, y, W.dim()));
            in_span = in_span && M.coords(p).has_value();
            images.add(p);
        }
    cert.add({"products lie in (V (x) W) box A", "", dvw, in_span, ""});
    bool bij = images.kernel().empty() && images.count() == svw.dim();
    cert.add({"product map bijective", "", dvw, bij,
              bij ? "" : std::to_string(images.rank()) + " independent images, target dimension " +
                             std::to_string(svw.dim())});
    return cert;
}

Certificate transport_comodule_algebra(const CogroupoidData& B, std::size_t X, std::size_t Y, const Scalar& t, int d) {
    if (B.family != "B") raise(ErrorKind::Precondition, "model comodule algebras live over the B family");
    ComoduleAlgebra AE = make_AMt(B, X, t), AF = make_AMt(B, Y, t);
    std::size_t m = B.matrices.at(X).rows(), n = B.matrices.at(Y).rows();
    PresentationPtr xy = B.hom(X, Y);
    Certificate cert;
    cert.kind = "comodule algebra transport";
    cert.subject = AF.name + " -> " + AE.name + " box " + xy->name();
    cert.degree = d;
    AlgebraMorphism iota{"iota", AF.algebra, {AE.algebra, xy}, false, {}};
    for (std::size_t i = 0; i < n; ++i) {
        TensorElement e;
        for (std::size_t k = 0; k < m; ++k) e += tensor(AE.algebra->gen(k), xy->gen(k * n + i));
        iota.images.push_back(e);
    }
    cert.merge(check_morphism(iota));

    std::vector<PresentationPtr> l3{AE.algebra, xy, B.hom(Y, Y)};
    cert.add({"B(F)-colinear", "", d, true, ""});
    CheckRecord& col = cert.checks.back();
    for (std::size_t i = 0; i < n && col.pass; ++i) {
        Word g = AF.algebra->gens().letter(i);
        TensorElement lhs = apply_on_leg(AF.coaction.apply_word(g), 0, iota);
        TensorElement rhs = apply_on_leg(iota.apply_word(g), 1, B.delta(X, Y, Y));
        Vec r = reduce_auto(lhs - rhs, l3, d);
        if (!r.is_zero()) {
            col.pass = false;
            col.detail = "generator " + AF.algebra->gens().name(i);
        }
    }

    CotensorSpace sp = cotensor(AE, B, X, Y, d);
    Model M(sp.basis, sp.legs, d);
    std::vector<Word> src = AF.algebra->slice(d)->standard_words(d);
    KernelEngine<TWord> images;
    std::vector<std::size_t> per(d + 1, 0), dims(d + 1, 0);
    bool in_span = true;
    std::size_t next = 0;
    for (int k = 0; k <= d; ++k) {
        while (next < src.size() && src[next].wt <= k) {
            Vec v = M.reduce(iota.apply_word(src[next++]));
            in_span = in_span && M.coords(v).has_value();
            images.add(v);
        }
        bool ok = images.kernel().empty() && images.count() == sp.dims[k];
        cert.add({"bijective onto the cotensor at level " + std::to_string(k), "", k, ok,
                  "source " + std::to_string(images.count()) + ", rank " + std::to_string(images.rank()) +
                      ", cotensor " + std::to_string(sp.dims[k])});
    }
    cert.add({"image lies in the cotensor", "", d, in_span, ""});
    cert.data["cotensor_dims"] = sp.dims;
    return cert;
}

namespace {

// Transported action matrices of every C(Y,Y) generator on the model basis.
std::vector<ExactMatrix> transported_action(const Model& M, const YDModule& V, const CogroupoidData& C,
                                            std::size_t X, std::size_t Y, CheckRecord& closure) {
    const Presentation& yy = *C.hom(Y, Y);
    std::size_t n = M.size();
    std::vector<ExactMatrix> out(yy.gens().size(), ExactMatrix(n, n));
    const AlgebraMorphism& S = C.antipode(Y, X);
    std::vector<std::string> fail(yy.gens().size());
    parallel_for(yy.gens().size(), [&](std::size_t g) {
        TensorElement D = apply_on_leg(C.delta(Y, Y, X).apply_word(yy.gens().letter(g)), 1, C.delta(X, Y, X));
        for (std::size_t i = 0; i < n && fail[g].empty(); ++i) {
            Accumulator<TWord> acc;
            for (auto& [t, c] : M[i])
                for (auto& [u, e] : D) {
                    ExactMatrix r = V.act(FreeElement(u.w[1]));
                    FreeElement a = multiply(multiply(S.apply1(FreeElement(u.w[0])), FreeElement(t.w[1])),
                                             FreeElement(u.w[2]));
                    std::size_t v = t.w[0][0];
                    for (std::size_t j = 0; j < V.dim(); ++j)
                        if (!r(j, v).is_zero())
                            for (auto& [w, f] : a) acc.add(tword({letter(j), w}), c * e * r(j, v) * f);
                }
            auto co = M.coords(acc.take());
            if (!co) {
                fail[g] = "basis vector " + std::to_string(i + 1) + " <- " + yy.gens().name(g);
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) out[g](j, i) = (*co)[j];
        }
    });
    for (auto& f : fail)
        if (!f.empty() && closure.pass) {
            closure.pass = false;
            closure.detail = f + " leaves the subspace";
        }
    return out;
}

}  // namespace

YDTransport yd_structure(const YDModule& V, const CogroupoidData& C, std::size_t X, std::size_t Y, int d,
                         bool full_tensor) {
    Certificate in = check_yd(V, C.hopf(X), std::max(d, 2));
    if (!in.pass()) {
        const CheckRecord* f = in.first_failure();
        raise(ErrorKind::NotYD, V.name + ": " + f->id + " " + f->objects + " " + f->detail);
    }
    YDTransport out;
    Certificate& cert = out.cert;
    cert.kind = "Yetter-Drinfeld transport";
    cert.subject = V.name + (full_tensor ? " (x) " : " box ") + C.hom(X, Y)->name();
    cert.exact = C.finite;
    std::vector<PresentationPtr> legs{nullptr, C.hom(X, Y)};
    if (full_tensor) {
        if (!C.finite) raise(ErrorKind::Precondition, "the full tensor module needs finite hom-algebras");
        for (const Word& w : C.hom(X, Y)->slice(2)->standard_words(2))
            for (std::size_t i = 0; i < V.dim(); ++i) out.basis.push_back(Vec(tword({letter(i), w}), Scalar(1)));
    } else {
        CotensorSpace sp = cotensor(V.comodule, C, X, Y, d);
        cert.data["cotensor_dims"] = sp.dims;
        out.basis = sp.basis;
    }
    int level = std::max(d, max_weight(out.basis, 1) + 2);
    cert.degree = level;
    Model M(out.basis, legs, level);
    CheckRecord co{"induced coaction in span", "", level, true, ""};
    CheckRecord closure{"closed under the action", "", level, true, ""};
    out.module.name = (full_tensor ? "F~(" : "F(") + V.name + ")";
    out.module.comodule = {out.module.name, C.hom(Y, Y), induced_coaction(M, C.delta(X, Y, Y), co)};
    out.module.action = transported_action(M, V, C, X, Y, closure);
    cert.add(co);
    cert.add(closure);
    cert.merge(check_comodule(out.module.comodule, C.hopf(Y), level));
    cert.merge(check_yd(out.module, C.hopf(Y), level));
    return out;
}

Certificate braiding_check(const YDModule& V, const YDModule& W, const CogroupoidData& C, std::size_t X, std::size_t Y,
                           int d) {
    YDTransport tv = yd_structure(V, C, X, Y, d), tw = yd_structure(W, C, X, Y, d);
    Certificate cert;
    cert.kind = "transported braiding";
    cert.subject = V.name + ", " + W.name + " from " + C.objects[X] + " to " + C.objects[Y];
    cert.exact = C.finite;
    cert.merge(tv.cert);
    cert.merge(tw.cert);
    std::vector<PresentationPtr> legs{nullptr, nullptr, C.hom(X, Y)};
    int level = std::max(d, max_weight(tv.basis, 1) + max_weight(tw.basis, 1));
    cert.degree = level;
    // Product map F(W) (x) F(V) -> W (x) V (x) C(X,Y) on basis pairs.
    auto tilde = [](const Vec& y, const Vec& x) {
        Accumulator<TWord> acc;
        for (auto& [s, c] : y)
            for (auto& [t, e] : x) acc.add(tword({s.w[0], t.w[0], concat(s.w[1], t.w[1])}), c * e);
        return acc.take();
    };
    std::size_t nv = tv.basis.size(), nw = tw.basis.size();
    std::vector<std::vector<ExactMatrix>> rho(nw, std::vector<ExactMatrix>(nw));
    for (std::size_t a = 0; a < nw; ++a)
        for (std::size_t b = 0; b < nw; ++b) rho[a][b] = tv.module.act(tw.module.comodule.coeff[a][b]);
    std::vector<std::vector<ExactMatrix>> rv(W.dim(), std::vector<ExactMatrix>(W.dim()));
    for (std::size_t a = 0; a < W.dim(); ++a)
        for (std::size_t b = 0; b < W.dim(); ++b) rv[a][b] = V.act(W.comodule.coeff[a][b]);
    CheckRecord rec{"F~ o c = (c (x) 1) o F~", "", level, true, ""};
    for (std::size_t p = 0; p < nv && rec.pass; ++p)
        for (std::size_t r = 0; r < nw && rec.pass; ++r) {
            Vec lhs;
            for (std::size_t r2 = 0; r2 < nw; ++r2)
                for (std::size_t q = 0; q < nv; ++q)
                    if (!rho[r2][r](q, p).is_zero()) lhs += tilde(tw.basis[r2], tv.basis[q]).scaled(rho[r2][r](q, p));
            Vec rhs;
            for (auto& [s, c] : tv.basis[p])
                for (auto& [t, e] : tw.basis[r]) {
                    std::size_t v = s.w[0][0], w = t.w[0][0];
                    Word ab = concat(s.w[1], t.w[1]);
                    for (std::size_t l = 0; l < W.dim(); ++l)
                        for (std::size_t j = 0; j < V.dim(); ++j)
                            if (!rv[l][w](j, v).is_zero())
                                rhs += Vec(tword({letter(l), letter(j), ab}), c * e * rv[l][w](j, v));
                }
            Vec res = reduce_auto(lhs - rhs, legs, level);
            if (!res.is_zero()) {
                rec.pass = false;
                rec.detail = "basis pair (" + std::to_string(p + 1) + "," + std::to_string(r + 1) + ")";
            }
        }
    cert.add(rec);
    return cert;
}

Certificate bimodule_transport(const CogroupoidData& C, std::size_t X, std::size_t Y, int d, bool drop_antipode) {
    PresentationPtr A = C.hom(X, Y), H = C.hom(X, X);
    Certificate cert;
    cert.kind = "Hochschild bimodule transport";
    cert.subject = A->name() + " over " + H->name();
    cert.degree = d;
    cert.exact = C.finite;
    AlgebraMorphism S = C.antipode(Y, X);
    if (drop_antipode) {
        if (C.hom(Y, X)->gens().size() != A->gens().size())
            raise(ErrorKind::Precondition, "identity substitute for S needs matching generators");
        S.anti = false;
        for (std::size_t g = 0; g < S.images.size(); ++g) S.images[g] = as_tensor(A->gen(g));
        cert.tags.push_back("mutation: S replaced by the identity on generators");
    }
    const AlgebraMorphism& dl = C.delta(X, X, Y);   // h -> h_(1)^{X,Y} (x) h_(2)^{Y,X}
    const AlgebraMorphism& coa = C.delta(X, Y, X);  // a -> a_(-1)^{X,X} (x) a_(0)^{X,Y}
    std::vector<Word> aw = A->slice(d)->standard_words(d), hw = H->slice(d)->standard_words(d);
    std::vector<Word> hg;
    for (std::size_t g = 0; g < H->gens().size(); ++g) hg.push_back(H->gens().letter(g));

    // m . h in M' and h . m in M''.
    auto right = [&](const FreeElement& m, const Word& h) {
        FreeElement out;
        for (auto& [t, c] : dl.apply_word(h))
            out += multiply(multiply(S.apply1(FreeElement(t.w[1])), m), FreeElement(t.w[0])).scaled(c);
        return out;
    };
    auto left = [&](const Word& h, const FreeElement& m) {
        FreeElement out;
        for (auto& [t, c] : dl.apply_word(h))
            out += multiply(multiply(FreeElement(t.w[0]), m), S.apply1(FreeElement(t.w[1]))).scaled(c);
        return out;
    };
    auto zero_at = [&](const FreeElement& x) {
        return A->slice(std::max(d, degree(x)))->reduce(x).is_zero();
    };
    for (int side = 0; side < 2; ++side) {
        std::string name = side == 0 ? "M'" : "M''";
        CheckRecord assoc{name + " module associativity", "", d, true, ""};
        CheckRecord rel{name + " relations act as zero", "", d, true, ""};
        for (const Word& m : aw) {
            if (m.wt + 2 > std::max(d, 2)) continue;
            FreeElement fm(m);
            for (const Word& g : hg)
                for (const Word& h : hg) {
                    FreeElement two = side == 0 ? right(right(fm, g), h) : left(g, left(h, fm));
                    FreeElement one = side == 0 ? right(fm, concat(g, h)) : left(concat(g, h), fm);
                    if (assoc.pass && !zero_at(two - one)) {
                        assoc.pass = false;
                        assoc.detail = "m = " + A->gens().to_string(m) + ", generators " + H->gens().to_string(g) +
                                       ", " + H->gens().to_string(h);
                    }
                }
            for (auto& r : H->relations()) {
                FreeElement x;
                for (auto& [w, c] : r) x += (side == 0 ? right(fm, w) : left(w, fm)).scaled(c);
                if (rel.pass && !zero_at(x)) {
                    rel.pass = false;
                    rel.detail = "m = " + A->gens().to_string(m) + ", relation " + H->to_string(r);
                }
            }
        }
        cert.add(assoc);
        cert.add(rel);
    }

    // phi(a_1..a_n (x) m) = a_1(-1)..a_n(-1) (x) a_1(0)..a_n(0) m and its inverse psi.
    auto phi = [&](const TWord& x, std::size_t n) {
        std::vector<std::pair<TWord, Scalar>> acc{{TWord{}, Scalar(1)}};
        acc[0].first.n = static_cast<std::uint8_t>(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::pair<TWord, Scalar>> next;
            for (auto& [t, c] : acc)
                for (auto& [u, e] : coa.apply_word(x.w[i])) {
                    TWord nt = t;
                    nt.w[i] = u.w[0];
                    nt.w[n] = concat(t.w[n], u.w[1]);
                    next.emplace_back(nt, c * e);
                }
            acc.swap(next);
        }
        Accumulator<TWord> out;
        for (auto& [t, c] : acc) {
            TWord nt = t;
            nt.w[n] = concat(t.w[n], x.w[n]);
            out.add(nt, c);
        }
        return out.take();
    };
    auto psi = [&](const TWord& x, std::size_t n) {
        std::vector<std::pair<TWord, Scalar>> acc{{TWord{}, Scalar(1)}};
        acc[0].first.n = static_cast<std::uint8_t>(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::pair<TWord, Scalar>> next;
            for (auto& [t, c] : acc)
                for (auto& [u, e] : dl.apply_word(x.w[i])) {
                    TWord nt = t;
                    nt.w[i] = u.w[0];
                    nt.w[n] = concat(t.w[n], u.w[1]);  // collects h_1(2) ... h_n(2)
                    next.emplace_back(nt, c * e);
                }
            acc.swap(next);
        }
        Accumulator<TWord> out;
        for (auto& [t, c] : acc)
            for (auto& [w, e] : S.apply1(FreeElement(t.w[n]))) {
                TWord nt = t;
                nt.w[n] = concat(w, x.w[n]);
                out.add(nt, c * e);
            }
        return out.take();
    };
    auto apply_all = [&](const Vec& v, std::size_t n, bool forward) {
        Accumulator<TWord> acc;
        for (auto& [t, c] : v) acc.add(forward ? phi(t, n) : psi(t, n), c);
        return acc.take();
    };
    for (std::size_t n = 1; n <= 2; ++n) {
        std::vector<PresentationPtr> la(n + 1, A), lh(n + 1, H);
        lh[n] = A;
        for (int dir = 0; dir < 2; ++dir) {
            // dir 0: psi o phi on A^n (x) M; dir 1: phi o psi on H^n (x) M.
            const std::vector<Word>& first = dir == 0 ? aw : hw;
            std::string id = std::string(dir == 0 ? "psi o phi = id" : "phi o psi = id") + " (n = " +
                             std::to_string(n) + ")";
            CheckRecord rec{id, "", d, true, ""};
            std::size_t count = 0;
            std::vector<TWord> inputs;
            for (const Word& a1 : first)
                for (const Word& a2 : n == 2 ? first : std::vector<Word>{Word()})
                    for (const Word& m : aw) {
                        if (a1.wt + a2.wt + m.wt > d) continue;
                        inputs.push_back(n == 1 ? tword({a1, m}) : tword({a1, a2, m}));
                    }
            std::vector<std::string> fails(inputs.size());
            parallel_for(inputs.size(), [&](std::size_t i) {
                Vec x(inputs[i], Scalar(1));
                Vec once = reduce_auto(apply_all(x, n, dir == 0), dir == 0 ? lh : la, d);
                Vec twice = apply_all(once, n, dir != 0);
                Vec res = reduce_auto(twice - x, dir == 0 ? la : lh, d);
                if (!res.is_zero()) fails[i] = "input " + std::to_string(i + 1);
            });
            count = inputs.size();
            for (auto& f : fails)
                if (!f.empty()) {
                    rec.pass = false;
                    rec.detail = f;
                    break;
                }
            rec.objects = std::to_string(count) + " basis tensors";
            cert.add(rec);
        }
    }
    return cert;
}

}  // namespace hg
