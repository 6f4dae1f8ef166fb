#include "hg/homology/homology.hpp"

#include <algorithm>

#include "hg/core/error.hpp"
#include "hg/core/parallel.hpp"
#include "hg/core/sparse_echelon.hpp"
#include "hg/families/families.hpp"
#include "hg/galois/galois.hpp"
#include "hg/transport/transport.hpp"

namespace hg {

namespace {

using Vec = LinComb<TWord>;

Word index_letter(std::size_t i) {
    Word w;
    w.len = 1;
    w.wt = 1;
    w.g[0] = static_cast<std::uint8_t>(i);
    return w;
}

Vec reduce_term(const Vec& x, const Presentation& A, int level) {
    int lv = level;
    for (auto& [t, c] : x) lv = std::max({lv, int(t.w[0].wt), int(t.w[2].wt)});
    auto sl = A.slice(lv);
    return reduce_tensor(x, {sl.get(), nullptr, sl.get()});
}

// Basis of F_L of a term: (a, w, b) with wt a + shift + wt b <= L.
std::vector<TWord> filtered_basis(const FreeTerm& T, const std::vector<Word>& sw, int L) {
    std::vector<TWord> out;
    if (T.augmentation) {
        for (auto& a : sw)
            if (a.wt <= L) out.push_back(tword({a, Word(), Word()}));
        return out;
    }
    for (auto& a : sw)
        for (std::size_t k = 0; k < T.rank; ++k)
            for (auto& b : sw)
                if (a.wt + T.shift + b.wt <= L) out.push_back(tword({a, index_letter(k), b}));
    return out;
}

}  // namespace

Vec EquivariantComplex::apply(std::size_t p, const Vec& x) const {
    const FreeTerm& target = terms.at(p);
    const auto& vals = d.at(p);
    Accumulator<TWord> acc;
    for (auto& [t, c] : x) {
        const Vec& v = vals.at(t.w[1].len ? t.w[1][0] : 0);
        for (auto& [u, e] : v) {
            if (target.augmentation)
                acc.add(tword({concat(concat(t.w[0], u.w[0]), t.w[2]), Word(), Word()}), c * e);
            else
                acc.add(tword({concat(t.w[0], u.w[0]), u.w[1], concat(u.w[2], t.w[2])}), c * e);
        }
    }
    return acc.take();
}

std::string EquivariantComplex::to_string(std::size_t p, const Vec& x) const {
    const FreeTerm& T = terms.at(p);
    const Alphabet& A = algebra->gens();
    if (x.is_zero()) return "0";
    std::string out;
    for (auto& [t, c] : x) {
        std::string term = "(" + (t.w[0].empty() ? "1" : A.to_string(t.w[0]));
        if (!T.augmentation) {
            term += "|" + (T.rank == 1 ? std::string("1") : "v" + std::to_string(t.w[1][0] + 1));
            term += "|" + (t.w[2].empty() ? "1" : A.to_string(t.w[2]));
        }
        term += ")";
        if (!out.empty()) out += " + ";
        out += (c.is_one() ? "" : "(" + c.to_string() + ")") + term;
    }
    return out;
}

EquivariantComplex koszul_complex(const ExactMatrix& alpha, const Scalar& t) {
    if (!alpha.is_square()) raise(ErrorKind::Precondition, "alpha must be square");
    if (!alpha.is_invertible()) raise(ErrorKind::SingularMatrix, "alpha is singular");
    std::size_t n = alpha.rows();
    EquivariantComplex K;
    K.algebra = make_AMt_algebra(alpha, t, "A(alpha," + t.to_string() + ")");
    K.name = "Koszul complex of " + K.algebra->name();
    K.alpha = alpha;
    K.t = t;
    K.terms = {{"A", 1, 0, true}, {"A(x)A", 1, 0, false}, {"A(x)V(x)A", n, 1, false}, {"A(x)A", 1, 2, false}};
    const Alphabet& X = K.algebra->gens();
    K.d.resize(3);
    K.d[0] = {Vec(tword({Word(), Word(), Word()}))};
    Word one_w = index_letter(0);
    for (std::size_t i = 0; i < n; ++i)
        K.d[1].push_back(Vec(tword({X.letter(i), one_w, Word()})) - Vec(tword({Word(), one_w, X.letter(i)})));
    Accumulator<TWord> g;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            g.add(tword({X.letter(i), index_letter(j), Word()}), alpha(i, j));
            g.add(tword({Word(), index_letter(i), X.letter(j)}), alpha(i, j));
        }
    K.d[2] = {g.take()};
    return K;
}

Certificate check_complex(const EquivariantComplex& K, int d) {
    Certificate cert;
    cert.kind = "complex";
    cert.subject = K.name;
    cert.degree = d;
    for (std::size_t p = 1; p < K.d.size(); ++p)
        for (std::size_t k = 0; k < K.d[p].size(); ++k) {
            Vec r = reduce_term(K.apply(p - 1, K.d[p][k]), *K.algebra, d);
            cert.add({"d o d = 0", K.terms[p + 1].name + " generator " + std::to_string(k + 1), d, r.is_zero(),
                      r.is_zero() ? "" : K.to_string(p - 1, r)});
        }
    return cert;
}

ExactnessReport check_exactness(const EquivariantComplex& K, int d) {
    ExactnessReport out;
    Certificate& cert = out.cert;
    cert.kind = "exactness";
    cert.subject = K.name;
    cert.degree = d;
    cert.merge(check_complex(K, d));
    std::size_t P = K.terms.size();
    std::vector<Word> sw = K.algebra->slice(d)->standard_words(d);
    out.levels.resize(d + 1);
    parallel_for(static_cast<std::size_t>(d + 1), [&](std::size_t li) {
        int L = static_cast<int>(li);
        LevelRanks& lr = out.levels[li];
        lr.level = L;
        lr.dims.assign(P, 0);
        lr.ranks.assign(P - 1, 0);
        std::vector<std::size_t> composite(P - 1, 0);  // rank of d_{p} o d_{p+1}
        std::vector<std::vector<Vec>> images(P - 1);
        for (std::size_t p = 0; p < P; ++p) lr.dims[p] = filtered_basis(K.terms[p], sw, L).size();
        for (std::size_t p = 0; p + 1 < P; ++p) {
            KernelEngine<TWord> eng;
            for (const TWord& b : filtered_basis(K.terms[p + 1], sw, L)) {
                Vec img = reduce_term(K.apply(p, Vec(b)), *K.algebra, L);
                eng.add(img);
                images[p].push_back(std::move(img));
            }
            lr.ranks[p] = eng.rank();
        }
        for (std::size_t p = 1; p + 1 < P; ++p) {
            KernelEngine<TWord> eng;
            for (const Vec& v : images[p]) eng.add(reduce_term(K.apply(p - 1, v), *K.algebra, L));
            composite[p] = eng.rank();
        }
        lr.homology.assign(P, 0);
        for (std::size_t p = 0; p < P; ++p) {
            long ker = long(lr.dims[p]) - (p == 0 ? 0 : long(lr.ranks[p - 1]));
            long im_in_ker = p + 1 < P ? long(lr.ranks[p]) - (p >= 1 ? long(composite[p]) : 0) : 0;
            lr.homology[p] = ker - im_in_ker;
        }
        lr.euler = 0;
        for (std::size_t p = 0; p < P; ++p) lr.euler += (p % 2 ? -1 : 1) * long(lr.dims[p]);
    });
    out.exact = true;
    for (auto& lr : out.levels) {
        for (std::size_t p = 0; p < P; ++p) {
            bool ok = lr.homology[p] == 0;
            out.exact = out.exact && ok;
            cert.add({"exact at position " + std::to_string(p), K.terms[p].name, lr.level, ok,
                      "homology " + std::to_string(lr.homology[p])});
        }
        cert.add({"Euler characteristic", "", lr.level, lr.euler == 0, std::to_string(lr.euler)});
    }
    nlohmann::json table = nlohmann::json::array();
    for (auto& lr : out.levels)
        table.push_back({{"level", lr.level}, {"dims", lr.dims}, {"ranks", lr.ranks}, {"homology", lr.homology}});
    cert.data["levels"] = table;
    return out;
}

namespace {

// Coaction of an element of a term, grouped by middle letter: (a, b, h).
std::map<Word, Vec> coact(const EquivariantComplex& K, std::size_t p, const Vec& x, const AlgebraMorphism& rho,
                          const PresentationPtr& H) {
    std::size_t n = K.alpha.rows();
    const FreeTerm& T = K.terms[p];
    std::map<Word, Accumulator<TWord>> acc;
    for (auto& [t, c] : x) {
        TensorElement ra = rho.apply_word(t.w[0]), rb = rho.apply_word(t.w[2]);
        std::vector<std::pair<Word, FreeElement>> rw;
        if (T.rank == 1 || T.augmentation)
            rw.emplace_back(t.w[1], unit_element());
        else
            for (std::size_t m = 0; m < n; ++m) rw.emplace_back(index_letter(m), H->gen(m * n + t.w[1][0]));
        for (auto& [ua, ca] : ra)
            for (auto& [w, hw] : rw)
                for (auto& [ub, cb] : rb) {
                    FreeElement h = multiply(multiply(FreeElement(ua.w[1]), hw), FreeElement(ub.w[1]));
                    for (auto& [hh, ch] : h) acc[w].add(tword({ua.w[0], ub.w[0], hh}), c * ca * cb * ch);
                }
    }
    std::map<Word, Vec> out;
    for (auto& [w, a] : acc) out[w] = a.take();
    return out;
}

bool same_groups(const std::map<Word, Vec>& a, const std::map<Word, Vec>& b, const Presentation& A,
                 const Presentation& H, int d, std::string& where) {
    std::map<Word, Vec> diff = a;
    for (auto& [w, v] : b) diff[w] -= v;
    for (auto& [w, v] : diff) {
        int la = d, lh = d;
        for (auto& [t, c] : v) {
            la = std::max({la, int(t.w[0].wt), int(t.w[1].wt)});
            lh = std::max(lh, int(t.w[2].wt));
        }
        auto sa = A.slice(la), sh = H.slice(lh);
        Vec r = reduce_tensor(v, {sa.get(), sa.get(), sh.get()});
        if (!r.is_zero()) {
            where = to_string(r, {&A.gens(), &A.gens(), &H.gens()});
            return false;
        }
    }
    return true;
}

}  // namespace

Certificate check_equivariance(const EquivariantComplex& K, const HopfData& H, int d) {
    std::size_t n = K.alpha.rows();
    if (H.algebra->gens().size() < n * n)
        raise(ErrorKind::Precondition, "Hopf algebra has fewer than n^2 generators");
    Certificate cert;
    cert.kind = "equivariance";
    cert.subject = K.name + " over " + H.name;
    cert.degree = d;
    AlgebraMorphism rho{"coaction", K.algebra, {K.algebra, H.algebra}, false, {}};
    for (std::size_t i = 0; i < n; ++i) {
        TensorElement e;
        for (std::size_t k = 0; k < n; ++k) e += tensor(K.algebra->gen(k), H.algebra->gen(k * n + i));
        rho.images.push_back(e);
    }
    cert.merge(check_morphism(rho));
    for (std::size_t p = 0; p < K.d.size(); ++p) {
        const FreeTerm& src = K.terms[p + 1];
        for (std::size_t k = 0; k < K.d[p].size(); ++k) {
            auto lhs = coact(K, p, K.d[p][k], rho, H.algebra);
            std::map<Word, Accumulator<TWord>> racc;
            // sum_m d(w_m) (x) c_mk with c the source comodule matrix.
            std::vector<std::pair<std::size_t, FreeElement>> cs;
            if (src.rank == 1)
                cs.emplace_back(0, unit_element());
            else
                for (std::size_t m = 0; m < n; ++m) cs.emplace_back(m, H.algebra->gen(m * n + k));
            for (auto& [m, h] : cs)
                for (auto& [t, c] : K.d[p][m])
                    for (auto& [hh, ch] : h) racc[t.w[1]].add(tword({t.w[0], t.w[2], hh}), c * ch);
            std::map<Word, Vec> rhs;
            for (auto& [w, a] : racc) rhs[w] = a.take();
            std::string where;
            bool ok = same_groups(lhs, rhs, *K.algebra, *H.algebra, d, where);
            cert.add({"colinear differential", "d" + std::to_string(p) + " on " + src.name + " generator " +
                                                   std::to_string(k + 1),
                      d, ok, ok ? "" : where});
        }
    }
    return cert;
}

TransportedResolution transport_resolution(const CogroupoidData& B, std::size_t X, std::size_t Y, const Scalar& t,
                                           int d) {
    if (B.family != "B") raise(ErrorKind::Precondition, "resolution transport is defined for the B family");
    const ExactMatrix &E = B.matrices.at(X), &F = B.matrices.at(Y);
    std::size_t m = E.rows(), n = F.rows();
    EquivariantComplex KE = koszul_complex(E.inverse(), t);
    TransportedResolution out{koszul_complex(F.inverse(), t), {}};
    const EquivariantComplex& KF = out.complex;
    Certificate& cert = out.cert;
    cert.kind = "resolution transport";
    cert.subject = KE.algebra->name() + " -> " + KF.algebra->name();
    cert.degree = d;
    cert.merge(check_equivariance(KE, B.hopf(X), d));
    cert.merge(transport_comodule_algebra(B, X, Y, t, d));
    ComoduleCandidate cand = fundamental_candidate(B, X, Y);
    cert.merge(transport_comodule(fundamental_comodule(B, X), B, X, Y, std::max(d, 2), &cand).cert);

    PresentationPtr xy = B.hom(X, Y);
    const Presentation& AE = *KE.algebra;
    // iota on words of A_F: x_i -> sum_k x_k (x) a_ki, as (A_E word, B word) terms.
    AlgebraMorphism iota{"iota", KF.algebra, {KE.algebra, xy}, false, {}};
    for (std::size_t i = 0; i < n; ++i) {
        TensorElement e;
        for (std::size_t k = 0; k < m; ++k) e += tensor(KE.algebra->gen(k), xy->gen(k * n + i));
        iota.images.push_back(e);
    }
    auto phi = [&](std::size_t p, const Vec& x) {
        std::map<Word, Accumulator<TWord>> acc;
        const FreeTerm& T = KF.terms[p];
        for (auto& [u, c] : x) {
            TensorElement ia = iota.apply_word(u.w[0]), ib = iota.apply_word(u.w[2]);
            std::vector<std::pair<Word, FreeElement>> th;
            if (T.augmentation || T.rank == 1)
                th.emplace_back(u.w[1], unit_element());
            else
                for (std::size_t j = 0; j < m; ++j) th.emplace_back(index_letter(j), xy->gen(j * n + u.w[1][0]));
            for (auto& [a, ca] : ia)
                for (auto& [w, h] : th)
                    for (auto& [b, cb] : ib)
                        for (auto& [hh, ch] : multiply(multiply(FreeElement(a.w[1]), h), FreeElement(b.w[1]))) {
                            Word left = a.w[0], right = b.w[0];
                            if (T.augmentation) {
                                left = concat(left, right);
                                right = Word();
                            }
                            acc[w].add(tword({left, right, hh}), c * ca * cb * ch);
                        }
        }
        std::map<Word, Vec> r;
        for (auto& [w, a] : acc) r[w] = a.take();
        return r;
    };
    for (std::size_t p = 0; p < KF.d.size(); ++p) {
        const FreeTerm& src = KF.terms[p + 1];
        for (std::size_t k = 0; k < KF.d[p].size(); ++k) {
            // Transported value: sum_i d^E(1 (x) v_i (x) 1) (x) a_ik, or d^E(1 (x) 1 (x) 1) (x) 1.
            std::map<Word, Accumulator<TWord>> tacc;
            std::vector<std::pair<std::size_t, FreeElement>> th;
            if (src.rank == 1)
                th.emplace_back(0, unit_element());
            else
                for (std::size_t i = 0; i < m; ++i) th.emplace_back(i, xy->gen(i * n + k));
            for (auto& [i, h] : th)
                for (auto& [u, c] : KE.d[p][i])
                    for (auto& [hh, ch] : h) tacc[u.w[1]].add(tword({u.w[0], u.w[2], hh}), c * ch);
            std::map<Word, Vec> tv;
            for (auto& [w, a] : tacc) tv[w] = a.take();
            std::string where;
            bool ok = same_groups(tv, phi(p, KF.d[p][k]), AE, *xy, d, where);
            cert.add({"transported differential = direct", "d" + std::to_string(p) + " on " + src.name +
                                                             " generator " + std::to_string(k + 1),
                      d, ok, ok ? "" : where});
        }
    }
    return out;
}

HochschildDims hochschild_dims(const EquivariantComplex& K, const std::map<std::string, Scalar>& chi) {
    Certificate ch = character_check(*K.algebra, chi);
    if (!ch.pass()) raise(ErrorKind::NoCharacter, K.algebra->name() + ": the assignment is not a character");
    const Alphabet& A = K.algebra->gens();
    std::vector<Scalar> val(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) val[i] = chi.at(A.name(i));
    auto chi_word = [&](const Word& w) {
        Scalar s(1);
        for (std::size_t i = 0; i < w.len; ++i) s *= val[w[i]];
        return s;
    };
    // Position p >= 1 of K becomes W_p; d[p] (p >= 1) becomes a matrix W_{p+1} -> W_p.
    std::size_t P = K.terms.size();
    std::vector<std::size_t> rk(P, 0);  // rk[p]: rank of the map into W_p
    for (std::size_t p = 1; p + 1 < P; ++p) {
        ExactMatrix M(K.terms[p].rank, K.terms[p + 1].rank);
        for (std::size_t k = 0; k < K.d[p].size(); ++k)
            for (auto& [u, c] : K.d[p][k]) M(u.w[1][0], k) += c * chi_word(u.w[0]) * chi_word(u.w[2]);
        rk[p] = M.rank();
    }
    HochschildDims out;
    Certificate& cert = out.cert;
    cert.kind = "Hochschild homology with character coefficients";
    cert.subject = K.algebra->name();
    cert.degree = -1;
    cert.exact = true;
    cert.merge(ch);
    for (std::size_t p = 1; p < P; ++p) {
        std::size_t out_rank = p >= 2 ? rk[p - 1] : 0;
        out.dims.push_back(K.terms[p].rank - out_rank - rk[p]);
    }
    cert.data["dims"] = out.dims;
    cert.tags.push_back("H_m = 0 for m > " + std::to_string(out.dims.size() - 1) + ": resolution length");
    cert.add({"character", "", -1, true, ""});
    return out;
}

}  // namespace hg
