#include "hg/galois/galois.hpp"

#include <algorithm>
#include <functional>

#include "hg/core/error.hpp"
#include "hg/core/parallel.hpp"
#include "hg/hopf/tensor_ops.hpp"

namespace hg {

std::string galois_side_name(GaloisSide s) { return s == GaloisSide::Left ? "left" : "right"; }

namespace {

std::string render(const TensorElement& x, const std::vector<PresentationPtr>& legs) {
    std::vector<const Alphabet*> al;
    for (auto& p : legs) al.push_back(&p->gens());
    return to_string(x, al);
}

// Reduces every leg at max(d, weight of that leg) and returns the residue text.
std::string residue(const TensorElement& x, const std::vector<PresentationPtr>& legs, int d) {
    std::vector<int> lvl(legs.size(), d);
    for (auto& [t, c] : x)
        for (std::size_t i = 0; i < t.n; ++i) lvl[i] = std::max<int>(lvl[i], t.w[i].wt);
    std::vector<std::shared_ptr<const QuotientSlice>> sl;
    for (std::size_t i = 0; i < legs.size(); ++i) sl.push_back(legs[i]->slice(lvl[i]));
    TensorElement r = reduce_tensor(x, raw(sl));
    return r.is_zero() ? std::string() : render(r, legs);
}

// One composite: the Sweedler pattern acts on the word of factor `pf`; the
// other factor multiplies the middle element from the outside.
struct Composite {
    std::string id;
    SweedlerPattern pattern;
    std::size_t pf;
    PresentationPtr src[2];
    PresentationPtr kept_alg, middle_alg;
};

bool run_composite(const Composite& c, int d, Certificate& cert) {
    auto s0 = c.src[0]->slice(d), s1 = c.src[1]->slice(d);
    std::vector<Word> pw = (c.pf == 0 ? s0 : s1)->standard_words(d);
    std::vector<Word> ow = (c.pf == 0 ? s1 : s0)->standard_words(d);
    std::vector<PresentationPtr> legs = c.pf == 0 ? std::vector<PresentationPtr>{c.kept_alg, c.middle_alg}
                                                  : std::vector<PresentationPtr>{c.middle_alg, c.kept_alg};
    std::vector<CheckRecord> recs(pw.size());
    std::vector<std::size_t> pairs(pw.size(), 0);
    parallel_for(pw.size(), [&](std::size_t i) {
        const Word& p = pw[i];
        std::map<Word, FreeElement> mo;
        try {
            mo = middle_out(p, c.pattern);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegreeTooLarge) throw;
            // The middle element did not collapse; redo without truncation
            // pressure so that the residue below is reported.
            SweedlerPattern wide = c.pattern;
            auto big = c.middle_alg->slice(2 * p.wt + 2);
            wide.middle = big.get();
            mo = middle_out(p, wide);
        }
        CheckRecord rec{c.id, (c.pf == 0 ? c.src[0] : c.src[1])->gens().to_string(p), d, true, ""};
        for (const Word& o : ow) {
            if (p.wt + o.wt > d) continue;
            ++pairs[i];
            TensorElement x;
            FreeElement of(o);
            for (auto& [kept, M] : mo)
                x += c.pf == 0 ? tensor(FreeElement(kept), multiply(M, of)) : tensor(multiply(of, M), FreeElement(kept));
            x -= c.pf == 0 ? TensorElement(tword({p, o})) : TensorElement(tword({o, p}));
            std::string r = residue(x, legs, d);
            if (!r.empty()) {
                rec.pass = false;
                rec.detail = "partner " + (c.pf == 0 ? c.src[1] : c.src[0])->gens().to_string(o) + ": residue " + r;
                break;
            }
        }
        recs[i] = std::move(rec);
    });
    bool ok = true;
    std::size_t total = 0;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        ok = ok && recs[i].pass;
        total += pairs[i];
        cert.add(std::move(recs[i]));
    }
    cert.data["pairs"][c.id] = total;
    return ok;
}

void require_connected(const CogroupoidData& C, std::size_t X, std::size_t Y, int d, Certificate& cert) {
    for (auto [a, b] : {std::pair{X, Y}, std::pair{Y, X}, std::pair{X, X}, std::pair{Y, Y}}) {
        const HomStatus& st = C.status(a, b);
        if (st.status == NonzeroStatus::ExpectedZero)
            raise(ErrorKind::NotConnected, "C" + C.pair_name(a, b) + " is expected to be zero: " + st.reason);
        if (C.hom(a, b)->slice(std::max(d, 2))->is_zero_algebra())
            raise(ErrorKind::NotConnected, "C" + C.pair_name(a, b) + " is the zero algebra");
        if (st.status == NonzeroStatus::Unverified)
            cert.tags.push_back("nonzero status unverified for C" + C.pair_name(a, b));
    }
}

std::string gens_text(const Presentation& P, const std::function<TensorElement(const Word&)>& f,
                      const std::vector<PresentationPtr>& legs) {
    std::string out;
    for (std::size_t g = 0; g < P.gens().size(); ++g) {
        if (!out.empty()) out += "; ";
        out += P.gens().name(g) + " -> " + render(f(P.gens().letter(g)), legs);
    }
    return out;
}

}  // namespace

TensorElement canonical_map(const CogroupoidData& C, std::size_t X, std::size_t Y, GaloisSide side,
                            const FreeElement& a, const FreeElement& b, int d) {
    TensorElement x;
    std::vector<PresentationPtr> legs;
    if (side == GaloisSide::Left) {
        x = multiply(C.delta(X, Y, X).apply(a), tensor(unit_element(), b));
        legs = {C.hom(X, X), C.hom(X, Y)};
    } else {
        x = multiply(tensor(a, unit_element()), C.delta(X, Y, Y).apply(b));
        legs = {C.hom(X, Y), C.hom(Y, Y)};
    }
    std::vector<std::shared_ptr<const QuotientSlice>> sl;
    for (std::size_t i = 0; i < 2; ++i) {
        int lvl = d;
        for (auto& [t, c] : x) lvl = std::max<int>(lvl, t.w[i].wt);
        sl.push_back(legs[i]->slice(lvl));
    }
    return reduce_tensor(x, raw(sl));
}

GaloisCertificate verify_galois(const CogroupoidData& C, std::size_t X, std::size_t Y, GaloisSide side, int d) {
    GaloisCertificate g;
    g.side = side;
    g.X = X;
    g.Y = Y;
    g.degree = d;
    Certificate& cert = g.cert;
    cert.kind = "galois (" + galois_side_name(side) + ")";
    cert.subject = C.family + " C" + C.pair_name(X, Y);
    cert.degree = d;
    cert.exact = C.finite;
    require_connected(C, X, Y, d, cert);

    const int mid = std::max(d, 2);
    auto xy = C.hom(X, Y);
    auto middle = xy->slice(mid);
    const AlgebraMorphism& S = C.antipode(Y, X);
    Composite ek, ke;
    if (side == GaloisSide::Left) {
        ek = {"eta_l o kappa_l = id", {&C.delta(X, Y, X), &C.delta(X, X, Y), 0, 0, 1, 2, &S, true, middle.get()},
              0, {xy, xy}, xy, xy};
        ke = {"kappa_l o eta_l = id", {&C.delta(X, X, Y), &C.delta(X, Y, X), 0, 0, 2, 1, &S, false, middle.get()},
              0, {C.hom(X, X), xy}, C.hom(X, X), xy};
        cert.data["kappa"] = "a (x) b -> a_(1) (x) a_(2) b; on generators a (x) 1: " +
                             gens_text(*xy, [&](const Word& w) { return C.delta(X, Y, X).apply_word(w); },
                                       {C.hom(X, X), xy});
        cert.data["eta"] = "h (x) b -> h_(1) (x) S(h_(2)) b; on generators h (x) 1: " +
                           gens_text(*C.hom(X, X),
                                     [&](const Word& w) { return apply_on_leg(C.delta(X, X, Y).apply_word(w), 1, S); },
                                     {xy, xy});
    } else {
        ek = {"eta_r o kappa_r = id", {&C.delta(X, Y, Y), &C.delta(Y, Y, X), 1, 2, 1, 0, &S, false, middle.get()},
              1, {xy, xy}, xy, xy};
        ke = {"kappa_r o eta_r = id", {&C.delta(Y, Y, X), &C.delta(X, Y, Y), 1, 2, 0, 1, &S, true, middle.get()},
              1, {xy, C.hom(Y, Y)}, C.hom(Y, Y), xy};
        cert.data["kappa"] = "a (x) b -> a b_(1) (x) b_(2); on generators 1 (x) b: " +
                             gens_text(*xy, [&](const Word& w) { return C.delta(X, Y, Y).apply_word(w); },
                                       {xy, C.hom(Y, Y)});
        cert.data["eta"] = "a (x) h -> a S(h_(1)) (x) h_(2); on generators 1 (x) h: " +
                           gens_text(*C.hom(Y, Y),
                                     [&](const Word& w) { return apply_on_leg(C.delta(Y, Y, X).apply_word(w), 0, S); },
                                     {xy, xy});
    }
    g.eta_kappa = run_composite(ek, d, cert);
    g.kappa_eta = run_composite(ke, d, cert);
    return g;
}

std::optional<std::vector<Scalar>> CotensorSpace::coordinates(const LinComb<TWord>& v) const {
    auto combo = solver->express(v);
    if (!combo) return std::nullopt;
    std::vector<Scalar> out(basis.size());
    for (auto& [i, c] : *combo) out[i] = c;
    return out;
}

std::string CotensorSpace::to_string(const LinComb<TWord>& v) const {
    std::vector<const Alphabet*> al;
    for (auto& a : factors) al.push_back(&a);
    return hg::to_string(v, al);
}

namespace {

struct Input {
    TWord key;
    int stage;
};

// Kernel of key -> image(key), inputs fed in stage order. `legs` are the
// target factors (null: free, never reduced); every leg is reduced at one
// common level so that normal forms are comparable across inputs.
void filtered_kernel(CotensorSpace& out, std::vector<Input> inputs,
                     const std::function<TensorElement(const TWord&)>& image, const std::vector<PresentationPtr>& legs,
                     int d) {
    std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) { return a.stage < b.stage; });
    std::vector<TensorElement> img(inputs.size());
    parallel_for(inputs.size(), [&](std::size_t i) { img[i] = image(inputs[i].key); });
    std::vector<int> lvl(legs.size(), d);
    for (auto& x : img)
        for (auto& [t, c] : x)
            for (std::size_t i = 0; i < t.n; ++i) lvl[i] = std::max<int>(lvl[i], t.w[i].wt);
    std::vector<std::shared_ptr<const QuotientSlice>> sl;
    std::vector<const QuotientSlice*> rs;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        sl.push_back(legs[i] ? legs[i]->slice(lvl[i]) : nullptr);
        rs.push_back(sl.back().get());
    }
    parallel_for(img.size(), [&](std::size_t i) { img[i] = reduce_tensor(img[i], rs); });

    KernelEngine<TWord> engine;
    out.dims.assign(d + 1, 0);
    std::size_t next = 0;
    for (int k = 0; k <= d; ++k) {
        while (next < inputs.size() && inputs[next].stage <= k) engine.add(img[next++]);
        out.dims[k] = engine.kernel().size();
    }
    auto solver = std::make_shared<KernelEngine<TWord>>();
    for (auto& combo : engine.kernel()) {
        LinComb<TWord> v;
        for (auto& [idx, c] : combo) v += LinComb<TWord>(inputs[idx].key, c);
        solver->add(v);
        out.basis.push_back(std::move(v));
    }
    out.solver = solver;
    out.degree = d;
    out.stabilized = d >= 1 && out.dims[d] == out.dims[d - 1];
}

void check_over(const PresentationPtr& coacting, const CogroupoidData& C, std::size_t X, const std::string& what) {
    if (coacting != C.hom(X, X))
        raise(ErrorKind::Precondition, what + " must coact through C" + C.pair_name(X, X));
}

// Zero-algebra and status notes shared by both cotensor variants.
bool degenerate(CotensorSpace& out, const CogroupoidData& C, std::size_t X, std::size_t Y, int d) {
    const HomStatus& st = C.status(X, Y);
    if (C.hom(X, Y)->slice(d)->is_zero_algebra()) {
        out.zero_algebra = true;
        out.degree = d;
        out.dims.assign(d + 1, 0);
        out.stabilized = true;
        out.note = "zero algebra: C" + C.pair_name(X, Y) + " collapses at level " + std::to_string(d);
        out.solver = std::make_shared<KernelEngine<TWord>>();
        return true;
    }
    if (st.status == NonzeroStatus::ExpectedZero)
        out.note = "C" + C.pair_name(X, Y) + " expected zero (" + st.reason + ") but its level-" + std::to_string(d) +
                   " slice is nonzero";
    return false;
}

}  // namespace

CotensorSpace cotensor(const MatrixComodule& V, const CogroupoidData& C, std::size_t X, std::size_t Y, int d) {
    check_over(V.algebra, C, X, "comodule " + V.name);
    CotensorSpace out;
    out.subject = V.name + " box C" + C.pair_name(X, Y);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < V.dim(); ++i) names.push_back("v" + std::to_string(i + 1));
    Alphabet va(names);
    PresentationPtr xy = C.hom(X, Y);
    out.factors = {va, xy->gens()};
    out.legs = {nullptr, xy};
    if (degenerate(out, C, X, Y, d)) return out;

    std::vector<Input> inputs;
    for (const Word& w : xy->slice(d)->standard_words(d))
        for (std::size_t i = 0; i < V.dim(); ++i) inputs.push_back({tword({va.letter(i), w}), w.wt});
    const AlgebraMorphism& delta = C.delta(X, Y, X);
    auto image = [&](const TWord& t) {
        std::size_t i = t.w[0][0];
        FreeElement a(t.w[1]);
        TensorElement x;
        for (std::size_t j = 0; j < V.dim(); ++j) x += tensor(FreeElement(va.letter(j)), V.coeff[j][i], a);
        for (auto& [u, c] : delta.apply_word(t.w[1])) x -= TensorElement(tword({t.w[0], u.w[0], u.w[1]}), c);
        return x;
    };
    filtered_kernel(out, std::move(inputs), image, {nullptr, C.hom(X, X), xy}, d);
    return out;
}

CotensorSpace cotensor(const ComoduleAlgebra& A, const CogroupoidData& C, std::size_t X, std::size_t Y, int d) {
    check_over(A.hopf.algebra, C, X, "comodule algebra " + A.name);
    CotensorSpace out;
    out.subject = A.name + " box C" + C.pair_name(X, Y);
    PresentationPtr xy = C.hom(X, Y);
    out.factors = {A.algebra->gens(), xy->gens()};
    out.legs = {A.algebra, xy};
    if (degenerate(out, C, X, Y, d)) return out;

    std::vector<Input> inputs;
    std::vector<Word> aw = A.algebra->slice(d)->standard_words(d);
    for (const Word& w : xy->slice(d)->standard_words(d))
        for (const Word& a : aw) inputs.push_back({tword({a, w}), std::max(a.wt, w.wt)});
    const AlgebraMorphism& delta = C.delta(X, Y, X);
    auto image = [&](const TWord& t) {
        TensorElement x;
        for (auto& [u, c] : A.coaction.apply_word(t.w[0])) x += TensorElement(tword({u.w[0], u.w[1], t.w[1]}), c);
        for (auto& [u, c] : delta.apply_word(t.w[1])) x -= TensorElement(tword({t.w[0], u.w[0], u.w[1]}), c);
        return x;
    };
    filtered_kernel(out, std::move(inputs), image, {A.algebra, C.hom(X, X), xy}, d);
    return out;
}

CotensorSpace coinvariants(const ComoduleAlgebra& B, int d) {
    CotensorSpace out;
    out.subject = "coinvariants of " + B.name + " under " + B.hopf.name;
    out.factors = {B.algebra->gens()};
    out.legs = {B.algebra};
    std::vector<Input> inputs;
    for (const Word& w : B.algebra->slice(d)->standard_words(d)) inputs.push_back({tword({w}), w.wt});
    auto image = [&](const TWord& t) {
        return B.coaction.apply_word(t.w[0]) - TensorElement(tword({t.w[0], Word()}));
    };
    filtered_kernel(out, std::move(inputs), image, {B.algebra, B.hopf.algebra}, d);
    return out;
}

CleftnessResult cleftness_witness(const MatrixComodule& V, const CogroupoidData& C, std::size_t X, std::size_t Y,
                                  int d) {
    CleftnessResult r;
    r.space = cotensor(V, C, X, Y, d);
    if (!r.space.stabilized)
        raise(ErrorKind::NotStabilized, r.space.subject + ": dimension " + std::to_string(r.space.dims[d - 1]) +
                                            " at level " + std::to_string(d - 1) + ", " +
                                            std::to_string(r.space.dims[d]) + " at level " + std::to_string(d));
    r.comodule_dim = V.dim();
    r.cotensor_dim = r.space.dim();
    if (r.cotensor_dim != r.comodule_dim) {
        r.verdict = CleftVerdict::NonCleft;
        r.reason = "the transported comodule has dimension " + std::to_string(r.cotensor_dim) + " != " +
                   std::to_string(r.comodule_dim) + ", so the fibre functor does not preserve dimensions";
    } else {
        r.reason = "dimensions agree for this comodule; cleftness is not decidable from one comodule";
    }
    return r;
}

Certificate character_check(const Presentation& A, const std::map<std::string, Scalar>& assignment) {
    std::vector<Scalar> val(A.gens().size());
    for (std::size_t g = 0; g < A.gens().size(); ++g) {
        auto it = assignment.find(A.gens().name(g));
        if (it == assignment.end()) raise(ErrorKind::Precondition, "no value for generator " + A.gens().name(g));
        val[g] = it->second;
    }
    Certificate cert;
    cert.kind = "character";
    cert.subject = A.name();
    cert.exact = true;
    for (std::size_t r = 0; r < A.relations().size(); ++r) {
        Scalar s;
        for (auto& [w, c] : A.relations()[r]) {
            Scalar m = c;
            for (std::size_t i = 0; i < w.len; ++i) m *= val[w[i]];
            s += m;
        }
        cert.add({"relation " + std::to_string(r + 1), A.to_string(A.relations()[r]), -1, s.is_zero(),
                  s.is_zero() ? "" : "evaluates to " + s.to_string()});
    }
    return cert;
}

}  // namespace hg
