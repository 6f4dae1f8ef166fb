#include "hg/hopf/checks.hpp"

#include <functional>

#include "hg/core/error.hpp"
#include "hg/core/parallel.hpp"
#include "hg/hopf/tensor_ops.hpp"

namespace hg {

Scalar LinearFunctional::operator()(const FreeElement& nf) const {
    Scalar s;
    for (auto& [w, c] : nf) {
        auto it = coeffs.find(w);
        if (it != coeffs.end()) s += c * it->second;
    }
    return s;
}

LinearFunctional unit_coefficient_functional() { return {"dual basis functional of 1", {{Word(), Scalar(1)}}}; }

LinearFunctional counit_functional(const AlgebraMorphism& eps, const QuotientSlice& slice) {
    LinearFunctional f{"counit", {}};
    for (auto& w : slice.standard_words(slice.level())) {
        TensorElement v = eps.apply_word(w);
        if (!v.is_zero()) f.coeffs.emplace(w, v.leading_coeff());
    }
    return f;
}

namespace {

using Slices = std::vector<std::shared_ptr<const QuotientSlice>>;

std::string render(const TensorElement& x, const std::vector<PresentationPtr>& legs) {
    std::vector<const Alphabet*> al;
    for (auto& p : legs) al.push_back(&p->gens());
    return to_string(x, al);
}

// Compares lhs and rhs (same legs) after factorwise reduction at level d.
// Returns an empty string on success, else the residue.
std::string compare(const TensorElement& lhs, const TensorElement& rhs, const std::vector<PresentationPtr>& legs,
                    int d) {
    Slices sl;
    for (auto& p : legs) sl.push_back(p->slice(d));
    TensorElement res = reduce_tensor(lhs - rhs, raw(sl));
    return res.is_zero() ? std::string() : render(res, legs);
}

// One record per identity family, checked on every generator of the source.
CheckRecord on_generators(const std::string& id, const std::string& objects, const Presentation& src, int d,
                          const std::function<std::string(const Word&)>& residue) {
    CheckRecord rec{id, objects, d, true, ""};
    for (std::size_t g = 0; g < src.gens().size(); ++g) {
        std::string r = residue(src.gens().letter(g));
        if (!r.empty()) {
            rec.pass = false;
            rec.detail = "generator " + src.gens().name(g) + ": residue " + r;
            break;
        }
    }
    return rec;
}

TensorElement tensor1(const Word& w) { return TensorElement(tword({w})); }

struct TaskList {
    std::vector<std::function<CheckRecord()>> tasks;
    void add(std::function<CheckRecord()> f) { tasks.push_back(std::move(f)); }
    std::vector<CheckRecord> run() {
        std::vector<CheckRecord> out(tasks.size());
        parallel_for(tasks.size(), [&](std::size_t i) { out[i] = tasks[i](); });
        return out;
    }
};

class HopfBuilder : public CogroupoidData::Builder {
public:
    explicit HopfBuilder(const HopfData& h) : h_(h) {}
    PresentationPtr hom(std::size_t, std::size_t) override { return h_.algebra; }
    std::vector<TensorElement> delta(std::size_t, std::size_t, std::size_t, const Presentation&,
                                     const Presentation&) override {
        return h_.delta.images;
    }
    std::vector<TensorElement> eps(std::size_t) override { return h_.eps.images; }
    std::vector<TensorElement> antipode(std::size_t, std::size_t, const Presentation&) override {
        return h_.antipode.images;
    }
    HomStatus status(std::size_t, std::size_t) override { return {NonzeroStatus::Unverified, ""}; }

private:
    const HopfData& h_;
};

}  // namespace

Certificate check_structure_maps(const CogroupoidData& C) {
    std::vector<const AlgebraMorphism*> maps;
    std::size_t n = C.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) maps.push_back(&C.delta(x, y, z));
    for (std::size_t x = 0; x < n; ++x) maps.push_back(&C.eps(x));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) maps.push_back(&C.antipode(x, y));
    std::vector<Certificate> certs(maps.size());
    parallel_for(maps.size(), [&](std::size_t i) { certs[i] = check_morphism(*maps[i]); });
    Certificate out;
    out.kind = "structure maps";
    out.subject = C.family;
    for (auto& c : certs) {
        for (auto rec : c.checks) {
            rec.id = c.subject + " " + rec.id;
            out.add(std::move(rec));
        }
        out.degree = std::max(out.degree, c.degree);
    }
    return out;
}

Certificate check_cogroupoid(const CogroupoidData& C, int d) {
    if (d < 2) raise(ErrorKind::Precondition, "cogroupoid checks need level >= 2");
    std::size_t n = C.size();
    TaskList tl;
    for (std::size_t X = 0; X < n; ++X)
        for (std::size_t Y = 0; Y < n; ++Y)
            for (std::size_t Z = 0; Z < n; ++Z)
                for (std::size_t T = 0; T < n; ++T)
                    tl.add([&C, X, Y, Z, T, d]() {
                        std::string objs = "(" + C.objects[X] + "," + C.objects[Y] + "," + C.objects[Z] + "," +
                                           C.objects[T] + ")";
                        return on_generators("coassociativity", objs, *C.hom(X, Y), d, [&](const Word& g) {
                            TensorElement lhs = apply_on_leg(C.delta(X, Y, Z).apply_word(g), 0, C.delta(X, Z, T));
                            TensorElement rhs = apply_on_leg(C.delta(X, Y, T).apply_word(g), 1, C.delta(T, Y, Z));
                            return compare(lhs, rhs, {C.hom(X, T), C.hom(T, Z), C.hom(Z, Y)}, d);
                        });
                    });
    for (std::size_t X = 0; X < n; ++X)
        for (std::size_t Y = 0; Y < n; ++Y) {
            std::string objs = C.pair_name(X, Y);
            tl.add([&C, X, Y, d, objs]() {
                return on_generators("counit right", objs, *C.hom(X, Y), d, [&](const Word& g) {
                    return compare(apply_on_leg(C.delta(X, Y, Y).apply_word(g), 1, C.eps(Y)), tensor1(g),
                                   {C.hom(X, Y)}, d);
                });
            });
            tl.add([&C, X, Y, d, objs]() {
                return on_generators("counit left", objs, *C.hom(X, Y), d, [&](const Word& g) {
                    return compare(apply_on_leg(C.delta(X, Y, X).apply_word(g), 0, C.eps(X)), tensor1(g),
                                   {C.hom(X, Y)}, d);
                });
            });
            // m (1 (x) S_{Y,X}) Delta^Y_{X,X} = u eps_X in C(X,Y).
            tl.add([&C, X, Y, d, objs]() {
                return on_generators("antipode left", objs, *C.hom(X, X), d, [&](const Word& g) {
                    TensorElement lhs = multiply_legs(apply_on_leg(C.delta(X, X, Y).apply_word(g), 1, C.antipode(Y, X)), 0);
                    TensorElement rhs = scalar_tensor(C.eps(X).apply_word(g).coeff(tensor_unit(0).leading_key()), 1);
                    return compare(lhs, rhs, {C.hom(X, Y)}, d);
                });
            });
            // m (S_{X,Y} (x) 1) Delta^Y_{X,X} = u eps_X in C(Y,X).
            tl.add([&C, X, Y, d, objs]() {
                return on_generators("antipode right", objs, *C.hom(X, X), d, [&](const Word& g) {
                    TensorElement lhs = multiply_legs(apply_on_leg(C.delta(X, X, Y).apply_word(g), 0, C.antipode(X, Y)), 0);
                    TensorElement rhs = scalar_tensor(C.eps(X).apply_word(g).coeff(tensor_unit(0).leading_key()), 1);
                    return compare(lhs, rhs, {C.hom(Y, X)}, d);
                });
            });
        }
    Certificate cert;
    cert.kind = "cogroupoid";
    cert.subject = C.family;
    cert.degree = d;
    cert.exact = C.finite;
    for (auto& r : tl.run()) cert.add(std::move(r));
    Certificate maps = check_structure_maps(C);
    cert.merge(maps);
    cert.tags.push_back("checked on generators; structure maps certified as (anti-)algebra maps");
    nlohmann::json homs = nlohmann::json::object();
    for (std::size_t X = 0; X < n; ++X)
        for (std::size_t Y = 0; Y < n; ++Y)
            homs[C.pair_name(X, Y)] = {{"nonzero", nonzero_status_name(C.status(X, Y).status)},
                                       {"reason", C.status(X, Y).reason},
                                       {"presentation", C.hom(X, Y)->canonical_text()}};
    cert.data["hom_algebras"] = homs;
    return cert;
}

Certificate check_hopf(const HopfData& H, int d) {
    HopfBuilder b(H);
    CogroupoidData C = CogroupoidData::build(H.name, {H.name}, b);
    Certificate cert = check_cogroupoid(C, d);
    cert.kind = "hopf";
    cert.subject = H.name;
    return cert;
}

Certificate check_antipode_properties(const CogroupoidData& C, std::size_t X, std::size_t Y, std::size_t Z, int d) {
    if (d < 2) raise(ErrorKind::Precondition, "antipode checks need level >= 2");
    Certificate cert;
    cert.kind = "antipode properties";
    cert.subject = C.family + " (X,Y,Z)=(" + C.objects[X] + "," + C.objects[Y] + "," + C.objects[Z] + ")";
    cert.degree = d;
    cert.exact = C.finite;
    const AlgebraMorphism& S = C.antipode(Y, X);
    Certificate wd = check_morphism(S);
    cert.merge(wd);
    // S(ab) computed on the normal form of ab equals S(b) S(a).
    const Presentation& src = *C.hom(Y, X);
    auto src_slice = src.slice(d);
    std::size_t ng = src.gens().size();
    std::vector<CheckRecord> recs(ng);
    parallel_for(ng, [&](std::size_t a) {
        CheckRecord rec{"anti-multiplicative", C.pair_name(Y, X), d, true, ""};
        for (std::size_t b = 0; b < ng && rec.pass; ++b) {
            FreeElement ab(concat(src.gens().letter(a), src.gens().letter(b)));
            TensorElement lhs = S.apply(src_slice->reduce(ab));
            TensorElement rhs = multiply(S.apply_word(src.gens().letter(b)), S.apply_word(src.gens().letter(a)));
            std::string r = compare(lhs, rhs, {C.hom(X, Y)}, d);
            if (!r.empty()) {
                rec.pass = false;
                rec.detail = "pair " + src.gens().name(a) + "," + src.gens().name(b) + ": residue " + r;
            }
        }
        recs[a] = std::move(rec);
    });
    for (auto& r : recs) cert.add(std::move(r));
    cert.add(on_generators("Delta S = (S (x) S) flip Delta", cert.subject, src, d, [&](const Word& g) {
        TensorElement lhs = C.delta(X, Y, Z).apply(S.apply1(FreeElement(g)));
        TensorElement t = swap_legs(C.delta(Y, X, Z).apply_word(g), 0, 1);
        t = apply_on_leg(t, 0, C.antipode(Z, X));
        t = apply_on_leg(t, 1, C.antipode(Y, Z));
        return compare(lhs, t, {C.hom(X, Z), C.hom(Z, Y)}, d);
    }));
    return cert;
}

Certificate delta_retraction(const CogroupoidData& C, std::size_t X, std::size_t Y, std::size_t Z,
                             const LinearFunctional& psi, int d) {
    if (psi(unit_element()) != Scalar(1))
        raise(ErrorKind::Precondition, "retraction functional must satisfy psi(1) = 1 (" + psi.name + ")");
    Certificate cert;
    cert.kind = "delta retraction";
    cert.subject = C.family + " (X,Y,Z)=(" + C.objects[X] + "," + C.objects[Y] + "," + C.objects[Z] + ")";
    cert.degree = d;
    cert.exact = C.finite;
    cert.tags.push_back("psi: " + psi.name);
    auto xy = C.hom(X, Y)->slice(d);
    auto zy = C.hom(Z, Y)->slice(d);
    SweedlerPattern p{&C.delta(X, Y, Z), &C.delta(X, Z, Y), 0, 0, 1, 2, &C.antipode(Y, Z), true, zy.get()};
    std::vector<Word> basis = xy->standard_words(d);
    std::vector<CheckRecord> recs(basis.size());
    parallel_for(basis.size(), [&](std::size_t i) {
        const Word& w = basis[i];
        Accumulator<Word> acc;
        for (auto& [kept, M] : middle_out(w, p)) acc.add(kept, psi(M));
        FreeElement res = xy->reduce(acc.take() - FreeElement(w));
        recs[i] = {"f o Delta = id", C.hom(X, Y)->gens().to_string(w), d, res.is_zero(),
                   res.is_zero() ? "" : "residue " + C.hom(X, Y)->to_string(res)};
    });
    for (auto& r : recs) cert.add(std::move(r));
    cert.data["basis_size"] = basis.size();
    return cert;
}

Certificate check_comodule(const MatrixComodule& V, const HopfData& H, int d) {
    Certificate cert;
    cert.kind = "comodule";
    cert.subject = V.name + " over " + H.name;
    cert.degree = d;
    std::size_t n = V.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string objs = "c" + std::to_string(i + 1) + std::to_string(j + 1);
            TensorElement lhs = H.delta.apply(V.coeff[i][j]);
            TensorElement rhs;
            for (std::size_t k = 0; k < n; ++k) rhs += tensor(V.coeff[i][k], V.coeff[k][j]);
            std::string r = compare(lhs, rhs, {H.algebra, H.algebra}, d);
            cert.add({"coassociativity", objs, d, r.empty(), r});
            TensorElement e = H.eps.apply(V.coeff[i][j]);
            TensorElement want = i == j ? tensor_unit(0) : TensorElement();
            cert.add({"counit", objs, d, e == want, e == want ? "" : "eps gives " + render(e, {})});
        }
    return cert;
}

Certificate check_comodule_algebra(const ComoduleAlgebra& A, int d) {
    Certificate cert;
    cert.kind = "comodule algebra";
    cert.subject = A.name + " over " + A.hopf.name;
    cert.degree = d;
    Certificate wd = check_morphism(A.coaction);
    cert.merge(wd);
    PresentationPtr H = A.hopf.algebra;
    cert.add(on_generators("coassociativity", cert.subject, *A.algebra, d, [&](const Word& g) {
        TensorElement c = A.coaction.apply_word(g);
        return compare(apply_on_leg(c, 0, A.coaction), apply_on_leg(c, 1, A.hopf.delta), {A.algebra, H, H}, d);
    }));
    cert.add(on_generators("counit", cert.subject, *A.algebra, d, [&](const Word& g) {
        return compare(apply_on_leg(A.coaction.apply_word(g), 1, A.hopf.eps), tensor1(g), {A.algebra}, d);
    }));
    return cert;
}

CheckRecord propagate_connectedness(CogroupoidData& C) {
    std::size_t n = C.size();
    for (std::size_t x0 = 0; x0 < n; ++x0) {
        bool out = true, in = true;
        for (std::size_t y = 0; y < n; ++y) {
            out = out && C.status(x0, y).status == NonzeroStatus::Certified;
            in = in && C.status(y, x0).status == NonzeroStatus::Certified;
        }
        if (out || in) {
            std::string why = "connected: C" + std::string(out ? "(X0,Y)" : "(Y,X0)") +
                              " certified nonzero for all Y with X0 = " + C.objects[x0];
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    if (C.status(x, y).status != NonzeroStatus::Certified)
                        C.set_status(x, y, {NonzeroStatus::Certified, why});
            return {"connectedness", C.objects[x0], -1, true, why};
        }
    }
    return {"connectedness", "", -1, false, "no object with all outgoing or incoming hom-algebras certified"};
}

}  // namespace hg
