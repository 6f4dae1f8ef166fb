#include "hg/classify/classify.hpp"

#include "hg/core/error.hpp"
#include "hg/core/sparse_echelon.hpp"
#include "hg/hopf/tensor_ops.hpp"

namespace hg {

bool congruent_test(const ExactMatrix& F, const ExactMatrix& G) {
    if (!F.is_square() || !G.is_square() || F.rows() != G.rows()) return false;
    ExactMatrix a = F.inverse() * F.transpose();
    ExactMatrix b = G.inverse() * G.transpose();
    return rational_canonical_form(a) == rational_canonical_form(b);
}

bool similar_test(const ExactMatrix& F, const ExactMatrix& G) {
    if (!F.is_square() || !G.is_square() || F.rows() != G.rows()) return false;
    return rational_canonical_form(F) == rational_canonical_form(G);
}

namespace {

std::string render(const TensorElement& x, const std::vector<PresentationPtr>& legs) {
    std::vector<const Alphabet*> al;
    for (auto& p : legs) al.push_back(&p->gens());
    return to_string(x, al);
}

// Objects E, F, G of one cogroupoid, with distinct names.
std::vector<NamedMatrix> three(const NamedMatrix& E, const NamedMatrix& F, const NamedMatrix& G) {
    std::vector<NamedMatrix> o{E, F, G};
    for (std::size_t i = 1; i < 3; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (o[i].name == o[j].name) o[i].name += "'";
    return o;
}

// f : C(0,1) -> C(0,2) given by generator images; certifies it.
GaloisIso certify(const CogroupoidData& C, std::vector<TensorElement> images, const std::string& formula, int d) {
    GaloisIso out;
    PresentationPtr src = C.hom(0, 1), dst = C.hom(0, 2);
    out.map = {"f: " + src->name() + " -> " + dst->name(), src, {dst}, false, std::move(images)};
    Certificate& cert = out.cert;
    cert.kind = "galois object isomorphism";
    cert.subject = out.map.name;
    cert.degree = d;
    cert.data["formula"] = formula;
    cert.merge(check_morphism(out.map));

    PresentationPtr ee = C.hom(0, 0);
    CheckRecord col{"left colinearity", C.objects[0], d, true, ""};
    for (std::size_t g = 0; g < src->gens().size(); ++g) {
        Word w = src->gens().letter(g);
        TensorElement lhs = apply_on_leg(out.map.apply_word(w), 0, C.delta(0, 2, 0));
        TensorElement rhs = apply_on_leg(C.delta(0, 1, 0).apply_word(w), 1, out.map);
        auto s1 = ee->slice(std::max(d, 1)), s2 = dst->slice(std::max(d, 2));
        TensorElement r = reduce_tensor(lhs - rhs, {s1.get(), s2.get()});
        if (!r.is_zero()) {
            col.pass = false;
            col.detail = "generator " + src->gens().name(g) + ": residue " + render(r, {ee, dst});
            break;
        }
    }
    cert.add(col);

    // Bijectivity on each filtration level: f maps F_k into F_k; equal
    // dimensions and injectivity there.
    auto ss = src->slice(d), ds = dst->slice(d);
    std::vector<Word> sw = ss->standard_words(d);
    KernelEngine<Word> engine;
    std::size_t next = 0;
    for (int k = 0; k <= d; ++k) {
        while (next < sw.size() && sw[next].wt <= k)
            engine.add(ds->reduce(first_factor(out.map.apply_word(sw[next++]))));
        std::size_t target = ds->standard_words(k).size();
        bool ok = engine.kernel().empty() && engine.count() == target;
        cert.add({"bijective on filtration level " + std::to_string(k), "", k, ok,
                  ok ? "" : "source dim " + std::to_string(engine.count()) + ", rank " + std::to_string(engine.rank()) +
                                ", target dim " + std::to_string(target)});
    }
    cert.tags.push_back("colinear algebra map between Galois objects: an isomorphism");
    return out;
}

}  // namespace

GaloisIso build_iso_B(const NamedMatrix& E, const NamedMatrix& F, const NamedMatrix& G, const ExactMatrix& P, int d) {
    std::size_t n = F.m.rows();
    if (!P.is_square() || P.rows() != n || G.m.rows() != n || !P.is_invertible() ||
        P * G.m * P.transpose() != F.m)
        raise(ErrorKind::CongruenceWitnessInvalid, "P is not an invertible matrix with F = P G P^t");
    CogroupoidData C = make_B(three(E, F, G));
    std::size_t m = E.m.rows();
    const Presentation& dst = *C.hom(0, 2);
    std::vector<TensorElement> images;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FreeElement s;
            for (std::size_t k = 0; k < n; ++k) s += dst.gen(i * n + k).scaled(P(j, k));
            images.push_back(as_tensor(s));
        }
    return certify(C, std::move(images), "a -> a P^t, P = " + P.to_string(), d);
}

GaloisIso build_iso_H(const NamedMatrix& E, const NamedMatrix& F, const NamedMatrix& G, const ExactMatrix& P, int d) {
    std::size_t n = F.m.rows();
    if (!P.is_square() || P.rows() != n || G.m.rows() != n || !P.is_invertible() || P * G.m != F.m * P)
        raise(ErrorKind::SimilarityWitnessInvalid, "P is not an invertible matrix with F = P G P^{-1}");
    CogroupoidData C = make_H(three(E, F, G));
    std::size_t m = E.m.rows();
    ExactMatrix Pi = P.inverse();
    const Presentation& dst = *C.hom(0, 2);
    std::vector<TensorElement> images;
    for (int block = 0; block < 2; ++block)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                FreeElement s;
                for (std::size_t k = 0; k < n; ++k)
                    s += dst.gen(block * m * n + i * n + k).scaled(block == 0 ? P(j, k) : Pi(k, j));
                images.push_back(as_tensor(s));
            }
    return certify(C, std::move(images), "u -> u P^t, v -> v P^{-1}, P = " + P.to_string(), d);
}

FusionWord fusion_bar(const FusionWord& x) {
    FusionWord r(x.rbegin(), x.rend());
    for (char& c : r) c = c == 'a' ? 'b' : 'a';
    return r;
}

FusionSum fusion_decompose(const FusionWord& x, const FusionWord& y) {
    FusionSum out;
    for (std::size_t k = 0; k <= x.size(); ++k) {
        FusionWord a = x.substr(0, k), gb = fusion_bar(x.substr(k));
        if (gb.size() <= y.size() && y.compare(0, gb.size(), gb) == 0) ++out[a + y.substr(gb.size())];
    }
    return out;
}

FusionSum fusion_product(const FusionSum& x, const FusionSum& y) {
    FusionSum out;
    for (auto& [u, m] : x)
        for (auto& [v, k] : y)
            for (auto& [w, c] : fusion_decompose(u, v)) out[w] += m * k * c;
    return out;
}

std::vector<FusionWord> fusion_words(std::size_t max_len) {
    std::vector<FusionWord> out{""};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].size() < max_len) {
            out.push_back(out[i] + "a");
            out.push_back(out[i] + "b");
        }
    return out;
}

FusionDimensions fusion_dimensions(long n, std::size_t max_len) {
    FusionDimensions r;
    std::vector<FusionWord> words = fusion_words(max_len);
    r.dims[""] = 1;
    for (const FusionWord& w : words) {
        if (w.empty()) continue;
        if (w.size() == 1) {
            r.dims[w] = n;
            continue;
        }
        FusionWord x = w.substr(0, 1), y = w.substr(1);
        long v = r.dims.at(x) * r.dims.at(y);
        for (auto& [t, c] : fusion_decompose(x, y))
            if (t != w) v -= c * r.dims.at(t);
        r.dims[w] = v;
    }
    for (const FusionWord& x : words)
        for (const FusionWord& y : words) {
            if (x.size() + y.size() > max_len) continue;
            long s = 0;
            for (auto& [t, c] : fusion_decompose(x, y)) s += c * r.dims.at(t);
            if (s != r.dims.at(x) * r.dims.at(y)) {
                r.consistent = false;
                r.detail = "d(" + x + ") d(" + y + ") != sum of constituents";
                return r;
            }
        }
    return r;
}

}  // namespace hg
