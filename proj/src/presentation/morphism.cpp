#include "hg/presentation/morphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "hg/core/error.hpp"

namespace hg {

TensorElement as_tensor(const FreeElement& x) {
    return x.map_keys([](const Word& w) { return tword({w}); });
}

TensorElement scalar_tensor(const Scalar& s, std::size_t arity) { return tensor_unit(arity).scaled(s); }

FreeElement first_factor(const TensorElement& x) {
    return x.map_keys([](const TWord& t) { return t.w[0]; });
}

TensorElement AlgebraMorphism::apply_word(const Word& w) const {
    TensorElement prod = tensor_unit(arity());
    for (std::size_t i = 0; i < w.len; ++i) {
        const TensorElement& img = images.at(w.g[anti ? w.len - 1 - i : i]);
        prod = multiply(prod, img);
        if (prod.is_zero()) break;
    }
    return prod;
}

TensorElement AlgebraMorphism::apply(const FreeElement& x) const {
    Accumulator<TWord> acc;
    for (auto& [w, c] : x) acc.add(apply_word(w), c);
    return acc.take();
}

TensorElement AlgebraMorphism::apply_reduced(const FreeElement& x,
                                             const std::vector<const QuotientSlice*>& slices) const {
    Accumulator<TWord> acc;
    for (auto& [w, c] : x) {
        TensorElement prod = tensor_unit(arity());
        for (std::size_t i = 0; i < w.len && !prod.is_zero(); ++i)
            prod = reduce_tensor(multiply(prod, images.at(w.g[anti ? w.len - 1 - i : i])), slices);
        acc.add(prod, c);
    }
    return acc.take();
}

FreeElement AlgebraMorphism::apply1(const FreeElement& x) const {
    if (arity() != 1) throw std::logic_error(name + ": apply1 on a multi-factor morphism");
    return first_factor(apply(x));
}

std::vector<std::shared_ptr<const QuotientSlice>> target_slices(const std::vector<PresentationPtr>& target,
                                                                 int level) {
    std::vector<std::shared_ptr<const QuotientSlice>> out;
    for (auto& p : target) out.push_back(p->slice(level));
    return out;
}

std::vector<const QuotientSlice*> raw(const std::vector<std::shared_ptr<const QuotientSlice>>& s) {
    std::vector<const QuotientSlice*> out;
    for (auto& p : s) out.push_back(p.get());
    return out;
}

Certificate check_morphism(const AlgebraMorphism& phi) {
    Certificate cert;
    cert.kind = "morphism";
    cert.subject = phi.name;
    if (phi.images.size() != phi.source->gens().size())
        throw std::invalid_argument(phi.name + ": wrong number of generator images");
    int maxlevel = 0;
    const auto& rels = phi.source->relations();
    for (std::size_t r = 0; r < rels.size(); ++r) {
        TensorElement img = phi.apply(rels[r]);
        std::vector<int> lv(phi.arity(), 0);
        for (auto& [t, c] : img)
            for (std::size_t i = 0; i < t.n; ++i) lv[i] = std::max<int>(lv[i], t.w[i].wt);
        int level = lv.empty() ? 0 : *std::max_element(lv.begin(), lv.end());
        maxlevel = std::max(maxlevel, level);
        std::vector<std::shared_ptr<const QuotientSlice>> sl;
        for (std::size_t i = 0; i < phi.arity(); ++i) sl.push_back(phi.target[i]->slice(lv[i]));
        TensorElement res = reduce_tensor(img, raw(sl));
        CheckRecord rec;
        rec.id = "relation " + std::to_string(r);
        rec.objects = phi.source->to_string(rels[r]);
        rec.level = level;
        rec.pass = res.is_zero();
        if (!rec.pass) {
            std::vector<const Alphabet*> al;
            for (auto& p : phi.target) al.push_back(&p->gens());
            rec.detail = "residue " + to_string(res, al);
        }
        cert.add(std::move(rec));
    }
    if (rels.empty()) cert.add({"no relations", "", 0, true, "free algebra"});
    cert.degree = maxlevel;
    cert.data["source"] = phi.source->canonical_text();
    cert.data["anti"] = phi.anti;
    return cert;
}

AlgebraMorphism compose(const AlgebraMorphism& psi, const AlgebraMorphism& phi) {
    if (phi.arity() != 1 || phi.target[0].get() != psi.source.get())
        throw std::invalid_argument("compose: target of the inner map is not the source of the outer map");
    AlgebraMorphism out;
    out.name = psi.name + " o " + phi.name;
    out.source = phi.source;
    out.target = psi.target;
    out.anti = psi.anti != phi.anti;
    for (auto& img : phi.images) {
        FreeElement x = first_factor(img);
        out.images.push_back(psi.apply(x));
    }
    return out;
}

}  // namespace hg
