#include "hg/hopf/tensor_ops.hpp"

#include <stdexcept>

namespace hg {

std::size_t arity_of(const TensorElement& x) { return x.is_zero() ? 0 : x.leading_key().n; }

TensorElement apply_on_leg(const TensorElement& x, std::size_t i, const AlgebraMorphism& f) {
    std::vector<TensorElement::Term> out;
    for (auto& [t, c] : x) {
        if (i >= t.n) throw std::out_of_range("apply_on_leg: leg index");
        std::size_t n = t.n - 1 + f.arity();
        if (n > TWord::kMaxArity) throw std::length_error("apply_on_leg: arity above 3");
        TensorElement img = f.apply_word(t.w[i]);
        for (auto& [u, d] : img) {
            TWord r;
            r.n = static_cast<std::uint8_t>(n);
            std::size_t k = 0;
            for (std::size_t j = 0; j < i; ++j) r.w[k++] = t.w[j];
            for (std::size_t j = 0; j < u.n; ++j) r.w[k++] = u.w[j];
            for (std::size_t j = i + 1; j < t.n; ++j) r.w[k++] = t.w[j];
            out.emplace_back(r, c * d);
        }
    }
    return TensorElement::from_terms(std::move(out));
}

TensorElement multiply_legs(const TensorElement& x, std::size_t i) {
    return x.map_keys([i](const TWord& t) {
        TWord r;
        r.n = static_cast<std::uint8_t>(t.n - 1);
        std::size_t k = 0;
        for (std::size_t j = 0; j < t.n; ++j) {
            if (j == i + 1) continue;
            r.w[k++] = j == i ? concat(t.w[i], t.w[i + 1]) : t.w[j];
        }
        return r;
    });
}

TensorElement swap_legs(const TensorElement& x, std::size_t i, std::size_t j) {
    return x.map_keys([i, j](const TWord& t) {
        TWord r = t;
        std::swap(r.w[i], r.w[j]);
        return r;
    });
}

TensorElement sandwich_leg(const TensorElement& x, std::size_t i, const FreeElement& a, const FreeElement& b) {
    std::vector<TensorElement::Term> out;
    for (auto& [t, c] : x)
        for (auto& [u, d] : a)
            for (auto& [v, e] : b) {
                TWord r = t;
                r.w[i] = concat(concat(u, t.w[i]), v);
                out.emplace_back(r, c * d * e);
            }
    return TensorElement::from_terms(std::move(out));
}

std::map<Word, FreeElement> middle_out(const Word& w, const SweedlerPattern& p) {
    std::map<Word, FreeElement> state;
    state.emplace(Word(), unit_element());
    std::map<Word, FreeElement> s_cache;
    auto S = [&](const Word& s) -> const FreeElement& {
        auto it = s_cache.find(s);
        if (it == s_cache.end()) it = s_cache.emplace(s, p.antipode->apply1(FreeElement(s))).first;
        return it->second;
    };
    for (std::size_t step = 0; step < w.len; ++step) {
        std::size_t idx = p.forward ? step : w.len - 1 - step;
        Word letter = p.outer->source->gens().letter(w.g[idx]);
        TensorElement T = apply_on_leg(p.outer->apply_word(letter), p.inner_leg, *p.inner);
        std::map<Word, Accumulator<Word>> next;
        for (auto& [kept, M] : state)
            for (auto& [t, c] : T) {
                const Word& kw = t.w[p.kept_leg];
                FreeElement o(t.w[p.o_leg], c);
                FreeElement m = p.forward ? multiply(multiply(S(t.w[p.s_leg]), M), o)
                                          : multiply(multiply(o, M), S(t.w[p.s_leg]));
                next[p.forward ? concat(kept, kw) : concat(kw, kept)].add(m);
            }
        state.clear();
        for (auto& [kept, acc] : next) {
            FreeElement m = p.middle->reduce(acc.take());
            if (!m.is_zero()) state.emplace(kept, std::move(m));
        }
    }
    return state;
}

}  // namespace hg
