#include "hg/weakhopf/weakhopf.hpp"

#include <algorithm>
#include <map>

#include "hg/core/error.hpp"
#include "hg/core/parallel.hpp"

namespace hg {

namespace {

constexpr int kMaxFiniteLevel = 6;

BlockKey key(std::initializer_list<std::pair<std::size_t, Word>> legs) {
    BlockKey k;
    std::size_t i = 0;
    for (auto& [b, w] : legs) {
        k.b[i] = static_cast<std::uint8_t>(b);
        k.w.w[i] = w;
        ++i;
    }
    k.w.n = static_cast<std::uint8_t>(i);
    return k;
}

Scalar scalar_part(const TensorElement& x) {
    Scalar s;
    for (auto& [t, c] : x) s += c;
    return s;
}

// Legs i and i+1 multiplied together (zero unless they share a block).
WeakElement contract(const WeakElement& x, std::size_t i) {
    Accumulator<BlockKey> acc;
    for (auto& [k, c] : x) {
        if (k.b[i] != k.b[i + 1]) continue;
        BlockKey r;
        std::size_t o = 0;
        for (std::size_t l = 0; l < k.w.n; ++l) {
            if (l == i + 1) continue;
            r.b[o] = k.b[l];
            r.w.w[o] = l == i ? concat(k.w.w[i], k.w.w[i + 1]) : k.w.w[l];
            ++o;
        }
        r.w.n = static_cast<std::uint8_t>(o);
        acc.add(r, c);
    }
    return acc.take();
}

WeakElement tensor2(const WeakElement& x, const WeakElement& y) {
    Accumulator<BlockKey> acc;
    for (auto& [a, c] : x)
        for (auto& [b, e] : y) {
            BlockKey k = a;
            for (std::size_t l = 0; l < b.w.n; ++l) {
                k.b[a.w.n + l] = b.b[l];
                k.w.w[a.w.n + l] = b.w.w[l];
            }
            k.w.n = static_cast<std::uint8_t>(a.w.n + b.w.n);
            acc.add(k, c * e);
        }
    return acc.take();
}

}  // namespace

WeakHopfData::WeakHopfData(CogroupoidData C, std::vector<std::size_t> objects) : C_(std::move(C)), obj_(std::move(objects)) {
    if (obj_.empty()) raise(ErrorKind::Precondition, "at least one object is required");
    for (auto o : obj_)
        if (o >= C_.size()) raise(ErrorKind::Precondition, "object index out of range");
    if (!C_.finite) return;
    // Smallest level >= 2 at which no block has standard words of top weight.
    for (level_ = 2;; ++level_) {
        if (level_ > kMaxFiniteLevel) raise(ErrorKind::DegreeTooLarge, "finite blocks did not close by level 6");
        bool closed = true;
        for (std::size_t b = 0; b < blocks() && closed; ++b) closed = block(b).slice(level_)->quotient_dims().back() == 0;
        if (closed) break;
    }
    for (std::size_t b = 0; b < blocks(); ++b)
        for (const Word& w : block(b).slice(level_)->standard_words(level_)) basis_.push_back(key({{b, w}}));
}

std::vector<BlockKey> WeakHopfData::generators() const {
    std::vector<BlockKey> out;
    for (std::size_t b = 0; b < blocks(); ++b)
        for (std::size_t g = 0; g < block(b).gens().size(); ++g) out.push_back(key({{b, block(b).gens().letter(g)}}));
    return out;
}

WeakElement WeakHopfData::unit(std::size_t arity) const {
    if (arity == 0) return WeakElement(BlockKey{}, Scalar(1));
    WeakElement u;
    for (std::size_t b = 0; b < blocks(); ++b) u += WeakElement(key({{b, Word()}}));
    WeakElement out = u;
    for (std::size_t i = 1; i < arity; ++i) out = tensor2(out, u);
    return out;
}

WeakElement WeakHopfData::element(std::size_t b, const FreeElement& x) const {
    Accumulator<BlockKey> acc;
    for (auto& [w, c] : x) acc.add(key({{b, w}}), c);
    return acc.take();
}

WeakElement WeakHopfData::multiply(const WeakElement& x, const WeakElement& y) const {
    Accumulator<BlockKey> acc;
    for (auto& [a, c] : x)
        for (auto& [b, e] : y) {
            if (a.w.n != b.w.n) raise(ErrorKind::Precondition, "arity mismatch in product");
            bool same = true;
            for (std::size_t l = 0; l < a.w.n && same; ++l) same = a.b[l] == b.b[l];
            if (!same) continue;
            BlockKey k = a;
            for (std::size_t l = 0; l < a.w.n; ++l) k.w.w[l] = concat(a.w.w[l], b.w.w[l]);
            acc.add(k, c * e);
        }
    return acc.take();
}

WeakElement WeakHopfData::delta(const WeakElement& x, std::size_t leg) const {
    std::size_t n = objects();
    Accumulator<BlockKey> acc;
    for (auto& [k, c] : x) {
        if (std::size_t(k.w.n) + 1 > TWord::kMaxArity) raise(ErrorKind::Precondition, "arity limit reached");
        std::size_t i = k.b[leg] / n, j = k.b[leg] % n;
        for (std::size_t m = 0; m < n; ++m)
            for (auto& [u, e] : C_.delta(obj_[i], obj_[j], obj_[m]).apply_word(k.w.w[leg])) {
                BlockKey r;
                std::size_t o = 0;
                for (std::size_t l = 0; l < k.w.n; ++l) {
                    if (l == leg) {
                        r.b[o] = static_cast<std::uint8_t>(i * n + m);
                        r.w.w[o++] = u.w[0];
                        r.b[o] = static_cast<std::uint8_t>(m * n + j);
                        r.w.w[o++] = u.w[1];
                    } else {
                        r.b[o] = k.b[l];
                        r.w.w[o++] = k.w.w[l];
                    }
                }
                r.w.n = static_cast<std::uint8_t>(o);
                acc.add(r, c * e);
            }
    }
    return acc.take();
}

WeakElement WeakHopfData::eps(const WeakElement& x, std::size_t leg) const {
    std::size_t n = objects();
    Accumulator<BlockKey> acc;
    for (auto& [k, c] : x) {
        std::size_t i = k.b[leg] / n, j = k.b[leg] % n;
        if (i != j) continue;
        Scalar e = scalar_part(C_.eps(obj_[i]).apply_word(k.w.w[leg]));
        BlockKey r;
        std::size_t o = 0;
        for (std::size_t l = 0; l < k.w.n; ++l) {
            if (l == leg) continue;
            r.b[o] = k.b[l];
            r.w.w[o++] = k.w.w[l];
        }
        r.w.n = static_cast<std::uint8_t>(o);
        acc.add(r, c * e);
    }
    return acc.take();
}

WeakElement WeakHopfData::antipode(const WeakElement& x, std::size_t leg) const {
    std::size_t n = objects();
    Accumulator<BlockKey> acc;
    for (auto& [k, c] : x) {
        std::size_t i = k.b[leg] / n, j = k.b[leg] % n;
        for (auto& [w, e] : C_.antipode(obj_[i], obj_[j]).apply1(FreeElement(k.w.w[leg]))) {
            BlockKey r = k;
            r.b[leg] = static_cast<std::uint8_t>(j * n + i);
            r.w.w[leg] = w;
            acc.add(r, c * e);
        }
    }
    return acc.take();
}

WeakElement WeakHopfData::eps_t(const WeakElement& x) const {
    return eps(reduce(multiply(delta(unit(), 0), tensor2(x, unit()))), 0);
}

WeakElement WeakHopfData::eps_s(const WeakElement& x) const {
    return eps(reduce(multiply(tensor2(unit(), x), delta(unit(), 0))), 1);
}

WeakElement WeakHopfData::reduce(const WeakElement& x, int level) const {
    int base = level > 0 ? level : level_;
    std::map<std::array<std::uint8_t, TWord::kMaxArity>, std::vector<std::pair<TWord, Scalar>>> groups;
    std::size_t arity = 0;
    for (auto& [k, c] : x) {
        auto b = k.b;
        for (std::size_t l = k.w.n; l < TWord::kMaxArity; ++l) b[l] = 0;
        groups[b].emplace_back(k.w, c);
        arity = k.w.n;
    }
    Accumulator<BlockKey> acc;
    for (auto& [b, terms] : groups) {
        TensorElement t = TensorElement::from_terms(terms);
        std::vector<std::shared_ptr<const QuotientSlice>> sl;
        std::vector<const QuotientSlice*> raw_sl;
        for (std::size_t l = 0; l < arity; ++l) {
            int lv = base;
            for (auto& [u, c] : t) lv = std::max(lv, int(u.w[l].wt));
            sl.push_back(block(b[l]).slice(lv));
            raw_sl.push_back(sl.back().get());
        }
        for (auto& [u, c] : reduce_tensor(t, raw_sl)) {
            BlockKey k;
            k.b = b;
            k.w = u;
            acc.add(k, c);
        }
    }
    return acc.take();
}

std::string WeakHopfData::to_string(const WeakElement& x) const {
    if (x.is_zero()) return "0";
    std::size_t n = objects();
    std::string out;
    for (auto& [k, c] : x) {
        std::string term;
        for (std::size_t l = 0; l < k.w.n; ++l) {
            if (l) term += " (x) ";
            const Presentation& P = block(k.b[l]);
            term += "[" + std::to_string(k.b[l] / n + 1) + "," + std::to_string(k.b[l] % n + 1) + "]" +
                    (k.w.w[l].empty() ? "1" : P.gens().to_string(k.w.w[l]));
        }
        if (!out.empty()) out += " + ";
        out += (c.is_one() ? "" : "(" + c.to_string() + ")") + (term.empty() ? "1" : term);
    }
    return out;
}

const std::vector<std::string>& weak_hopf_axiom_list() {
    static const std::vector<std::string> list{
        "Delta(ab) = Delta(a) Delta(b)",
        "(Delta (x) 1) Delta = (1 (x) Delta) Delta",
        "(eps (x) 1) Delta = id = (1 (x) eps) Delta",
        "eps(abc) = eps(a b_(1)) eps(b_(2) c) = eps(a b_(2)) eps(b_(1) c)",
        "(Delta (x) 1) Delta(1) = (Delta(1) (x) 1)(1 (x) Delta(1)) = (1 (x) Delta(1))(Delta(1) (x) 1)",
        "a_(1) S(a_(2)) = eps_t(a), eps_t(a) = eps(1_(1) a) 1_(2)",
        "S(a_(1)) a_(2) = eps_s(a), eps_s(a) = 1_(1) eps(a 1_(2))",
        "S(a_(1)) a_(2) S(a_(3)) = S(a)",
    };
    return list;
}

Certificate check_weak_hopf(const WeakHopfData& W, int d) {
    Certificate cert;
    cert.kind = "weak Hopf algebra";
    cert.subject = std::to_string(W.objects()) + " objects, " + std::to_string(W.blocks()) + " blocks";
    bool exact = W.finite();
    cert.exact = exact;
    int level = exact ? W.basis_level() : std::max(d, 2);
    cert.degree = level;
    cert.data["axioms"] = weak_hopf_axiom_list();
    cert.data["axiom_list"] = "BNS-1999";
    if (!exact) cert.tags.push_back("truncated: generator-level checks at level " + std::to_string(level));

    std::vector<WeakElement> elems;
    if (exact) {
        cert.data["dimension"] = W.dim();
        for (auto& k : W.basis()) elems.emplace_back(k);
    } else {
        for (auto& k : W.generators()) elems.emplace_back(k);
        for (std::size_t b = 0; b < W.blocks(); ++b) elems.push_back(W.element(b, unit_element()));
    }
    auto R = [&](const WeakElement& x) { return W.reduce(x, level); };
    auto record = [&](const std::string& id, const std::string& what, const WeakElement& lhs, const WeakElement& rhs) {
        WeakElement r = R(lhs - rhs);
        return CheckRecord{id, what, exact ? -1 : level, r.is_zero(), r.is_zero() ? "" : W.to_string(r)};
    };
    auto first_failure = [](std::vector<CheckRecord>& recs, const std::string& id, const std::string& count) {
        for (auto& r : recs)
            if (!r.pass) return r;
        return CheckRecord{id, count, recs.empty() ? 0 : recs[0].level, true, ""};
    };
    std::size_t N = elems.size();
    std::string single = std::to_string(N) + " elements", pairs = std::to_string(N * N) + " pairs";
    const auto& ax = weak_hopf_axiom_list();
    WeakElement one = W.unit(), d1 = W.delta(one, 0);

    {
        std::vector<CheckRecord> recs(N * N);
        parallel_for(N, [&](std::size_t i) {
            for (std::size_t j = 0; j < N; ++j)
                recs[i * N + j] = record(ax[0], W.to_string(elems[i]) + ", " + W.to_string(elems[j]),
                                         W.delta(R(W.multiply(elems[i], elems[j])), 0),
                                         W.multiply(W.delta(elems[i], 0), W.delta(elems[j], 0)));
        });
        cert.add(first_failure(recs, ax[0], pairs));
    }
    std::vector<CheckRecord> coass(N), counit(N), anti_t(N), anti_s(N), anti_3(N);
    parallel_for(N, [&](std::size_t i) {
        const WeakElement& a = elems[i];
        std::string s = W.to_string(a);
        WeakElement da = W.delta(a, 0);
        coass[i] = record(ax[1], s, W.delta(da, 0), W.delta(da, 1));
        WeakElement l = W.eps(da, 0), r = W.eps(da, 1);
        CheckRecord c1 = record(ax[2], s, l, a), c2 = record(ax[2], s, r, a);
        counit[i] = c1.pass ? c2 : c1;
        anti_t[i] = record(ax[5], s, contract(W.antipode(da, 1), 0), W.eps_t(a));
        anti_s[i] = record(ax[6], s, contract(W.antipode(da, 0), 0), W.eps_s(a));
        WeakElement d3 = W.antipode(W.antipode(W.delta(da, 1), 0), 2);
        anti_3[i] = record(ax[7], s, contract(contract(d3, 0), 0), W.antipode(a, 0));
    });
    cert.add(first_failure(coass, ax[1], single));
    cert.add(first_failure(counit, ax[2], single));

    {
        // Weak counit on all triples.
        std::vector<CheckRecord> recs(N);
        WeakElement u = one;
        parallel_for(N, [&](std::size_t bi) {
            const WeakElement& b = elems[bi];
            WeakElement db = W.delta(b, 0);
            CheckRecord rec{ax[3], "", exact ? -1 : level, true, ""};
            for (std::size_t ai = 0; ai < N && rec.pass; ++ai)
                for (std::size_t ci = 0; ci < N && rec.pass; ++ci) {
                    const WeakElement &a = elems[ai], &c = elems[ci];
                    WeakElement abc = W.eps(R(W.multiply(W.multiply(a, b), c)), 0);
                    WeakElement x1 = W.multiply(W.multiply(tensor2(a, u), db), tensor2(u, c));
                    WeakElement x2 = W.multiply(W.multiply(tensor2(u, a), db), tensor2(c, u));
                    WeakElement e1 = W.eps(W.eps(R(x1), 0), 0), e2 = W.eps(W.eps(R(x2), 0), 0);
                    if (abc != e1 || abc != e2) {
                        rec.pass = false;
                        rec.objects = W.to_string(a) + ", " + W.to_string(b) + ", " + W.to_string(c);
                        rec.detail = abc.is_zero() ? "0" : W.to_string(abc);
                    }
                }
            recs[bi] = rec;
        });
        cert.add(first_failure(recs, ax[3], std::to_string(N * N * N) + " triples"));
    }
    {
        WeakElement lhs = W.delta(d1, 0);
        WeakElement m1 = W.multiply(tensor2(d1, one), tensor2(one, d1));
        WeakElement m2 = W.multiply(tensor2(one, d1), tensor2(d1, one));
        CheckRecord r1 = record(ax[4], "1", lhs, m1), r2 = record(ax[4], "1", lhs, m2);
        cert.add(r1.pass ? r2 : r1);
    }
    cert.add(first_failure(anti_t, ax[5], single));
    cert.add(first_failure(anti_s, ax[6], single));
    cert.add(first_failure(anti_3, ax[7], single));

    // Derived properties.
    std::size_t n = W.objects();
    WeakElement eps1 = W.eps(one, 0);
    cert.add({"eps(1) = number of objects", "", -1, eps1 == WeakElement(BlockKey{}, Scalar(long(n))),
              W.to_string(eps1)});
    bool weak = R(d1 - tensor2(one, one)).is_zero() == (n == 1);
    cert.add({n > 1 ? "Delta(1) != 1 (x) 1" : "Delta(1) = 1 (x) 1", "", -1, weak, W.to_string(R(d1))});
    cert.add(record("(eps (x) 1) Delta(1) = 1", "", W.eps(d1, 0), one));
    std::vector<CheckRecord> idem(N), comm(N), s2(N);
    parallel_for(N, [&](std::size_t i) {
        const WeakElement& a = elems[i];
        std::string s = W.to_string(a);
        WeakElement t = R(W.eps_t(a)), sa = R(W.eps_s(a));
        CheckRecord i1 = record("eps_t, eps_s idempotent", s, W.eps_t(t), t);
        CheckRecord i2 = record("eps_t, eps_s idempotent", s, W.eps_s(sa), sa);
        idem[i] = i1.pass ? i2 : i1;
        comm[i] = CheckRecord{"eps_t and eps_s images commute", "", -1, true, ""};
        for (std::size_t j = 0; j < N && comm[i].pass; ++j) {
            WeakElement sb = R(W.eps_s(elems[j]));
            CheckRecord r = record("eps_t and eps_s images commute", s + ", " + W.to_string(elems[j]),
                                   W.multiply(t, sb), W.multiply(sb, t));
            if (!r.pass) comm[i] = r;
        }
        WeakElement ss = W.antipode(W.antipode(a, 0), 0);
        bool same_block = true;
        for (auto& [k, c] : ss) same_block = same_block && k.b[0] == a.begin()->first.b[0];
        s2[i] = CheckRecord{"S^2 preserves blocks", s, -1, same_block, ""};
    });
    cert.add(first_failure(idem, "eps_t, eps_s idempotent", single));
    cert.add(first_failure(comm, "eps_t and eps_s images commute", pairs));
    cert.add(first_failure(s2, "S^2 preserves blocks", single));
    return cert;
}

}  // namespace hg
