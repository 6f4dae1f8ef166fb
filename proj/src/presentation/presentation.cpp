#include "hg/presentation/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hg/core/error.hpp"

namespace hg {

Presentation::Presentation(std::string name, Alphabet gens, std::vector<FreeElement> relations)
    : name_(std::move(name)), gens_(std::move(gens)), raw_count_(relations.size()) {
    for (auto& r : relations) {
        for (auto& [w, c] : r)
            for (std::size_t i = 0; i < w.len; ++i)
                if (w.g[i] >= gens_.size()) throw std::invalid_argument("relation uses an unknown generator");
        if (!r.is_zero()) rels_.push_back(std::move(r));
    }
}

FreeElement Presentation::gen(const std::string& name) const {
    int i = gens_.index_of(name);
    if (i < 0) throw std::invalid_argument("unknown generator " + name);
    return gen(static_cast<std::size_t>(i));
}

std::shared_ptr<const QuotientSlice> Presentation::slice(int level) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = slices_.find(level);
        if (it != slices_.end()) return it->second;
    }
    auto s = std::make_shared<const QuotientSlice>(*this, level);
    std::lock_guard<std::mutex> lock(mu_);
    return slices_.emplace(level, s).first->second;
}

std::string Presentation::canonical_text() const {
    std::ostringstream os;
    os << "algebra " << name_ << "\ngenerators:";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        os << " " << gens_.name(i);
        if (gens_.degree(i) != 1) os << "[" << gens_.degree(i) << "]";
    }
    os << "\nrelations:\n";
    for (auto& r : rels_) os << "  " << hg::to_string(r, gens_) << " = 0\n";
    return os.str();
}

// ------------------------------------------------------------------ slices

namespace {

FreeElement substitute_with(const FreeElement& x, const std::vector<FreeElement>& images) {
    Accumulator<Word> acc;
    for (auto& [w, c] : x) {
        FreeElement prod = unit_element();
        for (std::size_t i = 0; i < w.len; ++i) prod = multiply(prod, images[w.g[i]]);
        acc.add(prod, c);
    }
    return acc.take();
}

bool is_linear(const FreeElement& r, const Alphabet& a) {
    for (auto& [w, c] : r) {
        if (w.len > 1) return false;
        if (w.len == 1 && a.degree(w.g[0]) != 1) return false;
    }
    return true;
}

}  // namespace

QuotientSlice::QuotientSlice(const Presentation& p, int level) : p_(&p), level_(level) {
    if (level < 0) throw std::invalid_argument("negative slice level");
    const Alphabet& A = p.gens();
    std::size_t n = A.size();
    kept_.assign(n, true);
    subst_.clear();
    for (std::size_t i = 0; i < n; ++i) subst_.push_back(FreeElement(A.letter(i)));

    // Eliminate generators fixed by linear relations, to a fixpoint.
    while (true) {
        SparseEchelon<Word> lin;
        for (auto& r : p.relations()) {
            FreeElement s = substitute_with(r, subst_);
            if (!s.is_zero() && is_linear(s, A)) lin.insert(s);
        }
        bool changed = false;
        for (auto& row : lin.rows()) {
            const Word& lead = row.leading_key();
            if (lead.empty()) {
                zero_ = true;
                return;
            }
            if (lead.len != 1 || !kept_[lead.g[0]]) continue;
            std::size_t g = lead.g[0];
            FreeElement image = -lin.reduce(row - FreeElement(lead));
            kept_[g] = false;
            std::vector<FreeElement> step = subst_;
            for (std::size_t i = 0; i < n; ++i) step[i] = FreeElement(A.letter(i));
            step[g] = image;
            for (auto& s : subst_) s = substitute_with(s, step);
            changed = true;
            break;  // recompute the linear span with the new substitution
        }
        if (!changed) break;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!kept_[i]) elim_.emplace_back(i, subst_[i]);

    for (auto& r : p.relations()) {
        FreeElement s = substitute_with(r, subst_);
        if (s.is_zero()) continue;
        rels_.push_back(std::move(s));
    }

    // Word counts per weight, capped.
    std::vector<std::vector<Word>> words(level + 1);
    words[0].push_back(Word());
    for (int k = 1; k <= level; ++k) {
        for (std::size_t g = 0; g < n; ++g) {
            if (!kept_[g] || A.degree(g) > k) continue;
            for (auto& u : words[k - A.degree(g)]) {
                words[k].push_back(concat(u, A.letter(g)));
                if (++word_count_ > p.word_cap)
                    raise(ErrorKind::DegreeTooLarge, p.name() + ": more than " + std::to_string(p.word_cap) +
                                                         " words at level " + std::to_string(level));
            }
        }
    }
    word_count_ += 1;

    for (int D = 0; D <= level; ++D) {
        for (auto& r : rels_) {
            int dr = degree(r);
            if (dr > D) continue;
            int rest = D - dr;
            for (int a = 0; a <= rest; ++a) {
                for (auto& u : words[a]) {
                    FreeElement ur = multiply(FreeElement(u), r);
                    for (auto& v : words[rest - a]) echelon_.insert(multiply(ur, FreeElement(v)));
                }
            }
        }
    }
    for (auto& row : echelon_.rows())
        if (row.leading_key().empty()) zero_ = true;
}

FreeElement QuotientSlice::substitute(const FreeElement& x) const {
    if (elim_.empty()) return x;
    return substitute_with(x, subst_);
}

const FreeElement& QuotientSlice::reduce_word(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
    }
    FreeElement r;
    if (!zero_) {
        if (w.wt > level_)
            raise(ErrorKind::DegreeTooLarge, p_->name() + ": word of weight " + std::to_string(w.wt) +
                                                 " above slice level " + std::to_string(level_));
        r = echelon_.reduce(substitute(FreeElement(w)));
    }
    std::lock_guard<std::mutex> lock(memo_mu_);
    return memo_.emplace(w, std::move(r)).first->second;
}

FreeElement QuotientSlice::reduce(const FreeElement& x) const {
    if (x.is_zero()) return x;
    Accumulator<Word> acc;
    for (auto& [w, c] : x) acc.add(reduce_word(w), c);
    return acc.take();
}

std::vector<std::size_t> QuotientSlice::kept_generators() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kept_.size(); ++i)
        if (kept_[i]) out.push_back(i);
    return out;
}

void QuotientSlice::enumerate_words(int d, std::vector<Word>& out) const {
    const Alphabet& A = p_->gens();
    std::vector<std::vector<Word>> words(d + 1);
    words[0].push_back(Word());
    for (int k = 1; k <= d; ++k)
        for (std::size_t g = 0; g < A.size(); ++g) {
            if (!kept_[g] || A.degree(g) > k) continue;
            for (auto& u : words[k - A.degree(g)]) words[k].push_back(concat(u, A.letter(g)));
        }
    for (auto& ws : words) out.insert(out.end(), ws.begin(), ws.end());
}

std::vector<Word> QuotientSlice::standard_words(int d) const {
    if (d > level_) raise(ErrorKind::DegreeTooLarge, "standard words requested above slice level");
    std::vector<Word> out;
    if (zero_) return out;
    std::vector<Word> all;
    enumerate_words(d, all);
    for (auto& w : all)
        if (!echelon_.is_pivot(w)) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> QuotientSlice::quotient_dims() const {
    std::vector<std::size_t> dims(level_ + 1, 0);
    for (auto& w : standard_words(level_)) ++dims[w.wt];
    return dims;
}

std::size_t QuotientSlice::ideal_rank_in_degree(int k) const {
    std::size_t r = 0;
    for (auto& row : echelon_.rows())
        if (row.leading_key().wt == k) ++r;
    return r;
}

// ----------------------------------------------------------------- tensors

TensorElement reduce_tensor(const TensorElement& x, const std::vector<const QuotientSlice*>& slices) {
    Accumulator<TWord> acc;
    for (auto& [t, c] : x) {
        if (t.n != slices.size()) throw std::invalid_argument("tensor arity does not match slices");
        std::vector<std::pair<TWord, Scalar>> partial{{TWord{}, c}};
        partial[0].first.n = t.n;
        for (std::size_t i = 0; i < t.n; ++i) {
            if (!slices[i]) {
                for (auto& pt : partial) pt.first.w[i] = t.w[i];
                continue;
            }
            const FreeElement& nf = slices[i]->reduce_word(t.w[i]);
            std::vector<std::pair<TWord, Scalar>> next;
            next.reserve(partial.size() * nf.size());
            for (auto& [pt, pc] : partial)
                for (auto& [w, wc] : nf) {
                    TWord nt = pt;
                    nt.w[i] = w;
                    next.emplace_back(nt, pc * wc);
                }
            partial.swap(next);
        }
        for (auto& [pt, pc] : partial) acc.add(pt, pc);
    }
    return acc.take();
}

PresentationPtr tensor_presentation(const Presentation& a, const Presentation& b) {
    std::vector<std::string> names = a.gens().names();
    std::vector<int> degs = a.gens().degrees();
    std::set<std::string> used(names.begin(), names.end());
    std::size_t off = names.size();
    for (std::size_t i = 0; i < b.gens().size(); ++i) {
        std::string nm = b.gens().name(i);
        while (used.count(nm)) nm += "'";
        used.insert(nm);
        names.push_back(nm);
        degs.push_back(b.gens().degree(i));
    }
    Alphabet A(names, degs);
    std::vector<FreeElement> rels = a.relations();
    for (auto& r : b.relations()) {
        rels.push_back(r.map_keys([&](const Word& w) {
            Word s = w;
            for (std::size_t i = 0; i < s.len; ++i) s.g[i] = static_cast<std::uint8_t>(s.g[i] + off);
            return s;
        }));
    }
    for (std::size_t i = 0; i < a.gens().size(); ++i)
        for (std::size_t j = 0; j < b.gens().size(); ++j) {
            FreeElement x(A.letter(i)), y(A.letter(off + j));
            rels.push_back(multiply(x, y) - multiply(y, x));
        }
    return make_presentation(a.name() + " (x) " + b.name(), A, std::move(rels));
}

}  // namespace hg
