#include "hg/presentation/rewriting.hpp"

#include <algorithm>
#include <map>

#include "hg/core/error.hpp"

namespace hg {

namespace {

Word slice_word(const Word& w, std::size_t pos, std::size_t len, const Alphabet& a) {
    return subword(w, pos, len, a.degrees());
}

bool occurs_at(const Word& w, std::size_t pos, const Word& pat) {
    if (pos + pat.len > w.len) return false;
    return std::equal(pat.g.begin(), pat.g.begin() + pat.len, w.g.begin() + pos);
}

}  // namespace

NormalFormAlgebra::NormalFormAlgebra(std::string name, Alphabet gens, std::vector<RewriteRule> rules)
    : name_(std::move(name)), gens_(std::move(gens)), rules_(std::move(rules)) {
    for (auto& r : rules_) {
        if (r.lhs.empty()) throw std::invalid_argument(name_ + ": empty rule left-hand side");
        for (auto& [w, c] : r.rhs)
            if (!(w < r.lhs)) throw std::invalid_argument(name_ + ": rule does not decrease the order");
    }
}

std::pair<std::size_t, std::size_t> NormalFormAlgebra::find_match(const Word& w) const {
    for (std::size_t pos = 0; pos < w.len; ++pos)
        for (std::size_t r = 0; r < rules_.size(); ++r)
            if (occurs_at(w, pos, rules_[r].lhs)) return {pos, r};
    return {std::string::npos, 0};
}

FreeElement NormalFormAlgebra::rewrite_at(const Word& w, std::size_t pos, std::size_t rule) const {
    const RewriteRule& r = rules_[rule];
    Word u = slice_word(w, 0, pos, gens_);
    Word v = slice_word(w, pos + r.lhs.len, w.len - pos - r.lhs.len, gens_);
    return multiply(multiply(FreeElement(u), r.rhs), FreeElement(v));
}

bool NormalFormAlgebra::is_irreducible(const Word& w) const { return find_match(w).first == std::string::npos; }

const FreeElement& NormalFormAlgebra::normal_form(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
    }
    Accumulator<Word> done;
    std::map<Word, Scalar> pending;  // processed largest first
    pending.emplace(w, Scalar(1));
    std::size_t steps = 0;
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word cur = it->first;
        Scalar c = it->second;
        pending.erase(it);
        if (c.is_zero()) continue;
        auto [pos, rule] = find_match(cur);
        if (pos == std::string::npos) {
            done.add(cur, c);
            continue;
        }
        if (++steps > step_cap) raise(ErrorKind::Precondition, name_ + ": rewriting exceeded the step cap");
        for (auto& [u, d] : rewrite_at(cur, pos, rule)) {
            auto [slot, fresh] = pending.emplace(u, c * d);
            if (!fresh) slot->second += c * d;
        }
    }
    FreeElement nf = done.take();
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(w, std::move(nf)).first->second;
}

FreeElement NormalFormAlgebra::normal_form(const FreeElement& x) const {
    Accumulator<Word> acc;
    for (auto& [w, c] : x) acc.add(normal_form(w), c);
    return acc.take();
}

std::vector<Word> NormalFormAlgebra::irreducible_words(int d) const {
    std::vector<std::vector<Word>> words(d + 1);
    words[0].push_back(Word());
    for (int k = 1; k <= d; ++k)
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            if (gens_.degree(g) > k) continue;
            for (auto& u : words[k - gens_.degree(g)]) {
                Word w = concat(u, gens_.letter(g));
                // Irreducible words are closed under prefixes, so extending
                // irreducible words enumerates all of them.
                if (is_irreducible(w)) words[k].push_back(w);
            }
        }
    std::vector<Word> out;
    for (auto& ws : words) out.insert(out.end(), ws.begin(), ws.end());
    std::sort(out.begin(), out.end());
    return out;
}

Certificate NormalFormAlgebra::check_confluence() const {
    Certificate cert;
    cert.kind = "confluence";
    cert.subject = name_;
    cert.exact = true;
    auto record = [&](const std::string& id, const Word& w, const FreeElement& b1, const FreeElement& b2) {
        FreeElement n1 = normal_form(b1), n2 = normal_form(b2);
        CheckRecord rec{id, gens_.to_string(w), -1, n1 == n2, ""};
        if (!rec.pass) rec.detail = to_string(n1, gens_) + " != " + to_string(n2, gens_);
        cert.add(std::move(rec));
    };
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Word& a = rules_[i].lhs;
        for (std::size_t j = 0; j < rules_.size(); ++j) {
            const Word& b = rules_[j].lhs;
            // Overlaps: a proper suffix of a equals a proper prefix of b.
            for (std::size_t k = 1; k < a.len && k < b.len; ++k) {
                if (!std::equal(a.g.begin() + (a.len - k), a.g.begin() + a.len, b.g.begin())) continue;
                Word w = concat(a, slice_word(b, k, b.len - k, gens_));
                record("overlap r" + std::to_string(i) + "/r" + std::to_string(j), w, rewrite_at(w, 0, i),
                       rewrite_at(w, a.len - k, j));
            }
            // Inclusions: b occurs inside a.
            if (i != j && b.len <= a.len)
                for (std::size_t pos = 0; pos + b.len <= a.len; ++pos)
                    if (occurs_at(a, pos, b))
                        record("inclusion r" + std::to_string(i) + "/r" + std::to_string(j), a, rules_[i].rhs,
                               rewrite_at(a, pos, j));
        }
    }
    if (cert.checks.empty()) cert.add({"no ambiguities", "", -1, true, ""});
    confluent_ = cert.pass() ? 1 : 0;
    return cert;
}

bool NormalFormAlgebra::confluent() const {
    if (confluent_ < 0) check_confluence();
    return confluent_ == 1;
}

PresentationPtr NormalFormAlgebra::as_presentation() const {
    std::vector<FreeElement> rels;
    for (auto& r : rules_) rels.push_back(FreeElement(r.lhs) - r.rhs);
    return make_presentation(name_, gens_, std::move(rels));
}

NormalFormAlgebra quantum_torus(const std::vector<std::vector<Scalar>>& p) {
    std::size_t n = p.size();
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("t" + std::to_string(i));
        names.push_back("T" + std::to_string(i));
    }
    Alphabet A(names);
    auto t = [&](std::size_t i) { return A.letter(2 * i); };
    auto T = [&](std::size_t i) { return A.letter(2 * i + 1); };
    auto pair = [&](const Word& a, const Word& b) { return concat(a, b); };
    std::vector<RewriteRule> rules;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < k; ++i) {
            rules.push_back({pair(t(k), t(i)), FreeElement(pair(t(i), t(k)), p[k][i])});
            rules.push_back({pair(T(k), T(i)), FreeElement(pair(T(i), T(k)), p[k][i])});
            rules.push_back({pair(T(k), t(i)), FreeElement(pair(t(i), T(k)), p[i][k])});
            rules.push_back({pair(t(k), T(i)), FreeElement(pair(T(i), t(k)), p[i][k])});
        }
    for (std::size_t i = 0; i < n; ++i) {
        rules.push_back({pair(t(i), T(i)), unit_element()});
        rules.push_back({pair(T(i), t(i)), unit_element()});
    }
    return NormalFormAlgebra("quantum torus", A, std::move(rules));
}

NormalFormAlgebra twisted_group_algebra(const std::vector<std::vector<Scalar>>& p) {
    std::size_t n = p.size();
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    Alphabet A(names);
    std::vector<RewriteRule> rules;
    for (std::size_t i = 0; i < n; ++i) rules.push_back({concat(A.letter(i), A.letter(i)), unit_element()});
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            rules.push_back({concat(A.letter(j), A.letter(i)),
                             FreeElement(concat(A.letter(i), A.letter(j)), p[j][i])});
    return NormalFormAlgebra("twisted group algebra", A, std::move(rules));
}

Certificate quantum_torus_witness(const Presentation& P, const NormalFormAlgebra& target,
                                  const std::vector<FreeElement>& images) {
    if (!target.confluent()) raise(ErrorKind::NotConfluent, target.name() + " has an unresolved ambiguity");
    if (images.size() != P.gens().size()) throw std::invalid_argument("witness: wrong number of images");
    Certificate cert;
    cert.kind = "nonzero-witness";
    cert.subject = P.name() + " -> " + target.name();
    cert.exact = true;
    for (std::size_t r = 0; r < P.relations().size(); ++r) {
        Accumulator<Word> acc;
        for (auto& [w, c] : P.relations()[r]) {
            FreeElement prod = unit_element();
            for (std::size_t i = 0; i < w.len; ++i) prod = target.normal_form(multiply(prod, images[w.g[i]]));
            acc.add(prod, c);
        }
        FreeElement res = target.normal_form(acc.take());
        CheckRecord rec{"relation " + std::to_string(r), P.to_string(P.relations()[r]), -1, res.is_zero(), ""};
        if (!rec.pass) rec.detail = "residue " + to_string(res, target.gens());
        cert.add(std::move(rec));
    }
    // The target is nonzero: 1 is an irreducible word.
    cert.add({"target nonzero", "", -1, target.normal_form(unit_element()) == unit_element(), ""});
    cert.tags.push_back("nonzero");
    nlohmann::json imgs = nlohmann::json::array();
    for (std::size_t i = 0; i < images.size(); ++i)
        imgs.push_back(P.gens().name(i) + " -> " + to_string(images[i], target.gens()));
    cert.data["images"] = imgs;
    cert.data["source"] = P.canonical_text();
    return cert;
}

}  // namespace hg
