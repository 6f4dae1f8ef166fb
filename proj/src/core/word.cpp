#include "hg/core/word.hpp"

#include <stdexcept>

#include "hg/core/error.hpp"

namespace hg {

Word concat(const Word& a, const Word& b) {
    if (a.len + b.len > Word::kMaxLen) raise(ErrorKind::DegreeTooLarge, "word longer than the supported maximum");
    if (a.wt + b.wt > 255) raise(ErrorKind::DegreeTooLarge, "word weight overflow");
    Word r = a;
    std::memcpy(r.g.data() + a.len, b.g.data(), b.len);
    r.len = static_cast<std::uint8_t>(a.len + b.len);
    r.wt = static_cast<std::uint8_t>(a.wt + b.wt);
    return r;
}

Word subword(const Word& w, std::size_t pos, std::size_t len, const std::vector<int>& degrees) {
    Word r;
    for (std::size_t i = 0; i < len; ++i) {
        r.g[i] = w.g[pos + i];
        r.wt = static_cast<std::uint8_t>(r.wt + degrees[w.g[pos + i]]);
    }
    r.len = static_cast<std::uint8_t>(len);
    return r;
}

Word reversed(const Word& w) {
    Word r = w;
    for (std::size_t i = 0; i < w.len; ++i) r.g[i] = w.g[w.len - 1 - i];
    return r;
}

Alphabet::Alphabet(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), deg_(std::move(degrees)) {
    if (names_.size() > 255) throw std::invalid_argument("at most 255 generators are supported");
    if (deg_.empty()) deg_.assign(names_.size(), 1);
    if (deg_.size() != names_.size()) throw std::invalid_argument("degree list length mismatch");
    for (int d : deg_)
        if (d < 1) throw std::invalid_argument("generator degrees must be positive");
}

int Alphabet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

Word Alphabet::letter(std::size_t i) const {
    Word w;
    w.len = 1;
    w.g[0] = static_cast<std::uint8_t>(i);
    w.wt = static_cast<std::uint8_t>(deg_.at(i));
    return w;
}

Word Alphabet::word(const std::vector<std::size_t>& letters) const {
    Word w;
    for (auto l : letters) w = concat(w, letter(l));
    return w;
}

Word Alphabet::word(std::initializer_list<std::size_t> letters) const {
    return word(std::vector<std::size_t>(letters));
}

std::string Alphabet::to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.len; ++i) {
        if (i) s += "*";
        s += names_.at(w.g[i]);
    }
    return s;
}

TWord tword(std::initializer_list<Word> ws) {
    if (ws.size() > TWord::kMaxArity) throw std::invalid_argument("tensor arity too large");
    TWord t;
    for (auto& w : ws) t.w[t.n++] = w;
    return t;
}

TWord tensor_concat(const TWord& a, const TWord& b) {
    if (a.n != b.n) throw std::invalid_argument("tensor arity mismatch");
    TWord r = a;
    for (std::size_t i = 0; i < a.n; ++i) r.w[i] = concat(a.w[i], b.w[i]);
    return r;
}

}  // namespace hg
