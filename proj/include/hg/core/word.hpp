#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace hg {

// Word in at most 255 generators, length at most kMaxLen. `wt` is the
// weighted degree (sum of generator degrees), stored for fast ordering.
struct Word {
    static constexpr std::size_t kMaxLen = 14;
    std::uint8_t wt = 0;
    std::uint8_t len = 0;
    std::array<std::uint8_t, kMaxLen> g{};

    bool empty() const { return len == 0; }
    std::uint8_t operator[](std::size_t i) const { return g[i]; }

    // Degree-lexicographic order: weight, then lexicographic with prefixes first.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.wt != b.wt) return a.wt < b.wt;
        std::size_t n = a.len < b.len ? a.len : b.len;
        int c = std::memcmp(a.g.data(), b.g.data(), n);
        if (c != 0) return c < 0;
        return a.len < b.len;
    }
    friend bool operator>(const Word& a, const Word& b) { return b < a; }
    friend bool operator==(const Word& a, const Word& b) {
        return a.len == b.len && a.wt == b.wt && std::memcmp(a.g.data(), b.g.data(), a.len) == 0;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

// Throws DegreeTooLarge if the result is longer than Word::kMaxLen.
Word concat(const Word& a, const Word& b);
Word subword(const Word& w, std::size_t pos, std::size_t len, const std::vector<int>& degrees);
Word reversed(const Word& w);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull ^ w.len;
        for (std::size_t i = 0; i < w.len; ++i) h = (h ^ w.g[i]) * 1099511628211ull;
        return h;
    }
};

// Ordered generator names with degrees.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names, std::vector<int> degrees = {});

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int degree(std::size_t i) const { return deg_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& degrees() const { return deg_; }
    int index_of(const std::string& name) const;  // -1 if absent

    Word letter(std::size_t i) const;
    Word word(std::initializer_list<std::size_t> letters) const;
    Word word(const std::vector<std::size_t>& letters) const;
    std::string to_string(const Word& w) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.names_ == b.names_ && a.deg_ == b.deg_;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> deg_;
};

// Tensor word: up to three factors.
struct TWord {
    static constexpr std::size_t kMaxArity = 3;
    std::array<Word, kMaxArity> w{};
    std::uint8_t n = 0;

    friend bool operator<(const TWord& a, const TWord& b) {
        for (std::size_t i = 0; i < a.n; ++i) {
            if (a.w[i] < b.w[i]) return true;
            if (b.w[i] < a.w[i]) return false;
        }
        return false;
    }
    friend bool operator>(const TWord& a, const TWord& b) { return b < a; }
    friend bool operator==(const TWord& a, const TWord& b) {
        if (a.n != b.n) return false;
        for (std::size_t i = 0; i < a.n; ++i)
            if (a.w[i] != b.w[i]) return false;
        return true;
    }
    friend bool operator!=(const TWord& a, const TWord& b) { return !(a == b); }
};

TWord tword(std::initializer_list<Word> ws);
TWord tensor_concat(const TWord& a, const TWord& b);  // componentwise

}  // namespace hg
