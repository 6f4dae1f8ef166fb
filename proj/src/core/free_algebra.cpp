#include "hg/core/free_algebra.hpp"

#include <map>
#include <sstream>

#include "hg/core/error.hpp"

namespace hg {

FreeElement multiply(const FreeElement& a, const FreeElement& b) {
    if (a.is_zero() || b.is_zero()) return FreeElement();
    std::vector<FreeElement::Term> out;
    out.reserve(a.size() * b.size());
    for (auto& [u, c] : a)
        for (auto& [v, d] : b) out.emplace_back(concat(u, v), c * d);
    return FreeElement::from_terms(std::move(out));
}

TensorElement multiply(const TensorElement& a, const TensorElement& b) {
    if (a.is_zero() || b.is_zero()) return TensorElement();
    std::vector<TensorElement::Term> out;
    out.reserve(a.size() * b.size());
    for (auto& [u, c] : a)
        for (auto& [v, d] : b) out.emplace_back(tensor_concat(u, v), c * d);
    return TensorElement::from_terms(std::move(out));
}

TensorElement tensor(const FreeElement& a, const FreeElement& b) {
    std::vector<TensorElement::Term> out;
    for (auto& [u, c] : a)
        for (auto& [v, d] : b) out.emplace_back(tword({u, v}), c * d);
    return TensorElement::from_terms(std::move(out));
}

TensorElement tensor(const FreeElement& a, const FreeElement& b, const FreeElement& c) {
    std::vector<TensorElement::Term> out;
    for (auto& [u, x] : a)
        for (auto& [v, y] : b)
            for (auto& [w, z] : c) out.emplace_back(tword({u, v, w}), x * y * z);
    return TensorElement::from_terms(std::move(out));
}

TensorElement tensor_unit(std::size_t arity) {
    TWord t;
    t.n = static_cast<std::uint8_t>(arity);
    return TensorElement(t, Scalar(1));
}

int degree(const FreeElement& x) { return x.is_zero() ? -1 : x.leading_key().wt; }

int degree(const TensorElement& x) {
    int d = -1;
    for (auto& [t, c] : x) {
        int s = 0;
        for (std::size_t i = 0; i < t.n; ++i) s += t.w[i].wt;
        d = std::max(d, s);
    }
    return d;
}

namespace {

std::string coeff_prefix(const Scalar& c, bool first, bool is_unit_word) {
    std::string s = c.to_string();
    bool neg = !s.empty() && s[0] == '-' && c.is_constant();
    std::string body = neg ? s.substr(1) : s;
    std::string out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (body == "1" && !is_unit_word) return out;
    if (!c.is_constant()) body = "(" + s + ")";
    if (!c.is_constant() && !first) out = " + ";
    return out + body + (is_unit_word ? "" : "*");
}

}  // namespace

std::string to_string(const FreeElement& x, const Alphabet& a) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [w, c] : x) {
        s += coeff_prefix(c, first, w.empty());
        if (!w.empty()) s += a.to_string(w);
        first = false;
    }
    return s;
}

std::string to_string(const TensorElement& x, const std::vector<const Alphabet*>& factors) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [t, c] : x) {
        s += coeff_prefix(c, first, false);
        s += "(";
        for (std::size_t i = 0; i < t.n; ++i) {
            if (i) s += " (x) ";
            s += factors.at(i)->to_string(t.w[i]);
        }
        s += ")";
        first = false;
    }
    return s;
}

RankKernel rank_and_kernel(const std::vector<FreeElement>& vectors, int degree_cap) {
    std::map<Word, std::size_t, std::greater<Word>> cols;
    for (auto& v : vectors) {
        if (degree(v) > degree_cap) raise(ErrorKind::Precondition, "vector exceeds the degree cap");
        for (auto& [w, c] : v) cols.emplace(w, 0);
    }
    std::size_t i = 0;
    for (auto& [w, idx] : cols) idx = i++;
    std::vector<std::vector<Scalar>> dense;
    dense.reserve(vectors.size());
    for (auto& v : vectors) {
        std::vector<Scalar> row(cols.size());
        for (auto& [w, c] : v) row[cols[w]] = c;
        dense.push_back(std::move(row));
    }
    if (cols.empty()) {
        RankKernel rk;
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            std::vector<Scalar> e(vectors.size());
            e[j] = 1;
            rk.kernel.push_back(std::move(e));
        }
        return rk;
    }
    return rank_and_kernel_dense(dense);
}

}  // namespace hg
