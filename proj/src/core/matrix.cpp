#include "hg/core/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "hg/core/error.hpp"
#include "hg/core/expr.hpp"

namespace hg {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : r_(rows), c_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Scalar>& d) {
    ExactMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ExactMatrix ExactMatrix::parse(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) raise(ErrorKind::Parse, "empty matrix");
    std::size_t n = rows[0].size();
    if (n == 0) raise(ErrorKind::Parse, "empty matrix row");
    ExactMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n) raise(ErrorKind::Parse, "ragged matrix rows");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_scalar(rows[i][j]);
    }
    return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix m(a.r_, a.c_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + b.scaled(-1); }

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j)
                if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
    return m;
}

ExactMatrix ExactMatrix::scaled(const Scalar& s) const {
    ExactMatrix m = *this;
    for (auto& x : m.e_) x *= s;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Scalar ExactMatrix::trace() const {
    Scalar s;
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
    return s;
}

namespace {

// In-place Bareiss elimination to row echelon form; returns pivot columns.
// `swaps` counts row exchanges.
std::vector<std::size_t> bareiss(std::vector<std::vector<Scalar>>& a, std::size_t cols, int* swaps) {
    std::size_t rows = a.size();
    std::vector<std::size_t> pivots;
    Scalar prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            if (swaps) ++*swaps;
        }
        const Scalar piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            Scalar f = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Scalar v = piv * a[i][j] - f * a[r][j];
                a[i][j] = prev.is_one() ? v : v / prev;
            }
            a[i][c] = Scalar();
        }
        // Rows above the current pivot are left untouched (echelon form only).
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Scalar>> to_rows(const ExactMatrix& m) {
    std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    return a;
}

}  // namespace

Scalar ExactMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
    if (r_ == 0) return Scalar(1);
    auto a = to_rows(*this);
    int swaps = 0;
    auto piv = bareiss(a, c_, &swaps);
    if (piv.size() < r_) return Scalar();
    Scalar d = a[r_ - 1][c_ - 1];
    return swaps % 2 ? -d : d;
}

std::size_t ExactMatrix::rank() const {
    auto a = to_rows(*this);
    return bareiss(a, c_, nullptr).size();
}

ExactMatrix ExactMatrix::inverse() const {
    if (!is_square()) raise(ErrorKind::SingularMatrix, "non-square matrix");
    std::size_t n = r_;
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = (*this)(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) raise(ErrorKind::SingularMatrix, "matrix is not invertible");
        std::swap(a[p], a[c]);
        Scalar inv = a[c][c].inverse();
        for (auto& x : a[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < 2 * n; ++j)
                if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
        }
    }
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i][n + j];
    return m;
}

std::vector<std::vector<std::string>> ExactMatrix::to_strings() const {
    std::vector<std::vector<std::string>> out(r_, std::vector<std::string>(c_));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out[i][j] = (*this)(i, j).to_string();
    return out;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    }
    os << "]";
    return os.str();
}

// -------------------------------------------------------------- Smith form

std::vector<UPoly> invariant_factors(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("invariant factors of non-square matrix");
    std::size_t n = m.rows();
    std::vector<std::vector<UPoly>> a(n, std::vector<UPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            UPoly e = UPoly::constant(-m(i, j));
            a[i][j] = i == j ? e + UPoly::x() : e;
        }

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // Smallest-degree nonzero entry of the trailing block goes to (t,t).
            int best = -1;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
                        best = a[i][j].degree();
                        bi = i;
                        bj = j;
                    }
            if (best < 0) break;  // block is zero
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a[i][t].is_zero()) continue;
                UPoly q, r;
                UPoly::divmod(a[i][t], a[t][t], q, r);
                for (std::size_t j = t; j < n; ++j) a[i][j] = a[i][j] - q * a[t][j];
                if (!a[i][t].is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j].is_zero()) continue;
                UPoly q, r;
                UPoly::divmod(a[t][j], a[t][t], q, r);
                for (std::size_t i = t; i < n; ++i) a[i][j] = a[i][j] - q * a[i][t];
                if (!a[t][j].is_zero()) clean = false;
            }
            if (!clean) continue;
            // Divisibility of the trailing block by the pivot.
            bool divisible = true;
            for (std::size_t i = t + 1; i < n && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j) {
                    UPoly q, r;
                    UPoly::divmod(a[i][j], a[t][t], q, r);
                    if (!r.is_zero()) {
                        for (std::size_t k = t; k < n; ++k) a[t][k] = a[t][k] + a[i][k];
                        divisible = false;
                        break;
                    }
                }
            if (divisible) break;
        }
    }
    std::vector<UPoly> out;
    for (std::size_t t = 0; t < n; ++t) {
        UPoly d = a[t][t].monic();
        if (d.degree() >= 1) out.push_back(d);
    }
    return out;
}

ExactMatrix companion(const UPoly& p) {
    std::size_t k = static_cast<std::size_t>(p.degree());
    ExactMatrix c(k, k);
    for (std::size_t i = 1; i < k; ++i) c(i, i - 1) = 1;
    for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = -p.coeff(i);
    return c;
}

ExactMatrix rational_canonical_form(const ExactMatrix& m) {
    auto fs = invariant_factors(m);
    ExactMatrix r(m.rows(), m.cols());
    std::size_t off = 0;
    for (auto& f : fs) {
        ExactMatrix c = companion(f);
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) r(off + i, off + j) = c(i, j);
        off += c.rows();
    }
    return r;
}

// ------------------------------------------------------------ rank/kernel

RankKernel rank_and_kernel_dense(const std::vector<std::vector<Scalar>>& vectors) {
    RankKernel out;
    std::size_t k = vectors.size();
    if (k == 0) return out;
    std::size_t m = vectors[0].size();
    std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(k));
    for (std::size_t j = 0; j < k; ++j) {
        if (vectors[j].size() != m) throw std::invalid_argument("vector length mismatch");
        for (std::size_t i = 0; i < m; ++i) a[i][j] = vectors[j][i];
    }
    auto piv = bareiss(a, k, nullptr);
    out.rank = piv.size();
    std::vector<bool> is_pivot(k, false);
    for (auto c : piv) is_pivot[c] = true;
    for (std::size_t f = 0; f < k; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> x(k);
        x[f] = 1;
        for (std::size_t r = piv.size(); r-- > 0;) {
            std::size_t pc = piv[r];
            Scalar s;
            for (std::size_t j = pc + 1; j < k; ++j)
                if (!a[r][j].is_zero() && !x[j].is_zero()) s += a[r][j] * x[j];
            x[pc] = -s / a[r][pc];
        }
        out.kernel.push_back(std::move(x));
    }
    return out;
}

}  // namespace hg
