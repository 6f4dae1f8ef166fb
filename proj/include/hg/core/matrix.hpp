#pragma once

#include <string>
#include <vector>

#include "hg/core/scalar.hpp"
#include "hg/core/upoly.hpp"

namespace hg {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    static ExactMatrix identity(std::size_t n);
    static ExactMatrix diagonal(const std::vector<Scalar>& d);
    // Rows of expression strings, e.g. {{"0","1"},{"-1/q","0"}}.
    static ExactMatrix parse(const std::vector<std::vector<std::string>>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix scaled(const Scalar& s) const;
    ExactMatrix transpose() const;
    Scalar trace() const;
    Scalar determinant() const;  // Bareiss
    std::size_t rank() const;    // Bareiss
    bool is_invertible() const { return is_square() && !determinant().is_zero(); }
    ExactMatrix inverse() const;  // SingularMatrix on failure

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    std::vector<std::vector<std::string>> to_strings() const;
    std::string to_string() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Scalar> e_;
};

// Invariant factors (monic, nonconstant, each dividing the next) of xI - M.
std::vector<UPoly> invariant_factors(const ExactMatrix& m);
ExactMatrix companion(const UPoly& monic_poly);
ExactMatrix rational_canonical_form(const ExactMatrix& m);

// Fraction-free elimination over Q(params).
struct RankKernel {
    std::size_t rank = 0;
    // Each kernel vector has one coefficient per input column.
    std::vector<std::vector<Scalar>> kernel;
};
// Columns of `cols_as_vectors` are the vectors; returns their rank and relations.
RankKernel rank_and_kernel_dense(const std::vector<std::vector<Scalar>>& vectors);

}  // namespace hg
