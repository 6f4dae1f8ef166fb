#pragma once

#include <string>
#include <vector>

#include "hg/core/lincomb.hpp"
#include "hg/core/matrix.hpp"
#include "hg/core/word.hpp"

namespace hg {

using FreeElement = LinComb<Word>;
using TensorElement = LinComb<TWord>;

inline FreeElement unit_element() { return FreeElement(Word(), Scalar(1)); }
inline FreeElement scalar_element(const Scalar& s) { return FreeElement(Word(), s); }

FreeElement multiply(const FreeElement& a, const FreeElement& b);
TensorElement multiply(const TensorElement& a, const TensorElement& b);
TensorElement tensor(const FreeElement& a, const FreeElement& b);
TensorElement tensor(const FreeElement& a, const FreeElement& b, const FreeElement& c);
TensorElement tensor_unit(std::size_t arity);

// Maximal word weight; -1 for the zero element.
int degree(const FreeElement& x);
int degree(const TensorElement& x);

std::string to_string(const FreeElement& x, const Alphabet& a);
std::string to_string(const TensorElement& x, const std::vector<const Alphabet*>& factors);

// Rank of a list of elements and the linear relations among them (one
// coefficient per input element), by fraction-free elimination.
RankKernel rank_and_kernel(const std::vector<FreeElement>& vectors, int degree_cap);

}  // namespace hg
