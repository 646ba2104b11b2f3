#pragma once
// Multilinear-factor products: expansion, coefficient extraction, and the
// search for a non-vanishing point with each variable restricted to a set.

#include <map>
#include <vector>

#include "nsdw/graph.hpp"

namespace nsdw {

struct LinearFactor {
  std::vector<long long> coeff;  // one entry per variable
  long long constant = 0;
};

struct SparsePolynomial {
  int arity = 0;
  std::map<std::vector<int>, long long> terms;  // exponent vector -> coefficient
};

SparsePolynomial expand(const std::vector<LinearFactor>& factors);
long long coefficient(const SparsePolynomial& p, const std::vector<int>& exps);

// Product of all factors at the point. 128-bit so bounded factor products
// (checked: <= 20 factors, |factor value| <= 1e6) cannot overflow.
__int128 eval_factors(const std::vector<LinearFactor>& factors,
                      const std::vector<int>& point);

// First point (sets scanned in given order, positions lexicographic) where the
// product is non-zero. Exhaustion throws: callers only use polynomials whose
// relevant coefficient guarantees a witness.
std::vector<int> cn_search(const std::vector<LinearFactor>& factors,
                           const std::vector<std::vector<int>>& sets);

}  // namespace nsdw
