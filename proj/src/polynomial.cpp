#include "nsdw/polynomial.hpp"

#include <cstdlib>

namespace nsdw {

namespace {

void checked_add(long long& a, long long b) {
  long long r;
  ensure(!__builtin_add_overflow(a, b, &r), "coefficient overflow");
  a = r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  ensure(!__builtin_mul_overflow(a, b, &r), "coefficient overflow");
  return r;
}

}  // namespace

SparsePolynomial expand(const std::vector<LinearFactor>& factors) {
  ensure(!factors.empty(), "no factors");
  int arity = (int)factors[0].coeff.size();
  SparsePolynomial p;
  p.arity = arity;
  p.terms[std::vector<int>(arity, 0)] = 1;
  for (const auto& f : factors) {
    ensure((int)f.coeff.size() == arity, "factor arity mismatch");
    std::map<std::vector<int>, long long> next;
    for (const auto& [e, c] : p.terms) {
      if (f.constant != 0) {
        long long& slot = next[e];
        checked_add(slot, checked_mul(c, f.constant));
      }
      for (int v = 0; v < arity; v++) {
        if (f.coeff[v] == 0) continue;
        std::vector<int> e2 = e;
        e2[v]++;
        long long& slot = next[e2];
        checked_add(slot, checked_mul(c, f.coeff[v]));
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    p.terms = std::move(next);
  }
  return p;
}

long long coefficient(const SparsePolynomial& p, const std::vector<int>& exps) {
  ensure((int)exps.size() == p.arity, "exponent arity mismatch");
  auto it = p.terms.find(exps);
  return it == p.terms.end() ? 0 : it->second;
}

__int128 eval_factors(const std::vector<LinearFactor>& factors,
                      const std::vector<int>& point) {
  const __int128 limit = (__int128)1 << 120;
  __int128 prod = 1;
  for (const auto& f : factors) {
    ensure(f.coeff.size() == point.size(), "point arity mismatch");
    long long v = f.constant;
    for (size_t i = 0; i < point.size(); i++) v += f.coeff[i] * point[i];
    if (v == 0) return 0;
    __int128 av = v < 0 ? -(__int128)v : (__int128)v;
    __int128 ap = prod < 0 ? -prod : prod;
    ensure(ap <= limit / av, "factor product overflow");
    prod *= v;
  }
  return prod;
}

std::vector<int> cn_search(const std::vector<LinearFactor>& factors,
                           const std::vector<std::vector<int>>& sets) {
  ensure(!factors.empty(), "no factors");
  size_t arity = factors[0].coeff.size();
  ensure(sets.size() == arity, "one set per variable required");
  for (const auto& s : sets) ensure(!s.empty(), "empty value set");
  std::vector<size_t> idx(arity, 0);
  std::vector<int> point(arity);
  for (;;) {
    for (size_t i = 0; i < arity; i++) point[i] = sets[i][idx[i]];
    if (eval_factors(factors, point) != 0) return point;
    size_t i = arity;
    while (i > 0) {
      i--;
      if (++idx[i] < sets[i].size()) break;
      idx[i] = 0;
      if (i == 0) throw std::logic_error("invariant violated: value sets exhausted");
    }
  }
}

}  // namespace nsdw
