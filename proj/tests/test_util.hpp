#pragma once

#include <random>

#include "kflag/kring.hpp"
#include "kflag/positivity.hpp"

namespace kflag::testutil {

inline Weight wt(Expo c) { return Weight{std::move(c)}; }

inline LaurentPoly mono(Expo e, Int c = 1) { return LaurentPoly::monomial(std::move(e), std::move(c)); }

/// Random sparse Laurent polynomial: up to max_terms monomials with exponents
/// in [lo, hi] and coefficients in [-9, 9].
inline LaurentPoly random_poly(std::mt19937_64& rng, int rank, int max_terms, Coord lo, Coord hi) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<Coord> expo(lo, hi);
  std::uniform_int_distribution<int> coeff(-9, 9);
  LaurentPoly p(rank);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Expo e(static_cast<std::size_t>(rank));
    for (auto& x : e) x = expo(rng);
    p += mono(std::move(e), coeff(rng));
  }
  return p;
}

/// Transitive closure of the relation u < u.t (t a reflection, length up);
/// the chain characterization of Bruhat order.  Test oracle only.
inline std::vector<std::vector<bool>> bruhat_by_chains(const WeylGroup& w) {
  const std::size_t n = w.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  // cover-ish steps
  std::vector<std::vector<std::size_t>> up(n);
  for (WeylElt u : w.elements())
    for (std::size_t k = 0; k < w.roots().positive_roots().size(); ++k) {
      WeylElt ut = w.mult(u, w.reflection(static_cast<int>(k)));
      if (w.length(ut) > w.length(u)) up[u.id].push_back(ut.id);
    }
  // propagate from long to short
  std::vector<WeylElt> order = w.elements();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (std::size_t t : up[it->id])
      for (std::size_t x = 0; x < n; ++x)
        if (leq[t][x]) leq[it->id][x] = true;  // leq[u][x]: u <= x
  return leq;
}

}  // namespace kflag::testutil
