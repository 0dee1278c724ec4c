#pragma once

#include <vector>

#include "kflag/kring.hpp"

namespace kflag {

/// Independent type-A cross-check via double Grothendieck polynomials.
///
/// Works in the polynomial ring Z[x_1..x_m, b_1..b_m] (m = rank+1), with b_j
/// standing for the torus character e^{-eps_j}.  The top polynomial is the
/// closed product prod_{i+j <= m} (1 - x_i b_j) and the rest follow by the
/// descending isobaric divided-difference recursion
///   G_{w s_i} = pi_i G_w  when  l(w s_i) < l(w),
///   pi_i f = (x_{i+1} f - x_i s_i f) / (x_{i+1} - x_i).
/// Restriction to the fixed point v substitutes x_i -> b_{v(i)}^{-1}; the
/// structure constants come from Bruhat-triangular elimination on those
/// restrictions and are mapped onto the weight lattice by the frozen
/// dictionary (fixed once against the rank-1 case, never re-fit).
class GrothendieckOracle {
 public:
  GrothendieckOracle(const RootSystem& rs, const WeylGroup& weyl);

  /// The polynomial G_w, in 2m variables (x first, then b).
  const LaurentPoly& polynomial(WeylElt w) const { return groth_[w.id]; }

  /// Isobaric divided difference pi_i on the 2m-variable ring, 0-based i.
  LaurentPoly divided_difference(int i, const LaurentPoly& f) const;

  /// G_w restricted to the fixed point v: a Laurent polynomial in b alone.
  LaurentPoly localize(const LaurentPoly& g, WeylElt v) const;

  /// Expansion of G_u G_v in {G_w}, mapped into the weight lattice; directly
  /// comparable with KRing::structure_constants(u, v, Basis::o_upper).
  Expansion structure_constants(WeylElt u, WeylElt v) const;

  /// Dictionary: Z[b^{+-}] -> Z[weight lattice], b-exponents k |-> the
  /// fundamental coordinates of -sum_j k_j eps_j.
  LaurentPoly to_weight_lattice(const LaurentPoly& b_poly) const;

  /// One-line permutation of w: w(eps_i) = eps_{perm(w)[i]}, 0-based.
  const std::vector<int>& permutation(WeylElt w) const { return perm_[w.id]; }

 private:
  const WeylGroup& weyl_;
  int m_;                                  // letters permuted
  std::vector<std::vector<int>> perm_;
  std::vector<LaurentPoly> groth_;         // 2m variables
  std::vector<std::vector<LaurentPoly>> loc_;  // loc_[w][v], m variables
};

}  // namespace kflag
