#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kflag/types.hpp"

namespace kflag {

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

CartanType parse_cartan_type(const std::string& s);
std::string to_string(CartanType t);

/// A weight of the simply-connected weight lattice, in fundamental-weight
/// coordinates: c[i] = <lambda, alpha_i^vee>.  Exact integers throughout.
struct Weight {
  Expo c;
  auto operator<=>(const Weight&) const = default;
};

/// Simple root system of type A-G at a fixed rank.
///
/// The lattice is the simply-connected weight lattice, so rho = (1,...,1) is
/// integral and the simple root alpha_i is the i-th column of the Cartan
/// matrix.  The root lattice embeds via the matrix; root_coords() inverts the
/// embedding exactly and reports failure for weights outside it.
class RootSystem {
 public:
  RootSystem(CartanType type, int rank);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return to_string(type_) + std::to_string(rank_); }

  /// cartan()[i][j] = <alpha_j, alpha_i^vee>; column j is alpha_j.
  const IMatrix& cartan() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }

  /// rho = sum of fundamental weights = half-sum of positive roots.
  Weight rho() const { return Weight{Expo(static_cast<std::size_t>(rank_), 1)}; }

  /// <lambda, alpha_i^vee>, 0-based i.
  Coord pairing(const Weight& lambda, int i) const { return lambda.c.at(static_cast<std::size_t>(i)); }

  /// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i, 0-based i.
  Weight reflect(int i, const Weight& lambda) const;

  /// Matrix of s_i on the weight lattice in fundamental coordinates.
  IMatrix reflection_matrix(int i) const;

  /// Coordinates of lambda in the simple-root basis, if lambda lies in the
  /// root lattice.
  std::optional<Expo> root_coords(const Weight& lambda) const;

  /// <lambda, beta^vee> for a root beta given in simple-root coordinates.
  Coord coroot_pairing(const Weight& lambda, const Expo& beta_root_coords) const;

  /// Index of a positive root given in simple-root coordinates, if positive.
  std::optional<int> positive_root_index(const Expo& root_coords) const;

 private:
  CartanType type_;
  int rank_;
  IMatrix cartan_;
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  std::vector<Expo> positive_rc_;  // simple-root coordinates of positive roots
  std::vector<Coord> symmetrizer_;  // d_i with d_i * C[i][j] symmetric
  // exact inverse of the Cartan matrix: adjugate / det
  std::vector<std::vector<Int>> cartan_adj_;
  Int cartan_det_;
};

}  // namespace kflag
