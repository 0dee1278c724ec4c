#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kflag/root_system.hpp"
#include "kflag/types.hpp"

namespace kflag {

/// Sparse integer Laurent polynomial on a lattice Z^rank: an exact element of
/// the group algebra Z[Z^rank].  Terms are kept sorted lexicographically by
/// exponent vector with no zero coefficients, so equal values have equal
/// representations and serialization is canonical.
class LaurentPoly {
 public:
  using Term = std::pair<Expo, Int>;

  LaurentPoly() = default;
  explicit LaurentPoly(int rank) : rank_(rank) {}

  static LaurentPoly constant(int rank, Int c);
  static LaurentPoly monomial(Expo e, Int c = 1);
  /// 1 - e^{lambda}
  static LaurentPoly one_minus_exp(Expo lambda);
  static LaurentPoly from_terms(int rank, std::vector<Term> terms);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly times_monomial(const Expo& e, const Int& c = 1) const;
  LaurentPoly scaled(const Int& c) const;

  /// e^lambda -> e^{M lambda}; M has out-rank rows and rank() columns.
  /// A ring homomorphism Z[Z^n] -> Z[Z^r] (exponent images may collide).
  LaurentPoly map_exponents(const IMatrix& m) const;

  /// e^lambda -> e^{-lambda} (the dual/conjugation automorphism).
  LaurentPoly invert_exponents() const;

  /// Substitute 1 for the i-th lattice coordinate's variable.
  LaurentPoly substitute_one(int i) const;

  /// Difference quotient (p - p|_{x_i=1}) / (x_i - 1), computed term-by-term
  /// (always exact in the Laurent ring).
  LaurentPoly diff_quotient(int i) const;

  /// Value under e^lambda -> 1 for every lambda.
  Int specialize_all_one() const;

  Int coefficient(const Expo& e) const;

  /// Largest single exponent over all terms and coordinates (0 for the zero
  /// polynomial).  When all exponents are nonnegative this bounds the degree
  /// of the y-expansion in every variable.
  Coord max_coordinate() const;

  std::string str() const;  // debugging / report aid

 private:
  int rank_ = 0;
  std::vector<Term> terms_;
};

/// Quotient and remainder witness of an attempted exact division.  The
/// remainder is a nonzero obstruction when exact == false, not a canonical
/// Euclidean remainder.
struct DivisionResult {
  LaurentPoly quotient;
  LaurentPoly remainder;
  bool exact = false;
};

/// Decide d | p in Z[Z^rank] and produce the quotient; d must be nonzero.
DivisionResult divide(const LaurentPoly& p, const LaurentPoly& d);

/// Polynomial with nonnegative multi-exponents in the variables
/// y_i = x_i - 1 (x_i the i-th lattice character of the source ring).
struct YPoly {
  int nvars = 0;
  std::vector<std::pair<Expo, Int>> terms;  // sorted, no zeros

  bool is_zero() const { return terms.empty(); }
  bool all_nonnegative() const;
  bool operator==(const YPoly&) const = default;

  /// Substitute y_i = x_i - 1 back; the round-trip inverse of expansion.
  LaurentPoly evaluate() const;
};

/// Outcome of the iterated difference-and-divide expansion of p into
/// Z[y_1..y_n].  When p has a term with a negative exponent the iteration
/// in that variable never terminates; the residual at the cap is returned
/// as a witness of non-membership.
struct YExpansion {
  bool member = false;
  YPoly poly;
  LaurentPoly residual;  // nonzero witness when member == false
  int failed_var = -1;
};

/// Expand p (exponents read as x-coordinates, x_i the chosen positivity
/// variable's character) into Z[y] with y_i = x_i - 1.  c_J is extracted as
/// (Delta_1^{j_1}...Delta_n^{j_n} p)|_{x=1}; each variable's iteration is
/// capped at degree_cap.
YExpansion expand_in_y(const LaurentPoly& p, int degree_cap);

/// Change a weight-lattice element into x-coordinates with x_i = e^{-alpha_i}:
/// exponent vector of e^lambda becomes minus the simple-root coordinates of
/// lambda.  Throws InvariantViolation if some exponent is not in the root
/// lattice (structure constants always are; a failure means an upstream bug).
LaurentPoly to_root_x_coords(const LaurentPoly& p, const RootSystem& rs);

}  // namespace kflag
