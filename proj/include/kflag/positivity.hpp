#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kflag/kring.hpp"

namespace kflag {

/// Basis of the weight lattice of a subtorus S <= T, presented as the integer
/// matrix whose i-th column is the restriction alpha_i|_S written in the
/// beta-coordinates of S.  "positive" and "full" are the hypotheses under
/// which the restricted sign-alternation statements apply.
struct SubtorusBasis {
  IMatrix m;  // r rows (beta coordinates), n columns (simple roots)

  int dim() const { return static_cast<int>(m.size()); }
  bool is_positive() const;
  /// positive, and every standard basis vector of Z^r occurs among the columns
  bool is_full() const;

  static SubtorusBasis identity(int n);
  static SubtorusBasis all_ones(int n);
};

/// Which binomial variables a membership check expands in.
enum class YVariables {
  e_neg_alpha,  // y_i = e^{-alpha_i} - 1 (the alternation statements)
  e_pos_alpha,  // y_i = e^{+alpha_i} - 1 (the signless dualizing statement)
};

struct Violation {
  std::string kind;  // sign | membership | reconstruction | shadow
  std::string u, v, w;
  LaurentPoly coefficient;
  LaurentPoly residual;  // nonzero witness for membership failures
  std::string note;
};

struct PositivityReport {
  std::string claim;
  std::string group;
  std::vector<int> parabolic;  // 1-based, as displayed
  std::size_t instances_checked = 0;
  std::vector<Violation> violations;
  std::string fault_note;  // nonempty when a fault was injected

  bool pass() const { return violations.empty(); }
  void merge(PositivityReport&& other);
};

/// Single-term perturbation of a computed expansion: coefficient at the
/// pair_index-th (u,v) pair, basis element w, changed by sign * e^lambda.
/// Used by the sensitivity tests and the CLI --fault-inject hook.
struct FaultSpec {
  std::uint64_t seed = 0;
};

struct CheckOptions {
  int degree_cap = -1;  // automatic: l(u)+l(v)+|R+| per structure constant
  int jobs = 1;
  std::optional<FaultSpec> fault;
};

/// Expand every nonzero coefficient of exp in the requested variables (after
/// an optional subtorus restriction), flip by the expected parity, and demand
/// nonnegative integer coefficients.  Nontermination at the cap is reported
/// as a membership violation carrying the residual.
PositivityReport check_alternation(const KRing& k, const Expansion& exp,
                                   const std::function<int(WeylElt)>& grading_parity,
                                   YVariables vars, int degree_cap,
                                   const std::optional<SubtorusBasis>& subtorus = std::nullopt,
                                   const std::string& claim = "alternation",
                                   const std::string& u_label = "", const std::string& v_label = "");

/// Structure constants of the opposite Schubert basis have alternating signs:
/// (-1)^{l(w)-l(u)-l(v)} c_uv^w in N[e^{-alpha_i} - 1].  Also checks the
/// non-equivariant shadow (specialization at e^lambda = 1) and expansion
/// reconstruction.  parabolic nonempty restricts to W^P with the vanishing
/// assertion outside it.
PositivityReport verify_grra(const KRing& k, const std::vector<int>& parabolic,
                             const CheckOptions& opts);

/// The same alternation for the boundary-twisted basis: p_uv^w from
/// xi^u xi^v = sum p_uv^w xi^w.
PositivityReport verify_grku_prime(const KRing& k, const std::vector<int>& parabolic,
                                   const CheckOptions& opts);

/// Signless positivity for dualizing-sheaf products:
/// d_uv^w in N[e^{alpha_i} - 1].
PositivityReport verify_dualizing(const KRing& k, const CheckOptions& opts);

/// Schubert expansion of every nonempty Richardson class, restricted through
/// a positive subtorus basis: (-1)^{dim Y - l(u)} a_u in N[e^{-beta_i} - 1].
PositivityReport verify_grku_richardson(const KRing& k, const SubtorusBasis& basis,
                                        const CheckOptions& opts);

std::string word_str(const WeylGroup& w, WeylElt e);
WeylElt word_parse(const WeylGroup& w, const std::string& s);

}  // namespace kflag
