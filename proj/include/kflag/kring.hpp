#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "kflag/laurent.hpp"
#include "kflag/root_system.hpp"
#include "kflag/weyl_group.hpp"

namespace kflag {

/// A torus-equivariant K-class of G/B in the fixed-point localization model:
/// one Laurent polynomial per Weyl group element (the restriction to that
/// fixed point), subject to the divisibility congruences along the
/// one-dimensional orbits (gkm_check).
struct KClass {
  std::vector<LaurentPoly> r;

  bool operator==(const KClass&) const = default;
  bool is_zero() const;
};

enum class Basis { o_lower, o_upper, xi_lower, xi_upper, dualizing };

Basis parse_basis(const std::string& s);
std::string to_string(Basis b);

/// Coefficients of a K-class in one of the named bases.
struct Expansion {
  Basis basis = Basis::o_upper;
  std::vector<LaurentPoly> coeff;  // indexed by element id; zero when absent
};

/// Failed GKM congruence, for diagnostics.
struct GkmFailure {
  WeylElt v;
  int pos_root = -1;
  LaurentPoly difference;
};

/// The K_T(G/B) engine: Schubert / opposite / boundary-twisted / line-bundle /
/// dualizing / Richardson classes, products, Euler characteristic, pairing,
/// basis expansions and structure constants, with G/P handled by reduction
/// through the pullback span.
///
/// Localization conventions (pinned by the duality deltas and chi(O_w) = 1,
/// which the test suite enforces):
///   O_e|_e = prod_{alpha>0} (1 - e^{alpha}),    O_e|_v = 0 otherwise;
///   (D_i f)(v) = (f(v) - e^{v alpha_i} f(v s_i)) / (1 - e^{v alpha_i});
///   O_{w s_i} = D_i O_w when the length goes up;
///   O^w = Phi(O_{w0 w}) with (Phi f)(v) = w0 . f(w0 v);
///   [L_lambda]|_v = e^{-v lambda};
///   [omega_{X^w}] = e^{rho} . L_{-rho} . xi^w  and  [omega_X] = L_{-2 rho}.
class KRing {
 public:
  KRing(CartanType type, int rank, std::size_t order_cap = WeylGroup::kDefaultOrderCap);
  KRing(const KRing&) = delete;
  KRing& operator=(const KRing&) = delete;

  const RootSystem& roots() const { return rs_; }
  const WeylGroup& weyl() const { return weyl_; }

  KClass zero() const;
  KClass unit() const;

  const KClass& schubert(WeylElt w) const;        // O_w
  const KClass& opposite(WeylElt w) const;        // O^w
  const KClass& xi(WeylElt w) const;              // xi_w
  const KClass& xi_op(WeylElt w) const;           // xi^w
  KClass basis_class(Basis b, WeylElt w) const;

  KClass demazure(int i, const KClass& f) const;  // D_i
  KClass flip(const KClass& f) const;             // Phi
  KClass dual(const KClass& f) const;             // e^lambda -> e^{-lambda} pointwise

  KClass add(const KClass& f, const KClass& g) const;
  KClass sub(const KClass& f, const KClass& g) const;
  KClass product(const KClass& f, const KClass& g) const;
  KClass scale(const KClass& f, const LaurentPoly& a) const;

  KClass line_bundle(const Weight& lambda) const;   // L_lambda
  KClass character(const Weight& lambda) const;     // globally trivial e^lambda
  KClass canonical_sheaf() const;                   // [omega_{G/B}]
  KClass dualizing_sheaf(WeylElt w) const;          // [omega_{X^w}]
  KClass richardson(WeylElt v, WeylElt w) const;    // [O_{X_v cap X^w}]

  bool gkm_check(const KClass& f, GkmFailure* failure = nullptr) const;

  LaurentPoly euler_char(const KClass& f) const;
  /// Independent route: sum over fixed points of f(v) / prod(1 - e^{-v alpha})
  /// over the common denominator prod_{beta in R} (1 - e^{beta}), divided out
  /// exactly.
  LaurentPoly euler_char_localization(const KClass& f) const;
  LaurentPoly pairing(const KClass& f, const KClass& g) const;

  Expansion expand(const KClass& f, Basis b) const;
  KClass reconstruct(const Expansion& e) const;

  /// Product of the u- and v-indexed basis classes expanded in the same
  /// basis; for Basis::dualizing the expansion is in {[omega_{X^w}].[omega_X]}
  /// as in the signless positivity statement.
  Expansion structure_constants(WeylElt u, WeylElt v, Basis b) const;

  /// Restrict an expansion to W^P, checking that nothing lives outside it.
  Expansion parabolic_reduce(const Expansion& e, const std::vector<int>& parabolic) const;

  /// Restriction of every Euler factor; e_v = prod_{alpha>0}(1 - e^{v alpha}).
  const LaurentPoly& euler_factor(WeylElt v) const { return euler_[v.id]; }

  /// Precompute all four basis families (call before sharing across threads).
  void warm_up() const;

  /// Adopt externally loaded basis tables (cache loading); validated sizes only.
  void adopt_tables(std::vector<KClass> o_lower, std::vector<KClass> xi_lower) const;

 private:
  RootSystem rs_;
  WeylGroup weyl_;
  std::vector<LaurentPoly> euler_;
  IMatrix w0_matrix_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::optional<KClass>> o_lower_, o_upper_, xi_lower_, xi_upper_;

  LaurentPoly lp_exp(const Weight& lambda, const Int& c = 1) const;
  const KClass& cached(std::vector<std::optional<KClass>>& cache, WeylElt w,
                       KClass (KRing::*make)(WeylElt) const) const;
  KClass make_schubert(WeylElt w) const;
  KClass make_opposite(WeylElt w) const;
  KClass make_xi(WeylElt w) const;
  KClass make_xi_op(WeylElt w) const;
  KClass dualizing_unit() const;  // e^{rho} . L_{-rho}
};

}  // namespace kflag
