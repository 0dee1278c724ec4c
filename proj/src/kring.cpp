#include "kflag/kring.hpp"

#include <algorithm>

namespace kflag {

bool KClass::is_zero() const {
  return std::all_of(r.begin(), r.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

Basis parse_basis(const std::string& s) {
  if (s == "o_lower") return Basis::o_lower;
  if (s == "o_upper") return Basis::o_upper;
  if (s == "xi_lower") return Basis::xi_lower;
  if (s == "xi_upper") return Basis::xi_upper;
  if (s == "dualizing") return Basis::dualizing;
  throw ConfigError("unknown basis '" + s +
                    "' (expected o_lower|o_upper|xi_lower|xi_upper|dualizing)");
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::o_lower: return "o_lower";
    case Basis::o_upper: return "o_upper";
    case Basis::xi_lower: return "xi_lower";
    case Basis::xi_upper: return "xi_upper";
    case Basis::dualizing: return "dualizing";
  }
  return "?";
}

KRing::KRing(CartanType type, int rank, std::size_t order_cap)
    : rs_(type, rank), weyl_(rs_, order_cap) {
  euler_.reserve(weyl_.size());
  for (WeylElt v : weyl_.elements()) {
    LaurentPoly e = LaurentPoly::constant(rank, 1);
    for (const Weight& alpha : rs_.positive_roots())
      e *= LaurentPoly::one_minus_exp(weyl_.act(v, alpha).c);
    euler_.push_back(std::move(e));
  }
  w0_matrix_ = weyl_.matrix(weyl_.longest());
  o_lower_.resize(weyl_.size());
  o_upper_.resize(weyl_.size());
  xi_lower_.resize(weyl_.size());
  xi_upper_.resize(weyl_.size());
}

LaurentPoly KRing::lp_exp(const Weight& lambda, const Int& c) const {
  return LaurentPoly::monomial(lambda.c, c);
}

KClass KRing::zero() const {
  return KClass{std::vector<LaurentPoly>(weyl_.size(), LaurentPoly(rs_.rank()))};
}

KClass KRing::unit() const {
  return KClass{std::vector<LaurentPoly>(weyl_.size(), LaurentPoly::constant(rs_.rank(), 1))};
}

const KClass& KRing::cached(std::vector<std::optional<KClass>>& cache, WeylElt w,
                            KClass (KRing::*make)(WeylElt) const) const {
  {
    std::scoped_lock lock(cache_mutex_);
    if (cache[w.id]) return *cache[w.id];
  }
  KClass c = (this->*make)(w);
  std::scoped_lock lock(cache_mutex_);
  if (!cache[w.id]) cache[w.id] = std::move(c);
  return *cache[w.id];
}

const KClass& KRing::schubert(WeylElt w) const { return cached(o_lower_, w, &KRing::make_schubert); }
const KClass& KRing::opposite(WeylElt w) const { return cached(o_upper_, w, &KRing::make_opposite); }
const KClass& KRing::xi(WeylElt w) const { return cached(xi_lower_, w, &KRing::make_xi); }
const KClass& KRing::xi_op(WeylElt w) const { return cached(xi_upper_, w, &KRing::make_xi_op); }

KClass KRing::basis_class(Basis b, WeylElt w) const {
  switch (b) {
    case Basis::o_lower: return schubert(w);
    case Basis::o_upper: return opposite(w);
    case Basis::xi_lower: return xi(w);
    case Basis::xi_upper: return xi_op(w);
    case Basis::dualizing: return product(dualizing_sheaf(w), canonical_sheaf());
  }
  throw ConfigError("bad basis");
}

KClass KRing::make_schubert(WeylElt w) const {
  if (w == weyl_.identity()) {
    KClass c = zero();
    c.r[0] = euler_[0];
    return c;
  }
  const auto& word = weyl_.word(w);
  WeylElt shorter = weyl_.identity();
  for (std::size_t k = 0; k + 1 < word.size(); ++k) shorter = weyl_.right_mult(shorter, word[k]);
  return demazure(word.back(), schubert(shorter));
}

KClass KRing::make_opposite(WeylElt w) const {
  return flip(schubert(weyl_.mult(weyl_.longest(), w)));
}

KClass KRing::make_xi(WeylElt w) const {
  // xi_w = sum_{v <= w} (-1)^{l(w)-l(v)} O_v
  KClass acc = zero();
  for (WeylElt v : weyl_.elements()) {
    if (!weyl_.bruhat_leq(v, w)) continue;
    const KClass& ov = schubert(v);
    bool minus = ((weyl_.length(w) - weyl_.length(v)) % 2) != 0;
    for (std::size_t j = 0; j < acc.r.size(); ++j)
      acc.r[j] = minus ? acc.r[j] - ov.r[j] : acc.r[j] + ov.r[j];
  }
  return acc;
}

KClass KRing::make_xi_op(WeylElt w) const {
  // xi^w = sum_{v >= w} (-1)^{l(v)-l(w)} O^v
  KClass acc = zero();
  for (WeylElt v : weyl_.elements()) {
    if (!weyl_.bruhat_leq(w, v)) continue;
    const KClass& ov = opposite(v);
    bool minus = ((weyl_.length(v) - weyl_.length(w)) % 2) != 0;
    for (std::size_t j = 0; j < acc.r.size(); ++j)
      acc.r[j] = minus ? acc.r[j] - ov.r[j] : acc.r[j] + ov.r[j];
  }
  return acc;
}

KClass KRing::demazure(int i, const KClass& f) const {
  if (i < 0 || i >= rs_.rank()) throw ConfigError("simple index out of range");
  KClass out = zero();
  const Weight& alpha = rs_.simple_roots()[static_cast<std::size_t>(i)];
  for (WeylElt v : weyl_.elements()) {
    WeylElt vs = weyl_.right_mult(v, i);
    Weight va = weyl_.act(v, alpha);
    LaurentPoly num = f.r[v.id] - f.r[vs.id].times_monomial(va.c);
    auto div = divide(num, LaurentPoly::one_minus_exp(va.c));
    if (!div.exact)
      throw InvariantViolation("Demazure step division failed; input violates GKM");
    out.r[v.id] = std::move(div.quotient);
  }
  return out;
}

KClass KRing::flip(const KClass& f) const {
  KClass out = zero();
  for (WeylElt v : weyl_.elements()) {
    WeylElt w0v = weyl_.mult(weyl_.longest(), v);
    out.r[v.id] = f.r[w0v.id].map_exponents(w0_matrix_);
  }
  return out;
}

KClass KRing::dual(const KClass& f) const {
  KClass out = zero();
  for (std::size_t j = 0; j < f.r.size(); ++j) out.r[j] = f.r[j].invert_exponents();
  return out;
}

KClass KRing::add(const KClass& f, const KClass& g) const {
  KClass out = zero();
  for (std::size_t j = 0; j < f.r.size(); ++j) out.r[j] = f.r[j] + g.r[j];
  return out;
}

KClass KRing::sub(const KClass& f, const KClass& g) const {
  KClass out = zero();
  for (std::size_t j = 0; j < f.r.size(); ++j) out.r[j] = f.r[j] - g.r[j];
  return out;
}

KClass KRing::product(const KClass& f, const KClass& g) const {
  KClass out = zero();
  for (std::size_t j = 0; j < f.r.size(); ++j) out.r[j] = f.r[j] * g.r[j];
  return out;
}

KClass KRing::scale(const KClass& f, const LaurentPoly& a) const {
  KClass out = zero();
  for (std::size_t j = 0; j < f.r.size(); ++j) out.r[j] = f.r[j] * a;
  return out;
}

KClass KRing::line_bundle(const Weight& lambda) const {
  KClass out = zero();
  for (WeylElt v : weyl_.elements())
    out.r[v.id] = lp_exp(Weight{neg(weyl_.act(v, lambda).c)});
  return out;
}

KClass KRing::character(const Weight& lambda) const {
  KClass out = zero();
  for (WeylElt v : weyl_.elements()) out.r[v.id] = lp_exp(lambda);
  return out;
}

KClass KRing::canonical_sheaf() const {
  Weight m2rho = rs_.rho();
  for (auto& c : m2rho.c) c *= -2;
  return line_bundle(m2rho);
}

KClass KRing::dualizing_unit() const {
  Weight mrho = rs_.rho();
  for (auto& c : mrho.c) c = -c;
  return product(character(rs_.rho()), line_bundle(mrho));
}

KClass KRing::dualizing_sheaf(WeylElt w) const { return product(dualizing_unit(), xi_op(w)); }

KClass KRing::richardson(WeylElt v, WeylElt w) const { return product(schubert(v), opposite(w)); }

bool KRing::gkm_check(const KClass& f, GkmFailure* failure) const {
  const auto& pos = rs_.positive_roots();
  for (WeylElt v : weyl_.elements()) {
    for (std::size_t k = 0; k < pos.size(); ++k) {
      WeylElt vs = weyl_.mult(v, weyl_.reflection(static_cast<int>(k)));
      if (vs.id < v.id) continue;  // each edge once
      LaurentPoly diff = f.r[v.id] - f.r[vs.id];
      Weight va = weyl_.act(v, pos[k]);
      if (!divide(diff, LaurentPoly::one_minus_exp(va.c)).exact) {
        if (failure) *failure = GkmFailure{v, static_cast<int>(k), std::move(diff)};
        return false;
      }
    }
  }
  return true;
}

LaurentPoly KRing::euler_char(const KClass& f) const {
  Expansion e = expand(f, Basis::o_lower);
  LaurentPoly acc(rs_.rank());
  for (const auto& c : e.coeff) acc += c;  // chi(O_w) = 1 for every w
  return acc;
}

LaurentPoly KRing::euler_char_localization(const KClass& f) const {
  const int n = rs_.rank();
  LaurentPoly num(n), den = LaurentPoly::constant(n, 1);
  for (const Weight& alpha : rs_.positive_roots()) {
    den *= LaurentPoly::one_minus_exp(alpha.c);
    den *= LaurentPoly::one_minus_exp(neg(alpha.c));
  }
  for (WeylElt v : weyl_.elements()) {
    if (f.r[v.id].is_zero()) continue;
    LaurentPoly co = LaurentPoly::constant(n, 1);  // den / e_v
    for (const Weight& alpha : rs_.positive_roots())
      co *= LaurentPoly::one_minus_exp(neg(weyl_.act(v, alpha).c));
    num += f.r[v.id] * co;
  }
  auto div = divide(num, den);
  if (!div.exact)
    throw InvariantViolation("localization sum is not a Laurent polynomial");
  return div.quotient;
}

LaurentPoly KRing::pairing(const KClass& f, const KClass& g) const {
  return euler_char(product(f, g));
}

Expansion KRing::expand(const KClass& f, Basis b) const {
  const std::size_t N = weyl_.size();
  Expansion out;
  out.basis = b;
  out.coeff.assign(N, LaurentPoly(rs_.rank()));

  if (b == Basis::o_lower || b == Basis::o_upper) {
    // Triangular solve against the support pattern: supp O_w = {v <= w} is
    // handled from the top down, supp O^w = {v >= w} from the bottom up.
    KClass rem = f;
    std::vector<WeylElt> order = weyl_.elements();
    if (b == Basis::o_lower) std::reverse(order.begin(), order.end());
    for (WeylElt w : order) {
      if (rem.r[w.id].is_zero()) continue;
      const KClass& bw = (b == Basis::o_lower) ? schubert(w) : opposite(w);
      auto div = divide(rem.r[w.id], bw.r[w.id]);
      if (!div.exact)
        throw InvariantViolation("basis expansion: diagonal division failed");
      if (!div.quotient.is_zero()) {
        for (std::size_t j = 0; j < N; ++j)
          if (!bw.r[j].is_zero()) rem.r[j] -= div.quotient * bw.r[j];
        out.coeff[w.id] = std::move(div.quotient);
      }
    }
    if (!rem.is_zero())
      throw InvariantViolation("basis expansion left a nonzero residual");
    return out;
  }

  if (b == Basis::xi_lower) {
    // O_w = sum_{v <= w} xi_v, so the xi coefficient at u sums the O ones above.
    Expansion a = expand(f, Basis::o_lower);
    for (WeylElt u : weyl_.elements())
      for (WeylElt v : weyl_.elements())
        if (weyl_.bruhat_leq(u, v)) out.coeff[u.id] += a.coeff[v.id];
    return out;
  }
  if (b == Basis::xi_upper) {
    // O^w = sum_{v >= w} xi^v
    Expansion a = expand(f, Basis::o_upper);
    for (WeylElt u : weyl_.elements())
      for (WeylElt v : weyl_.elements())
        if (weyl_.bruhat_leq(v, u)) out.coeff[u.id] += a.coeff[v.id];
    return out;
  }

  // dualizing: basis element is u* . xi^w with the invertible class
  // u* = [omega_{X^e}] . [omega_X] / xi^e = e^{rho} L_{-3 rho}; divide it out
  // pointwise (all restrictions are single monomials) and expand in xi^.
  Weight m3rho = rs_.rho();
  for (auto& c : m3rho.c) c *= -3;
  KClass ustar = product(character(rs_.rho()), line_bundle(m3rho));
  KClass g = zero();
  for (WeylElt v : weyl_.elements()) {
    const auto& t = ustar.r[v.id].terms();
    if (t.size() != 1 || (t.front().second != 1 && t.front().second != -1))
      throw InvariantViolation("dualizing unit is not a monomial unit");
    g.r[v.id] = f.r[v.id].times_monomial(neg(t.front().first), t.front().second);
  }
  Expansion e = expand(g, Basis::xi_upper);
  e.basis = Basis::dualizing;
  return e;
}

KClass KRing::reconstruct(const Expansion& e) const {
  KClass acc = zero();
  for (WeylElt w : weyl_.elements()) {
    if (e.coeff[w.id].is_zero()) continue;
    acc = add(acc, scale(basis_class(e.basis, w), e.coeff[w.id]));
  }
  return acc;
}

Expansion KRing::structure_constants(WeylElt u, WeylElt v, Basis b) const {
  KClass p = (b == Basis::dualizing)
                 ? product(dualizing_sheaf(u), dualizing_sheaf(v))
                 : product(basis_class(b, u), basis_class(b, v));
  return expand(p, b);
}

Expansion KRing::parabolic_reduce(const Expansion& e, const std::vector<int>& parabolic) const {
  std::vector<bool> in_wp(weyl_.size(), false);
  for (WeylElt w : weyl_.minimal_coset_reps(parabolic)) in_wp[w.id] = true;
  Expansion out;
  out.basis = e.basis;
  out.coeff.assign(weyl_.size(), LaurentPoly(rs_.rank()));
  for (WeylElt w : weyl_.elements()) {
    if (e.coeff[w.id].is_zero()) continue;
    if (!in_wp[w.id])
      throw InvariantViolation("expansion has a coefficient outside W^P at id " +
                               std::to_string(w.id));
    out.coeff[w.id] = e.coeff[w.id];
  }
  return out;
}

void KRing::warm_up() const {
  for (WeylElt w : weyl_.elements()) {
    schubert(w);
    opposite(w);
    xi(w);
    xi_op(w);
  }
}

void KRing::adopt_tables(std::vector<KClass> o_lower, std::vector<KClass> xi_lower) const {
  if (o_lower.size() != weyl_.size() || xi_lower.size() != weyl_.size())
    throw ConfigError("cache tables have the wrong size");
  std::scoped_lock lock(cache_mutex_);
  for (std::size_t i = 0; i < weyl_.size(); ++i) {
    o_lower_[i] = std::move(o_lower[i]);
    xi_lower_[i] = std::move(xi_lower[i]);
  }
}

}  // namespace kflag
