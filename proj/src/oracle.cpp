#include "kflag/oracle.hpp"

#include <algorithm>

namespace kflag {

GrothendieckOracle::GrothendieckOracle(const RootSystem& rs, const WeylGroup& weyl)
    : weyl_(weyl), m_(rs.rank() + 1) {
  if (rs.type() != CartanType::A)
    throw ConfigError("the double Grothendieck oracle is type A only");
  if (rs.rank() > 3) throw ConfigError("oracle guard: type A rank <= 3");

  // Permutations from the action on eps_j - eps_{j-1} (the fundamental-weight
  // differences), which the group permutes exactly like the eps letters.
  const int n = rs.rank();
  auto eps_diff = [&](int j) {  // 0-based letter j of m
    Expo c(static_cast<std::size_t>(n), 0);
    if (j < n) c[static_cast<std::size_t>(j)] = 1;
    if (j > 0) c[static_cast<std::size_t>(j - 1)] = -1;
    return Weight{c};
  };
  perm_.assign(weyl_.size(), std::vector<int>(static_cast<std::size_t>(m_)));
  for (WeylElt w : weyl_.elements()) {
    for (int j = 0; j < m_; ++j) {
      Weight img = weyl_.act(w, eps_diff(j));
      int k = -1;
      for (int t = 0; t < m_; ++t)
        if (eps_diff(t) == img) { k = t; break; }
      if (k < 0) throw InvariantViolation("image is not an eps-difference");
      perm_[w.id][static_cast<std::size_t>(j)] = k;
    }
  }

  // Top polynomial, then descend along ascents.
  const int R = 2 * m_;
  auto xvar = [&](int i) { Expo e(static_cast<std::size_t>(R), 0); e[static_cast<std::size_t>(i)] = 1; return e; };
  auto bvar = [&](int j) { Expo e(static_cast<std::size_t>(R), 0); e[static_cast<std::size_t>(m_ + j)] = 1; return e; };
  LaurentPoly top = LaurentPoly::constant(R, 1);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j + i + 2 <= m_; ++j)
      top *= LaurentPoly::constant(R, 1) - LaurentPoly::monomial(add(xvar(i), bvar(j)));

  groth_.assign(weyl_.size(), LaurentPoly(R));
  std::vector<WeylElt> order = weyl_.elements();
  std::reverse(order.begin(), order.end());
  groth_[weyl_.longest().id] = std::move(top);
  for (WeylElt w : order) {
    if (w == weyl_.longest()) continue;
    int i = 0;
    while (weyl_.right_descent(w, i)) ++i;  // pick an ascent
    groth_[w.id] = divided_difference(i, groth_[weyl_.right_mult(w, i).id]);
  }

  loc_.assign(weyl_.size(), std::vector<LaurentPoly>(weyl_.size()));
  for (WeylElt w : weyl_.elements())
    for (WeylElt v : weyl_.elements()) loc_[w.id][v.id] = localize(groth_[w.id], v);
}

LaurentPoly GrothendieckOracle::divided_difference(int i, const LaurentPoly& f) const {
  const int R = 2 * m_;
  // swap x_i <-> x_{i+1}
  IMatrix swap = identity_matrix(static_cast<std::size_t>(R));
  std::swap(swap[static_cast<std::size_t>(i)], swap[static_cast<std::size_t>(i + 1)]);
  LaurentPoly sf = f.map_exponents(swap);
  Expo xi(static_cast<std::size_t>(R), 0), xi1(static_cast<std::size_t>(R), 0);
  xi[static_cast<std::size_t>(i)] = 1;
  xi1[static_cast<std::size_t>(i + 1)] = 1;
  LaurentPoly num = f.times_monomial(xi1) - sf.times_monomial(xi);
  LaurentPoly den = LaurentPoly::monomial(xi1) - LaurentPoly::monomial(xi);
  auto div = divide(num, den);
  if (!div.exact) throw InvariantViolation("isobaric divided difference is not exact");
  return div.quotient;
}

LaurentPoly GrothendieckOracle::localize(const LaurentPoly& g, WeylElt v) const {
  // x_i -> b_{v(i)}^{-1}
  const auto& p = perm_[v.id];
  std::map<Expo, Int> acc;
  for (const auto& [e, c] : g.terms()) {
    Expo b(static_cast<std::size_t>(m_), 0);
    for (int j = 0; j < m_; ++j) b[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(m_ + j)];
    for (int i = 0; i < m_; ++i) b[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] -= e[static_cast<std::size_t>(i)];
    acc[std::move(b)] += c;
  }
  std::vector<LaurentPoly::Term> ts;
  for (auto& [e, c] : acc)
    if (c != 0) ts.emplace_back(e, std::move(c));
  return LaurentPoly::from_terms(m_, std::move(ts));
}

LaurentPoly GrothendieckOracle::to_weight_lattice(const LaurentPoly& b_poly) const {
  const int n = m_ - 1;
  IMatrix d(static_cast<std::size_t>(n), Expo(static_cast<std::size_t>(m_), 0));
  for (int i = 0; i < n; ++i) {
    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
  }
  return b_poly.map_exponents(d);
}

Expansion GrothendieckOracle::structure_constants(WeylElt u, WeylElt v) const {
  const std::size_t N = weyl_.size();
  LaurentPoly product = groth_[u.id] * groth_[v.id];
  std::vector<LaurentPoly> res(N);
  for (WeylElt x : weyl_.elements()) res[x.id] = localize(product, x);

  Expansion out;
  out.basis = Basis::o_upper;
  out.coeff.assign(N, LaurentPoly(weyl_.rank()));
  std::vector<LaurentPoly> cb(N, LaurentPoly(m_));  // coefficients in b variables
  for (WeylElt w : weyl_.elements()) {             // ascending length order
    if (res[w.id].is_zero()) continue;
    auto div = divide(res[w.id], loc_[w.id][w.id]);
    if (!div.exact) throw InvariantViolation("oracle elimination: inexact diagonal division");
    cb[w.id] = std::move(div.quotient);
    for (WeylElt x : weyl_.elements())
      if (!loc_[w.id][x.id].is_zero()) res[x.id] -= cb[w.id] * loc_[w.id][x.id];
  }
  for (WeylElt x : weyl_.elements())
    if (!res[x.id].is_zero()) throw InvariantViolation("oracle elimination left a residual");
  for (WeylElt w : weyl_.elements()) out.coeff[w.id] = to_weight_lattice(cb[w.id]);
  return out;
}

}  // namespace kflag
