#include "kflag/positivity.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "kflag/parallel.hpp"

namespace kflag {

bool SubtorusBasis::is_positive() const {
  for (const auto& row : m)
    for (Coord x : row)
      if (x < 0) return false;
  return true;
}

bool SubtorusBasis::is_full() const {
  if (!is_positive()) return false;
  const std::size_t r = m.size();
  if (r == 0) return true;
  const std::size_t n = m[0].size();
  for (std::size_t i = 0; i < r; ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < n && !hit; ++j) {
      bool is_ei = true;
      for (std::size_t k = 0; k < r; ++k)
        if (m[k][j] != (k == i ? 1 : 0)) is_ei = false;
      hit = is_ei;
    }
    if (!hit) return false;
  }
  return true;
}

SubtorusBasis SubtorusBasis::identity(int n) {
  return SubtorusBasis{identity_matrix(static_cast<std::size_t>(n))};
}

SubtorusBasis SubtorusBasis::all_ones(int n) {
  return SubtorusBasis{IMatrix(1, Expo(static_cast<std::size_t>(n), 1))};
}

void PositivityReport::merge(PositivityReport&& other) {
  instances_checked += other.instances_checked;
  violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
  if (fault_note.empty()) fault_note = std::move(other.fault_note);
}

std::string word_str(const WeylGroup& w, WeylElt e) {
  const auto& word = w.word(e);
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += std::to_string(i + 1);
  return s;
}

WeylElt word_parse(const WeylGroup& w, const std::string& s) {
  if (s == "e" || s.empty()) return w.identity();
  WeylElt out = w.identity();
  for (char c : s) {
    if (c < '1' || c > '9') throw ConfigError("bad word '" + s + "' (digits 1..rank or 'e')");
    int i = c - '1';
    if (i >= w.rank()) throw ConfigError("letter " + std::string(1, c) + " out of range in '" + s + "'");
    out = w.right_mult(out, i);
  }
  return out;
}

namespace {

int auto_cap(const KRing& k, WeylElt u, WeylElt v) {
  return k.weyl().length(u) + k.weyl().length(v) +
         static_cast<int>(k.roots().positive_roots().size());
}

// Membership-and-sign check of one coefficient; appends violations.
void check_coefficient(const KRing& k, const LaurentPoly& c, int parity, YVariables vars,
                       int cap, const std::optional<SubtorusBasis>& subtorus,
                       const std::string& u_label, const std::string& v_label,
                       const std::string& w_label, std::vector<Violation>& out) {
  if (c.is_zero()) return;
  LaurentPoly x = to_root_x_coords(c, k.roots());
  if (vars == YVariables::e_pos_alpha) x = x.invert_exponents();
  if (subtorus) x = x.map_exponents(subtorus->m);
  // A terminating expansion needs exactly max_coordinate() steps per variable,
  // so never cap below it; the cap's job is to stop genuine divergence.
  YExpansion ye = expand_in_y(parity ? -x : x, std::max(cap, static_cast<int>(x.max_coordinate())));
  if (!ye.member) {
    out.push_back({"membership", u_label, v_label, w_label, c, ye.residual,
                   "y-expansion did not terminate at cap " + std::to_string(cap) +
                       " in variable " + std::to_string(ye.failed_var + 1)});
    return;
  }
  if (!ye.poly.all_nonnegative())
    out.push_back({"sign", u_label, v_label, w_label, c, LaurentPoly(x.rank()),
                   "signed y-expansion has a negative coefficient"});
}

struct Fault {
  std::size_t pair_index;
  std::uint32_t w_pick;  // index into the elements of the expansion grid
  Expo lambda;           // fundamental coordinates
  int sign;
  std::string describe() const {
    std::ostringstream os;
    os << "injected " << (sign > 0 ? "+" : "-") << LaurentPoly::monomial(lambda).str()
       << " at pair #" << pair_index << ", w id " << w_pick;
    return os.str();
  }
};

Fault make_fault(const KRing& k, std::size_t npairs, std::size_t nbasis, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Fault f;
  f.pair_index = rng() % npairs;
  f.w_pick = static_cast<std::uint32_t>(rng() % nbasis);
  const RootSystem& rs = k.roots();
  Expo rc(static_cast<std::size_t>(rs.rank()));
  for (auto& x : rc) x = static_cast<Coord>(rng() % 5) - 2;
  // lambda = sum rc_i alpha_i, always in the root lattice
  Expo fc(static_cast<std::size_t>(rs.rank()), 0);
  for (int j = 0; j < rs.rank(); ++j)
    for (int i = 0; i < rs.rank(); ++i)
      fc[static_cast<std::size_t>(i)] +=
          rs.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
          rc[static_cast<std::size_t>(j)];
  f.lambda = fc;
  f.sign = (rng() % 2) ? 1 : -1;
  return f;
}

// Shared driver for the basis-product claims: iterate (u,v) pairs over the
// index set, compute the expansion, optionally perturb, check reconstruction
// + alternation (+ shadow for grra), and merge reports in pair order.
PositivityReport run_pairs(const KRing& k, Basis basis, const std::string& claim,
                           const std::vector<int>& parabolic0, const CheckOptions& opts,
                           YVariables vars, bool with_shadow, bool signless) {
  k.warm_up();
  const WeylGroup& W = k.weyl();
  std::vector<int> parabolic;  // 0-based
  for (int i : parabolic0) parabolic.push_back(i - 1);
  std::vector<WeylElt> index =
      parabolic.empty() ? W.elements() : W.minimal_coset_reps(parabolic);
  const std::size_t P = index.size();
  std::optional<Fault> fault;
  if (opts.fault) fault = make_fault(k, P * P, W.size(), opts.fault->seed);

  std::vector<PositivityReport> partial(P * P);
  parallel_for(P * P, opts.jobs, [&](std::size_t pi) {
    WeylElt u = index[pi / P], v = index[pi % P];
    PositivityReport& rep = partial[pi];
    const std::string us = word_str(W, u), vs = word_str(W, v);
    Expansion e = k.structure_constants(u, v, basis);
    if (!parabolic.empty()) e = k.parabolic_reduce(e, parabolic);
    if (fault && fault->pair_index == pi) {
      e.coeff[fault->w_pick] += LaurentPoly::monomial(fault->lambda, fault->sign);
      rep.fault_note = fault->describe();
    }
    // reconstruction: the expansion must reproduce the product exactly
    KClass prod = (basis == Basis::dualizing)
                      ? k.product(k.dualizing_sheaf(u), k.dualizing_sheaf(v))
                      : k.product(k.basis_class(basis, u), k.basis_class(basis, v));
    if (!(k.reconstruct(e) == prod))
      rep.violations.push_back({"reconstruction", us, vs, "", LaurentPoly(k.roots().rank()),
                                LaurentPoly(k.roots().rank()),
                                "sum of coefficients times basis classes differs from the product"});
    const int cap = opts.degree_cap > 0 ? opts.degree_cap : auto_cap(k, u, v);
    const int lu = W.length(u), lv = W.length(v);
    for (WeylElt w : W.elements()) {
      const LaurentPoly& c = e.coeff[w.id];
      if (c.is_zero()) continue;
      ++rep.instances_checked;
      int parity = signless ? 0 : (((W.length(w) - lu - lv) % 2) + 2) % 2;
      check_coefficient(k, c, parity, vars, cap, std::nullopt, us, vs, word_str(W, w),
                        rep.violations);
      if (with_shadow) {
        Int s = c.specialize_all_one();
        if ((parity ? -s : s) < 0)
          rep.violations.push_back({"shadow", us, vs, word_str(W, w), c,
                                    LaurentPoly(k.roots().rank()),
                                    "non-equivariant specialization has the wrong sign: " + s.str()});
      }
    }
  });

  PositivityReport out;
  out.claim = claim;
  out.group = k.roots().name();
  out.parabolic = parabolic0;
  for (auto& p : partial) out.merge(std::move(p));
  return out;
}

}  // namespace

PositivityReport check_alternation(const KRing& k, const Expansion& exp,
                                   const std::function<int(WeylElt)>& grading_parity,
                                   YVariables vars, int degree_cap,
                                   const std::optional<SubtorusBasis>& subtorus,
                                   const std::string& claim, const std::string& u_label,
                                   const std::string& v_label) {
  PositivityReport rep;
  rep.claim = claim;
  rep.group = k.roots().name();
  for (WeylElt w : k.weyl().elements()) {
    const LaurentPoly& c = exp.coeff[w.id];
    if (c.is_zero()) continue;
    ++rep.instances_checked;
    check_coefficient(k, c, (grading_parity(w) % 2 + 2) % 2, vars, degree_cap, subtorus,
                      u_label, v_label, word_str(k.weyl(), w), rep.violations);
  }
  return rep;
}

PositivityReport verify_grra(const KRing& k, const std::vector<int>& parabolic,
                             const CheckOptions& opts) {
  return run_pairs(k, Basis::o_upper, "grra53", parabolic, opts, YVariables::e_neg_alpha,
                   /*with_shadow=*/true, /*signless=*/false);
}

PositivityReport verify_grku_prime(const KRing& k, const std::vector<int>& parabolic,
                                   const CheckOptions& opts) {
  return run_pairs(k, Basis::xi_upper, "grku52", parabolic, opts, YVariables::e_neg_alpha,
                   /*with_shadow=*/false, /*signless=*/false);
}

PositivityReport verify_dualizing(const KRing& k, const CheckOptions& opts) {
  return run_pairs(k, Basis::dualizing, "dualizing", {}, opts, YVariables::e_pos_alpha,
                   /*with_shadow=*/false, /*signless=*/true);
}

PositivityReport verify_grku_richardson(const KRing& k, const SubtorusBasis& basis,
                                        const CheckOptions& opts) {
  if (!basis.is_positive())
    throw ConfigError("subtorus basis is not positive (a negative entry in the matrix)");
  if (!basis.m.empty() && basis.m[0].size() != static_cast<std::size_t>(k.roots().rank()))
    throw ConfigError("subtorus matrix has the wrong number of columns");
  k.warm_up();
  const WeylGroup& W = k.weyl();
  const std::size_t N = W.size();
  std::optional<Fault> fault;
  if (opts.fault) fault = make_fault(k, N * N, N, opts.fault->seed);

  std::vector<PositivityReport> partial(N * N);
  parallel_for(N * N, opts.jobs, [&](std::size_t pi) {
    WeylElt v{static_cast<std::uint32_t>(pi / N)}, w{static_cast<std::uint32_t>(pi % N)};
    if (!W.bruhat_leq(w, v)) return;  // empty Richardson variety
    PositivityReport& rep = partial[pi];
    const std::string vs = word_str(W, v), ws = word_str(W, w);
    KClass y = k.richardson(v, w);
    Expansion e = k.expand(y, Basis::o_lower);
    if (fault && fault->pair_index == pi) {
      e.coeff[fault->w_pick] += LaurentPoly::monomial(fault->lambda, fault->sign);
      rep.fault_note = fault->describe();
    }
    if (!(k.reconstruct(e) == y))
      rep.violations.push_back({"reconstruction", "", vs, ws, LaurentPoly(k.roots().rank()),
                                LaurentPoly(k.roots().rank()),
                                "Schubert expansion does not reproduce the Richardson class"});
    const int dim_y = W.length(v) - W.length(w);
    const int cap = opts.degree_cap > 0
                        ? opts.degree_cap
                        : dim_y + static_cast<int>(k.roots().positive_roots().size());
    for (WeylElt u : W.elements()) {
      const LaurentPoly& a = e.coeff[u.id];
      if (a.is_zero()) continue;
      ++rep.instances_checked;
      int parity = (((dim_y - W.length(u)) % 2) + 2) % 2;
      check_coefficient(k, a, parity, YVariables::e_neg_alpha, cap, basis, word_str(W, u), vs,
                        ws, rep.violations);
    }
  });

  PositivityReport out;
  out.claim = "grku51";
  out.group = k.roots().name();
  for (auto& p : partial) out.merge(std::move(p));
  return out;
}

}  // namespace kflag
