#include "kflag/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace kflag {

namespace {

LaurentPoly compact(int rank, std::map<Expo, Int>&& acc) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) terms.emplace_back(e, std::move(c));
  return LaurentPoly::from_terms(rank, std::move(terms));
}

}  // namespace

LaurentPoly LaurentPoly::constant(int rank, Int c) {
  LaurentPoly p(rank);
  if (c != 0) p.terms_.emplace_back(Expo(static_cast<std::size_t>(rank), 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(Expo e, Int c) {
  LaurentPoly p(static_cast<int>(e.size()));
  if (c != 0) p.terms_.emplace_back(std::move(e), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::one_minus_exp(Expo lambda) {
  LaurentPoly p = constant(static_cast<int>(lambda.size()), 1);
  return p - monomial(std::move(lambda));
}

LaurentPoly LaurentPoly::from_terms(int rank, std::vector<Term> terms) {
  LaurentPoly p(rank);
  p.terms_ = std::move(terms);
  // callers hand over sorted, zero-free terms; enforce in debug only
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(rank_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("lattice rank mismatch in +");
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (ia->first < ib->first)
      out.push_back(*ia++);
    else if (ib->first < ia->first)
      out.push_back(*ib++);
    else {
      Int c = ia->second + ib->second;
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia, ++ib;
    }
  }
  out.insert(out.end(), ia, a.terms_.end());
  out.insert(out.end(), ib, b.terms_.end());
  return LaurentPoly::from_terms(a.rank_, std::move(out));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("lattice rank mismatch in *");
  std::map<Expo, Int> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[add(ea, eb)] += ca * cb;
  return compact(a.rank_, std::move(acc));
}

LaurentPoly LaurentPoly::times_monomial(const Expo& e, const Int& c) const {
  if (c == 0) return LaurentPoly(rank_);
  LaurentPoly r(rank_);
  r.terms_.reserve(terms_.size());
  for (const auto& [te, tc] : terms_) r.terms_.emplace_back(add(te, e), tc * c);
  // adding a fixed vector preserves lexicographic order
  return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  if (c == 0) return LaurentPoly(rank_);
  LaurentPoly r(rank_);
  r.terms_.reserve(terms_.size());
  for (const auto& [te, tc] : terms_) r.terms_.emplace_back(te, tc * c);
  return r;
}

LaurentPoly LaurentPoly::map_exponents(const IMatrix& m) const {
  std::map<Expo, Int> acc;
  for (const auto& [e, c] : terms_) acc[apply(m, e)] += c;
  return compact(static_cast<int>(m.size()), std::move(acc));
}

LaurentPoly LaurentPoly::invert_exponents() const {
  std::map<Expo, Int> acc;
  for (const auto& [e, c] : terms_) acc[neg(e)] += c;
  return compact(rank_, std::move(acc));
}

LaurentPoly LaurentPoly::substitute_one(int i) const {
  std::map<Expo, Int> acc;
  for (const auto& [e, c] : terms_) {
    Expo f = e;
    f[static_cast<std::size_t>(i)] = 0;
    acc[std::move(f)] += c;
  }
  return compact(rank_, std::move(acc));
}

LaurentPoly LaurentPoly::diff_quotient(int i) const {
  // (x^k - 1)/(x - 1) = x^{k-1}+...+1 for k > 0, and -(x^{-1}+...+x^{k}) for k < 0.
  std::map<Expo, Int> acc;
  for (const auto& [e, c] : terms_) {
    Coord k = e[static_cast<std::size_t>(i)];
    Expo f = e;
    if (k > 0) {
      for (Coord j = 0; j < k; ++j) {
        f[static_cast<std::size_t>(i)] = j;
        acc[f] += c;
      }
    } else if (k < 0) {
      for (Coord j = k; j <= -1; ++j) {
        f[static_cast<std::size_t>(i)] = j;
        acc[f] -= c;
      }
    }
  }
  return compact(rank_, std::move(acc));
}

Int LaurentPoly::specialize_all_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Coord LaurentPoly::max_coordinate() const {
  Coord m = 0;
  for (const auto& [e, c] : terms_)
    for (Coord x : e) m = std::max(m, x);
  return m;
}

Int LaurentPoly::coefficient(const Expo& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Expo& k) { return t.first < k; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = abs(c);
    bool allzero = std::all_of(e.begin(), e.end(), [](Coord x) { return x == 0; });
    if (a != 1 || allzero) os << a.str();
    if (!allzero) {
      if (a != 1) os << "*";
      os << "e[";
      for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
      os << "]";
    }
  }
  return os.str();
}

DivisionResult divide(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (p.rank() != d.rank()) throw std::invalid_argument("lattice rank mismatch in divide");
  const int rank = p.rank();
  if (p.is_zero()) return {LaurentPoly(rank), LaurentPoly(rank), true};

  // Shift both operands into the polynomial cone; exactness is unaffected
  // because monomials are units.
  auto min_expo = [rank](const LaurentPoly& q) {
    Expo m(static_cast<std::size_t>(rank), 0);
    bool first = true;
    for (const auto& [e, c] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i)
        m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  };
  const Expo pa = min_expo(p), db = min_expo(d);
  LaurentPoly r = p.times_monomial(neg(pa));
  const LaurentPoly dd = d.times_monomial(neg(db));
  const auto& dlead = dd.terms().back();  // lex-greatest term

  std::vector<LaurentPoly::Term> qterms;
  while (!r.is_zero()) {
    const auto& rlead = r.terms().back();
    Expo shift = sub(rlead.first, dlead.first);
    bool ok = std::all_of(shift.begin(), shift.end(), [](Coord x) { return x >= 0; });
    Int qc = 0;
    if (ok) {
      qc = rlead.second / dlead.second;
      ok = (qc * dlead.second == rlead.second);
    }
    if (!ok) {
      // p = q*d + r*x^{pa}: hand back the obstruction as a witness
      return {LaurentPoly(rank), r.times_monomial(pa), false};
    }
    qterms.emplace_back(shift, qc);
    r -= dd.times_monomial(shift, qc);
  }
  std::sort(qterms.begin(), qterms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  LaurentPoly q = LaurentPoly::from_terms(rank, std::move(qterms));
  return {q.times_monomial(sub(pa, db)), LaurentPoly(rank), true};
}

bool YPoly::all_nonnegative() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second >= 0; });
}

LaurentPoly YPoly::evaluate() const {
  // y^J = prod (x_i - 1)^{j_i}
  LaurentPoly acc(nvars);
  for (const auto& [J, c] : terms) {
    LaurentPoly m = LaurentPoly::constant(nvars, c);
    for (int i = 0; i < nvars; ++i) {
      Expo xi(static_cast<std::size_t>(nvars), 0);
      xi[static_cast<std::size_t>(i)] = 1;
      LaurentPoly binom = LaurentPoly::monomial(xi) - LaurentPoly::constant(nvars, 1);
      for (Coord j = 0; j < J[static_cast<std::size_t>(i)]; ++j) m *= binom;
    }
    acc += m;
  }
  return acc;
}

namespace {

// Expand variables var..n-1 of p, writing completed coefficients into out.
bool expand_rec(const LaurentPoly& p, int var, int cap, Expo& J,
                std::map<Expo, Int>& out, LaurentPoly& residual, int& failed_var) {
  const int n = p.rank();
  if (p.is_zero()) return true;
  if (var == n) {
    // all coordinates consumed; what is left is the constant coefficient
    out[J] += p.terms().front().second;
    return true;
  }
  LaurentPoly cur = p;
  for (int j = 0; !cur.is_zero(); ++j) {
    if (j > cap) {
      residual = cur;
      failed_var = var;
      return false;
    }
    LaurentPoly slice = cur.substitute_one(var);
    if (!slice.is_zero()) {
      J[static_cast<std::size_t>(var)] = static_cast<Coord>(j);
      if (!expand_rec(slice, var + 1, cap, J, out, residual, failed_var)) return false;
      J[static_cast<std::size_t>(var)] = 0;
    }
    cur = cur.diff_quotient(var);
  }
  return true;
}

}  // namespace

YExpansion expand_in_y(const LaurentPoly& p, int degree_cap) {
  YExpansion res;
  res.poly.nvars = p.rank();
  Expo J(static_cast<std::size_t>(p.rank()), 0);
  std::map<Expo, Int> acc;
  res.member = expand_rec(p, 0, degree_cap, J, acc, res.residual, res.failed_var);
  if (res.member) {
    for (auto& [e, c] : acc)
      if (c != 0) res.poly.terms.emplace_back(e, std::move(c));
  }
  return res;
}

LaurentPoly to_root_x_coords(const LaurentPoly& p, const RootSystem& rs) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) {
    auto rc = rs.root_coords(Weight{e});
    if (!rc)
      throw InvariantViolation("exponent " + LaurentPoly::monomial(e).str() +
                               " is not in the root lattice");
    terms.emplace_back(neg(*rc), c);
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return LaurentPoly::from_terms(rs.rank(), std::move(terms));
}

}  // namespace kflag
