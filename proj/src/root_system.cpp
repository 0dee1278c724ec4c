#include "kflag/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kflag {

CartanType parse_cartan_type(const std::string& s) {
  if (s.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<CartanType>(c);
  }
  throw ConfigError("unknown Cartan type '" + s + "' (expected one of A..G)");
}

std::string to_string(CartanType t) { return std::string(1, static_cast<char>(t)); }

namespace {

constexpr int kRankGuard = 6;

// Dynkin edges as (i, j, <alpha_j, alpha_i^vee>, <alpha_i, alpha_j^vee>), 0-based.
struct Edge {
  int i, j;
  Coord ij, ji;
};

std::vector<Edge> dynkin_edges(CartanType t, int n) {
  std::vector<Edge> e;
  auto chain = [&](int upto) {
    for (int k = 0; k + 1 < upto; ++k) e.push_back({k, k + 1, -1, -1});
  };
  switch (t) {
    case CartanType::A:
      if (n < 1) throw ConfigError("A_n requires rank >= 1");
      chain(n);
      break;
    case CartanType::B:
      if (n < 2) throw ConfigError("B_n requires rank >= 2");
      chain(n - 1);
      // alpha_{n-1} long, alpha_n short
      e.push_back({n - 2, n - 1, -1, -2});
      break;
    case CartanType::C:
      if (n < 2) throw ConfigError("C_n requires rank >= 2");
      chain(n - 1);
      e.push_back({n - 2, n - 1, -2, -1});
      break;
    case CartanType::D:
      if (n < 4) throw ConfigError("D_n requires rank >= 4");
      chain(n - 1);
      e.push_back({n - 3, n - 1, -1, -1});
      break;
    case CartanType::E:
      if (n != 6) throw ConfigError("only E6 is supported (rank guard 6)");
      // Bourbaki numbering: branch node 4 carries nodes 2, 3, 5.
      e.push_back({0, 2, -1, -1});
      e.push_back({2, 3, -1, -1});
      e.push_back({3, 4, -1, -1});
      e.push_back({4, 5, -1, -1});
      e.push_back({1, 3, -1, -1});
      break;
    case CartanType::F:
      if (n != 4) throw ConfigError("F requires rank 4");
      chain(4);
      e[1] = {1, 2, -1, -2};  // alpha_2 long, alpha_3 short
      break;
    case CartanType::G:
      if (n != 2) throw ConfigError("G requires rank 2");
      e.push_back({0, 1, -3, -1});  // alpha_1 short, alpha_2 long
      break;
  }
  return e;
}

// Cofactor-expansion determinant; ranks in play are at most 6.
Int det_rec(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int acc = 0;
  std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
  for (std::size_t k = 0; k < n; ++k) {
    if (m[0][k] == 0) continue;
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != k) minor[r - 1][cc++] = m[r][c];
    }
    Int d = det_rec(minor);
    acc += ((k % 2 == 0) ? d : -d) * m[0][k];
  }
  return acc;
}

}  // namespace

RootSystem::RootSystem(CartanType type, int rank) : type_(type), rank_(rank) {
  if (rank < 1) throw ConfigError("rank must be positive");
  if (rank > kRankGuard)
    throw ConfigError("rank " + std::to_string(rank) + " exceeds the guard (" +
                      std::to_string(kRankGuard) + ")");
  const std::size_t n = static_cast<std::size_t>(rank);
  cartan_ = IMatrix(n, Expo(n, 0));
  for (std::size_t i = 0; i < n; ++i) cartan_[i][i] = 2;
  for (const Edge& e : dynkin_edges(type, rank)) {
    cartan_[static_cast<std::size_t>(e.i)][static_cast<std::size_t>(e.j)] = e.ij;
    cartan_[static_cast<std::size_t>(e.j)][static_cast<std::size_t>(e.i)] = e.ji;
  }

  simple_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    simple_[j].c.resize(n);
    for (std::size_t i = 0; i < n; ++i) simple_[j].c[i] = cartan_[i][j];
  }

  // Symmetrizer: d_i * cartan[i][j] == d_j * cartan[j][i], minimal positive integers.
  // Propagate ratios along the (connected) Dynkin graph, then clear denominators.
  std::vector<std::pair<Coord, Coord>> frac(n, {0, 1});  // d_i as num/den
  frac[0] = {1, 1};
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || cartan_[i][j] == 0) continue;
        if (frac[i].first != 0 && frac[j].first == 0) {
          // d_j = d_i * cartan[i][j] / cartan[j][i]
          frac[j] = {frac[i].first * cartan_[i][j], frac[i].second * cartan_[j][i]};
          changed = true;
        }
      }
  }
  Coord lcm_den = 1;
  for (auto& [num, den] : frac) {
    if (num == 0) throw InvariantViolation("disconnected Dynkin diagram");
    if (den < 0) { den = -den; num = -num; }
    lcm_den = std::lcm(lcm_den, den);
  }
  symmetrizer_.resize(n);
  Coord g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    symmetrizer_[i] = frac[i].first * (lcm_den / frac[i].second);
    g = std::gcd(g, symmetrizer_[i]);
  }
  for (auto& d : symmetrizer_) d /= g;

  // Exact Cartan inverse data for root_coords.
  std::vector<std::vector<Int>> ci(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ci[i][j] = cartan_[i][j];
  cartan_det_ = det_rec(ci);
  cartan_adj_.assign(n, std::vector<Int>(n));
  std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc++] = ci[r][c];
        }
        ++rr;
      }
      Int cof = (n == 1) ? Int(1) : det_rec(minor);
      cartan_adj_[j][i] = (((i + j) % 2) == 0) ? cof : -cof;  // adjugate = transposed cofactors
    }

  // Positive roots: closure of the simple roots under simple reflections,
  // keeping the orbit elements with nonnegative simple-root coordinates.
  std::map<Expo, Expo> seen;  // fundamental coords -> root coords
  std::vector<Weight> queue;
  for (std::size_t j = 0; j < n; ++j) {
    Expo rc(n, 0);
    rc[j] = 1;
    seen.emplace(simple_[j].c, rc);
    queue.push_back(simple_[j]);
  }
  while (!queue.empty()) {
    Weight beta = queue.back();
    queue.pop_back();
    Expo beta_rc = seen.at(beta.c);
    for (int i = 0; i < rank; ++i) {
      Weight gamma = reflect(i, beta);
      Expo grc = beta_rc;
      grc[static_cast<std::size_t>(i)] -= pairing(beta, i);
      bool nonneg = std::all_of(grc.begin(), grc.end(), [](Coord x) { return x >= 0; });
      if (!nonneg) continue;  // s_i sends only alpha_i negative among positives
      if (seen.emplace(gamma.c, grc).second) queue.push_back(gamma);
    }
  }
  for (const auto& [fc, rc] : seen) {
    positive_.push_back(Weight{fc});
    positive_rc_.push_back(rc);
  }
}

Weight RootSystem::reflect(int i, const Weight& lambda) const {
  if (i < 0 || i >= rank_) throw ConfigError("simple-root index out of range");
  Coord k = pairing(lambda, i);
  Weight r = lambda;
  for (int j = 0; j < rank_; ++j)
    r.c[static_cast<std::size_t>(j)] -= k * cartan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return r;
}

IMatrix RootSystem::reflection_matrix(int i) const {
  if (i < 0 || i >= rank_) throw ConfigError("simple-root index out of range");
  const std::size_t n = static_cast<std::size_t>(rank_), ii = static_cast<std::size_t>(i);
  IMatrix m = identity_matrix(n);
  for (std::size_t j = 0; j < n; ++j) m[j][ii] -= cartan_[j][ii];
  return m;
}

std::optional<Expo> RootSystem::root_coords(const Weight& lambda) const {
  const std::size_t n = static_cast<std::size_t>(rank_);
  Expo out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += cartan_adj_[i][j] * lambda.c[j];
    if (acc % cartan_det_ != 0) return std::nullopt;
    Int q = acc / cartan_det_;
    out[i] = static_cast<Coord>(q);
  }
  return out;
}

Coord RootSystem::coroot_pairing(const Weight& lambda, const Expo& beta_rc) const {
  const std::size_t n = static_cast<std::size_t>(rank_);
  // beta^vee = sum_j (m_j d_j / d_beta) alpha_j^vee with d_beta = (beta,beta)/2.
  Coord num = 0, dbeta = 0;
  Expo beta_fc(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) beta_fc[i] += cartan_[i][j] * beta_rc[j];
  for (std::size_t j = 0; j < n; ++j) {
    num += beta_rc[j] * symmetrizer_[j] * lambda.c[j];
    dbeta += beta_rc[j] * symmetrizer_[j] * beta_fc[j];
  }
  dbeta /= 2;
  if (dbeta == 0 || num % dbeta != 0)
    throw InvariantViolation("coroot pairing is not integral; input is not a root");
  return num / dbeta;
}

std::optional<int> RootSystem::positive_root_index(const Expo& rc) const {
  for (std::size_t k = 0; k < positive_rc_.size(); ++k)
    if (positive_rc_[k] == rc) return static_cast<int>(k);
  return std::nullopt;
}

}  // namespace kflag
