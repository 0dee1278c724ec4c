#include "kflag/weyl_group.hpp"

#include <algorithm>
#include <deque>

namespace kflag {

WeylGroup::WeylGroup(const RootSystem& rs, std::size_t order_cap) : rs_(rs) {
  const int n = rs.rank();
  std::vector<IMatrix> gen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) gen[static_cast<std::size_t>(i)] = rs.reflection_matrix(i);

  // Breadth-first products of simple reflections.  Queue order makes the
  // recorded word the lexicographically least among the shortest ones.
  matrix_.push_back(identity_matrix(static_cast<std::size_t>(n)));
  length_.push_back(0);
  word_.push_back({});
  index_.emplace(matrix_[0], WeylElt{0});
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t cur = queue.front();
    queue.pop_front();
    right_.emplace_back(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      IMatrix m = matmul(matrix_[cur], gen[static_cast<std::size_t>(i)]);
      auto [it, fresh] = index_.emplace(std::move(m), WeylElt{static_cast<std::uint32_t>(matrix_.size())});
      if (fresh) {
        if (matrix_.size() >= order_cap)
          throw ResourceError("Weyl group order exceeds the configured cap (" +
                              std::to_string(order_cap) + ")");
        matrix_.push_back(it->first);
        length_.push_back(length_[cur] + 1);
        std::vector<int> w = word_[cur];
        w.push_back(i);
        word_.push_back(std::move(w));
        queue.push_back(it->second.id);
      }
      right_[cur][static_cast<std::size_t>(i)] = it->second;
    }
  }
  // BFS by right multiplication reaches ws_i from w, so recorded depths are
  // genuine lengths; elements come out sorted by length.
  longest_ = WeylElt{static_cast<std::uint32_t>(size() - 1)};
  if (length_[longest_.id] != static_cast<int>(rs.positive_roots().size()))
    throw InvariantViolation("l(w0) != |R+|");

  inverse_.resize(size());
  for (std::uint32_t id = 0; id < size(); ++id) {
    WeylElt w{0};
    const auto& word = word_[id];
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = right_mult(w, *it);
    inverse_[id] = w;
  }

  // Reflections: beta = w(alpha_i) for the first (w, i) reaching it gives
  // s_beta = w s_i w^{-1}.
  const auto& pos = rs.positive_roots();
  reflections_.assign(pos.size(), WeylElt{0});
  std::vector<bool> found(pos.size(), false);
  std::size_t remaining = pos.size();
  for (std::uint32_t id = 0; id < size() && remaining > 0; ++id) {
    for (int i = 0; i < n; ++i) {
      Weight beta = act(WeylElt{id}, rs.simple_roots()[static_cast<std::size_t>(i)]);
      auto rc = rs.root_coords(beta);
      if (!rc) throw InvariantViolation("image of a simple root left the root lattice");
      auto k = rs.positive_root_index(*rc);
      if (!k) continue;  // negative root
      if (found[static_cast<std::size_t>(*k)]) continue;
      WeylElt refl = mult(mult(WeylElt{id}, right_mult(identity(), i)), inverse(WeylElt{id}));
      reflections_[static_cast<std::size_t>(*k)] = refl;
      found[static_cast<std::size_t>(*k)] = true;
      --remaining;
    }
  }
  if (remaining) throw InvariantViolation("not every positive root was reached");

  if (size() <= kBruhatTableCap) {
    // Fill by increasing length using the lifting property.
    bruhat_.assign(size(), std::vector<bool>(size(), false));
    bruhat_[0].assign(size(), false);
    bruhat_[0][0] = true;
    for (std::uint32_t w = 1; w < size(); ++w) {
      int i = 0;
      while (!right_descent(WeylElt{w}, i)) ++i;
      std::uint32_t wp = right_mult(WeylElt{w}, i).id;
      for (std::uint32_t v = 0; v < size(); ++v) {
        std::uint32_t vs = right_mult(WeylElt{v}, i).id;
        bruhat_[w][v] = (length_[vs] < length_[v]) ? bruhat_[wp][vs]
                                                   : (bruhat_[wp][v] || bruhat_[wp][vs]);
      }
      bruhat_[w][w] = true;
    }
  }
}

WeylElt WeylGroup::left_mult(int i, WeylElt w) const {
  return inverse(right_mult(inverse(w), i));
}

WeylElt WeylGroup::mult(WeylElt v, WeylElt w) const {
  auto it = index_.find(matmul(matrix_[v.id], matrix_[w.id]));
  if (it == index_.end()) throw InvariantViolation("product left the enumerated group");
  return it->second;
}

bool WeylGroup::bruhat_leq(WeylElt v, WeylElt w) const {
  if (!bruhat_.empty()) return bruhat_[w.id][v.id];
  std::scoped_lock lock(bruhat_mutex_);
  return bruhat_leq_rec(v, w);
}

bool WeylGroup::bruhat_leq_rec(WeylElt v, WeylElt w) const {
  if (v == w) return true;
  if (length(v) >= length(w)) return false;
  std::uint64_t key = (static_cast<std::uint64_t>(v.id) << 32) | w.id;
  auto it = bruhat_memo_.find(key);
  if (it != bruhat_memo_.end()) return it->second;
  int i = 0;
  while (!right_descent(w, i)) ++i;
  WeylElt wp = right_mult(w, i), vs = right_mult(v, i);
  bool res = (length(vs) < length(v)) ? bruhat_leq_rec(vs, wp)
                                      : (bruhat_leq_rec(v, wp) || bruhat_leq_rec(vs, wp));
  bruhat_memo_.emplace(key, res);
  return res;
}

WeylElt WeylGroup::demazure_product(std::span<const int> word) const {
  WeylElt w = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) throw ConfigError("simple-reflection index out of range");
    WeylElt ws = right_mult(w, i);
    if (length(ws) > length(w)) w = ws;
  }
  return w;
}

std::vector<WeylElt> WeylGroup::minimal_coset_reps(const std::vector<int>& parabolic) const {
  for (int i : parabolic)
    if (i < 0 || i >= rank()) throw ConfigError("parabolic index out of range");
  std::vector<WeylElt> reps;
  for (std::uint32_t id = 0; id < size(); ++id) {
    WeylElt w{id};
    bool minimal = std::all_of(parabolic.begin(), parabolic.end(),
                               [&](int i) { return !right_descent(w, i); });
    if (minimal) reps.push_back(w);
  }
  return reps;  // generation order is (length, word) sorted already
}

std::vector<WeylElt> WeylGroup::parabolic_subgroup(const std::vector<int>& parabolic) const {
  std::vector<bool> in(size(), false);
  in[0] = true;
  std::deque<WeylElt> queue{identity()};
  std::vector<WeylElt> out{identity()};
  while (!queue.empty()) {
    WeylElt w = queue.front();
    queue.pop_front();
    for (int i : parabolic) {
      WeylElt ws = right_mult(w, i);
      if (!in[ws.id]) {
        in[ws.id] = true;
        out.push_back(ws);
        queue.push_back(ws);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElt> WeylGroup::elements() const {
  std::vector<WeylElt> all(size());
  for (std::uint32_t id = 0; id < size(); ++id) all[id] = WeylElt{id};
  return all;
}

std::uint64_t WeylGroup::words_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const auto& w : word_) {
    mix(w.size());
    for (int i : w) mix(static_cast<std::uint64_t>(i) + 1);
  }
  return h;
}

}  // namespace kflag
