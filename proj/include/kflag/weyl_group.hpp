#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "kflag/root_system.hpp"
#include "kflag/types.hpp"

namespace kflag {

/// Handle to a Weyl group element; valid only for the group that issued it.
struct WeylElt {
  std::uint32_t id = 0;
  auto operator<=>(const WeylElt&) const = default;
};

/// The full Weyl group of a root system, enumerated once and immutable after
/// construction.  Elements are canonically the matrices of their action on
/// the weight lattice (equivalently, the images of the simple roots); each
/// carries the lexicographically least reduced word found by breadth-first
/// search, which is the fixed choice used everywhere a word is needed.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 1200;
  // Bruhat comparisons are precomputed as a bit-relation up to this size and
  // answered by memoized recursion above it.
  static constexpr std::size_t kBruhatTableCap = 1200;

  WeylGroup(const RootSystem& rs, std::size_t order_cap = kDefaultOrderCap);
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const RootSystem& roots() const { return rs_; }
  std::size_t size() const { return length_.size(); }
  int rank() const { return rs_.rank(); }

  WeylElt identity() const { return {0}; }
  WeylElt longest() const { return longest_; }

  int length(WeylElt w) const { return length_[w.id]; }
  /// Canonical reduced word, 0-based simple-reflection indices.
  const std::vector<int>& word(WeylElt w) const { return word_[w.id]; }

  const IMatrix& matrix(WeylElt w) const { return matrix_[w.id]; }
  Weight act(WeylElt w, const Weight& lambda) const { return Weight{apply(matrix_[w.id], lambda.c)}; }

  WeylElt right_mult(WeylElt w, int i) const { return right_[w.id][static_cast<std::size_t>(i)]; }
  WeylElt left_mult(int i, WeylElt w) const;
  WeylElt mult(WeylElt v, WeylElt w) const;
  WeylElt inverse(WeylElt w) const { return inverse_[w.id]; }

  /// l(w s_i) < l(w)
  bool right_descent(WeylElt w, int i) const { return length(right_mult(w, i)) < length(w); }

  /// Bruhat order; computed by the lifting property, which is the subword
  /// criterion evaluated against the canonical reduced words.
  bool bruhat_leq(WeylElt v, WeylElt w) const;

  /// Monoid product with s_i^2 = s_i: fold w*s_i = ws_i if it goes up, else w.
  WeylElt demazure_product(std::span<const int> word) const;

  /// The reflection s_beta for the k-th positive root.
  WeylElt reflection(int pos_root_index) const { return reflections_[static_cast<std::size_t>(pos_root_index)]; }

  /// W^P = {w : l(w s_i) > l(w) for all i in parabolic}, sorted by (length, id).
  std::vector<WeylElt> minimal_coset_reps(const std::vector<int>& parabolic) const;

  /// Subgroup W_P generated by the given simple reflections.
  std::vector<WeylElt> parabolic_subgroup(const std::vector<int>& parabolic) const;

  /// All elements, in generation (length-compatible) order.
  std::vector<WeylElt> elements() const;

  /// FNV-1a hash of the canonical reduced words; identifies the word choices
  /// a cache file was produced with.
  std::uint64_t words_hash() const;

 private:
  const RootSystem& rs_;
  std::vector<IMatrix> matrix_;
  std::vector<int> length_;
  std::vector<std::vector<int>> word_;
  std::vector<std::vector<WeylElt>> right_;
  std::vector<WeylElt> inverse_;
  std::vector<WeylElt> reflections_;
  WeylElt longest_;
  std::map<IMatrix, WeylElt> index_;
  std::vector<std::vector<bool>> bruhat_;      // when size() <= kBruhatTableCap
  mutable std::map<std::uint64_t, bool> bruhat_memo_;  // on-demand fallback
  mutable std::mutex bruhat_mutex_;

  bool bruhat_leq_rec(WeylElt v, WeylElt w) const;
};

}  // namespace kflag
