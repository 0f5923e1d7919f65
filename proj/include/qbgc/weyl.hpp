#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbgc/cartan.hpp"

namespace qbgc {

using Word = std::vector<std::uint8_t>;  // generator indices, 0-based

// The full Weyl group, enumerated once. Elements are identified by their
// action matrix on weight coordinates and addressed by a dense index; the
// identity is index 0. Words are derived data: canonical_word(w) is the
// lexicographically smallest reduced word, obtained by leftmost-descent
// recursion.
class WeylGroup {
 public:
  explicit WeylGroup(const CartanDatum& cartan, const BuildLimits& limits = {});

  const CartanDatum& cartan() const { return *cartan_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(mats_.size()); }
  int identity() const { return 0; }
  int longest() const { return w0_; }

  int length(int w) const { return length_[w]; }
  const Word& canonical_word(int w) const { return word_[w]; }
  std::string word_name(int w) const;  // "e" or "s1 s2 s1"

  int right_mult_gen(int w, int gen) const { return right_[w][gen]; }
  int left_mult_gen(int gen, int w) const { return left_[w][gen]; }
  int multiply(int a, int b) const;
  int inverse(int w) const { return inverse_[w]; }
  int from_word(const Word& word) const;  // not required to be reduced

  // Element index of the reflection s_beta for a positive root index.
  int reflection(int root_idx) const { return sref_[root_idx]; }

  Weight act_weight(int w, const Weight& lambda) const;
  RootVector act_root(int w, const RootVector& r) const;
  CorootVector act_coroot(int w, const CorootVector& c) const;

  bool left_descent(int gen, int w) const { return length_[left_[w][gen]] < length_[w]; }
  bool right_descent(int w, int gen) const { return length_[right_[w][gen]] < length_[w]; }

  // Minimal-length representative of w W_S.
  int coset_min(int w, const ParabolicSubset& S) const;
  // Elements of W_S, ascending by index.
  std::vector<int> subgroup_elements(const ParabolicSubset& S) const;
  int longest_in_subgroup(const ParabolicSubset& S) const;
  // W^S ascending by (length, index).
  std::vector<int> min_coset_reps(const ParabolicSubset& S) const;
  // All of w W_S, ascending by index.
  std::vector<int> coset_of(int w, const ParabolicSubset& S) const;

 private:
  const CartanDatum* cartan_;
  int rank_;
  std::vector<std::vector<int>> mats_;  // rank*rank row-major weight action
  std::vector<int> length_;
  std::vector<Word> word_;
  std::vector<std::vector<int>> right_, left_;
  std::vector<int> inverse_;
  std::vector<int> sref_;
  std::map<std::vector<int>, int> index_of_mat_;
  int w0_ = -1;
};

// Total order beta_(1) < beta_(2) < ... on the positive roots obtained from a
// reduced word of w0 via suffix products; `positions` inverts `ascending`.
struct ReflectionOrder {
  std::vector<int> ascending;  // positive-root indices, smallest first
  std::vector<int> position;   // root index -> place in `ascending`

  bool less(int a, int b) const { return position[a] < position[b]; }
  ReflectionOrder reversed() const;
};

enum class OrderDirection {
  forward,   // beta_1 < beta_2 < ... (Section-2 style)
  reversed,  // beta_1 > beta_2 > ... (fixed order used by the bijection)
};

// word must be a reduced word for w0; beta_k = s_{i_N} ... s_{i_{k+1}} alpha_{i_k}.
ReflectionOrder reflection_order(const WeylGroup& W, const Word& word, OrderDirection dir);

// Data fixed once per dominant lambda: S = S_lambda, reduced words for
// v(lambda_-) and for the longest element of W_S, and their concatenation as
// the fixed reduced word for w0.
struct FixedWords {
  ParabolicSubset S;
  int v_elem = 0;     // v(lambda_-), the minimal representative of w0 W_S
  int lons_elem = 0;  // longest element of W_S
  Word v_word, lons_word, w0_word;
  int boundary = 0;  // M = l(v(lambda_-)); w0_word[0..M) moves lambda
};

FixedWords fixed_words_for_lambda(const WeylGroup& W, const Weight& lambda);

}  // namespace qbgc
