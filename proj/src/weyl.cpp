#include "qbgc/weyl.hpp"

#include <algorithm>
#include <deque>

namespace qbgc {

namespace {

std::vector<int> identity_mat(int n) {
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

// Matrix of s_gen on weight coordinates: c |-> c - c[gen] * column_gen(A).
std::vector<int> gen_mat(const CartanDatum& cartan, int gen) {
  int n = cartan.rank();
  std::vector<int> m = identity_mat(n);
  for (int i = 0; i < n; ++i) m[i * n + gen] -= cartan.cartan(i, gen);
  return m;
}

std::vector<int> mat_mult(const std::vector<int>& a, const std::vector<int>& b, int n) {
  std::vector<int> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

}  // namespace

WeylGroup::WeylGroup(const CartanDatum& cartan, const BuildLimits& limits)
    : cartan_(&cartan), rank_(cartan.rank()) {
  std::vector<std::vector<int>> gens(rank_);
  for (int i = 0; i < rank_; ++i) gens[i] = gen_mat(cartan, i);

  mats_.push_back(identity_mat(rank_));
  length_.push_back(0);
  index_of_mat_.emplace(mats_[0], 0);
  right_.push_back(std::vector<int>(rank_, -1));

  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> m = mat_mult(mats_[w], gens[i], rank_);
      auto [it, inserted] = index_of_mat_.emplace(std::move(m), static_cast<int>(mats_.size()));
      if (inserted) {
        if (mats_.size() >= limits.max_group_size)
          throw ResourceError("Weyl group larger than the configured cap " +
                              std::to_string(limits.max_group_size));
        mats_.push_back(it->first);
        length_.push_back(length_[w] + 1);
        right_.push_back(std::vector<int>(rank_, -1));
        queue.push_back(it->second);
      }
      right_[w][i] = it->second;
    }
  }

  int size = static_cast<int>(mats_.size());
  left_.assign(size, std::vector<int>(rank_, -1));
  for (int w = 0; w < size; ++w)
    for (int i = 0; i < rank_; ++i) {
      auto it = index_of_mat_.find(mat_mult(gens[i], mats_[w], rank_));
      ensure(it != index_of_mat_.end(), "group not closed under left multiplication");
      left_[w][i] = it->second;
    }

  // Canonical words by leftmost descent, filled in length order (BFS order
  // already is length order).
  word_.assign(size, {});
  for (int w = 1; w < size; ++w) {
    for (int i = 0; i < rank_; ++i) {
      if (left_descent(i, w)) {
        word_[w] = word_[left_[w][i]];
        word_[w].insert(word_[w].begin(), static_cast<std::uint8_t>(i));
        break;
      }
    }
    ensure(!word_[w].empty(), "non-identity element without a descent");
  }

  inverse_.assign(size, 0);
  for (int w = 0; w < size; ++w) {
    int inv = 0;
    const Word& wd = word_[w];
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) inv = right_[inv][*it];
    inverse_[w] = inv;
  }

  int max_len = 0;
  for (int w = 0; w < size; ++w)
    if (length_[w] > max_len) {
      max_len = length_[w];
      w0_ = w;
    }
  ensure(max_len == cartan.num_positive_roots(), "l(w0) must equal |Delta+|");

  sref_.assign(cartan.num_positive_roots(), -1);
  for (int idx = 0; idx < cartan.num_positive_roots(); ++idx) {
    const Weight beta_w = cartan.weight_of_root(cartan.positive_root(idx));
    const CorootVector& beta_v = cartan.positive_coroot(idx);
    std::vector<int> m(rank_ * rank_);
    for (int i = 0; i < rank_; ++i)
      for (int k = 0; k < rank_; ++k)
        m[i * rank_ + k] = (i == k ? 1 : 0) - beta_w.coords[i] * beta_v.coords[k];
    auto it = index_of_mat_.find(m);
    ensure(it != index_of_mat_.end(), "reflection matrix not found in the group");
    sref_[idx] = it->second;
  }
}

std::string WeylGroup::word_name(int w) const {
  if (w == identity()) return "e";
  std::string s;
  for (std::uint8_t g : word_[w]) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(g + 1);
  }
  return s;
}

int WeylGroup::multiply(int a, int b) const {
  int r = a;
  for (std::uint8_t g : word_[b]) r = right_[r][g];
  return r;
}

int WeylGroup::from_word(const Word& word) const {
  int r = identity();
  for (std::uint8_t g : word) {
    require(g < rank_, "generator index out of range");
    r = right_[r][g];
  }
  return r;
}

Weight WeylGroup::act_weight(int w, const Weight& lambda) const {
  require(static_cast<int>(lambda.coords.size()) == rank_, "weight rank mismatch");
  const std::vector<int>& m = mats_[w];
  std::vector<int> out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += m[i * rank_ + j] * lambda.coords[j];
  return Weight(std::move(out));
}

RootVector WeylGroup::act_root(int w, const RootVector& r) const {
  RootVector out = r;
  const Word& wd = word_[w];
  for (auto it = wd.rbegin(); it != wd.rend(); ++it) out = cartan_->reflect_root(*it, out);
  return out;
}

CorootVector WeylGroup::act_coroot(int w, const CorootVector& c) const {
  CorootVector out = c;
  const Word& wd = word_[w];
  for (auto it = wd.rbegin(); it != wd.rend(); ++it) out = cartan_->reflect_coroot(*it, out);
  return out;
}

int WeylGroup::coset_min(int w, const ParabolicSubset& S) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : S.members) {
      if (right_descent(w, i)) {
        w = right_[w][i];
        moved = true;
      }
    }
  }
  return w;
}

std::vector<int> WeylGroup::subgroup_elements(const ParabolicSubset& S) const {
  std::vector<int> elems = {identity()};
  std::vector<char> seen(size(), 0);
  seen[identity()] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (int i : S.members) {
      int next = right_[elems[head]][i];
      if (!seen[next]) {
        seen[next] = 1;
        elems.push_back(next);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

int WeylGroup::longest_in_subgroup(const ParabolicSubset& S) const {
  int best = identity();
  for (int w : subgroup_elements(S))
    if (length_[w] > length_[best]) best = w;
  return best;
}

std::vector<int> WeylGroup::min_coset_reps(const ParabolicSubset& S) const {
  std::vector<char> is_rep(size(), 0);
  for (int w = 0; w < size(); ++w) is_rep[coset_min(w, S)] = 1;
  std::vector<int> reps;
  for (int w = 0; w < size(); ++w)
    if (is_rep[w]) reps.push_back(w);
  std::stable_sort(reps.begin(), reps.end(),
                   [&](int a, int b) { return length_[a] != length_[b] ? length_[a] < length_[b] : a < b; });
  return reps;
}

std::vector<int> WeylGroup::coset_of(int w, const ParabolicSubset& S) const {
  std::vector<int> out;
  for (int x : subgroup_elements(S)) out.push_back(multiply(w, x));
  std::sort(out.begin(), out.end());
  return out;
}

ReflectionOrder ReflectionOrder::reversed() const {
  ReflectionOrder out;
  out.ascending.assign(ascending.rbegin(), ascending.rend());
  out.position.assign(position.size(), -1);
  for (std::size_t i = 0; i < out.ascending.size(); ++i) out.position[out.ascending[i]] = static_cast<int>(i);
  return out;
}

ReflectionOrder reflection_order(const WeylGroup& W, const Word& word, OrderDirection dir) {
  const CartanDatum& cartan = W.cartan();
  int N = cartan.num_positive_roots();
  require(static_cast<int>(word.size()) == N, "word has wrong length for w0");
  require(W.from_word(word) == W.longest(), "word does not evaluate to w0");

  // beta_k = s_{i_N} ... s_{i_{k+1}} alpha_{i_k}, via the suffix products.
  std::vector<int> betas(N, -1);
  int suffix = W.identity();  // s_{i_N} ... s_{i_{k+1}}
  for (int k = N - 1; k >= 0; --k) {
    std::vector<int> e(cartan.rank(), 0);
    e[word[k]] = 1;
    RootVector beta = W.act_root(suffix, RootVector(std::move(e)));
    betas[k] = cartan.positive_root_index(beta);
    suffix = W.right_mult_gen(suffix, word[k]);
  }

  ReflectionOrder order;
  order.ascending = betas;
  if (dir == OrderDirection::reversed) std::reverse(order.ascending.begin(), order.ascending.end());
  order.position.assign(N, -1);
  for (int i = 0; i < N; ++i) {
    ensure(order.position[order.ascending[i]] < 0, "reduced word of w0 repeats a root");
    order.position[order.ascending[i]] = i;
  }
  return order;
}

FixedWords fixed_words_for_lambda(const WeylGroup& W, const Weight& lambda) {
  require(lambda.is_dominant(), "lambda must be dominant");
  FixedWords fw;
  fw.S = W.cartan().stabilizer_subset(lambda);
  fw.v_elem = W.coset_min(W.longest(), fw.S);
  fw.lons_elem = W.longest_in_subgroup(fw.S);
  fw.v_word = W.canonical_word(fw.v_elem);
  fw.lons_word = W.canonical_word(fw.lons_elem);
  fw.w0_word = fw.v_word;
  fw.w0_word.insert(fw.w0_word.end(), fw.lons_word.begin(), fw.lons_word.end());
  fw.boundary = static_cast<int>(fw.v_word.size());

  ensure(W.act_weight(fw.v_elem, lambda) == W.act_weight(W.longest(), lambda),
         "v(lambda_-) does not send lambda to w0 lambda");
  ensure(W.length(fw.v_elem) + W.length(fw.lons_elem) == W.length(W.longest()),
         "lengths of v(lambda_-) and w0^S are not additive");
  ensure(W.from_word(fw.w0_word) == W.longest(), "concatenated word is not w0");
  return fw;
}

}  // namespace qbgc
