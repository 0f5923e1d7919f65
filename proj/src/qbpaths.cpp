#include "qbgc/qbpaths.hpp"

#include <algorithm>
#include <thread>

namespace qbgc {

AlcoveModel::AlcoveModel(const WeylGroup& W, const Weight& lambda)
    : W_(&W),
      lambda_(lambda),
      words_(fixed_words_for_lambda(W, lambda)),
      order_(reflection_order(W, words_.w0_word, OrderDirection::reversed)),
      table_(W, lambda, order_),
      qbg_(QuantumBruhatGraph::build(W)) {
  refl_.reserve(table_.size());
  for (int j = 0; j < table_.size(); ++j)
    refl_.push_back(affine_reflection(W, table_.entry(j).beta_tilde));
}

ExtendedAffineElement AlcoveModel::start(int w) const {
  // w t(lambda_-) with dr = w, by (t(0) w)(t(lambda_-) e) = t(w lambda_-) w.
  return ExtendedAffineElement{W_->act_weight(w, table_.lambda_minus()), w};
}

AlcovePath AlcoveModel::empty_path(int w) const {
  AlcovePath p;
  p.chain.push_back(start(w));
  return p;
}

std::optional<AlcovePath> AlcoveModel::try_extend(const AlcovePath& p, int j) const {
  const ExtendedAffineElement& z = p.chain.back();
  int label = table_.entry(j).finite_label;
  auto e = qbg_.edge(qbg_.vertex_of(z.direction), label);
  if (!e) return std::nullopt;
  AlcovePath out = p;
  out.J.push_back(j);
  out.chain.push_back(compose(*W_, z, refl_[j]));
  out.steps.push_back(AlcoveStep{j, label, e->kind});
  ensure(qbg_.vertex_of(out.chain.back().direction) == e->target,
         "alcove step disagrees with the graph edge");
  return out;
}

std::vector<AlcovePath> AlcoveModel::enumerate_qb(int w, int jobs) const {
  int L = table_.size();
  // Subtree below a fixed first index, in index (= <') order.
  auto expand = [&](const AlcovePath& root, std::vector<AlcovePath>& sink) {
    std::vector<AlcovePath> stack = {root};
    while (!stack.empty()) {
      AlcovePath cur = std::move(stack.back());
      stack.pop_back();
      int next = cur.J.empty() ? 0 : cur.J.back() + 1;
      std::vector<AlcovePath> children;
      for (int j = next; j < L; ++j)
        if (auto ext = try_extend(cur, j)) children.push_back(std::move(*ext));
      sink.push_back(std::move(cur));
      for (auto it = children.rbegin(); it != children.rend(); ++it)
        stack.push_back(std::move(*it));
    }
  };

  AlcovePath empty = empty_path(w);
  std::vector<AlcovePath> firsts;
  for (int j = 0; j < L; ++j)
    if (auto ext = try_extend(empty, j)) firsts.push_back(std::move(*ext));

  std::vector<std::vector<AlcovePath>> buckets(firsts.size());
  if (jobs <= 1 || firsts.size() <= 1) {
    for (std::size_t i = 0; i < firsts.size(); ++i) expand(firsts[i], buckets[i]);
  } else {
    std::vector<std::thread> pool;
    std::size_t nthreads = std::min<std::size_t>(jobs, firsts.size());
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < firsts.size(); i += nthreads) expand(firsts[i], buckets[i]);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<AlcovePath> all = {std::move(empty)};
  for (auto& b : buckets)
    for (auto& p : b) all.push_back(std::move(p));
  return all;
}

void AlcoveModel::enumerate_b(int w,
                              const std::function<void(const AlcovePath&, bool)>& sink,
                              int max_length_cap) const {
  int L = table_.size();
  if (L > max_length_cap)
    throw ResourceError("power-set enumeration needs L <= " + std::to_string(max_length_cap) +
                        ", got L = " + std::to_string(L) + "; use the QB enumeration instead");

  // Steps of B-paths ignore the edge condition; kinds are classified against
  // the member lengths directly where an edge exists.
  struct Frame {
    AlcovePath path;
    bool admissible;
  };
  std::vector<Frame> stack = {{empty_path(w), true}};
  while (!stack.empty()) {
    Frame cur = std::move(stack.back());
    stack.pop_back();
    sink(cur.path, cur.admissible);
    int next = cur.path.J.empty() ? 0 : cur.path.J.back() + 1;
    std::vector<Frame> children;
    for (int j = next; j < L; ++j) {
      if (auto ext = try_extend(cur.path, j)) {
        children.push_back({std::move(*ext), cur.admissible});
      } else {
        // Not a graph edge; the recorded kind is meaningless on such steps.
        AlcovePath forced = cur.path;
        forced.J.push_back(j);
        forced.chain.push_back(compose(*W_, forced.chain.back(), refl_[j]));
        forced.steps.push_back(AlcoveStep{j, table_.entry(j).finite_label, EdgeKind::bruhat});
        children.push_back({std::move(forced), false});
      }
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it)
      stack.push_back(std::move(*it));
  }
}

int AlcoveModel::qwt_deg(const AlcovePath& p) const {
  int deg = 0;
  for (const AlcoveStep& s : p.steps)
    if (s.kind == EdgeKind::quantum) deg += table_.entry(s.table_index).a;
  return deg;
}

AffineRoot AlcoveModel::qwt(const AlcovePath& p) const {
  AffineRoot sum{CorootVector(std::vector<int>(W_->rank(), 0)), 0};
  for (const AlcoveStep& s : p.steps) {
    if (s.kind != EdgeKind::quantum) continue;
    const AffineRoot& b = table_.entry(s.table_index).beta_tilde;
    sum.finite = sum.finite + b.finite;
    sum.degree += b.degree;
  }
  return sum;
}

Weight AlcoveModel::end_weight(const AlcovePath& p) { return p.end().translation; }

GradedCharacter AlcoveModel::graded_char(int w, int jobs) const {
  GradedCharacter c;
  for (const AlcovePath& p : enumerate_qb(w, jobs)) c.add_term(end_weight(p), qwt_deg(p), 1);
  return c;
}

}  // namespace qbgc
