#include "qbgc/qls.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace qbgc {

QlsModel::QlsModel(const WeylGroup& W, const Weight& lambda)
    : W_(&W),
      lambda_(lambda),
      S_(W.cartan().stabilizer_subset(lambda)),
      graph_(QuantumBruhatGraph::build_parabolic(W, S_)) {
  require(lambda.is_dominant(), "lambda must be dominant");

  std::set<Rat> sigmas;
  for (int idx : graph_.labels()) {
    long m = W.cartan().pairing(lambda, W.cartan().positive_coroot(idx));
    for (long c = 1; c < m; ++c) sigmas.insert(Rat(c, m));
  }
  sigmas_.assign(sigmas.begin(), sigmas.end());
  restricted_.reserve(sigmas_.size());
  for (const Rat& s : sigmas_) restricted_.emplace_back(graph_, lambda_, s);

  int nv = graph_.num_vertices();
  wt_matrix_.assign(static_cast<std::size_t>(nv) * nv, 0);
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v)
      wt_matrix_[static_cast<std::size_t>(u) * nv + v] = graph_.wt_lambda(u, v, lambda_);
}

int QlsModel::sigma_index(const Rat& sigma) const {
  auto it = std::lower_bound(sigmas_.begin(), sigmas_.end(), sigma);
  if (it == sigmas_.end() || *it != sigma) return -1;
  return static_cast<int>(it - sigmas_.begin());
}

std::vector<QlsPath> QlsModel::enumerate(int jobs) const {
  int nv = graph_.num_vertices();
  int ns = static_cast<int>(sigmas_.size());

  // Extend (.., last) by a later break sigma and a next vertex v with
  // v -> last reachable in the sigma-restricted parabolic graph.
  auto expand = [&](const QlsPath& seed, std::vector<QlsPath>& sink) {
    struct Frame {
      QlsPath path;
      int min_sigma;
    };
    std::vector<Frame> stack = {{seed, 0}};
    while (!stack.empty()) {
      Frame cur = std::move(stack.back());
      stack.pop_back();
      std::vector<Frame> children;
      int last = cur.path.vertices.back();
      for (int si = cur.min_sigma; si < ns; ++si)
        for (int v = 0; v < nv; ++v) {
          if (v == last || !restricted_[si].reachable(v, last)) continue;
          QlsPath ext = cur.path;
          ext.vertices.push_back(v);
          ext.breaks.insert(ext.breaks.end() - 1, sigmas_[si]);
          children.push_back({std::move(ext), si + 1});
        }
      sink.push_back(std::move(cur.path));
      for (auto it = children.rbegin(); it != children.rend(); ++it)
        stack.push_back(std::move(*it));
    }
  };

  // expand works in vertex ids; emission translates to Weyl element indices.
  std::vector<QlsPath> seeds;
  for (int v = 0; v < nv; ++v) seeds.push_back(QlsPath{{v}, {Rat(0), Rat(1)}});

  std::vector<std::vector<QlsPath>> buckets(seeds.size());
  if (jobs <= 1 || seeds.size() <= 1) {
    for (std::size_t i = 0; i < seeds.size(); ++i) expand(seeds[i], buckets[i]);
  } else {
    std::vector<std::thread> pool;
    std::size_t nthreads = std::min<std::size_t>(jobs, seeds.size());
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < seeds.size(); i += nthreads) expand(seeds[i], buckets[i]);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<QlsPath> all;
  for (auto& b : buckets)
    for (QlsPath& p : b) {
      for (int& v : p.vertices) v = graph_.vertex_element(v);
      all.push_back(std::move(p));
    }
  return all;
}

const std::vector<QlsPath>& QlsModel::paths() const {
  std::call_once(cache_once_, [&] { cache_ = enumerate(1); });
  return cache_;
}

bool QlsModel::condition_c(const QlsPath& p) const {
  if (p.breaks.front() != Rat(0) || p.breaks.back() != Rat(1)) return false;
  for (std::size_t i = 0; i + 1 < p.breaks.size(); ++i)
    if (!(p.breaks[i] < p.breaks[i + 1])) return false;
  for (int i = 0; i + 1 < p.segments(); ++i) {
    if (p.vertices[i] == p.vertices[i + 1]) return false;
    int si = sigma_index(p.breaks[i + 1]);
    if (si < 0) return false;
    if (!restricted_[si].reachable(graph_.vertex_of(p.vertices[i + 1]),
                                   graph_.vertex_of(p.vertices[i])))
      return false;
  }
  return true;
}

bool QlsModel::condition_c_prime(const QlsPath& p) const {
  if (p.breaks.front() != Rat(0) || p.breaks.back() != Rat(1)) return false;
  for (std::size_t i = 0; i + 1 < p.breaks.size(); ++i)
    if (!(p.breaks[i] < p.breaks[i + 1])) return false;
  for (int i = 0; i + 1 < p.segments(); ++i) {
    if (p.vertices[i] == p.vertices[i + 1]) return false;
    int si = sigma_index(p.breaks[i + 1]);
    if (si < 0) return false;
    int from = graph_.vertex_of(p.vertices[i + 1]);
    int to = graph_.vertex_of(p.vertices[i]);
    // A restricted path of unrestricted-shortest length is exactly a
    // shortest path of QBG(W^S) lying in the restricted subgraph.
    if (restricted_[si].distance(from, to) != graph_.distance(from, to)) return false;
  }
  return true;
}

Weight QlsModel::weight(const QlsPath& p) const {
  int rank = W_->rank();
  std::vector<Rat> acc(rank, Rat(0));
  for (int i = 0; i < p.segments(); ++i) {
    Rat c = p.breaks[i + 1] - p.breaks[i];
    Weight wl = W_->act_weight(p.vertices[i], lambda_);
    for (int k = 0; k < rank; ++k) acc[k] += c * wl.coords[k];
  }
  std::vector<int> out(rank);
  for (int k = 0; k < rank; ++k) out[k] = static_cast<int>(to_integer(acc[k]));
  return Weight(std::move(out));
}

long QlsModel::wt_lambda_floor(int x_elem, int y_elem) const {
  int nv = graph_.num_vertices();
  return wt_matrix_[static_cast<std::size_t>(graph_.vertex_of(x_elem)) * nv +
                    graph_.vertex_of(y_elem)];
}

DegStats QlsModel::deg_stats(const QlsPath& p, int w) const {
  int s = p.segments();
  Rat up(0), down(0);
  for (int i = 1; i <= s - 1; ++i) {
    long m = wt_lambda_floor(p.vertices[i], p.vertices[i - 1]);  // wt(w_{i+1} => w_i)
    up += (Rat(1) - p.breaks[i]) * m;
    down += p.breaks[i] * m;
  }
  DegStats out;
  out.deg_star_up = to_integer(up);
  out.deg_star_down = to_integer(down);
  out.deg_up = out.deg_star_up + wt_lambda_floor(p.vertices.front(), w);
  out.deg_down = out.deg_star_down + wt_lambda_floor(w, p.vertices.back());
  ensure(out.deg_star_up >= 0 && out.deg_star_down >= 0 && out.deg_up >= 0 && out.deg_down >= 0,
         "degree statistics must be nonnegative");
  return out;
}

GradedCharacter QlsModel::gch_up(int w) const {
  GradedCharacter c;
  for (const QlsPath& p : paths()) c.add_term(weight(p), -static_cast<int>(deg_stats(p, w).deg_up), 1);
  return c;
}

GradedCharacter QlsModel::gch_down(int w) const {
  GradedCharacter c;
  for (const QlsPath& p : paths())
    c.add_term(weight(p), -static_cast<int>(deg_stats(p, w).deg_down), 1);
  return c;
}

QlsPath QlsModel::lusztig_T(const QlsPath& p) const {
  QlsPath out;
  int s = p.segments();
  out.vertices.reserve(s);
  for (int i = s - 1; i >= 0; --i)
    out.vertices.push_back(W_->coset_min(W_->multiply(W_->longest(), p.vertices[i]), S_));
  out.breaks.reserve(s + 1);
  for (int i = s; i >= 0; --i) out.breaks.push_back(Rat(1) - p.breaks[i]);
  return out;
}

}  // namespace qbgc
