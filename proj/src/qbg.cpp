#include "qbgc/qbg.hpp"

#include <algorithm>
#include <deque>

namespace qbgc {

QuantumBruhatGraph QuantumBruhatGraph::build(const WeylGroup& W) {
  return build_parabolic(W, ParabolicSubset{});
}

QuantumBruhatGraph QuantumBruhatGraph::build_parabolic(const WeylGroup& W,
                                                       const ParabolicSubset& S) {
  const CartanDatum& cartan = W.cartan();
  QuantumBruhatGraph g;
  g.group_ = &W;
  g.S_ = S;
  g.vertex_elems_ = W.min_coset_reps(S);

  g.vertex_of_elem_.assign(W.size(), -1);
  std::vector<int> vertex_of_rep(W.size(), -1);
  for (int v = 0; v < static_cast<int>(g.vertex_elems_.size()); ++v)
    vertex_of_rep[g.vertex_elems_[v]] = v;
  for (int w = 0; w < W.size(); ++w) g.vertex_of_elem_[w] = vertex_of_rep[W.coset_min(w, S)];

  g.slot_of_label_.assign(cartan.num_positive_roots(), -1);
  for (int idx = 0; idx < cartan.num_positive_roots(); ++idx) {
    if (cartan.root_in_span(idx, S)) continue;
    g.slot_of_label_[idx] = static_cast<int>(g.labels_.size());
    g.labels_.push_back(idx);
  }

  const RootVector two_rho_diff = [&] {
    RootVector t = cartan.two_rho();
    RootVector ts = cartan.two_rho_of(S);
    for (int i = 0; i < cartan.rank(); ++i) t.coords[i] -= ts.coords[i];
    return t;
  }();

  int nv = g.num_vertices();
  int nslots = static_cast<int>(g.labels_.size());
  g.adjacency_.assign(nv, {});
  g.edge_at_.assign(static_cast<std::size_t>(nv) * nslots, -1);

  for (int v = 0; v < nv; ++v) {
    int u_elem = g.vertex_elems_[v];
    for (int slot = 0; slot < nslots; ++slot) {
      int root_idx = g.labels_[slot];
      int target_elem = W.coset_min(W.multiply(u_elem, W.reflection(root_idx)), S);
      int lu = W.length(u_elem);
      int lv = W.length(target_elem);
      // t2 = <2(rho - rho_S), beta^vee>, so the quantum condition
      // l(v) = l(u) - 2<rho - rho_S, beta^vee> + 1 stays in integers.
      long t2 = cartan.pairing_root_coroot(two_rho_diff, cartan.positive_coroot(root_idx));
      std::optional<EdgeKind> kind;
      if (lv == lu + 1)
        kind = EdgeKind::bruhat;
      else if (lv == lu - t2 + 1)
        kind = EdgeKind::quantum;
      if (!kind) continue;
      QbgEdge e{v, vertex_of_rep[target_elem], root_idx, *kind};
      g.edge_at_[static_cast<std::size_t>(v) * nslots + slot] = static_cast<int>(g.edges_.size());
      g.adjacency_[v].push_back(static_cast<int>(g.edges_.size()));
      g.edges_.push_back(e);
    }
    ensure(!g.adjacency_[v].empty() || nv == 1, "vertex with no outgoing edges");
  }

  g.run_bfs();
  return g;
}

void QuantumBruhatGraph::run_bfs() {
  int nv = num_vertices();
  dist_.assign(static_cast<std::size_t>(nv) * nv, -1);
  parent_edge_.assign(static_cast<std::size_t>(nv) * nv, -1);
  for (int src = 0; src < nv; ++src) {
    auto* dist_row = &dist_[static_cast<std::size_t>(src) * nv];
    auto* parent_row = &parent_edge_[static_cast<std::size_t>(src) * nv];
    dist_row[src] = 0;
    std::deque<int> queue = {src};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e_idx : adjacency_[u]) {
        const QbgEdge& e = edges_[e_idx];
        if (dist_row[e.target] >= 0) continue;
        dist_row[e.target] = static_cast<std::int16_t>(dist_row[u] + 1);
        parent_row[e.target] = e_idx;
        queue.push_back(e.target);
      }
    }
    for (int v = 0; v < nv; ++v)
      ensure(dist_row[v] >= 0, "quantum Bruhat graph is not strongly connected");
  }
}

int QuantumBruhatGraph::vertex_of(int weyl_elem) const { return vertex_of_elem_[weyl_elem]; }

std::optional<QbgEdge> QuantumBruhatGraph::edge(int u, int root_idx) const {
  int slot = slot_of_label_[root_idx];
  if (slot < 0) return std::nullopt;
  int e = edge_at_[static_cast<std::size_t>(u) * labels_.size() + slot];
  if (e < 0) return std::nullopt;
  return edges_[e];
}

std::vector<PathStep> QuantumBruhatGraph::shortest_path(int u, int v) const {
  std::vector<PathStep> steps;
  const auto* parent_row = &parent_edge_[static_cast<std::size_t>(u) * num_vertices()];
  int cur = v;
  while (cur != u) {
    const QbgEdge& e = edges_[parent_row[cur]];
    steps.push_back(PathStep{e.source, e.target, e.label, e.kind});
    cur = e.source;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

CorootVector QuantumBruhatGraph::path_weight(int u, int v) const {
  CorootVector wt(std::vector<int>(group_->rank(), 0));
  for (const PathStep& s : shortest_path(u, v))
    if (s.kind == EdgeKind::quantum) wt = wt + group_->cartan().positive_coroot(s.label);
  return wt;
}

long QuantumBruhatGraph::wt_lambda(int u, int v, const Weight& lambda) const {
  return group_->cartan().pairing(lambda, path_weight(u, v));
}

SigmaSubgraph::SigmaSubgraph(const QuantumBruhatGraph& base, const Weight& lambda,
                             const Rat& sigma)
    : base_(&base), sigma_(sigma) {
  require(sigma >= Rat(0) && sigma <= Rat(1), "sigma must lie in [0,1]");
  const CartanDatum& cartan = base.group().cartan();
  keep_.assign(cartan.num_positive_roots(), 0);
  for (int idx : base.labels())
    keep_[idx] = is_integer(sigma * cartan.pairing(lambda, cartan.positive_coroot(idx))) ? 1 : 0;

  int nv = base.num_vertices();
  dist_.assign(static_cast<std::size_t>(nv) * nv, -1);
  for (int src = 0; src < nv; ++src) {
    auto* row = &dist_[static_cast<std::size_t>(src) * nv];
    row[src] = 0;
    std::deque<int> queue = {src};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e_idx : base.out_edges(u)) {
        const QbgEdge& e = base.edges()[e_idx];
        if (!keep_[e.label] || row[e.target] >= 0) continue;
        row[e.target] = static_cast<std::int16_t>(row[u] + 1);
        queue.push_back(e.target);
      }
    }
  }
}

namespace {

void increasing_dfs(const QuantumBruhatGraph& g, int cur, int target, int min_pos,
                    const IncreasingPathQuery& q, std::vector<PathStep>& prefix,
                    std::vector<std::vector<PathStep>>& found) {
  if (cur == target && !prefix.empty()) found.push_back(prefix);
  // Labels strictly increase along a path, so depth is bounded by |Delta+|
  // and the recursion tree stays small.
  const auto& ascending = q.order->ascending;
  for (int pos = min_pos; pos < static_cast<int>(ascending.size()); ++pos) {
    int root_idx = q.decreasing ? ascending[ascending.size() - 1 - pos] : ascending[pos];
    if (q.label_allowed && !(*q.label_allowed)[root_idx]) continue;
    if (q.restriction && !q.restriction->keeps_label(root_idx)) continue;
    auto e = g.edge(cur, root_idx);
    if (!e) continue;
    prefix.push_back(PathStep{e->source, e->target, e->label, e->kind});
    increasing_dfs(g, e->target, target, pos + 1, q, prefix, found);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<PathStep>> increasing_paths(const QuantumBruhatGraph& g, int u, int v,
                                                    const IncreasingPathQuery& q) {
  require(q.order != nullptr, "increasing_paths needs a reflection order");
  std::vector<std::vector<PathStep>> found;
  if (u == v) found.push_back({});
  std::vector<PathStep> prefix;
  increasing_dfs(g, u, v, 0, q, prefix, found);
  return found;
}

std::optional<std::vector<PathStep>> increasing_path(const QuantumBruhatGraph& g, int u, int v,
                                                     const IncreasingPathQuery& q) {
  auto all = increasing_paths(g, u, v, q);
  if (all.empty()) return std::nullopt;
  ensure(all.size() == 1, "label-increasing path is not unique");
  return all.front();
}

bool tilted_leq(const QuantumBruhatGraph& g, int w, int u, int v) {
  int wu = g.vertex_of(u), wv = g.vertex_of(v), ww = g.vertex_of(w);
  return g.distance(wv, ww) == g.distance(wv, wu) + g.distance(wu, ww);
}

int tilted_min(const QuantumBruhatGraph& g, const std::vector<int>& coset, int ref) {
  int best = -1;
  for (int x : coset) {
    bool minimal = true;
    for (int y : coset)
      if (!tilted_leq(g, ref, x, y)) {
        minimal = false;
        break;
      }
    if (minimal) {
      ensure(best < 0, "tilted minimum is not unique");
      best = x;
    }
  }
  ensure(best >= 0, "coset has no tilted minimum");
  return best;
}

std::vector<char> labels_outside(const CartanDatum& cartan, const ParabolicSubset& S) {
  std::vector<char> mask(cartan.num_positive_roots(), 0);
  for (int idx = 0; idx < cartan.num_positive_roots(); ++idx)
    mask[idx] = cartan.root_in_span(idx, S) ? 0 : 1;
  return mask;
}

}  // namespace qbgc
