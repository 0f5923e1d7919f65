#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qbgc/rational.hpp"
#include "qbgc/weyl.hpp"

namespace qbgc {

enum class EdgeKind : std::uint8_t { bruhat, quantum };

struct QbgEdge {
  int source;  // vertex ids
  int target;
  int label;   // positive-root index
  EdgeKind kind;
};

struct PathStep {
  int from, to;  // vertex ids
  int label;
  EdgeKind kind;
};

// The (parabolic) quantum Bruhat graph. Vertices are minimal coset
// representatives of W/W_S (all of W when S is empty); an edge
// u -> floor(u s_beta) with label beta in Delta+ \ Delta_S+ exists when the
// length either goes up by one or drops by 2<rho - rho_S, beta^vee> - 1.
// All-pairs BFS data is computed at build time; the graph is immutable
// afterwards.
class QuantumBruhatGraph {
 public:
  static QuantumBruhatGraph build(const WeylGroup& W);  // S = {}
  static QuantumBruhatGraph build_parabolic(const WeylGroup& W, const ParabolicSubset& S);

  const WeylGroup& group() const { return *group_; }
  const ParabolicSubset& parabolic() const { return S_; }

  int num_vertices() const { return static_cast<int>(vertex_elems_.size()); }
  int vertex_element(int v) const { return vertex_elems_[v]; }        // Weyl index
  int vertex_of(int weyl_elem) const;                                 // via coset floor
  const std::vector<int>& labels() const { return labels_; }          // root indices
  int label_slot(int root_idx) const { return slot_of_label_[root_idx]; }

  // Edge with the given label leaving u, if any.
  std::optional<QbgEdge> edge(int u, int root_idx) const;
  const std::vector<QbgEdge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int u) const { return adjacency_[u]; }  // into edges()

  int distance(int u, int v) const { return dist_[static_cast<std::size_t>(u) * num_vertices() + v]; }
  // Sum of coroot labels over the quantum edges of one shortest path.
  CorootVector path_weight(int u, int v) const;
  long wt_lambda(int u, int v, const Weight& lambda) const;
  // One shortest path as recorded by the BFS trees.
  std::vector<PathStep> shortest_path(int u, int v) const;

 private:
  QuantumBruhatGraph() = default;
  void run_bfs();

  const WeylGroup* group_ = nullptr;
  ParabolicSubset S_;
  std::vector<int> vertex_elems_;
  std::vector<int> vertex_of_elem_;   // Weyl index -> vertex of its coset floor
  std::vector<int> labels_;
  std::vector<int> slot_of_label_;    // root index -> slot or -1
  std::vector<QbgEdge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> edge_at_;          // u * nslots + slot -> edge index or -1
  std::vector<std::int16_t> dist_;
  std::vector<int> parent_edge_;      // src * nv + v -> edge index into edges_, -1 at v == src
};

// sigma-restricted subgraph: keeps the edges whose label beta satisfies
// sigma <lambda, beta^vee> in Z. The condition depends only on the label.
class SigmaSubgraph {
 public:
  SigmaSubgraph(const QuantumBruhatGraph& base, const Weight& lambda, const Rat& sigma);

  const QuantumBruhatGraph& base() const { return *base_; }
  const Rat& sigma() const { return sigma_; }
  bool keeps_label(int root_idx) const { return keep_[root_idx]; }
  bool keeps(const QbgEdge& e) const { return keep_[e.label]; }

  bool reachable(int u, int v) const { return distance(u, v) >= 0; }
  int distance(int u, int v) const {  // -1 when unreachable
    return dist_[static_cast<std::size_t>(u) * base_->num_vertices() + v];
  }

 private:
  const QuantumBruhatGraph* base_;
  Rat sigma_;
  std::vector<char> keep_;            // by root index
  std::vector<std::int16_t> dist_;
};

// Query for the unique label-increasing (or -decreasing) directed path.
struct IncreasingPathQuery {
  const ReflectionOrder* order = nullptr;
  bool decreasing = false;                          // use the reversed comparison
  const std::vector<char>* label_allowed = nullptr; // by root index; null = all
  const SigmaSubgraph* restriction = nullptr;       // optional
};

// All directed paths from u to v whose labels strictly increase; the paper
// guarantees at most one under the queries used here, which callers assert.
std::vector<std::vector<PathStep>> increasing_paths(const QuantumBruhatGraph& g, int u, int v,
                                                    const IncreasingPathQuery& q);

// The unique such path, nullopt when none exists (a violated QLS condition),
// InvariantError if uniqueness fails.
std::optional<std::vector<PathStep>> increasing_path(const QuantumBruhatGraph& g, int u, int v,
                                                     const IncreasingPathQuery& q);

// u <=_w v in the w-tilted Bruhat order.
bool tilted_leq(const QuantumBruhatGraph& g, int w, int u, int v);

// min(coset, <=_ref); asserts uniqueness of the minimum. `coset` holds Weyl
// element indices (the graph must be the full one).
int tilted_min(const QuantumBruhatGraph& g, const std::vector<int>& coset, int ref);

// Labels mask Delta+ \ Delta_S+ on the full graph.
std::vector<char> labels_outside(const CartanDatum& cartan, const ParabolicSubset& S);

}  // namespace qbgc
