#pragma once

#include <mutex>
#include <vector>

#include "qbgc/charpoly.hpp"
#include "qbgc/qbg.hpp"
#include "qbgc/rational.hpp"

namespace qbgc {

// (w_1, ..., w_s ; 0 = sigma_0 < ... < sigma_s = 1) with vertices in W^S,
// adjacent vertices distinct, and a directed path from w_{i+1} to w_i in
// QBG_{sigma_i lambda}(W^S) at each interior break.
struct QlsPath {
  std::vector<int> vertices;  // Weyl element indices of W^S representatives
  std::vector<Rat> breaks;    // size s + 1

  int segments() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const QlsPath&, const QlsPath&) = default;
};

struct DegStats {
  long deg_star_up = 0;    // Deg*
  long deg_star_down = 0;  // Deg_*
  long deg_up = 0;         // Deg^w
  long deg_down = 0;       // Deg_w
};

// Enumeration and statistics for QLS(lambda). Interior breaks necessarily
// lie in Sigma(lambda) = { c / <lambda, beta^vee> : beta in Delta+ \ Delta_S+,
// 0 < c < <lambda, beta^vee> }, since a nonempty sigma-admissible path forces
// sigma <lambda, beta^vee> in Z for some admissible label beta. Reachability
// of QBG_{sigma lambda}(W^S) is cached per candidate sigma.
class QlsModel {
 public:
  QlsModel(const WeylGroup& W, const Weight& lambda);

  const WeylGroup& group() const { return *W_; }
  const Weight& lambda() const { return lambda_; }
  const ParabolicSubset& S() const { return S_; }
  const QuantumBruhatGraph& parabolic_graph() const { return graph_; }
  const std::vector<Rat>& sigma_candidates() const { return sigmas_; }
  const SigmaSubgraph& restricted(int sigma_idx) const { return restricted_[sigma_idx]; }

  const std::vector<QlsPath>& paths() const;  // enumerated once, cached
  std::vector<QlsPath> enumerate(int jobs) const;

  bool condition_c(const QlsPath& p) const;
  // (C'): some unrestricted-shortest path realizes each restricted hop.
  bool condition_c_prime(const QlsPath& p) const;

  Weight weight(const QlsPath& p) const;
  // wt_lambda between arbitrary Weyl elements through the coset projection.
  long wt_lambda_floor(int x_elem, int y_elem) const;
  DegStats deg_stats(const QlsPath& p, int w) const;

  GradedCharacter gch_up(int w) const;    // sum q^{-Deg^w} e^{wt}
  GradedCharacter gch_down(int w) const;  // sum q^{-Deg_w} e^{wt}

  QlsPath lusztig_T(const QlsPath& p) const;

 private:
  int sigma_index(const Rat& sigma) const;  // -1 if not a candidate

  const WeylGroup* W_;
  Weight lambda_;
  ParabolicSubset S_;
  QuantumBruhatGraph graph_;
  std::vector<Rat> sigmas_;
  std::vector<SigmaSubgraph> restricted_;
  std::vector<long> wt_matrix_;  // wt_lambda between W^S vertices

  mutable std::vector<QlsPath> cache_;
  mutable std::once_flag cache_once_;
};

}  // namespace qbgc
