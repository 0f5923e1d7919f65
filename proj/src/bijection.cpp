#include "qbgc/bijection.hpp"

#include <algorithm>

namespace qbgc {

XiContext::XiContext(const WeylGroup& W, const Weight& lambda)
    : W_(&W),
      lambda_(lambda),
      alcove_(W, lambda),
      qls_(W, lambda),
      labels_outside_S_(labels_outside(W.cartan(), qls_.S())) {}

QlsPath XiContext::xi(const AlcovePath& p) const {
  const InversionTable& table = alcove_.table();
  int r = static_cast<int>(p.J.size());

  // Group boundaries u_0 = 0 <= u_1 < ... < u_s = r over runs of equal d;
  // the group at d = 0 may be empty, which is exactly the d_{j_1} > 0 case.
  std::vector<int> u = {0};
  std::vector<Rat> sigma = {Rat(0)};
  int i = 0;
  while (i < r && table.entry(p.J[i]).d == Rat(0)) ++i;
  u.push_back(i);
  while (i < r) {
    Rat d = table.entry(p.J[i]).d;
    ensure(d > sigma.back(), "selected indices are not <'-sorted");
    sigma.push_back(d);
    while (i < r && table.entry(p.J[i]).d == d) ++i;
    u.push_back(i);
  }
  sigma.push_back(Rat(1));
  int s = static_cast<int>(u.size()) - 1;
  ensure(s >= 1 && static_cast<int>(sigma.size()) == s + 1, "inconsistent grouping");

  QlsPath eta;
  eta.breaks = std::move(sigma);
  int prev_floor = -1;
  for (int pn = 1; pn <= s; ++pn) {
    int x = p.chain[u[pn]].direction;                        // x_{u_p}
    int wp = W_->multiply(x, W_->longest());                 // w_p = x_{u_p} w0
    int floor_wp = W_->coset_min(wp, qls_.S());
    ensure(floor_wp != prev_floor, "adjacent projected directions must differ");
    prev_floor = floor_wp;
    eta.vertices.push_back(floor_wp);
  }
  ensure(qls_.condition_c(eta), "image of xi violates the QLS condition");
  return eta;
}

AlcovePath XiContext::xi_inverse(const QlsPath& eta, int w) const {
  require(qls_.condition_c(eta), "not a QLS path of this shape");
  const InversionTable& table = alcove_.table();
  const QuantumBruhatGraph& graph = alcove_.qbg();
  const CartanDatum& cartan = W_->cartan();
  int s = eta.segments();

  std::vector<int> indices;
  int v_prev = W_->multiply(w, W_->longest());  // v_0 = w w0
  for (int pn = 0; pn < s; ++pn) {
    // v_{p+1} = min(y_{p+1} W_S, <=_{v_p})
    int v_next = tilted_min(graph, W_->coset_of(eta.vertices[pn], qls_.S()), v_prev);

    // Admissible labels: outside Delta_S+ and sigma-admissible for tau_p.
    // The restriction only depends on the label.
    const Rat& tau = eta.breaks[pn];
    std::vector<char> mask = labels_outside_S_;
    if (tau != Rat(0))
      for (int idx = 0; idx < cartan.num_positive_roots(); ++idx)
        if (mask[idx] && !is_integer(tau * cartan.pairing(lambda_, cartan.positive_coroot(idx))))
          mask[idx] = 0;
    IncreasingPathQuery q;
    q.order = &alcove_.order();
    q.label_allowed = &mask;
    auto steps = increasing_path(graph, graph.vertex_of(v_next), graph.vertex_of(v_prev), q);
    ensure(steps.has_value(), "no admissible increasing path; QLS condition violated");

    for (const PathStep& st : *steps) {
      // Label eps of the v_{p+1} -> v_p path gives the affine root
      // w0 eps^vee + (1 - tau_p) <lambda, eps^vee> deltatilde.
      const CorootVector& eps = cartan.positive_coroot(st.label);
      Rat a = (Rat(1) - tau) * cartan.pairing(lambda_, eps);
      indices.push_back(table.index_of(W_->act_coroot(W_->longest(), eps),
                                       static_cast<int>(to_integer(a))));
    }
    v_prev = v_next;
  }

  std::sort(indices.begin(), indices.end());
  ensure(std::adjacent_find(indices.begin(), indices.end()) == indices.end(),
         "inverse construction produced a repeated table index");

  AlcovePath p;
  p.chain.push_back(alcove_.start(w));
  for (int j : indices) {
    const ExtendedAffineElement& z = p.chain.back();
    int label = table.entry(j).finite_label;
    auto e = graph.edge(graph.vertex_of(z.direction), label);
    ensure(e.has_value(), "reassembled path leaves the quantum Bruhat graph");
    p.J.push_back(j);
    p.chain.push_back(compose(*W_, z, affine_reflection(*W_, table.entry(j).beta_tilde)));
    p.steps.push_back(AlcoveStep{j, label, e->kind});
    ensure(graph.vertex_of(p.chain.back().direction) == e->target,
           "reassembled step disagrees with the graph edge");
  }
  return p;
}

XiContext::Preservation XiContext::check_preservation(const AlcovePath& p, int w) const {
  Preservation out;
  QlsPath eta = xi(p);
  out.end_weight = AlcoveModel::end_weight(p);
  out.qls_weight = qls_.weight(eta);
  out.qwt_degree = alcove_.qwt_deg(p);
  out.deg_anchor = qls_.deg_stats(eta, W_->multiply(w, W_->longest())).deg_up;
  out.weight_match = out.end_weight == out.qls_weight;
  out.degree_match = out.qwt_degree == out.deg_anchor;
  return out;
}

}  // namespace qbgc
