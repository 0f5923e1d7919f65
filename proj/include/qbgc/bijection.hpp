#pragma once

#include "qbgc/qbpaths.hpp"
#include "qbgc/qls.hpp"

namespace qbgc {

// Shared state for the weight- and degree-preserving bijection
// Xi_w : QB(w; t(w0 lambda)) -> QLS(lambda). The inversion table's order <'
// and the reflection order both come from the same fixed reduced word of w0.
class XiContext {
 public:
  XiContext(const WeylGroup& W, const Weight& lambda);

  const WeylGroup& group() const { return *W_; }
  const Weight& lambda() const { return lambda_; }
  const AlcoveModel& alcove() const { return alcove_; }
  const QlsModel& qls() const { return qls_; }
  const ParabolicSubset& S() const { return qls_.S(); }

  // Forward direction: group the steps of p by equal fractional height d,
  // push the group boundaries through right multiplication by w0, and
  // project to W^S.
  QlsPath xi(const AlcovePath& p) const;

  // Inverse, following the surjectivity construction: tilted minima down the
  // path, the unique label-increasing path with labels outside Delta_S+ in
  // each restricted graph, and exact table lookups of the produced affine
  // roots.
  AlcovePath xi_inverse(const QlsPath& eta, int w) const;

  struct Preservation {
    bool weight_match = false;
    bool degree_match = false;
    Weight end_weight;
    Weight qls_weight;
    int qwt_degree = 0;
    long deg_anchor = 0;  // Deg^{w w0}(Xi_w(p))
  };
  Preservation check_preservation(const AlcovePath& p, int w) const;

 private:
  const WeylGroup* W_;
  Weight lambda_;
  AlcoveModel alcove_;
  QlsModel qls_;
  std::vector<char> labels_outside_S_;
};

}  // namespace qbgc
