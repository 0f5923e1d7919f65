#include "qbgc/affine.hpp"

#include <algorithm>

namespace qbgc {

ExtendedAffineElement translation_element(const Weight& nu) {
  return ExtendedAffineElement{nu, 0};
}

ExtendedAffineElement compose(const WeylGroup& W, const ExtendedAffineElement& a,
                              const ExtendedAffineElement& b) {
  // (t(nu) v)(t(mu) u) = t(nu + v mu)(v u)
  return ExtendedAffineElement{a.translation + W.act_weight(a.direction, b.translation),
                               W.multiply(a.direction, b.direction)};
}

ExtendedAffineElement invert(const WeylGroup& W, const ExtendedAffineElement& a) {
  int vinv = W.inverse(a.direction);
  return ExtendedAffineElement{-W.act_weight(vinv, a.translation), vinv};
}

bool equal(const ExtendedAffineElement& a, const ExtendedAffineElement& b) {
  return a.direction == b.direction && a.translation == b.translation;
}

ExtendedAffineElement affine_reflection(const WeylGroup& W, const AffineRoot& root) {
  const CartanDatum& cartan = W.cartan();
  bool zero = std::all_of(root.finite.coords.begin(), root.finite.coords.end(),
                          [](int c) { return c == 0; });
  require(!zero, "affine reflection needs a nonzero finite part");
  RootVector alpha = cartan.root_of(root.finite);
  std::vector<int> scaled(cartan.rank());
  for (int i = 0; i < cartan.rank(); ++i) scaled[i] = -root.degree * alpha.coords[i];
  Weight tr = cartan.weight_of_root(RootVector(std::move(scaled)));
  auto cls = cartan.classify_root(alpha);
  return ExtendedAffineElement{tr, W.reflection(cls->first)};
}

InversionTable::InversionTable(const WeylGroup& W, const Weight& lambda,
                               const ReflectionOrder& order)
    : lambda_(lambda) {
  require(lambda.is_dominant(), "lambda must be dominant");
  const CartanDatum& cartan = W.cartan();
  lambda_minus_ = W.act_weight(W.longest(), lambda);

  for (int idx = 0; idx < cartan.num_positive_roots(); ++idx) {
    CorootVector finite = -cartan.positive_coroot(idx);
    long m = cartan.pairing(lambda_minus_, finite);  // <lambda_-, -alpha^vee>
    ensure(m >= 0, "antidominant pairing must be >= 0 on negated positive coroots");
    if (m == 0) continue;
    RootVector proj = W.act_root(W.longest(), -cartan.positive_root(idx));
    int proj_idx = cartan.positive_root_index(proj);
    for (int a = 1; a <= m; ++a) {
      InversionEntry e;
      e.beta_tilde = AffineRoot{finite, a};
      e.a = a;
      e.d = Rat(m - a, m);
      e.finite_label = idx;
      e.projected_label = proj_idx;
      entries_.push_back(std::move(e));
    }
  }

  // <' : d ascending, equal d resolved by the projected label descending in
  // the fixed reflection order.
  std::sort(entries_.begin(), entries_.end(), [&](const InversionEntry& x, const InversionEntry& y) {
    if (x.d != y.d) return x.d < y.d;
    return order.position[x.projected_label] > order.position[y.projected_label];
  });

  long expected = 0;
  for (int idx = 0; idx < cartan.num_positive_roots(); ++idx)
    expected += cartan.pairing(lambda, cartan.positive_coroot(idx));
  ensure(static_cast<long>(entries_.size()) == expected,
         "inversion table size must be sum of <lambda, alpha^vee>");

  for (int k = 0; k < size(); ++k) {
    bool fresh =
        index_.emplace(std::make_pair(entries_[k].beta_tilde.finite.coords, entries_[k].a), k)
            .second;
    ensure(fresh, "Phi failed to be injective on the inversion set");
  }
}

int InversionTable::index_of(const CorootVector& finite, int degree) const {
  auto it = index_.find(std::make_pair(finite.coords, degree));
  ensure(it != index_.end(), "affine root missing from the inversion table");
  return it->second;
}

InversionTable inversion_table(const WeylGroup& W, const Weight& lambda) {
  FixedWords fw = fixed_words_for_lambda(W, lambda);
  ReflectionOrder order = reflection_order(W, fw.w0_word, OrderDirection::reversed);
  return InversionTable(W, lambda, order);
}

}  // namespace qbgc
