#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qbgc/rational.hpp"
#include "qbgc/weyl.hpp"

namespace qbgc {

// Real root gamma^vee + a*deltatilde of the dual-side affinization; the
// finite part lives in the coroot lattice.
struct AffineRoot {
  CorootVector finite;
  int degree = 0;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

// t(nu) v in the extended affine Weyl group t(P) x| W.
struct ExtendedAffineElement {
  Weight translation;
  int direction = 0;  // Weyl element index
};

ExtendedAffineElement translation_element(const Weight& nu);
ExtendedAffineElement compose(const WeylGroup& W, const ExtendedAffineElement& a,
                              const ExtendedAffineElement& b);
ExtendedAffineElement invert(const WeylGroup& W, const ExtendedAffineElement& a);
bool equal(const ExtendedAffineElement& a, const ExtendedAffineElement& b);

// s_{alpha^vee + a*deltatilde} = t(-a alpha) s_alpha.
ExtendedAffineElement affine_reflection(const WeylGroup& W, const AffineRoot& root);

// One row of the inversion table of t(w0 lambda).
struct InversionEntry {
  AffineRoot beta_tilde;   // -alpha^vee + a*deltatilde with alpha in Delta+
  int a = 0;               // deg(beta_tilde), in (0, <lambda_-, finite part>]
  Rat d;                   // fractional height, first component of Phi
  int finite_label = -1;   // root index of -(finite part)^vee, in Delta+
  int projected_label = -1;  // root index of w0 (finite part)^vee, in Delta+ \ Delta_S+
};

// The set of affine roots inverted by t(w0 lambda), sorted by the total
// order <' (Phi-image lexicographic: d ascending, ties by the projected
// label strictly decreasing in the fixed reflection order).
class InversionTable {
 public:
  // `order` must be the reflection order fixed by the reduced word of w0
  // chosen for lambda (fixed_words_for_lambda, reversed direction).
  InversionTable(const WeylGroup& W, const Weight& lambda, const ReflectionOrder& order);

  const Weight& lambda() const { return lambda_; }
  const Weight& lambda_minus() const { return lambda_minus_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const InversionEntry& entry(int k) const { return entries_[k]; }  // 0-based
  const std::vector<InversionEntry>& entries() const { return entries_; }

  // 0-based index of the entry with the given finite part and degree;
  // a miss is an InvariantError (the construction guarantees membership).
  int index_of(const CorootVector& finite, int degree) const;

 private:
  Weight lambda_, lambda_minus_;
  std::vector<InversionEntry> entries_;
  std::map<std::pair<std::vector<int>, int>, int> index_;
};

// Convenience wrapper deriving the fixed words and order from lambda alone.
InversionTable inversion_table(const WeylGroup& W, const Weight& lambda);

}  // namespace qbgc
