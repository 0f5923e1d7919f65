#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qbgc/affine.hpp"
#include "qbgc/charpoly.hpp"
#include "qbgc/qbg.hpp"

namespace qbgc {

struct AlcoveStep {
  int table_index;  // 0-based index into the inversion table
  int label;        // positive-root index -(finite part)^vee
  EdgeKind kind;    // classification of dr(z_{i-1}) -> dr(z_i)
};

// Chain z_0 = w t(w0 lambda), z_i = z_{i-1} s_{beta_j_i} for an index subset J.
struct AlcovePath {
  std::vector<int> J;  // 0-based, strictly increasing
  std::vector<ExtendedAffineElement> chain;  // size |J| + 1
  std::vector<AlcoveStep> steps;             // size |J|

  const ExtendedAffineElement& end() const { return chain.back(); }
};

// Enumeration context for B(w; t(w0 lambda)) and QB(w; t(w0 lambda)) over one
// dominant lambda. Owns the fixed reduced word, the reflection order of the
// bijection convention, the inversion table, and the full quantum Bruhat
// graph used for the per-step edge checks.
class AlcoveModel {
 public:
  AlcoveModel(const WeylGroup& W, const Weight& lambda);

  const WeylGroup& group() const { return *W_; }
  const Weight& lambda() const { return lambda_; }
  const FixedWords& fixed_words() const { return words_; }
  const ReflectionOrder& order() const { return order_; }
  const InversionTable& table() const { return table_; }
  const QuantumBruhatGraph& qbg() const { return qbg_; }

  ExtendedAffineElement start(int w) const;  // w t(w0 lambda)

  // Quantum alcove paths by depth-first extension in index order; every
  // admissible prefix is itself a member, so the search never dead-ends.
  std::vector<AlcovePath> enumerate_qb(int w, int jobs = 1) const;

  // Full power set, streamed in subset-lexicographic order; steps whose edge
  // check fails are delivered through `admissible = false`.
  void enumerate_b(int w, const std::function<void(const AlcovePath&, bool admissible)>& sink,
                   int max_length_cap = 20) const;

  int qwt_deg(const AlcovePath& p) const;            // sum of a_j over quantum steps
  AffineRoot qwt(const AlcovePath& p) const;         // the sum itself
  static Weight end_weight(const AlcovePath& p);     // wt(ed(p_J))

  // C_w^{t(w0 lambda)} = sum q^{deg(qwt)} e^{wt(ed)}.
  GradedCharacter graded_char(int w, int jobs = 1) const;

 private:
  // Extends p by table index j when dr(z) -> dr(z s_{beta_j}) is an edge.
  std::optional<AlcovePath> try_extend(const AlcovePath& p, int j) const;
  AlcovePath empty_path(int w) const;

  const WeylGroup* W_;
  Weight lambda_;
  FixedWords words_;
  ReflectionOrder order_;
  InversionTable table_;
  QuantumBruhatGraph qbg_;
  std::vector<ExtendedAffineElement> refl_;  // s_{beta_j} per table entry
};

}  // namespace qbgc
