#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qbgc/weyl.hpp"

namespace qbgc {

using Coeff = boost::multiprecision::cpp_int;

// Finitely supported integer combination of q^k e^mu over the weight lattice.
// Terms are keyed by (weight coordinates, q exponent) and kept in canonical
// order (weight lexicographic, then k); zero coefficients are dropped.
class GradedCharacter {
 public:
  using Key = std::pair<std::vector<int>, int>;

  GradedCharacter() = default;
  static GradedCharacter monomial(const Weight& mu, int q_exp, Coeff coeff = 1);

  void add_term(const Weight& mu, int q_exp, const Coeff& coeff);
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::map<Key, Coeff>& terms() const { return terms_; }

  GradedCharacter operator+(const GradedCharacter& o) const;
  GradedCharacter operator-(const GradedCharacter& o) const;
  GradedCharacter operator-() const;
  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

  // q -> q^{-1}
  GradedCharacter bar() const;
  // e^mu -> e^{v mu}
  GradedCharacter weyl_act(const WeylGroup& W, int v) const;
  // Collapse q, keeping the weight multiset.
  std::map<std::vector<int>, Coeff> specialize_q1() const;
  // Sum of all coefficients (the value at q = 1, e = 1).
  Coeff total_mass() const;

  // "q^k e[c1,...]" form, canonical term order; "0" when empty.
  std::string to_text() const;

 private:
  std::map<Key, Coeff> terms_;
};

}  // namespace qbgc
