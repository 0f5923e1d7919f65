#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbgc/errors.hpp"

namespace qbgc {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Series series_from_char(char c);

// Integral weight in the fundamental-weight basis: coords[i] = <lambda, alpha_i^vee>.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

  bool is_dominant() const {
    for (int c : coords)
      if (c < 0) return false;
    return true;
  }
  bool is_zero() const {
    for (int c : coords)
      if (c != 0) return false;
    return true;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  Weight operator+(const Weight& o) const;
  Weight operator-() const;
};

// Root in the simple-root basis.
struct RootVector {
  std::vector<int> coords;

  RootVector() = default;
  explicit RootVector(std::vector<int> c) : coords(std::move(c)) {}
  friend bool operator==(const RootVector&, const RootVector&) = default;
  RootVector operator-() const;
  int height() const;
  bool is_nonnegative() const {
    for (int c : coords)
      if (c < 0) return false;
    return true;
  }
};

// Coroot in the simple-coroot basis.
struct CorootVector {
  std::vector<int> coords;

  CorootVector() = default;
  explicit CorootVector(std::vector<int> c) : coords(std::move(c)) {}
  friend bool operator==(const CorootVector&, const CorootVector&) = default;
  CorootVector operator-() const;
  CorootVector operator+(const CorootVector& o) const;
};

// Subset S of the Dynkin node set I, kept sorted.
struct ParabolicSubset {
  std::vector<int> members;

  ParabolicSubset() = default;
  explicit ParabolicSubset(std::vector<int> m);
  bool contains(int i) const;
  bool empty() const { return members.empty(); }
  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;
};

struct BuildLimits {
  int max_rank = 4;                 // E types need rank >= 6, so they are out
  std::size_t max_group_size = 1152;
};

// Finite root system of a given series and rank: the Cartan matrix, the full
// set of positive roots closed under simple reflections, the coroot map
// computed through the symmetrizer, and the distinguished roots phi (highest
// short) and theta (highest).
class CartanDatum {
 public:
  static CartanDatum build(Series series, int rank, const BuildLimits& limits = {});

  Series series() const { return series_; }
  int rank() const { return rank_; }
  // cartan(i, j) = <alpha_j, alpha_i^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<int>& symmetrizer() const { return sym_; }

  int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
  const RootVector& positive_root(int idx) const { return positive_roots_[idx]; }
  const CorootVector& positive_coroot(int idx) const { return positive_coroots_[idx]; }

  // Index into the positive-root list; negative roots report the index of
  // their negative together with sign -1.
  std::optional<std::pair<int, int>> classify_root(const RootVector& r) const;
  std::optional<std::pair<int, int>> classify_coroot(const CorootVector& c) const;
  int positive_root_index(const RootVector& r) const;       // throws if absent
  int positive_coroot_index(const CorootVector& c) const;   // throws if absent
  bool is_root(const RootVector& r) const { return classify_root(r).has_value(); }

  CorootVector coroot_of(const RootVector& r) const;
  RootVector root_of(const CorootVector& c) const;

  int phi_index() const { return phi_; }      // highest short root
  int theta_index() const { return theta_; }  // highest root
  const RootVector& phi() const { return positive_roots_[phi_]; }
  const RootVector& theta() const { return positive_roots_[theta_]; }

  Weight rho() const;                       // <rho, alpha_i^vee> = 1 for all i
  RootVector two_rho() const;               // sum of all positive roots
  RootVector two_rho_of(const ParabolicSubset& S) const;  // sum of Delta_S^+

  // Canonical pairing <lambda, gamma^vee>.
  long pairing(const Weight& lambda, const CorootVector& gamma) const;
  // <xi, gamma^vee> for xi given in the simple-root basis.
  long pairing_root_coroot(const RootVector& xi, const CorootVector& gamma) const;

  Weight weight_of_root(const RootVector& r) const;  // coords <r, alpha_i^vee>

  RootVector reflect_root(int gen, const RootVector& r) const;
  CorootVector reflect_coroot(int gen, const CorootVector& c) const;
  Weight reflect_weight(int gen, const Weight& w) const;

  bool root_in_span(int root_idx, const ParabolicSubset& S) const;
  ParabolicSubset stabilizer_subset(const Weight& lambda) const;  // S_lambda

  std::string type_name() const;

 private:
  CartanDatum() = default;
  void enumerate_roots();

  Series series_{};
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;  // d_i, minimal positive integers with d_i a_ij symmetric
  std::vector<RootVector> positive_roots_;
  std::vector<CorootVector> positive_coroots_;
  std::vector<long> root_norm2_;  // (alpha, alpha) in the symmetrizer scale
  int phi_ = -1;
  int theta_ = -1;
};

}  // namespace qbgc
