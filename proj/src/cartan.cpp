#include "qbgc/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qbgc/rational.hpp"

namespace qbgc {

Series series_from_char(char c) {
  switch (c) {
    case 'A': return Series::A;
    case 'B': return Series::B;
    case 'C': return Series::C;
    case 'D': return Series::D;
    case 'E': return Series::E;
    case 'F': return Series::F;
    case 'G': return Series::G;
    default: throw ConfigError(std::string("unknown series '") + c + "'");
  }
}

Weight Weight::operator+(const Weight& o) const {
  require(coords.size() == o.coords.size(), "weight rank mismatch");
  Weight r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

int RootVector::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

CorootVector CorootVector::operator-() const {
  CorootVector r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

CorootVector CorootVector::operator+(const CorootVector& o) const {
  require(coords.size() == o.coords.size(), "coroot rank mismatch");
  CorootVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

ParabolicSubset::ParabolicSubset(std::vector<int> m) : members(std::move(m)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

namespace {

bool valid_type(Series s, int rank) {
  switch (s) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 4;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

std::vector<std::vector<int>> cartan_matrix(Series s, int n) {
  // Convention: A[i][j] = <alpha_j, alpha_i^vee>.
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (s) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Series::C:
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Series::E:
      // Bourbaki numbering: node 2 hangs off node 4 of the A-chain 1-3-4-5-6(-7-8).
      bond(0, 2);
      bond(2, 3);
      bond(1, 3);
      for (int i = 3; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a[2][1] = -2;
      break;
    case Series::G:
      // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3
      bond(0, 1);
      a[0][1] = -3;
      break;
  }
  return a;
}

// Minimal positive integers d_i with d_i a_ij = d_j a_ji, found by
// propagating length ratios along the (connected) Dynkin graph.
std::vector<int> symmetrizer_for(const std::vector<std::vector<int>>& a) {
  int n = static_cast<int>(a.size());
  std::vector<Rat> d(n, Rat(0));
  d[0] = Rat(1);
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0) continue;
      Rat want = d[i] * Rat(a[i][j], a[j][i]);
      if (d[j] == Rat(0)) {
        d[j] = want;
        stack.push_back(j);
      } else {
        ensure(d[j] == want, "symmetrizer inconsistency");
      }
    }
  }
  std::int64_t lcm_den = 1;
  for (const Rat& r : d) lcm_den = std::lcm(lcm_den, r.denominator());
  std::vector<int> out(n);
  std::int64_t g = 0;
  for (int i = 0; i < n; ++i) {
    out[i] = static_cast<int>(boost::rational_cast<std::int64_t>(d[i] * lcm_den));
    g = std::gcd(g, static_cast<std::int64_t>(out[i]));
  }
  for (int& v : out) v = static_cast<int>(v / g);
  return out;
}

long det_integer(std::vector<std::vector<long>> m) {
  // Bareiss fraction-free elimination; ranks here are tiny.
  int n = static_cast<int>(m.size());
  long prev = 1;
  long sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) { p = r; break; }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

CartanDatum CartanDatum::build(Series series, int rank, const BuildLimits& limits) {
  if (!valid_type(series, rank))
    throw ConfigError("no finite root system of type " +
                      std::string(1, static_cast<char>(series)) + std::to_string(rank));
  if (rank > limits.max_rank)
    throw ConfigError("rank " + std::to_string(rank) + " exceeds the configured bound " +
                      std::to_string(limits.max_rank));

  CartanDatum d;
  d.series_ = series;
  d.rank_ = rank;
  d.cartan_ = cartan_matrix(series, rank);
  d.sym_ = symmetrizer_for(d.cartan_);

  for (int i = 0; i < rank; ++i) {
    ensure(d.cartan_[i][i] == 2, "Cartan diagonal must be 2");
    for (int j = 0; j < rank; ++j)
      ensure(i == j || d.cartan_[i][j] <= 0, "Cartan off-diagonal must be <= 0");
  }
  std::vector<std::vector<long>> m(rank, std::vector<long>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) m[i][j] = d.cartan_[i][j];
  ensure(det_integer(m) > 0, "Cartan matrix is not of finite type");

  d.enumerate_roots();
  return d;
}

void CartanDatum::enumerate_roots() {
  int n = rank_;
  std::map<std::vector<int>, int> seen;
  std::vector<RootVector> roots;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.emplace(e, static_cast<int>(roots.size()));
    roots.push_back(RootVector(e));
  }
  // Closure of the simple roots under simple reflections, keeping positives.
  for (std::size_t head = 0; head < roots.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      RootVector r = reflect_root(i, roots[head]);
      if (!r.is_nonnegative()) continue;
      if (seen.emplace(r.coords, static_cast<int>(roots.size())).second) roots.push_back(r);
    }
  }
  std::stable_sort(roots.begin(), roots.end(),
                   [](const RootVector& x, const RootVector& y) { return x.height() < y.height(); });
  positive_roots_ = std::move(roots);

  positive_coroots_.reserve(positive_roots_.size());
  root_norm2_.reserve(positive_roots_.size());
  for (const RootVector& r : positive_roots_) {
    // (alpha, alpha) = sum_{ij} r_i r_j d_i a_ij; coroot coords c_j = r_j d_j / (|alpha|^2/2).
    long norm2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        norm2 += static_cast<long>(r.coords[i]) * r.coords[j] * sym_[i] * cartan_[i][j];
    ensure(norm2 > 0 && norm2 % 2 == 0, "bad root norm");
    long half = norm2 / 2;
    std::vector<int> c(n);
    for (int j = 0; j < n; ++j) {
      long num = static_cast<long>(r.coords[j]) * sym_[j];
      ensure(num % half == 0, "coroot coordinates are not integral");
      c[j] = static_cast<int>(num / half);
    }
    positive_coroots_.push_back(CorootVector(std::move(c)));
    root_norm2_.push_back(norm2);
  }

  long min_norm = *std::min_element(root_norm2_.begin(), root_norm2_.end());
  long max_norm = *std::max_element(root_norm2_.begin(), root_norm2_.end());
  auto dominant = [&](int idx) {
    Weight w = weight_of_root(positive_roots_[idx]);
    return w.is_dominant();
  };
  for (int idx = 0; idx < num_positive_roots(); ++idx) {
    if (root_norm2_[idx] == min_norm && dominant(idx)) {
      ensure(phi_ < 0, "highest short root is not unique");
      phi_ = idx;
    }
    if (root_norm2_[idx] == max_norm && dominant(idx)) {
      ensure(theta_ < 0, "highest root is not unique");
      theta_ = idx;
    }
  }
  ensure(phi_ >= 0 && theta_ >= 0, "missing highest (short) root");
}

std::optional<std::pair<int, int>> CartanDatum::classify_root(const RootVector& r) const {
  for (int i = 0; i < num_positive_roots(); ++i) {
    if (positive_roots_[i] == r) return std::make_pair(i, 1);
    if (positive_roots_[i] == -r) return std::make_pair(i, -1);
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> CartanDatum::classify_coroot(const CorootVector& c) const {
  for (int i = 0; i < num_positive_roots(); ++i) {
    if (positive_coroots_[i] == c) return std::make_pair(i, 1);
    if (positive_coroots_[i] == -c) return std::make_pair(i, -1);
  }
  return std::nullopt;
}

int CartanDatum::positive_root_index(const RootVector& r) const {
  auto c = classify_root(r);
  require(c && c->second == 1, "not a positive root");
  return c->first;
}

int CartanDatum::positive_coroot_index(const CorootVector& c) const {
  auto k = classify_coroot(c);
  require(k && k->second == 1, "not a positive coroot");
  return k->first;
}

CorootVector CartanDatum::coroot_of(const RootVector& r) const {
  auto c = classify_root(r);
  require(c.has_value(), "not a root");
  CorootVector v = positive_coroots_[c->first];
  return c->second > 0 ? v : -v;
}

RootVector CartanDatum::root_of(const CorootVector& c) const {
  auto k = classify_coroot(c);
  require(k.has_value(), "not a coroot");
  RootVector v = positive_roots_[k->first];
  return k->second > 0 ? v : -v;
}

Weight CartanDatum::rho() const { return Weight(std::vector<int>(rank_, 1)); }

RootVector CartanDatum::two_rho() const {
  std::vector<int> s(rank_, 0);
  for (const RootVector& r : positive_roots_)
    for (int i = 0; i < rank_; ++i) s[i] += r.coords[i];
  return RootVector(std::move(s));
}

RootVector CartanDatum::two_rho_of(const ParabolicSubset& S) const {
  std::vector<int> s(rank_, 0);
  for (int idx = 0; idx < num_positive_roots(); ++idx) {
    if (!root_in_span(idx, S)) continue;
    for (int i = 0; i < rank_; ++i) s[i] += positive_roots_[idx].coords[i];
  }
  return RootVector(std::move(s));
}

long CartanDatum::pairing(const Weight& lambda, const CorootVector& gamma) const {
  require(static_cast<int>(lambda.coords.size()) == rank_ &&
              static_cast<int>(gamma.coords.size()) == rank_,
          "pairing rank mismatch");
  long s = 0;
  for (int i = 0; i < rank_; ++i) s += static_cast<long>(lambda.coords[i]) * gamma.coords[i];
  return s;
}

long CartanDatum::pairing_root_coroot(const RootVector& xi, const CorootVector& gamma) const {
  require(static_cast<int>(xi.coords.size()) == rank_ &&
              static_cast<int>(gamma.coords.size()) == rank_,
          "pairing rank mismatch");
  long s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += static_cast<long>(xi.coords[j]) * gamma.coords[i] * cartan_[i][j];
  return s;
}

Weight CartanDatum::weight_of_root(const RootVector& r) const {
  std::vector<int> w(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[i] += cartan_[i][j] * r.coords[j];
  return Weight(std::move(w));
}

RootVector CartanDatum::reflect_root(int gen, const RootVector& r) const {
  RootVector out = r;
  long s = 0;
  for (int j = 0; j < rank_; ++j) s += static_cast<long>(cartan_[gen][j]) * r.coords[j];
  out.coords[gen] -= static_cast<int>(s);
  return out;
}

CorootVector CartanDatum::reflect_coroot(int gen, const CorootVector& c) const {
  CorootVector out = c;
  long s = 0;
  for (int j = 0; j < rank_; ++j) s += static_cast<long>(cartan_[j][gen]) * c.coords[j];
  out.coords[gen] -= static_cast<int>(s);
  return out;
}

Weight CartanDatum::reflect_weight(int gen, const Weight& w) const {
  Weight out = w;
  int c = w.coords[gen];
  for (int i = 0; i < rank_; ++i) out.coords[i] -= c * cartan_[i][gen];
  return out;
}

bool CartanDatum::root_in_span(int root_idx, const ParabolicSubset& S) const {
  const RootVector& r = positive_roots_[root_idx];
  for (int i = 0; i < rank_; ++i)
    if (r.coords[i] != 0 && !S.contains(i)) return false;
  return true;
}

ParabolicSubset CartanDatum::stabilizer_subset(const Weight& lambda) const {
  require(static_cast<int>(lambda.coords.size()) == rank_, "weight rank mismatch");
  std::vector<int> members;
  for (int i = 0; i < rank_; ++i)
    if (lambda.coords[i] == 0) members.push_back(i);
  return ParabolicSubset(std::move(members));
}

std::string CartanDatum::type_name() const {
  return std::string(1, static_cast<char>(series_)) + std::to_string(rank_);
}

}  // namespace qbgc
