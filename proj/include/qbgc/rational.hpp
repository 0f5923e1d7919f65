#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

#include "qbgc/errors.hpp"

namespace qbgc {

// Exact rationals for break points and fractional heights. boost::rational
// keeps values normalized with a positive denominator.
using Rat = boost::rational<std::int64_t>;

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::int64_t to_integer(const Rat& r) {
  ensure(is_integer(r), "expected an integral rational, got " +
                            std::to_string(r.numerator()) + "/" +
                            std::to_string(r.denominator()));
  return r.numerator();
}

// "p/q" with q > 0; integers still carry the "/1".
inline std::string to_string(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  std::int64_t num = std::stoll(s.substr(0, slash));
  std::int64_t den = std::stoll(s.substr(slash + 1));
  require(den != 0, "rational with zero denominator: " + s);
  return Rat(num, den);
}

}  // namespace qbgc
