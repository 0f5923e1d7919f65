#include "qbgc/charpoly.hpp"

#include <algorithm>

namespace qbgc {

GradedCharacter GradedCharacter::monomial(const Weight& mu, int q_exp, Coeff coeff) {
  GradedCharacter c;
  c.add_term(mu, q_exp, coeff);
  return c;
}

void GradedCharacter::add_term(const Weight& mu, int q_exp, const Coeff& coeff) {
  if (coeff == 0) return;
  Key key{mu.coords, q_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedCharacter GradedCharacter::operator+(const GradedCharacter& o) const {
  GradedCharacter out = *this;
  for (const auto& [key, c] : o.terms_) out.add_term(Weight(key.first), key.second, c);
  return out;
}

GradedCharacter GradedCharacter::operator-(const GradedCharacter& o) const {
  GradedCharacter out = *this;
  for (const auto& [key, c] : o.terms_) out.add_term(Weight(key.first), key.second, -c);
  return out;
}

GradedCharacter GradedCharacter::operator-() const {
  GradedCharacter out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

GradedCharacter GradedCharacter::bar() const {
  GradedCharacter out;
  for (const auto& [key, c] : terms_) out.add_term(Weight(key.first), -key.second, c);
  return out;
}

GradedCharacter GradedCharacter::weyl_act(const WeylGroup& W, int v) const {
  GradedCharacter out;
  for (const auto& [key, c] : terms_)
    out.add_term(W.act_weight(v, Weight(key.first)), key.second, c);
  return out;
}

std::map<std::vector<int>, Coeff> GradedCharacter::specialize_q1() const {
  std::map<std::vector<int>, Coeff> out;
  for (const auto& [key, c] : terms_) {
    auto [it, inserted] = out.emplace(key.first, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

Coeff GradedCharacter::total_mass() const {
  Coeff m = 0;
  for (const auto& [key, c] : terms_) m += c;
  return m;
}

std::string GradedCharacter::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    Coeff a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::vector<std::string> factors;
    if (a != 1) factors.push_back(a.str());
    if (key.second == 1)
      factors.push_back("q");
    else if (key.second != 0)
      factors.push_back("q^" + std::to_string(key.second));
    bool weight_zero = std::all_of(key.first.begin(), key.first.end(), [](int x) { return x == 0; });
    if (!weight_zero) {
      std::string e = "e[";
      for (std::size_t i = 0; i < key.first.size(); ++i) {
        if (i) e += ',';
        e += std::to_string(key.first[i]);
      }
      e += ']';
      factors.push_back(std::move(e));
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += ' ';
      out += factors[i];
    }
  }
  return out;
}

}  // namespace qbgc
