#ifndef LOCALMULT_MONOMIAL_HPP
#define LOCALMULT_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace localmult {

// Exponent vector; its length is the variable count of the ambient ring.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> e) : exps_(e) {}
  explicit Monomial(std::vector<Exponent> e) : exps_(std::move(e)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  // True when this divides other.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  // Index of the only variable with a positive exponent, or -1.
  int pure_power_variable() const {
    int found = -1;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (found >= 0) return -1;
      found = static_cast<int>(i);
    }
    return found;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }
  // Exact quotient; the divisor must divide.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw std::invalid_argument("Monomial: inexact division");
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Plain lexicographic comparison of exponent vectors, for use as a map key only.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

// Minimal generators of the monomial ideal spanned by `monos` (an antichain
// under divisibility), in input order of first occurrence.
inline std::vector<Monomial> minimalize(const std::vector<Monomial>& monos) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < monos.size() && !redundant; ++j) {
      if (i == j || !monos[j].divides(monos[i])) continue;
      // Equal monomials: keep the first copy only.
      redundant = monos[j] != monos[i] || j < i;
    }
    if (!redundant) out.push_back(monos[i]);
  }
  return out;
}

}  // namespace localmult

#endif  // LOCALMULT_MONOMIAL_HPP
