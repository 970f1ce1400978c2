#ifndef LOCALMULT_BINARY_FORM_HPP
#define LOCALMULT_BINARY_FORM_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "localmult/polynomial.hpp"

namespace localmult {

namespace detail {

// Dense univariate polynomial, index = power.
using Univariate = std::vector<Rational>;

inline void strip(Univariate& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Univariate univariate_remainder(Univariate a, const Univariate& b) {
  strip(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    strip(a);
  }
  return a;
}

inline Univariate univariate_gcd(Univariate a, Univariate b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    Univariate r = univariate_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace detail

// Greatest common divisor of two binary forms (homogeneous polynomials in at
// most two of the ring's variables). The result is monic in the first of the
// two variables (by ring index), or monic in the second if it is a pure power
// of it. gcd(f, 0) = f up to normalization; gcd(0, 0) = 0.
inline Polynomial binary_form_gcd(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw RingMismatch();
  const PolyRing& ring = f.ring();
  if (!f.is_homogeneous() || !g.is_homogeneous())
    throw std::invalid_argument("binary_form_gcd: input is not homogeneous");
  auto uf = f.variables_used(), ug = g.variables_used();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (uf[i] || ug[i]) vars.push_back(i);
  if (vars.size() > 2) throw std::invalid_argument("binary_form_gcd: more than two variables present");
  if (f.is_zero() && g.is_zero()) return Polynomial(ring);
  // Pad to two distinct variables; the padding one never occurs.
  for (std::size_t i = 0; vars.size() < 2 && i < ring.size(); ++i)
    if (vars.empty() || vars[0] != i) vars.push_back(i);
  if (vars.size() < 2) {
    // One-variable ring: forms are c * x^d.
    auto deg = [](const Polynomial& p) { return p.is_zero() ? UINT64_MAX : p.degree(); };
    std::uint64_t d = std::min(deg(f), deg(g));
    return Polynomial::term(ring, Monomial::variable(ring.size(), 0, static_cast<Monomial::Exponent>(d)),
                            Rational(1));
  }
  std::size_t x = std::min(vars[0], vars[1]), y = std::max(vars[0], vars[1]);

  // f = y^k * F(x, y) with F(x, 1) of degree deg(f) - k.
  struct Split {
    detail::Univariate dehom;
    std::uint64_t y_power;
    bool zero;
  };
  auto split = [&](const Polynomial& p) {
    Split s{{}, 0, p.is_zero()};
    if (s.zero) return s;
    std::uint64_t d = p.degree(), top_x = 0;
    for (const auto& t : p.terms()) top_x = std::max<std::uint64_t>(top_x, t.monomial[x]);
    s.dehom.assign(top_x + 1, Rational(0));
    for (const auto& t : p.terms()) s.dehom[t.monomial[x]] += t.coefficient;
    s.y_power = d - top_x;
    return s;
  };
  Split sf = split(f), sg = split(g);
  detail::Univariate common;
  std::uint64_t y_power;
  if (sf.zero) {
    common = detail::univariate_gcd(sg.dehom, {});
    y_power = sg.y_power;
  } else if (sg.zero) {
    common = detail::univariate_gcd(sf.dehom, {});
    y_power = sf.y_power;
  } else {
    common = detail::univariate_gcd(sf.dehom, sg.dehom);
    y_power = std::min(sf.y_power, sg.y_power);
  }
  std::size_t dx = common.size() - 1;
  Polynomial out(ring);
  for (std::size_t i = 0; i < common.size(); ++i) {
    if (common[i].is_zero()) continue;
    Monomial m(ring.size());
    m[x] = static_cast<Monomial::Exponent>(i);
    m[y] = static_cast<Monomial::Exponent>(dx - i + y_power);
    out += Polynomial::term(ring, m, common[i]);
  }
  return out;
}

}  // namespace localmult

#endif  // LOCALMULT_BINARY_FORM_HPP
