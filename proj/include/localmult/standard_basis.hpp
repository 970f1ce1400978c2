#ifndef LOCALMULT_STANDARD_BASIS_HPP
#define LOCALMULT_STANDARD_BASIS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "localmult/ideal.hpp"
#include "localmult/polynomial.hpp"

namespace localmult {

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StandardBasisOptions {
  bool reduce = true;
  std::size_t max_pairs = 100000;
  // Per normal form. Mora reduction of ideals without finite colength can
  // wander through ever higher degrees before terminating.
  std::size_t max_reduction_steps = 5000;
  // Largest D tried by local_length when certifying m^(D-1) inside the ideal.
  std::uint64_t max_certified_degree = 16;
};

// Standard basis under the ring's order; a Groebner basis for global orders.
// `reduced` is set when every element is monic and no non-leading term is
// divisible by a leading monomial of the basis.
struct StandardBasis {
  PolyRing ring;
  std::vector<Polynomial> elements;
  bool reduced = false;

  const MonomialOrder& order() const { return ring.order(); }
};

// Minimal monomial generators of the leading ideal.
struct LeadingIdeal {
  std::vector<Monomial> generators;
};

using DegreeBound = std::optional<std::uint64_t>;

namespace detail {

inline Polynomial bounded(const Polynomial& p, DegreeBound bound) {
  return bound ? p.truncated(*bound) : p;
}

// h - (LT(h) / LT(g)) * g.
inline Polynomial reduce_leading(const Polynomial& h, const Polynomial& g) {
  const auto& lh = h.leading_term();
  Monomial m = lh.monomial / g.leading_monomial();
  return h - g.mul_term(m, lh.coefficient / g.leading_coefficient());
}

// Degree D with every monomial of degree D in the monomial ideal, when the
// ideal has finite colength; nullopt otherwise.
inline DegreeBound highest_corner_degree(const std::vector<Monomial>& lead, std::size_t nvars) {
  if (nvars == 0) return std::nullopt;
  std::vector<std::uint64_t> pure(nvars, 0);
  for (const auto& m : lead) {
    if (m.is_one()) return 0;
    int v = m.pure_power_variable();
    if (v >= 0 && (pure[v] == 0 || m[v] < pure[v])) pure[v] = m[v];
  }
  for (auto p : pure)
    if (p == 0) return std::nullopt;
  // The largest degree of a standard monomial is bounded by sum(pure - 1);
  // walk the box to find it.
  std::uint64_t best = 0;
  Monomial cur(nvars);
  for (;;) {
    bool inside = std::none_of(lead.begin(), lead.end(), [&](const Monomial& g) { return g.divides(cur); });
    if (inside) best = std::max(best, cur.degree());
    std::size_t i = 0;
    for (; i < nvars; ++i) {
      if (cur[i] + 1 < pure[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
    }
    if (i == nvars) break;
  }
  return best + 1;
}

}  // namespace detail

// Mora's weak normal form. Returns r with u*p - r in the ideal of `basis` for
// some unit u of the localization (u = 1 for global orders); a nonzero r has a
// leading monomial divisible by no leading monomial of `basis`. Reducers are
// chosen by minimal ecart, ties by position. Terms above `bound` are dropped,
// which is sound once the ideal contains every monomial of that degree + 1.
inline Polynomial weak_normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                                   DegreeBound bound = std::nullopt,
                                   std::size_t max_steps = std::numeric_limits<std::size_t>::max()) {
  std::size_t steps = 0;
  auto step = [&]() {
    if (++steps > max_steps)
      throw ResourceLimitExceeded("normal form: reduction step limit " + std::to_string(max_steps) + " exceeded");
  };
  for (const auto& g : basis)
    if (!(g.ring() == p.ring())) throw RingMismatch();
  Polynomial h = detail::bounded(p, bound);
  if (!p.ring().is_local()) {
    while (!h.is_zero()) {
      const Polynomial* pick = nullptr;
      for (const auto& g : basis)
        if (!g.is_zero() && g.leading_monomial().divides(h.leading_monomial())) {
          pick = &g;
          break;
        }
      if (!pick) break;
      step();
      h = detail::reduce_leading(h, *pick);
    }
    return h;
  }
  std::vector<Polynomial> reducers;
  for (const auto& g : basis)
    if (!g.is_zero()) reducers.push_back(g);
  while (!h.is_zero()) {
    std::size_t pick = reducers.size();
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (!reducers[i].leading_monomial().divides(h.leading_monomial())) continue;
      auto e = reducers[i].ecart();
      if (e < best) {
        best = e;
        pick = i;
      }
    }
    if (pick == reducers.size()) break;
    Polynomial g = reducers[pick];
    step();
    if (g.ecart() > h.ecart()) reducers.push_back(h);
    h = detail::bounded(detail::reduce_leading(h, g), bound);
  }
  return h;
}

// Cancels the leading terms of f and g over lcm(LM f, LM g).
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
  if (!(f.ring() == g.ring())) throw RingMismatch();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), f.leading_coefficient().inverse()) -
         g.mul_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
}

inline LeadingIdeal leading_ideal(const std::vector<Polynomial>& elements) {
  std::vector<Monomial> lead;
  for (const auto& g : elements)
    if (!g.is_zero()) lead.push_back(g.leading_monomial());
  return {minimalize(lead)};
}
inline LeadingIdeal leading_ideal(const StandardBasis& basis) { return leading_ideal(basis.elements); }

namespace detail {

// Removes redundant elements, normalizes, and (when finite) tail-reduces.
inline StandardBasis finish_basis(const PolyRing& ring, std::vector<Polynomial> s, DegreeBound bound,
                                  bool reduce) {
  const auto& ord = ring.order();
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < s.size() && !redundant; ++j) {
      if (i == j || !s[j].leading_monomial().divides(s[i].leading_monomial())) continue;
      redundant = s[j].leading_monomial() != s[i].leading_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(s[i].monic());
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
  if (!reduce) return {ring, std::move(minimal), false};
  if (ring.is_local() && !bound) return {ring, std::move(minimal), false};

  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Polynomial g = minimal[k];
    // Walk the non-leading terms from the top; each step only introduces
    // smaller terms, and with a degree bound the term set is finite.
    std::size_t pos = 1;
    while (pos < g.size()) {
      const Term t = g.terms()[pos];
      const Polynomial* red = nullptr;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j == k && !ring.is_local()) continue;
        const Polynomial& cand = j == k ? g : minimal[j];
        if (cand.leading_monomial().divides(t.monomial)) {
          red = &cand;
          break;
        }
      }
      if (!red) {
        ++pos;
        continue;
      }
      Polynomial cand = *red;
      Monomial m = t.monomial / cand.leading_monomial();
      g = bounded(g - cand.mul_term(m, t.coefficient), bound);
      g = g.monic();
      pos = 1;
      // Restart past terms already known to be standard.
      while (pos < g.size() && ord.greater(g.terms()[pos].monomial, t.monomial)) ++pos;
    }
    minimal[k] = g;
  }
  return {ring, std::move(minimal), true};
}

}  // namespace detail

// Buchberger (global orders) or Mora (local orders) completion with the
// normal pair strategy: smallest lcm degree first, ties by pair index.
inline StandardBasis standard_basis(const Ideal& ideal, const StandardBasisOptions& options = {}) {
  const PolyRing& ring = ideal.ring();
  std::vector<Polynomial> s;
  DegreeBound bound;
  std::size_t processed = 0;

  struct Pair {
    std::size_t i, j;
    std::uint64_t degree;
  };
  std::vector<Pair> pairs;

  auto refresh_bound = [&]() {
    if (!ring.is_local()) return;
    std::vector<Monomial> lead;
    for (const auto& g : s)
      if (!g.is_zero()) lead.push_back(g.leading_monomial());
    DegreeBound d = detail::highest_corner_degree(lead, ring.size());
    if (!d || (bound && *d >= *bound)) return;
    bound = d;
    for (auto& g : s) g = g.truncated(*bound);
  };

  auto insert = [&](Polynomial h) {
    h = h.monic();
    std::size_t idx = s.size();
    for (std::size_t k = 0; k < idx; ++k) {
      if (s[k].is_zero()) continue;
      // The S-polynomial of two terms vanishes.
      if (s[k].size() == 1 && h.size() == 1) continue;
      pairs.push_back({k, idx, lcm(s[k].leading_monomial(), h.leading_monomial()).degree()});
    }
    s.push_back(std::move(h));
    refresh_bound();
  };

  for (const auto& g : ideal.generators()) {
    Polynomial h = weak_normal_form(g, s, bound, options.max_reduction_steps);
    if (!h.is_zero()) insert(std::move(h));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    Pair p = *best;
    pairs.erase(best);
    if (s[p.i].is_zero() || s[p.j].is_zero()) continue;
    if (++processed > options.max_pairs)
      throw ResourceLimitExceeded("standard basis: pair limit " + std::to_string(options.max_pairs) +
                                  " exceeded");
    Polynomial h =
        weak_normal_form(detail::bounded(s_polynomial(s[p.i], s[p.j]), bound), s, bound, options.max_reduction_steps);
    if (!h.is_zero()) insert(std::move(h));
  }

  std::vector<Polynomial> alive;
  for (auto& g : s)
    if (!g.is_zero()) alive.push_back(std::move(g));
  return detail::finish_basis(ring, std::move(alive), bound, options.reduce);
}

}  // namespace localmult

#endif  // LOCALMULT_STANDARD_BASIS_HPP
