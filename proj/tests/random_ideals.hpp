#ifndef LOCALMULT_TESTS_RANDOM_IDEALS_HPP
#define LOCALMULT_TESTS_RANDOM_IDEALS_HPP

#include <random>
#include <string>
#include <vector>

#include "localmult/local_length.hpp"

namespace localmult::gen {

inline PolyRing random_ring(std::size_t nvars, OrderKind kind = OrderKind::kLocalDegRevLex) {
  static const char* names[] = {"x", "y", "z"};
  return PolyRing(std::vector<std::string>(names, names + nvars), kind);
}

// Random polynomial with up to `terms` terms of degree in [lo, hi].
inline Polynomial random_polynomial(std::mt19937_64& rng, const PolyRing& ring, int terms, unsigned lo, unsigned hi) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(static_cast<int>(lo), static_cast<int>(hi));
  std::uniform_int_distribution<std::size_t> var(0, ring.size() - 1);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m(ring.size());
    for (int d = deg(rng); d > 0; --d) ++m[var(rng)];
    int c = coeff(rng);
    if (c != 0) out.push_back({m, Rational(c, 1 + (k % 3))});
  }
  return Polynomial(ring, out);
}

// Each variable gets a generator x_i^e + (perturbation); a few mixed
// generators follow. Not every draw has finite length.
inline Ideal random_local_ideal(std::mt19937_64& rng, std::size_t nvars) {
  PolyRing ring = random_ring(nvars);
  std::uniform_int_distribution<unsigned> exp(1, nvars == 1 ? 50 : nvars == 2 ? 9 : 5);
  std::uniform_int_distribution<int> extra(0, 1);
  std::bernoulli_distribution low_terms(0.3);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < nvars; ++i) {
    unsigned e = exp(rng);
    Monomial m(nvars);
    m[i] = e;
    unsigned lo = low_terms(rng) ? 1 : e;
    gens.push_back(Polynomial::term(ring, m, Rational(1)) + random_polynomial(rng, ring, 3, lo, e + 2));
  }
  for (int k = extra(rng); k > 0; --k) gens.push_back(random_polynomial(rng, ring, 4, 2, 5));
  return Ideal(ring, gens);
}

}  // namespace localmult::gen

#endif  // LOCALMULT_TESTS_RANDOM_IDEALS_HPP
