#ifndef LOCALMULT_FAMILIES_HPP
#define LOCALMULT_FAMILIES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "localmult/binary_form.hpp"
#include "localmult/local_length.hpp"

namespace localmult {

class InfiniteLength : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Q[t, theta0, y] localized at the origin. The order ranks y first, so
// eliminating y through a generator y + (linear) leaves staircases in t, theta0.
inline const PolyRing& singular_point_ring() {
  static const PolyRing ring({"t", "theta0", "y"}, MonomialOrder(OrderKind::kLocalDegRevLex, {2, 0, 1}));
  return ring;
}

// Q[t, theta0, s] localized at the origin, s ranked first.
inline const PolyRing& crossing_ring() {
  static const PolyRing ring({"t", "theta0", "s"}, MonomialOrder(OrderKind::kLocalDegRevLex, {2, 0, 1}));
  return ring;
}

// ---------------------------------------------------------------------------
// Coefficient sampling

// Rationals p/q with |p| <= max_numerator and 1 <= q <= max_denominator.
struct CoefficientGrid {
  int max_numerator = 20;
  int max_denominator = 5;
};

inline Rational sample_rational(std::mt19937_64& rng, const CoefficientGrid& grid, bool nonzero) {
  std::uniform_int_distribution<int> num(-grid.max_numerator, grid.max_numerator);
  std::uniform_int_distribution<int> den(1, grid.max_denominator);
  int p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  return Rational(p, den(rng));
}

// Random polynomial of degree <= max_degree with a nonzero constant term.
inline Polynomial sample_unit(std::mt19937_64& rng, const PolyRing& ring, unsigned max_degree,
                              const CoefficientGrid& grid = {}) {
  Polynomial p = Polynomial::constant(ring, sample_rational(rng, grid, true));
  if (max_degree == 0) return p;
  // All monomials of degree 1..max_degree, in a fixed order.
  for (const auto& m : detail::monomials_below(ring.size(), max_degree + 1)) {
    if (m.is_one()) continue;
    p += Polynomial::term(ring, m, sample_rational(rng, grid, false));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Coefficients a1..a10 of the surface at its m = 1 singular point

struct SingularityCoefficients {
  std::array<Polynomial, 10> a;  // a[0] is a1
  int m_index = 1;
  bool a6_normalized = false;
  bool a7_normalized = false;
  bool all_units = true;  // every a_i nonzero at the origin

  const Polynomial& operator()(int i) const { return a.at(static_cast<std::size_t>(i - 1)); }

  static SingularityCoefficients make(std::array<Polynomial, 10> a, int m_index, bool require_units = true) {
    if (m_index != 0 && m_index != 1) throw std::invalid_argument("m-index must be 0 or 1");
    bool units = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(a[i].ring() == singular_point_ring())) throw RingMismatch();
      if (!a[i].constant_term().is_zero()) continue;
      if (require_units) throw std::invalid_argument("a" + std::to_string(i + 1) + " vanishes at the origin");
      units = false;
    }
    SingularityCoefficients c{std::move(a), m_index};
    c.all_units = units;
    Polynomial one = Polynomial::constant(singular_point_ring(), Rational(1));
    c.a6_normalized = c.a[5] == one;
    c.a7_normalized = c.a[6] == one;
    return c;
  }
};

// a6 = a7 = 1, m = 1, the other a_i random units of degree <= max_degree.
inline SingularityCoefficients random_coefficients(std::mt19937_64& rng, unsigned max_degree = 2,
                                                   const CoefficientGrid& grid = {}) {
  const PolyRing& R = singular_point_ring();
  std::array<Polynomial, 10> a{Polynomial(R), Polynomial(R), Polynomial(R), Polynomial(R), Polynomial(R),
                               Polynomial(R), Polynomial(R), Polynomial(R), Polynomial(R), Polynomial(R)};
  for (std::size_t i = 0; i < 10; ++i)
    a[i] = (i == 5 || i == 6) ? Polynomial::constant(R, Rational(1)) : sample_unit(rng, R, max_degree, grid);
  return SingularityCoefficients::make(std::move(a), 1);
}

// ---------------------------------------------------------------------------
// g-systems

struct ExponentProfile {
  unsigned r1 = 2, r2 = 1, r3 = 1;

  void validate() const {
    if (r1 < r2) throw std::invalid_argument("exponent profile needs r1 >= r2");
    if (r3 > 1) throw std::invalid_argument("exponent profile needs r3 in {0, 1}");
  }
  bool is_jump_profile() const { return r1 == 2 && r2 == 1 && r3 == 1; }
  std::string to_string() const {
    return "(" + std::to_string(r1) + "," + std::to_string(r2) + "," + std::to_string(r3) + ")";
  }
  friend bool operator==(const ExponentProfile&, const ExponentProfile&) = default;
};

// l1..l3 and g1..g4 over singular_point_ring(). Instances assembled directly
// from a normal form (make_deviated_instance) leave l2, l3 zero and `b` empty.
struct GSystem {
  Polynomial l1{singular_point_ring()}, l2{singular_point_ring()}, l3{singular_point_ring()};
  Polynomial g1{singular_point_ring()}, g2{singular_point_ring()}, g3{singular_point_ring()}, g4{singular_point_ring()};
  ExponentProfile profile;
  std::vector<Polynomial> b;
};

// l1 = b1 t + b2 theta0, l2 = b3 t + b4 theta0, l3 = b5 t + b6 theta0;
// g1 = theta0^r2 t^r3 + l1 l2, g2 = theta0^r1 + l1 l3,
// g3 = t^r3 l3 - theta0^(r1-r2) l2, g4 = y + l1.
inline GSystem build_g_system(const ExponentProfile& profile, const std::array<Polynomial, 6>& b) {
  profile.validate();
  const PolyRing& R = singular_point_ring();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!(b[i].ring() == R)) throw RingMismatch();
    if (b[i].constant_term().is_zero())
      throw std::invalid_argument("b" + std::to_string(i + 1) + " vanishes at the origin");
  }
  Polynomial t = Polynomial::variable(R, "t"), th = Polynomial::variable(R, "theta0"), y = Polynomial::variable(R, "y");
  Polynomial l1 = b[0] * t + b[1] * th, l2 = b[2] * t + b[3] * th, l3 = b[4] * t + b[5] * th;
  GSystem g{l1, l2, l3,
            th.pow(profile.r2) * t.pow(profile.r3) + l1 * l2,
            th.pow(profile.r1) + l1 * l3,
            t.pow(profile.r3) * l3 - th.pow(profile.r1 - profile.r2) * l2,
            y + l1,
            profile,
            std::vector<Polynomial>(b.begin(), b.end())};
  return g;
}

inline std::array<Polynomial, 6> random_b_coefficients(std::mt19937_64& rng, unsigned max_degree = 1,
                                                       const CoefficientGrid& grid = {}) {
  const PolyRing& R = singular_point_ring();
  return {sample_unit(rng, R, max_degree, grid), sample_unit(rng, R, max_degree, grid),
          sample_unit(rng, R, max_degree, grid), sample_unit(rng, R, max_degree, grid),
          sample_unit(rng, R, max_degree, grid), sample_unit(rng, R, max_degree, grid)};
}

// The g-system attached to a1..a10 with a6 = a7 = 1:
// a5' = a5 + a1 t + a2 theta0 + a3 y, l1 = -(a4 t + a5' theta0),
// l2 = (a8 - a10 a4) t + (a9 - a10 a5') theta0, l3 = (a1 - a3 a4) t + (a2 - a3 a5') theta0,
// g1 = theta0 t + l1 l2, g2 = theta0^2 + l1 l3, g3 = t l3 - theta0 l2, g4 = y - l1.
inline GSystem g_system_from_coefficients(const SingularityCoefficients& c) {
  if (!c.a6_normalized || !c.a7_normalized) throw std::invalid_argument("requires a6 = a7 = 1");
  const PolyRing& R = singular_point_ring();
  Polynomial t = Polynomial::variable(R, "t"), th = Polynomial::variable(R, "theta0"), y = Polynomial::variable(R, "y");
  Polynomial a5p = c(5) + c(1) * t + c(2) * th + c(3) * y;
  Polynomial l1 = -(c(4) * t + a5p * th);
  Polynomial l2 = (c(8) - c(10) * c(4)) * t + (c(9) - c(10) * a5p) * th;
  Polynomial l3 = (c(1) - c(3) * c(4)) * t + (c(2) - c(3) * a5p) * th;
  return GSystem{l1, l2, l3, th * t + l1 * l2, th * th + l1 * l3, t * l3 - th * l2, y - l1,
                 ExponentProfile{2, 1, 1}, {}};
}

inline Ideal ideal_R2(const GSystem& g) { return Ideal(singular_point_ring(), {g.g1, g.g2, g.g4}); }
inline Ideal ideal_R1(const GSystem& g) { return Ideal(singular_point_ring(), {g.g1, g.g2, g.g3, g.g4}); }

struct PairLengths {
  LengthReport r1, r2;
};

inline PairLengths pair_lengths(const GSystem& g, const StandardBasisOptions& options = {}) {
  return {local_length(ideal_R1(g), options), local_length(ideal_R2(g), options)};
}

// L(b) = length(R2) - length(R1).
inline std::int64_t multiplicity_pair_L(const PairLengths& p) {
  if (!p.r1.finite() || !p.r2.finite()) throw InfiniteLength("L(b) needs both local rings Artinian");
  return static_cast<std::int64_t>(*p.r2.length) - static_cast<std::int64_t>(*p.r1.length);
}
inline std::int64_t multiplicity_pair_L(const GSystem& g, const StandardBasisOptions& options = {}) {
  return multiplicity_pair_L(pair_lengths(g, options));
}

// Substitutes t -> m11 t + m12 theta0, theta0 -> m21 t + m22 theta0 in every
// polynomial of the system.
struct LinearChange {
  Rational m11{1}, m12{0}, m21{0}, m22{1};
  Rational determinant() const { return m11 * m22 - m12 * m21; }
};

inline Polynomial apply_change(const Polynomial& p, const LinearChange& ch) {
  const PolyRing& R = p.ring();
  Polynomial t = Polynomial::variable(R, "t"), th = Polynomial::variable(R, "theta0");
  return p.substitute({{"t", ch.m11 * t + ch.m12 * th}, {"theta0", ch.m21 * t + ch.m22 * th}});
}

inline GSystem apply_change(const GSystem& g, const LinearChange& ch) {
  if (ch.determinant().is_zero()) throw std::invalid_argument("coordinate change is not invertible");
  return GSystem{apply_change(g.l1, ch), apply_change(g.l2, ch), apply_change(g.l3, ch),
                 apply_change(g.g1, ch), apply_change(g.g2, ch), apply_change(g.g3, ch),
                 apply_change(g.g4, ch), g.profile, g.b};
}

// ---------------------------------------------------------------------------
// Deviated / non-deviated classification

enum class Verdict { kNonDeviated, kDeviated, kDegenerate };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kNonDeviated: return "NonDeviated";
    case Verdict::kDeviated: return "Deviated";
    case Verdict::kDegenerate: return "Degenerate";
  }
  return "?";
}

struct Classification {
  Verdict verdict = Verdict::kDegenerate;
  std::vector<Polynomial> quadratic_parts;  // (g1)_2, (g2)_2, (g3)_2 after eliminating y
  Polynomial common_factor{singular_point_ring()};  // gcd of the three; constant certifies NonDeviated
  std::optional<std::uint64_t> length_r1, length_r2;
};

// Degree-2 parts of g1, g2, g3 once y is replaced by the linear solution of g4.
inline std::vector<Polynomial> quadratic_parts(const GSystem& g) {
  const PolyRing& R = singular_point_ring();
  Polynomial lin = g.g4.homogeneous_part(1);
  std::size_t yi = *R.index_of("y");
  Rational cy = lin.coefficient(Monomial::variable(R.size(), yi));
  if (cy.is_zero() || !g.g4.constant_term().is_zero())
    throw std::invalid_argument("g4 does not determine y to first order");
  Polynomial y = Polynomial::variable(R, yi);
  Polynomial y_solution = -(lin - y * cy) * cy.inverse();
  std::vector<Polynomial> out;
  for (const Polynomial* p : {&g.g1, &g.g2, &g.g3}) out.push_back(p->substitute({{"y", y_solution}}).homogeneous_part(2));
  return out;
}

// NonDeviated when the three quadratic parts share no linear factor; otherwise
// Deviated exactly when the local lengths of (R1, R2) are (4, 6).
inline Classification classify(const GSystem& g, const StandardBasisOptions& options = {}) {
  if (!g.profile.is_jump_profile()) throw std::invalid_argument("classification needs profile (2,1,1)");
  Classification c;
  c.quadratic_parts = quadratic_parts(g);
  c.common_factor = binary_form_gcd(binary_form_gcd(c.quadratic_parts[0], c.quadratic_parts[1]), c.quadratic_parts[2]);
  PairLengths lens = pair_lengths(g, options);
  c.length_r1 = lens.r1.length;
  c.length_r2 = lens.r2.length;
  if (!c.common_factor.is_zero() && c.common_factor.degree() == 0) {
    c.verdict = Verdict::kNonDeviated;
  } else if (c.length_r1 == 4u && c.length_r2 == 6u) {
    c.verdict = Verdict::kDeviated;
  } else {
    c.verdict = Verdict::kDegenerate;
  }
  return c;
}

// Normal form (theta0'^2 + u1 t'^4, theta0' t' + u2 t'^3, u3 t'^3, y + t') pulled
// back along t' = m11 t + m12 theta0, theta0' = m21 t + m22 theta0.
inline GSystem make_deviated_instance(const Rational& u1, const Rational& u2, const Rational& u3,
                                      const LinearChange& change = {}) {
  if (u1.is_zero() || u2.is_zero() || u3.is_zero()) throw std::invalid_argument("u1, u2, u3 must be nonzero");
  if ((u2 * u2 + u1).is_zero()) throw std::invalid_argument("u2^2 + u1 must be nonzero");
  if (change.determinant().is_zero()) throw std::invalid_argument("coordinate change is not invertible");
  const PolyRing& R = singular_point_ring();
  Polynomial t = Polynomial::variable(R, "t"), th = Polynomial::variable(R, "theta0"), y = Polynomial::variable(R, "y");
  Polynomial tp = change.m11 * t + change.m12 * th, thp = change.m21 * t + change.m22 * th;
  Polynomial zero(R);
  return GSystem{tp,
                 zero,
                 zero,
                 thp * tp + u2 * tp.pow(3),
                 thp * thp + u1 * tp.pow(4),
                 u3 * tp.pow(3),
                 y + tp,
                 ExponentProfile{2, 1, 1},
                 {}};
}

inline LinearChange random_change(std::mt19937_64& rng, const CoefficientGrid& grid = {}) {
  for (;;) {
    LinearChange ch{sample_rational(rng, grid, false), sample_rational(rng, grid, false),
                    sample_rational(rng, grid, false), sample_rational(rng, grid, false)};
    if (!ch.determinant().is_zero()) return ch;
  }
}

inline GSystem random_deviated_instance(std::mt19937_64& rng, const CoefficientGrid& grid = {}) {
  for (;;) {
    Rational u1 = sample_rational(rng, grid, true), u2 = sample_rational(rng, grid, true),
             u3 = sample_rational(rng, grid, true);
    if ((u2 * u2 + u1).is_zero()) continue;
    return make_deviated_instance(u1, u2, u3, random_change(rng, grid));
  }
}

// Coefficients whose g-system has lengths (4, 6), i.e. classifies as Deviated.
// Such instances need a4, a8 and a1 to vanish at the origin: the identity
// l1 g3 = t g2 - theta0 g1 puts l1 g3 into the ideal of R2, and the (4, 6)
// staircase then forces the linear part of l1 to be a multiple of the shared
// factor theta0 of the quadratic parts. They therefore lie outside the unit
// hypothesis on a1..a10 and are built with require_units = false.
inline SingularityCoefficients deviated_boundary_coefficients(std::mt19937_64& rng, unsigned max_degree = 1,
                                                              const CoefficientGrid& grid = {},
                                                              int max_attempts = 64) {
  const PolyRing& R = singular_point_ring();
  Monomial t_mono = Monomial::variable(R.size(), 0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SingularityCoefficients c = random_coefficients(rng, std::max(1u, max_degree), grid);
    std::array<Polynomial, 10> a = c.a;
    for (int i : {1, 4, 8}) {
      Polynomial& p = a[static_cast<std::size_t>(i - 1)];
      p = p - Polynomial::constant(R, p.constant_term());
    }
    // Without a t-term in a4 every generator of R2 is divisible by theta0.
    if (a[3].coefficient(t_mono).is_zero()) a[3] += Polynomial::term(R, t_mono, sample_rational(rng, grid, true));
    SingularityCoefficients d = SingularityCoefficients::make(std::move(a), 1, false);
    try {
      if (classify(g_system_from_coefficients(d)).verdict == Verdict::kDeviated) return d;
    } catch (const ResourceLimitExceeded&) {
    }
  }
  throw std::runtime_error("no deviated coefficient instance found");
}

// Unit coefficients tied by a8(0) = a10(0) a4(0) and a1(0) = a3(0) a4(0), so the
// quadratic parts of g1, g2, g3 share the factor theta0 while every a_i stays
// a unit. By the argument above these cannot be Deviated; they come out
// Degenerate.
inline SingularityCoefficients shared_factor_coefficients(std::mt19937_64& rng, unsigned max_degree = 1,
                                                          const CoefficientGrid& grid = {}) {
  const PolyRing& R = singular_point_ring();
  SingularityCoefficients c = random_coefficients(rng, max_degree, grid);
  std::array<Polynomial, 10> a = c.a;
  auto set_constant = [&](int i, const Rational& v) {
    Polynomial& p = a[static_cast<std::size_t>(i - 1)];
    p = p - Polynomial::constant(R, p.constant_term()) + Polynomial::constant(R, v);
  };
  set_constant(8, c(10).constant_term() * c(4).constant_term());
  set_constant(1, c(3).constant_term() * c(4).constant_term());
  return SingularityCoefficients::make(std::move(a), 1);
}

// ---------------------------------------------------------------------------
// Local contributions at the m = 1 singular point

struct Delta1Record {
  std::uint64_t total = 0;       // length of the intersection ring
  std::uint64_t part_mod_y = 0;  // length after adding y
  std::uint64_t part_y = 0;      // length of R1
};

// Generators (in t, theta0, y) of the intersection of the scheme Q with the
// hypersurface theta1 = theta0^3, after eliminating theta1 and theta2.
inline Ideal delta1_ideal(const SingularityCoefficients& c) {
  if (c.m_index != 1) throw std::invalid_argument("needs m-index 1");
  if (!c.a6_normalized || !c.a7_normalized) throw std::invalid_argument("requires a6 = a7 = 1");
  const PolyRing& R = singular_point_ring();
  Polynomial t = Polynomial::variable(R, "t"), th = Polynomial::variable(R, "theta0"), y = Polynomial::variable(R, "y");
  Polynomial k = c(1) * t + c(2) * th + c(3) * y;
  return Ideal(R, {th * th + y * k,
                   y * (th * k + c(4) * t + c(5) * th + c(6) * y),
                   c(7) * th * t + c(8) * y * t + c(9) * y * th + c(10) * y * y,
                   c(1) * t * t + (c(2) - c(8)) * th * t - c(9) * th * th + y * (c(3) * t - c(10) * th)});
}

inline std::uint64_t finite_length(const LengthReport& r, const char* what) {
  if (!r.finite()) throw InfiniteLength(std::string(what) + " has infinite length (degenerate instance)");
  return *r.length;
}

// delta1 at the m = 1 point: length of delta1_ideal, split along the exact
// sequence 0 -> (y) -> R -> R/(y) -> 0 as length(R/(y)) + length(R1).
inline Delta1Record delta1_at_p0(const SingularityCoefficients& c, const StandardBasisOptions& options = {}) {
  Ideal I = delta1_ideal(c);
  const PolyRing& R = I.ring();
  Delta1Record d;
  d.total = finite_length(local_length(I, options), "delta1 ideal");
  d.part_mod_y = finite_length(local_length(I + Ideal(R, {Polynomial::variable(R, "y")}), options), "delta1 ideal + (y)");
  d.part_y = finite_length(local_length(ideal_R1(g_system_from_coefficients(c)), options), "R1");
  return d;
}

struct Delta2Record {
  std::uint64_t total = 0;    // length of the vertical-cycle ring
  std::uint64_t part_I4 = 0;  // length after adding y
  std::uint64_t part_I5 = 0;  // length of R2
};

class NonGenericSample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Local equations of the vertical cycle of the exceptional divisor at the m = 1
// point for the blow-up chart [z1 : z2].
inline Ideal delta2_ideal(const SingularityCoefficients& c, const Rational& z1, const Rational& z2) {
  if (c.m_index != 1) throw std::invalid_argument("needs m-index 1");
  if (!c.a6_normalized || !c.a7_normalized) throw std::invalid_argument("requires a6 = a7 = 1");
  if (z2.is_zero()) throw std::invalid_argument("z2 must be nonzero");
  const PolyRing& R = singular_point_ring();
  Polynomial t = Polynomial::variable(R, "t"), th = Polynomial::variable(R, "theta0"), y = Polynomial::variable(R, "y");
  Polynomial k = c(1) * t + c(2) * th + c(3) * y;
  Polynomial h = c(7) * th * t + c(8) * t * y + c(9) * y * th + c(10) * y * y;
  return Ideal(R, {z1 * h - z2 * (c(4) * t + c(5) * th + c(6) * y + th * k), th * th + y * k, y * h});
}

using ChartSample = std::pair<Rational, Rational>;

inline Delta2Record delta2_at_p0(const SingularityCoefficients& c,
                                 const std::array<ChartSample, 2>& charts = {ChartSample{Rational(3), Rational(7)},
                                                                             ChartSample{Rational(-5), Rational(2)}},
                                 const StandardBasisOptions& options = {}) {
  if (charts[0].first * charts[1].second == charts[0].second * charts[1].first)
    throw std::invalid_argument("chart samples must be distinct points of P^1");
  Delta2Record d;
  const PolyRing& R = singular_point_ring();
  Ideal y_ideal(R, {Polynomial::variable(R, "y")});
  std::array<std::uint64_t, 2> totals{}, mod_y{};
  for (std::size_t i = 0; i < 2; ++i) {
    Ideal I = delta2_ideal(c, charts[i].first, charts[i].second);
    totals[i] = finite_length(local_length(I, options), "vertical cycle ideal");
    mod_y[i] = finite_length(local_length(I + y_ideal, options), "vertical cycle ideal + (y)");
  }
  if (totals[0] != totals[1] || mod_y[0] != mod_y[1])
    throw NonGenericSample("vertical cycle length depends on the chart sample");
  d.total = totals[0];
  d.part_I4 = mod_y[0];
  d.part_I5 = finite_length(local_length(ideal_R2(g_system_from_coefficients(c)), options), "R2");
  return d;
}

// I(b, p0) = delta2 - delta1.
inline std::int64_t obstruction_I_at_p0(const Delta1Record& d1, const Delta2Record& d2) {
  return static_cast<std::int64_t>(d2.total) - static_cast<std::int64_t>(d1.total);
}
inline std::int64_t obstruction_I_at_p0(const SingularityCoefficients& c, const StandardBasisOptions& options = {}) {
  return obstruction_I_at_p0(delta1_at_p0(c, options), delta2_at_p0(c, {ChartSample{Rational(3), Rational(7)},
                                                                        ChartSample{Rational(-5), Rational(2)}},
                                                                    options));
}

// ---------------------------------------------------------------------------
// Crossing points q_i and smooth crossings

// Equations of the reduced curve at a crossing point with theta1, theta2 and
// epsilon = theta0 eliminated, over Q[t, theta0, s]; the b_i are units there.
inline Ideal crossing_curve_ideal(unsigned r, const std::array<Polynomial, 5>& b) {
  if (r < 2) throw std::invalid_argument("crossing exponent r must be >= 2");
  const PolyRing& R = crossing_ring();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!(b[i].ring() == R)) throw RingMismatch();
    if (b[i].constant_term().is_zero())
      throw std::invalid_argument("b" + std::to_string(i + 1) + " vanishes at the origin");
  }
  Polynomial t = Polynomial::variable(R, "t"), th = Polynomial::variable(R, "theta0"), s = Polynomial::variable(R, "s");
  Polynomial w = t + b[2] * s + b[3] * th;
  return Ideal(R, {th * th * b[0] - s * w,
                   th.pow(3) * b[1] - s.pow(r) * b[4],
                   b[1] * w * w - b[0] * b[0] * b[4] * th * s.pow(r - 2),
                   b[1] * th * w - b[0] * b[4] * s.pow(r - 1)});
}

// Length of the crossing curve cut by the curve s = theta0^3.
inline LengthReport cbb_length(unsigned r, const std::array<Polynomial, 5>& b, const StandardBasisOptions& options = {}) {
  const PolyRing& R = crossing_ring();
  Ideal curve = crossing_curve_ideal(r, b);
  Ideal cut(R, {Polynomial::variable(R, "s") - Polynomial::variable(R, "theta0").pow(3)});
  return sum_length(curve, cut, options);
}

// Length of (theta0^theta_power, phi^phi_power) in Q[theta0, phi].
inline LengthReport vertical_multiplicity(unsigned theta_power = 4, unsigned phi_power = 1) {
  PolyRing R({"theta0", "phi"}, OrderKind::kLocalDegRevLex);
  return local_length(Ideal(R, {Polynomial::variable(R, "theta0").pow(theta_power),
                                Polynomial::variable(R, "phi").pow(phi_power)}));
}

// ---------------------------------------------------------------------------
// Global bookkeeping of the contributions away from p0

struct LedgerCounts {
  std::int64_t i1 = 0, i2 = 0, j1 = 0, j2 = 0, n0 = 0, n1 = 1, k = 0;
};

struct LedgerRecord {
  std::int64_t sum_delta1 = 0, sum_delta2 = 0, sum_I = 0, closed_form_I = 0;
  bool consistent = false;
};

inline LedgerRecord ledger(const LedgerCounts& c) {
  if (c.n1 != 1) throw std::invalid_argument("ledger needs n1 = 1");
  if (c.i1 != c.j1) throw std::invalid_argument("ledger needs i1 = j1");
  if (c.i1 < 0 || c.i2 < 0 || c.j2 < 0 || c.n0 < 0 || c.k < 0) throw std::invalid_argument("counts are non-negative");
  LedgerRecord r;
  r.sum_delta1 = 2 * c.i2 + 3 * c.i1 + c.n0 + 3 * c.k;
  r.sum_delta2 = 3 * (c.j1 + c.j2) + c.i1 - 4 - 2 * c.k;
  r.sum_I = r.sum_delta2 - r.sum_delta1;
  r.closed_form_I = 3 * (c.j1 + c.j2) - 2 * c.i1 - 2 * c.i2 - c.n0 - 5 * c.k - 4;
  r.consistent = r.sum_I == r.closed_form_I;
  return r;
}

// The three count formulas as polynomials in (i1, i2, j1, j2, n0, k); the
// identity holds when delta2 - delta1 - closed form is the zero polynomial.
inline Polynomial ledger_identity_residual() {
  PolyRing R({"i1", "i2", "j1", "j2", "n0", "k"}, OrderKind::kDegRevLex);
  auto v = [&](const char* n) { return Polynomial::variable(R, n); };
  auto c = [&](long x) { return Polynomial::constant(R, Rational(x)); };
  Polynomial d1 = c(2) * v("i2") + c(3) * v("i1") + v("n0") + c(3) * v("k");
  Polynomial d2 = c(3) * (v("j1") + v("j2")) + v("i1") - c(4) - c(2) * v("k");
  Polynomial closed = c(3) * (v("j1") + v("j2")) - c(2) * v("i1") - c(2) * v("i2") - v("n0") - c(5) * v("k") - c(4);
  return d2 - d1 - closed;
}

}  // namespace localmult

#endif  // LOCALMULT_FAMILIES_HPP
