#include <random>

#include <gtest/gtest.h>

#include "localmult/parse.hpp"
#include "localmult/standard_basis.hpp"
#include "random_ideals.hpp"

using namespace localmult;

namespace {

PolyRing ring_of(OrderKind kind) { return PolyRing({"t", "theta0"}, kind); }

Polynomial P(const std::string& s, const PolyRing& r) { return parse_polynomial(s, r); }

std::vector<Monomial> lead_of(const StandardBasis& sb) { return leading_ideal(sb).generators; }

std::vector<Monomial> sorted(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(WeakNormalForm, SpecExamples) {
  PolyRing loc = ring_of(OrderKind::kLocalDegRevLex), glob = ring_of(OrderKind::kDegRevLex);
  EXPECT_TRUE(weak_normal_form(P("t", loc), {P("t + t^2", loc)}).is_zero());
  EXPECT_TRUE(weak_normal_form(P("t^2", glob), {P("t", glob)}).is_zero());
  for (const PolyRing& r : {loc, glob})
    EXPECT_EQ(weak_normal_form(P("theta0*t", r), {P("theta0^2", r), P("t^2", r)}), P("theta0*t", r));
}

TEST(WeakNormalForm, StepCap) {
  PolyRing loc = ring_of(OrderKind::kLocalDegRevLex);
  EXPECT_THROW(weak_normal_form(P("t^5", loc), {P("t - t^2", loc)}, std::nullopt, 1), ResourceLimitExceeded);
}

TEST(SPolynomial, SpecExamples) {
  PolyRing loc = ring_of(OrderKind::kLocalDegRevLex);
  Polynomial f = P("theta0*t + t^3", loc), g = P("theta0^2", loc);
  EXPECT_EQ(s_polynomial(f, g), P("theta0*t^3", loc));
  EXPECT_TRUE(s_polynomial(f, f).is_zero());
  Polynomial a = P("t^2", loc), b = P("theta0^2", loc);
  EXPECT_TRUE(weak_normal_form(s_polynomial(a, b), {a, b}).is_zero());
}

TEST(StandardBasis, SpecExamples) {
  PolyRing loc = ring_of(OrderKind::kLocalDegRevLex);
  Monomial t2{2, 0}, th2{0, 2}, tth{1, 1}, t3{3, 0};
  StandardBasis a = standard_basis(Ideal(loc, {P("theta0^2", loc), P("theta0*t", loc), P("t^2 + 7/3*theta0*t", loc)}));
  EXPECT_EQ(sorted(lead_of(a)), sorted({th2, tth, t2}));

  StandardBasis b = standard_basis(Ideal(loc, {P("theta0*t + 2*t^3", loc), P("theta0^2 + 3*t^4", loc), P("5*t^3", loc)}));
  EXPECT_EQ(sorted(lead_of(b)), sorted({tth, th2, t3}));

  PolyRing x({"x"}, OrderKind::kDegRevLex);
  StandardBasis c = standard_basis(Ideal(x, {P("x", x)}));
  ASSERT_EQ(c.elements.size(), 1u);
  EXPECT_EQ(c.elements[0], P("x", x));
}

TEST(LeadingIdeal, SpecExamples) {
  PolyRing loc = ring_of(OrderKind::kLocalDegRevLex);
  auto lead = leading_ideal(std::vector<Polynomial>{P("t^2", loc), P("theta0*t", loc), P("theta0^2", loc), P("t^3", loc)});
  EXPECT_EQ(sorted(lead.generators), sorted({Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}));
  auto anti = leading_ideal(std::vector<Polynomial>{P("theta0*t", loc), P("theta0^2", loc), P("t^3", loc)});
  EXPECT_EQ(anti.generators.size(), 3u);
}

TEST(StandardBasis, GlobalReducedGroebnerBasis) {
  PolyRing r({"x", "y"}, OrderKind::kLex);
  StandardBasis sb = standard_basis(Ideal(r, {P("x^2 + y", r), P("x*y - 1", r)}));
  EXPECT_TRUE(sb.reduced);
  for (const auto& g : sb.elements) EXPECT_EQ(g.leading_coefficient(), Rational(1));
  // y^3 + 1 is in the ideal: x*(x*y - 1) - y*(x^2 + y) = -x - y^2.
  EXPECT_TRUE(weak_normal_form(P("y^3 + 1", r), sb.elements).is_zero());
}

TEST(StandardBasis, PairCapIsExplicit) {
  PolyRing loc = ring_of(OrderKind::kLocalDegRevLex);
  StandardBasisOptions o;
  o.max_pairs = 0;
  EXPECT_THROW(standard_basis(Ideal(loc, {P("theta0*t + t^3", loc), P("theta0^2 + t^4", loc)}), o), ResourceLimitExceeded);
}

class RandomBases : public ::testing::TestWithParam<OrderKind> {};

// Small generators: Groebner bases of the local test ideals can be huge.
TEST_P(RandomBases, BuchbergerCriterionAndMembership) {
  std::mt19937_64 rng(21);
  PolyRing r = gen::random_ring(3, GetParam());
  for (int k = 0; k < 15; ++k) {
    Ideal I(r, {gen::random_polynomial(rng, r, 3, 1, 2), gen::random_polynomial(rng, r, 3, 1, 2),
                gen::random_polynomial(rng, r, 3, 1, 3)});
    StandardBasis sb = standard_basis(I);
    for (std::size_t i = 0; i < sb.elements.size(); ++i)
      for (std::size_t j = i + 1; j < sb.elements.size(); ++j)
        EXPECT_TRUE(weak_normal_form(s_polynomial(sb.elements[i], sb.elements[j]), sb.elements).is_zero());
    for (int m = 0; m < 5; ++m) {
      Polynomial member(r);
      for (const auto& g : I.generators()) member += g * gen::random_polynomial(rng, r, 2, 0, 2);
      EXPECT_TRUE(weak_normal_form(member, sb.elements).is_zero());
    }
    for (const auto& g : I.generators()) EXPECT_TRUE(weak_normal_form(g, sb.elements).is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, RandomBases,
                         ::testing::Values(OrderKind::kDegRevLex, OrderKind::kLex, OrderKind::kLocalDegRevLex));

TEST(StandardBasis, Deterministic) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 10; ++k) {
    Ideal I = gen::random_local_ideal(rng, 2);
    StandardBasis a = standard_basis(I), b = standard_basis(I);
    ASSERT_EQ(a.elements.size(), b.elements.size());
    for (std::size_t i = 0; i < a.elements.size(); ++i) EXPECT_EQ(a.elements[i], b.elements[i]);
  }
}

TEST(HighestCorner, Staircases) {
  EXPECT_EQ(detail::highest_corner_degree({Monomial{2, 0}, Monomial{0, 3}}, 2), std::optional<std::uint64_t>(4));
  EXPECT_EQ(detail::highest_corner_degree({Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}, 2), std::optional<std::uint64_t>(2));
  EXPECT_FALSE(detail::highest_corner_degree({Monomial{2, 0}}, 2));
  EXPECT_EQ(detail::highest_corner_degree({Monomial{0, 0}}, 2), std::optional<std::uint64_t>(0));
}
