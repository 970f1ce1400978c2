#include <random>

#include <gtest/gtest.h>

#include "localmult/families.hpp"
#include "localmult/parse.hpp"
#include "random_ideals.hpp"

using namespace localmult;

namespace {

const PolyRing& ring2() {
  static const PolyRing r({"t", "theta0"}, OrderKind::kLocalDegRevLex);
  return r;
}

Ideal I(std::initializer_list<const char*> gens, const PolyRing& r = ring2()) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, r));
  return Ideal(r, ps);
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(LocalLength, SpecExamples) {
  LengthReport a = local_length(I({"theta0^2", "theta0*t", "2*t^2 - 3*theta0*t + 5*theta0^2"}));
  EXPECT_EQ(a.length, 3u);
  EXPECT_EQ(sorted(a.basis_strings()), sorted({"1", "t", "theta0"}));

  EXPECT_EQ(local_length(I({"t^4", "theta0^3"})).length, 12u);
  EXPECT_FALSE(local_length(I({"t"})).finite());

  const PolyRing& R = singular_point_ring();
  LengthReport dev = local_length(I({"theta0*t + 2*t^3", "theta0^2 + 3*t^4", "5*t^3", "y + 2*t - theta0"}, R));
  EXPECT_EQ(dev.length, 4u);
  EXPECT_EQ(sorted(dev.basis_strings()), sorted({"1", "t", "theta0", "t^2"}));
  LengthReport six = local_length(I({"theta0*t + 2*t^3", "theta0^2 + 3*t^4", "y - 2*t + theta0"}, R));
  EXPECT_EQ(six.length, 6u);
  EXPECT_EQ(sorted(six.basis_strings()), sorted({"1", "t", "theta0", "t^2", "t^3", "t^4"}));
}

TEST(LocalLength, UnitFactorsDisappear) {
  PolyRing r({"t"}, OrderKind::kLocalDegRevLex);
  EXPECT_EQ(local_length(I({"t - t^2"}, r)).length, 1u);
  EXPECT_EQ(local_length(I({"1 + t"}, r)).length, 0u);
}

TEST(LocalLength, GlobalRingIsLocalized) {
  PolyRing r({"t", "theta0"}, OrderKind::kDegRevLex);
  EXPECT_EQ(local_length(I({"t - t^2", "theta0^2"}, r)).length, 2u);
}

TEST(LocalLength, MonomialClosedForm) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<unsigned> e(1, 6);
  for (std::size_t n = 1; n <= 3; ++n) {
    PolyRing r = gen::random_ring(n);
    for (int k = 0; k < 10; ++k) {
      std::vector<Polynomial> gens;
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) {
        unsigned p = e(rng);
        expected *= p;
        gens.push_back(Polynomial::variable(r, i).pow(p));
      }
      EXPECT_EQ(local_length(Ideal(r, gens)).length, expected);
    }
  }
}

TEST(LocalLength, InfiniteWithoutHanging) {
  const PolyRing& R = singular_point_ring();
  EXPECT_FALSE(local_length(I({"theta0^2 + y*t", "y*theta0"}, R)).finite());
  EXPECT_FALSE(local_length(I({"t*theta0"})).finite());
}

TEST(Oracle, SpecExamples) {
  LengthReport a = truncation_length_oracle(I({"theta0^2", "theta0*t", "t^2"}));
  EXPECT_TRUE(a.stable);
  EXPECT_EQ(a.length, 3u);
  const PolyRing& R = singular_point_ring();
  Ideal dev = I({"theta0*t + 2*t^3", "theta0^2 + 3*t^4", "5*t^3", "y + 2*t - theta0"}, R);
  EXPECT_EQ(truncation_length_oracle(dev).length, local_length(dev).length);
  PolyRing r({"t"}, OrderKind::kLocalDegRevLex);
  EXPECT_EQ(truncation_length_oracle(I({"t - t^2"}, r)).length, 1u);
}

TEST(Oracle, UnstableIsFlagged) {
  LengthReport r = truncation_length_oracle(I({"t"}), 6);
  EXPECT_FALSE(r.stable);
  EXPECT_FALSE(r.caveat.empty());
}

TEST(Oracle, AgreesOnRandomIdeals) {
  std::mt19937_64 rng(32);
  int kept = 0;
  for (int tried = 0; kept < 40 && tried < 200; ++tried) {
    std::size_t n = 1 + tried % 3;
    Ideal J = gen::random_local_ideal(rng, n);
    LengthReport o = truncation_length_oracle(J, n == 1 ? 30 : 14);
    if (!o.stable || *o.length > 25) continue;
    ++kept;
    EXPECT_EQ(local_length(J).length, o.length) << J.to_string();
  }
  EXPECT_EQ(kept, 40);
}

TEST(SumLength, SpecExamples) {
  PolyRing r({"x", "y"}, OrderKind::kLocalDegRevLex);
  LengthReport t = sum_length(I({"x"}, r), I({"y"}, r));
  EXPECT_EQ(t.length, 1u);
  EXPECT_FALSE(t.caveat.empty());
  EXPECT_EQ(sum_length(I({"y - x^2"}, r), I({"y"}, r)).length, 2u);
}

TEST(LengthReport, JsonRoundTrip) {
  LengthReport a = local_length(I({"t^2", "theta0^3"}));
  nlohmann::json j = to_json(a);
  EXPECT_EQ(j["length"], 6);
  LengthReport b = length_report_from_json(j, ring2());
  EXPECT_EQ(b.length, a.length);
  EXPECT_EQ(b.basis_strings(), a.basis_strings());
  EXPECT_EQ(to_json(b), j);

  LengthReport inf = local_length(I({"t"}));
  EXPECT_EQ(to_json(inf)["length"], "infinite");
  EXPECT_FALSE(length_report_from_json(to_json(inf), ring2()).finite());
}

TEST(LocalLength, PermutationInvariant) {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 10; ++k) {
    Ideal J = gen::random_local_ideal(rng, 3);
    LengthReport base = local_length(J);
    if (!base.finite()) continue;
    PolyRing perm = J.ring().with_order(MonomialOrder(OrderKind::kLocalDegRevLex, {2, 0, 1}));
    EXPECT_EQ(local_length(J.in_ring(perm)).length, base.length);
  }
}
