#include <random>

#include <gtest/gtest.h>

#include "localmult/binary_form.hpp"
#include "localmult/parse.hpp"
#include "random_ideals.hpp"

using namespace localmult;

namespace {

const PolyRing& tty() {
  static const PolyRing r({"t", "theta0", "y"}, OrderKind::kLocalDegRevLex);
  return r;
}

Polynomial P(const std::string& s, const PolyRing& r = tty()) { return parse_polynomial(s, r); }

}  // namespace

TEST(Rational, ArithmeticAndParse) {
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Parse, SpecExamples) {
  EXPECT_THROW(P("theta0^2 + y*(a)"), ParseError);
  Polynomial z = P("t - t");
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  Polynomial two = P("theta0*t + t*theta0");
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two.leading_coefficient(), Rational(2));
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    P("t + * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(P("t^"), ParseError);
  EXPECT_THROW(P("(t + y"), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
}

TEST(Arithmetic, SpecExamples) {
  EXPECT_EQ(P("(t + theta0)") * P("(t - theta0)"), P("t^2 - theta0^2"));
  Polynomial p = P("3*t*y - 1/2");
  EXPECT_EQ(p + Polynomial(tty()), p);
  EXPECT_EQ(P("1/2*t") * P("2/3*t"), P("1/3*t^2"));
}

TEST(Arithmetic, RingMismatch) {
  PolyRing other({"t", "theta0", "y"}, OrderKind::kDegRevLex);
  EXPECT_THROW(P("t") + P("t", other), RingMismatch);
}

TEST(Arithmetic, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(5);
  PolyRing r = gen::random_ring(3);
  for (int k = 0; k < 50; ++k) {
    Polynomial a = gen::random_polynomial(rng, r, 4, 0, 3), b = gen::random_polynomial(rng, r, 4, 0, 3),
               c = gen::random_polynomial(rng, r, 4, 0, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * Polynomial::constant(r, Rational(1)), a);
  }
}

TEST(Arithmetic, PrintParseRoundTrip) {
  std::mt19937_64 rng(6);
  for (std::size_t n = 1; n <= 3; ++n) {
    PolyRing r = gen::random_ring(n);
    for (int k = 0; k < 30; ++k) {
      Polynomial a = gen::random_polynomial(rng, r, 5, 0, 4);
      EXPECT_EQ(parse_polynomial(a.to_string(), r), a) << a.to_string();
    }
  }
}

TEST(Order, LawsOnRandomMonomials) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<unsigned> e(0, 3);
  auto mono = [&] { return Monomial{e(rng), e(rng), e(rng)}; };
  for (OrderKind kind : {OrderKind::kDegRevLex, OrderKind::kLex, OrderKind::kLocalDegRevLex}) {
    MonomialOrder ord(kind, std::vector<std::size_t>{2, 0, 1});
    for (int k = 0; k < 200; ++k) {
      Monomial a = mono(), b = mono(), c = mono();
      EXPECT_EQ(ord.compare(a, b) == 0, a == b);
      EXPECT_EQ(ord.compare(a, b) > 0, ord.compare(b, a) < 0);
      if (ord.greater(a, b) && ord.greater(b, c)) {
        EXPECT_TRUE(ord.greater(a, c));
      }
      EXPECT_EQ(ord.compare(a * c, b * c), ord.compare(a, b));
    }
    Monomial one(3), x = Monomial::variable(3, 0);
    EXPECT_EQ(ord.greater(one, x), kind == OrderKind::kLocalDegRevLex);
  }
}

TEST(Homogeneous, SpecExamples) {
  EXPECT_EQ(P("theta0*t + t^3").homogeneous_part(2), P("theta0*t"));
  EXPECT_EQ(P("theta0^2 + 5*y*t").homogeneous_part(2), P("theta0^2 + 5*y*t"));
  Polynomial l1 = P("2*t - theta0"), l2 = P("t + 3*theta0");
  Polynomial g1 = P("theta0*t") + l1 * l2;
  EXPECT_EQ(g1.homogeneous_part(2), P("2*t^2 + 6*theta0*t - 3*theta0^2"));
}

TEST(Homogeneous, DecompositionSumsBack) {
  std::mt19937_64 rng(10);
  PolyRing r = gen::random_ring(3);
  for (int k = 0; k < 30; ++k) {
    Polynomial a = gen::random_polynomial(rng, r, 6, 0, 5), sum(r);
    for (std::uint64_t d = 0; d <= a.degree(); ++d) {
      Polynomial h = a.homogeneous_part(d);
      EXPECT_TRUE(h.is_homogeneous());
      sum += h;
    }
    EXPECT_EQ(sum, a);
  }
}

TEST(Substitute, SpecExamples) {
  PolyRing r({"s", "eps"}, OrderKind::kLocalDegRevLex);
  Polynomial eps3 = Polynomial::variable(r, "eps").pow(3);
  EXPECT_TRUE(parse_polynomial("s - eps^3", r).substitute({{"s", eps3}}).is_zero());

  PolyRing c({"t", "theta0", "s"}, OrderKind::kLocalDegRevLex);
  Polynomial th3 = Polynomial::variable(c, "theta0").pow(3);
  EXPECT_EQ(parse_polynomial("theta0^2 - s*t", c).substitute({{"s", th3}}), parse_polynomial("theta0^2 - theta0^3*t", c));
  EXPECT_EQ(P("y").substitute({{"y", P("y")}}), P("y"));
}

TEST(Gcd, SpecExamples) {
  EXPECT_EQ(binary_form_gcd(P("t^2"), P("theta0*t")), P("t"));
  EXPECT_TRUE(binary_form_gcd(P("t^2 - theta0^2"), P("t^2 + theta0^2")).is_constant());
  EXPECT_TRUE(binary_form_gcd(P("theta0*t + 2*t^2"), P("theta0^2 + 3*theta0*t")).is_constant());
  EXPECT_EQ(binary_form_gcd(P("theta0*t + 2*t^2"), P("theta0^2 + 2*theta0*t")).degree(), 1u);
  EXPECT_THROW(binary_form_gcd(P("t + t^2"), P("t")), std::invalid_argument);
  EXPECT_THROW(binary_form_gcd(P("t*y"), P("theta0")), std::invalid_argument);
}

TEST(Gcd, DividesBothOnRandomForms) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> c(-4, 4);
  auto form = [&](int deg) {
    Polynomial p(tty());
    for (int i = 0; i <= deg; ++i)
      p += Polynomial::term(tty(), Monomial{static_cast<unsigned>(i), static_cast<unsigned>(deg - i), 0}, Rational(c(rng)));
    return p;
  };
  for (int k = 0; k < 40; ++k) {
    Polynomial common = form(1), f = form(2) * common, g = form(1) * common;
    if (f.is_zero() || g.is_zero()) continue;
    Polynomial d = binary_form_gcd(f, g);
    EXPECT_TRUE(exact_quotient(f, d).has_value());
    EXPECT_TRUE(exact_quotient(g, d).has_value());
    if (!common.is_zero()) {
      EXPECT_TRUE(exact_quotient(d, common).has_value());
    }
  }
}

TEST(ExactQuotient, Basic) {
  auto q = exact_quotient(P("t^2 - theta0^2"), P("t - theta0"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("t + theta0"));
  EXPECT_FALSE(exact_quotient(P("t^2 + 1"), P("t")));
  EXPECT_THROW(exact_quotient(P("t"), Polynomial(tty())), std::domain_error);
}

TEST(IdealFile, ParsesRingAndIdeals) {
  IdealFile f = parse_ideal_file("# comment\nring P[x, y] local;\nideal I = x^2, y^3;\nexpect_length = 6;\n");
  ASSERT_EQ(f.ideals.size(), 1u);
  EXPECT_EQ(f.ideals[0].first, "I");
  EXPECT_EQ(f.ideals[0].second.size(), 2u);
  EXPECT_TRUE(f.ring.ring.is_local());
  EXPECT_EQ(f.expectations.at("length"), "6");
  EXPECT_THROW(parse_ideal_file("ideal I = x;"), ParseError);
  EXPECT_THROW(parse_ideal_file("ring P[x] local;\nfoo = x;"), ParseError);
}
