#ifndef LOCALMULT_INSTANCE_HPP
#define LOCALMULT_INSTANCE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "localmult/families.hpp"
#include "localmult/parse.hpp"

namespace localmult {

// Instance files describe one singular point in one of four ways:
//   a1 = ...; ... a10 = ...; m = 1;              coefficient form
//   r1 = 2; r2 = 1; r3 = 1; b1 = ...; ... b6 = ...;  profile form
//   g1 = ...; g2 = ...; g3 = ...; g4 = ...;        explicit generators, profile (2,1,1)
//   u1 = ...; u2 = ...; u3 = ...; [m11 = ...; m12; m21; m22]  deviated normal form
// `expect_verdict = NAME;` and `expect_L = N;` record expected results.
enum class InstanceForm { kCoefficients, kProfile, kExplicit, kNormalForm };

struct Instance {
  InstanceForm form = InstanceForm::kExplicit;
  std::optional<SingularityCoefficients> coefficients;
  GSystem g;
  std::map<std::string, std::string> expectations;
};

namespace detail {

inline Polynomial binding_polynomial(const FixtureFile& f, const Binding& b) {
  Polynomial p = parse_polynomial(std::string_view(b.value), f.ring.ring);
  return p.substitute({}, singular_point_ring());
}

inline std::uint64_t binding_unsigned(const Binding& b) {
  std::string v = b.value;
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw ParseError("expected a non-negative integer", b.value_offset);
  return std::stoull(v);
}

inline Rational binding_rational(const Binding& b) {
  try {
    return Rational::parse(b.value);
  } catch (const std::exception&) {
    throw ParseError("expected a rational number", b.value_offset);
  }
}

}  // namespace detail

inline Instance parse_instance(std::string_view source) {
  FixtureFile f = parse_fixture(source);
  auto vars = f.ring.ring.variables();
  std::sort(vars.begin(), vars.end());
  if (vars != std::vector<std::string>{"t", "theta0", "y"})
    throw ParseError("instance ring must have variables t, theta0, y", 0);

  Instance inst;
  std::map<std::string, const Binding*> by_name;
  for (const auto& b : f.bindings) {
    if (b.name.rfind("expect_", 0) == 0) {
      inst.expectations[b.name.substr(7)] = b.value;
      continue;
    }
    by_name[b.name] = &b;
  }
  auto take = [&](const std::string& name) -> const Binding& {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw ParseError("missing binding '" + name + "'", source.size());
    const Binding& b = *it->second;
    by_name.erase(it);
    return b;
  };

  if (by_name.count("a1")) {
    inst.form = InstanceForm::kCoefficients;
    const PolyRing& R = singular_point_ring();
    std::array<Polynomial, 10> a{Polynomial(R), Polynomial(R), Polynomial(R), Polynomial(R), Polynomial(R),
                                 Polynomial(R), Polynomial(R), Polynomial(R), Polynomial(R), Polynomial(R)};
    for (int i = 1; i <= 10; ++i) a[static_cast<std::size_t>(i - 1)] = detail::binding_polynomial(f, take("a" + std::to_string(i)));
    const Binding& m = take("m");
    auto m_index = detail::binding_unsigned(m);
    try {
      inst.coefficients = SingularityCoefficients::make(std::move(a), static_cast<int>(m_index));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), m.value_offset);
    }
    inst.g = g_system_from_coefficients(*inst.coefficients);
  } else if (by_name.count("r1")) {
    inst.form = InstanceForm::kProfile;
    ExponentProfile p;
    p.r1 = static_cast<unsigned>(detail::binding_unsigned(take("r1")));
    p.r2 = static_cast<unsigned>(detail::binding_unsigned(take("r2")));
    p.r3 = static_cast<unsigned>(detail::binding_unsigned(take("r3")));
    const PolyRing& R = singular_point_ring();
    std::array<Polynomial, 6> b{Polynomial(R), Polynomial(R), Polynomial(R), Polynomial(R), Polynomial(R), Polynomial(R)};
    for (int i = 1; i <= 6; ++i) b[static_cast<std::size_t>(i - 1)] = detail::binding_polynomial(f, take("b" + std::to_string(i)));
    inst.g = build_g_system(p, b);
  } else if (by_name.count("g1")) {
    inst.form = InstanceForm::kExplicit;
    const PolyRing& R = singular_point_ring();
    Polynomial zero(R);
    inst.g = GSystem{zero, zero, zero,
                     detail::binding_polynomial(f, take("g1")), detail::binding_polynomial(f, take("g2")),
                     detail::binding_polynomial(f, take("g3")), detail::binding_polynomial(f, take("g4")),
                     ExponentProfile{2, 1, 1}, {}};
  } else if (by_name.count("u1")) {
    inst.form = InstanceForm::kNormalForm;
    Rational u1 = detail::binding_rational(take("u1")), u2 = detail::binding_rational(take("u2")),
             u3 = detail::binding_rational(take("u3"));
    LinearChange ch;
    if (by_name.count("m11")) {
      ch.m11 = detail::binding_rational(take("m11"));
      ch.m12 = detail::binding_rational(take("m12"));
      ch.m21 = detail::binding_rational(take("m21"));
      ch.m22 = detail::binding_rational(take("m22"));
    }
    inst.g = make_deviated_instance(u1, u2, u3, ch);
  } else {
    throw ParseError("instance needs a1..a10, r1..r3 with b1..b6, g1..g4, or u1..u3", 0);
  }
  if (!by_name.empty()) {
    const Binding& extra = *by_name.begin()->second;
    throw ParseError("unexpected binding '" + extra.name + "'", extra.value_offset);
  }
  return inst;
}

}  // namespace localmult

#endif  // LOCALMULT_INSTANCE_HPP
