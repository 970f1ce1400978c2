#ifndef LOCALMULT_LOCAL_LENGTH_HPP
#define LOCALMULT_LOCAL_LENGTH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "localmult/ideal.hpp"
#include "localmult/standard_basis.hpp"

namespace localmult {

enum class LengthSource { kStandardBasis, kTruncationOracle };

inline std::string to_string(LengthSource s) {
  return s == LengthSource::kStandardBasis ? "standard_basis" : "truncation_oracle";
}

// Length of a localization at the origin. `length` is empty when the local
// ring is not Artinian. For the standard-basis engine `basis` lists the
// standard monomials (|basis| == length); the oracle leaves it empty and
// reports `stable = false` when it ran out of room before stabilizing.
struct LengthReport {
  std::optional<std::uint64_t> length;
  std::vector<Monomial> basis;
  LengthSource source = LengthSource::kStandardBasis;
  bool stable = true;
  std::string caveat;
  PolyRing ring{{"x"}, OrderKind::kLocalDegRevLex};

  bool finite() const { return length.has_value(); }

  std::vector<std::string> basis_strings() const {
    Polynomial helper(ring);
    std::vector<std::string> out;
    for (const auto& m : basis) out.push_back(m.is_one() ? "1" : helper.monomial_string(m));
    return out;
  }
};

inline nlohmann::json to_json(const LengthReport& r) {
  nlohmann::json j;
  j["length"] = r.length ? nlohmann::json(*r.length) : nlohmann::json("infinite");
  j["basis"] = r.basis_strings();
  j["source"] = to_string(r.source);
  j["stable"] = r.stable;
  j["caveat"] = r.caveat;
  return j;
}

// Inverse of to_json; the ring names the variables used in the basis strings.
inline LengthReport length_report_from_json(const nlohmann::json& j, const PolyRing& ring) {
  LengthReport r;
  r.ring = ring;
  if (j.at("length").is_string()) {
    if (j.at("length").get<std::string>() != "infinite") throw std::invalid_argument("bad length field");
  } else {
    r.length = j.at("length").get<std::uint64_t>();
  }
  for (const auto& s : j.at("basis")) {
    std::string text = s.get<std::string>();
    Monomial m(ring.size());
    if (text != "1") {
      std::size_t start = 0;
      while (start <= text.size()) {
        auto star = text.find('*', start);
        if (star == std::string::npos) star = text.size();
        std::string factor = text.substr(start, star - start);
        auto caret = factor.find('^');
        std::string name = factor.substr(0, caret);
        auto idx = ring.index_of(name);
        if (!idx) throw std::invalid_argument("unknown variable '" + name + "' in basis");
        m[*idx] = caret == std::string::npos ? 1 : static_cast<Monomial::Exponent>(std::stoul(factor.substr(caret + 1)));
        start = star + 1;
      }
    }
    r.basis.push_back(m);
  }
  std::string src = j.at("source").get<std::string>();
  r.source = src == "standard_basis" ? LengthSource::kStandardBasis : LengthSource::kTruncationOracle;
  r.stable = j.at("stable").get<bool>();
  r.caveat = j.at("caveat").get<std::string>();
  return r;
}

// The ring with its variables kept and the local order installed.
inline PolyRing localized(const PolyRing& ring) {
  if (ring.is_local()) return ring;
  return ring.with_order(MonomialOrder(OrderKind::kLocalDegRevLex, ring.size()));
}

// Monomials outside the monomial ideal, or nullopt when there are infinitely
// many (some variable has no pure power among the generators).
inline std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& lead,
                                                              std::size_t nvars) {
  std::vector<std::uint64_t> pure(nvars, 0);
  bool has_one = false;
  for (const auto& m : lead) {
    if (m.is_one()) has_one = true;
    int v = m.pure_power_variable();
    if (v >= 0 && (pure[v] == 0 || m[v] < pure[v])) pure[v] = m[v];
  }
  if (has_one) return std::vector<Monomial>{};
  for (auto p : pure)
    if (p == 0) return std::nullopt;
  std::vector<Monomial> out;
  Monomial cur(nvars);
  for (;;) {
    if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& g) { return g.divides(cur); }))
      out.push_back(cur);
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
  return out;
}

namespace detail {

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t d) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  Monomial cur(nvars);
  cur[0] = static_cast<Monomial::Exponent>(d);
  // Enumerate compositions of d into nvars parts.
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == nvars) {
      cur[i] = static_cast<Monomial::Exponent>(left);
      out.push_back(cur);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      cur[i] = static_cast<Monomial::Exponent>(e);
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

inline std::vector<Monomial> sorted_staircase(std::vector<Monomial> stair, const MonomialOrder& ord) {
  std::sort(stair.begin(), stair.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return stair;
}

inline Ideal plus_power_of_maximal(const Ideal& ideal, std::uint64_t d) {
  // Monomials first, so the degree bound is in force from the start.
  std::vector<Polynomial> gens;
  for (const auto& m : monomials_of_degree(ideal.ring().size(), d))
    gens.push_back(Polynomial::term(ideal.ring(), m, Rational(1)));
  for (const auto& g : ideal.generators()) gens.push_back(g);
  return Ideal(ideal.ring(), std::move(gens));
}

}  // namespace detail

// Length of (Q[x]/I) localized at the origin, read off the staircase of a
// local standard basis. The ideal's own order is ignored: the computation
// always runs under local-degrevlex on the same variables.
//
// A short plain Mora run is tried first. If it does not finish, the standard
// basis of I + m^D is computed for growing D; these carry a degree bound from
// the start. When the staircase of I + m^D has no monomial of degree D - 1,
// m^(D-1) lies in I + m^D, hence in I by Nakayama, and the two lengths agree.
// Past max_certified_degree, plain Mora runs again with the full step budget.
inline LengthReport local_length(const Ideal& ideal, const StandardBasisOptions& options = {}) {
  PolyRing local = localized(ideal.ring());
  LengthReport r;
  r.ring = local;
  r.source = LengthSource::kStandardBasis;
  if (ideal.is_zero()) {
    if (local.size() == 0) r.length = 1, r.basis = {Monomial(0)};
    return r;
  }
  Ideal I = ideal.in_ring(local);
  auto read_off = [&](const StandardBasis& sb) {
    auto stair = standard_monomials(leading_ideal(sb).generators, local.size());
    if (stair) {
      r.length = stair->size();
      r.basis = detail::sorted_staircase(std::move(*stair), local.order());
    }
    return r;
  };

  StandardBasisOptions probe = options;
  probe.max_reduction_steps = std::min<std::size_t>(options.max_reduction_steps, 200);
  try {
    return read_off(standard_basis(I, probe));
  } catch (const ResourceLimitExceeded&) {
    if (probe.max_reduction_steps == options.max_reduction_steps) throw;
  }
  const std::uint64_t cap = options.max_certified_degree;
  for (std::uint64_t d = 2; d <= cap; d = d == cap ? cap + 1 : std::min(cap, d + std::max<std::uint64_t>(1, d / 2))) {
    StandardBasis sb = standard_basis(detail::plus_power_of_maximal(I, d), options);
    auto lead = leading_ideal(sb).generators;
    auto stair = standard_monomials(lead, local.size());
    if (std::none_of(stair->begin(), stair->end(), [&](const Monomial& m) { return m.degree() + 1 >= d; }))
      return read_off(sb);
  }
  return read_off(standard_basis(I, options));
}

// Length of the ideal generated by I and J jointly. This equals the local
// intersection multiplicity only under Cohen-Macaulay hypotheses that are
// not checked here; the report says so.
inline LengthReport sum_length(const Ideal& i, const Ideal& j, const StandardBasisOptions& options = {}) {
  LengthReport r = local_length(i + j, options);
  r.caveat = "intersection multiplicity equals this length only if the local rings are Cohen-Macaulay (not verified)";
  return r;
}

namespace detail {

// Monomials of total degree < n, grouped by degree.
inline std::vector<Monomial> monomials_below(std::size_t nvars, std::uint64_t n) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  // Enumerate exponent vectors with sum < n in odometer order.
  if (n == 0) return out;
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < nvars; ++i) {
      ++cur[i];
      if (cur.degree() < n) break;
      cur[i] = 0;
    }
    if (i == nvars) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  return out;
}

// dim_Q of Q[x]/(I + m^n) by exact elimination over the monomials of degree < n.
inline std::uint64_t truncated_colength(const Ideal& ideal, std::uint64_t n) {
  const std::size_t nvars = ideal.ring().size();
  auto monos = monomials_below(nvars, n);
  std::map<Monomial, std::size_t> column;
  for (std::size_t c = 0; c < monos.size(); ++c) column[monos[c]] = c;

  using Row = std::map<std::size_t, Rational>;  // sparse, keyed by column
  std::map<std::size_t, Row> pivots;            // pivot column -> row with that leading column
  auto insert_row = [&](Row row) {
    while (!row.empty()) {
      auto [col, val] = *row.begin();
      auto it = pivots.find(col);
      if (it == pivots.end()) {
        Rational inv = val.inverse();
        for (auto& [_, v] : row) v *= inv;
        pivots.emplace(col, std::move(row));
        return;
      }
      for (const auto& [c, v] : it->second) {
        Rational& target = row[c];
        target -= val * v;
        if (target.is_zero()) row.erase(c);
      }
    }
  };

  for (const auto& g : ideal.generators()) {
    std::uint64_t low = g.low_degree();
    if (low >= n) continue;
    for (const auto& m : monos) {
      if (m.degree() + low >= n) break;
      Row row;
      for (const auto& t : g.terms()) {
        Monomial prod = t.monomial * m;
        if (prod.degree() >= n) continue;
        row[column.at(prod)] = t.coefficient;
      }
      insert_row(std::move(row));
    }
  }
  return monos.size() - pivots.size();
}

}  // namespace detail

// Independent length check: dim Q[x]/(I + m^N) for N = 1, 2, ... up to n_max.
// The sequence is nondecreasing and, once two consecutive values agree, it is
// constant from there on and equals the local length. If n_max is reached
// first the report is marked unstable and carries the last value.
inline LengthReport truncation_length_oracle(const Ideal& ideal, std::uint64_t n_max = 24) {
  LengthReport r;
  r.ring = localized(ideal.ring());
  r.source = LengthSource::kTruncationOracle;
  std::optional<std::uint64_t> prev;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    std::uint64_t d = detail::truncated_colength(ideal, n);
    if (prev && *prev == d) {
      r.length = d;
      r.stable = true;
      return r;
    }
    prev = d;
  }
  r.length = prev;
  r.stable = false;
  r.caveat = "no stabilization up to N = " + std::to_string(n_max);
  return r;
}

}  // namespace localmult

#endif  // LOCALMULT_LOCAL_LENGTH_HPP
