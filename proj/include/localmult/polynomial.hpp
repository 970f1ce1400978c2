#ifndef LOCALMULT_POLYNOMIAL_HPP
#define LOCALMULT_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "localmult/monomial.hpp"
#include "localmult/poly_ring.hpp"
#include "localmult/rational.hpp"

namespace localmult {

struct Term {
  Monomial monomial;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("polynomials live in different rings") {}
};

// Sparse polynomial over Q. Terms are kept sorted with the leading term (under
// the ring's order) first and never hold a zero coefficient; the zero
// polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

  Polynomial(PolyRing ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    std::map<Monomial, Rational> acc;
    for (auto& t : terms) {
      if (t.monomial.size() != ring_.size())
        throw std::invalid_argument("Polynomial: monomial arity does not match ring");
      acc[t.monomial] += t.coefficient;
    }
    assign(std::move(acc));
  }

  static Polynomial constant(const PolyRing& ring, const Rational& c) {
    return Polynomial(ring, {Term{Monomial(ring.size()), c}});
  }
  static Polynomial variable(const PolyRing& ring, std::size_t index) {
    return Polynomial(ring, {Term{Monomial::variable(ring.size(), index), Rational(1)}});
  }
  static Polynomial variable(const PolyRing& ring, const std::string& name) {
    auto idx = ring.index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
    return variable(ring, *idx);
  }
  static Polynomial term(const PolyRing& ring, Monomial m, const Rational& c) {
    return Polynomial(ring, {Term{std::move(m), c}});
  }

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  Rational coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coefficient;
    return Rational(0);
  }
  Rational constant_term() const { return coefficient(Monomial(ring_.size())); }

  // Largest / smallest total degree of a term; 0 for the zero polynomial.
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }
  std::uint64_t low_degree() const {
    if (terms_.empty()) return 0;
    std::uint64_t d = UINT64_MAX;
    for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
    return d;
  }
  // deg(p) - deg(LM(p)); zero for degree orders that lead with the top degree.
  std::uint64_t ecart() const { return terms_.empty() ? 0 : degree() - leading_monomial().degree(); }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
  }

  // Which ring variables occur in some term.
  std::vector<bool> variables_used() const {
    std::vector<bool> used(ring_.size(), false);
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < ring_.size(); ++i)
        if (t.monomial[i] > 0) used[i] = true;
    return used;
  }

  Polynomial homogeneous_part(std::uint64_t d) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
      if (t.monomial.degree() == d) r.terms_.push_back(t);
    return r;
  }

  // Drops every term of total degree above max_degree.
  Polynomial truncated(std::uint64_t max_degree) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
      if (t.monomial.degree() <= max_degree) r.terms_.push_back(t);
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * leading_coefficient().inverse();
  }

  // The same polynomial re-sorted for a ring with the same variables but a
  // different order.
  Polynomial in_ring(const PolyRing& target) const {
    if (target.variables() != ring_.variables())
      throw std::invalid_argument("in_ring: variable lists differ");
    Polynomial r(target);
    r.terms_ = terms_;
    r.sort_terms();
    return r;
  }

  // Replaces variables by polynomials of `target`. Unbound source variables
  // map to the same-named variable of `target`; if it has none, the call fails.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings, const PolyRing& target) const {
    std::vector<Polynomial> images;
    images.reserve(ring_.size());
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      auto it = bindings.find(ring_.variable(i));
      if (it != bindings.end()) {
        if (!(it->second.ring() == target)) throw RingMismatch();
        images.push_back(it->second);
      } else {
        images.push_back(variable(target, ring_.variable(i)));
      }
    }
    Polynomial r(target);
    std::vector<std::vector<Polynomial>> powers(ring_.size());
    for (const auto& t : terms_) {
      Polynomial acc = constant(target, t.coefficient);
      for (std::size_t i = 0; i < ring_.size(); ++i) {
        auto e = t.monomial[i];
        if (e == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(target, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        acc = acc * cache[e];
      }
      r += acc;
    }
    return r;
  }
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const {
    return substitute(bindings, ring_);
  }

  Polynomial pow(unsigned n) const {
    Polynomial r = constant(ring_, Rational(1));
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1u) r = r * base;
      n >>= 1u;
      if (n > 0) base = base * base;
    }
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Rational& c) {
    if (c.is_zero()) return Polynomial(a.ring_);
    Polynomial r(a);
    for (auto& t : r.terms_) t.coefficient *= c;
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  // c * m * p.
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
    return r;  // multiplication by a monomial preserves the order
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_)) throw RingMismatch();
    std::map<Monomial, Rational> acc;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) acc[x.monomial * y.monomial] += x.coefficient * y.coefficient;
    Polynomial r(a.ring_);
    r.assign(std::move(acc));
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& t = terms_[k];
      bool negative = t.coefficient.sign() < 0;
      Rational mag = negative ? -t.coefficient : t.coefficient;
      if (k == 0) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono = monomial_string(t.monomial);
      if (mono.empty()) {
        out += mag.str();
      } else if (mag.is_one()) {
        out += mono;
      } else {
        out += mag.str() + "*" + mono;
      }
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_.variable(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void assign(std::map<Monomial, Rational> acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) terms_.push_back(Term{m, std::move(c)});
    sort_terms();
  }

  void sort_terms() {
    const auto& ord = ring_.order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& x, const Term& y) { return ord.greater(x.monomial, y.monomial); });
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    if (!(a.ring_ == b.ring_)) throw RingMismatch();
    const auto& ord = a.ring_.order();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        r.terms_.push_back(a.terms_[i++]);
        continue;
      }
      Term bt = b.terms_[j];
      if (subtract) bt.coefficient = -bt.coefficient;
      if (i == a.terms_.size()) {
        r.terms_.push_back(std::move(bt));
        ++j;
        continue;
      }
      auto c = ord.compare(a.terms_[i].monomial, bt.monomial);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(std::move(bt));
        ++j;
      } else {
        Rational s = a.terms_[i].coefficient + bt.coefficient;
        if (!s.is_zero()) r.terms_.push_back(Term{a.terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  PolyRing ring_;
  std::vector<Term> terms_;
};

// Exact quotient p / d in the polynomial ring, or nullopt when d does not
// divide p. Uses plain division under lex, so it ignores the ring's order.
inline std::optional<Polynomial> exact_quotient(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("exact_quotient: division by zero");
  if (!(p.ring() == d.ring())) throw RingMismatch();
  PolyRing lex = p.ring().with_order(MonomialOrder(OrderKind::kLex, p.ring().size()));
  Polynomial rem = p.in_ring(lex);
  Polynomial div = d.in_ring(lex);
  Polynomial quo(lex);
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!div.leading_monomial().divides(lt.monomial)) return std::nullopt;
    Monomial m = lt.monomial / div.leading_monomial();
    Rational c = lt.coefficient / div.leading_coefficient();
    quo += Polynomial::term(lex, m, c);
    rem -= div.mul_term(m, c);
  }
  return quo.in_ring(p.ring());
}

}  // namespace localmult

#endif  // LOCALMULT_POLYNOMIAL_HPP
