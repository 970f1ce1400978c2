#ifndef LOCALMULT_MONOMIAL_ORDER_HPP
#define LOCALMULT_MONOMIAL_ORDER_HPP

#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "localmult/monomial.hpp"

namespace localmult {

enum class OrderKind { kDegRevLex, kLex, kLocalDegRevLex };

inline std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::kDegRevLex: return "degrevlex";
    case OrderKind::kLex: return "lex";
    case OrderKind::kLocalDegRevLex: return "local-degrevlex";
  }
  return "?";
}

// Multiplicative total order on monomials. `perm[i]` is the ring index of the
// variable ranked i-th; the identity permutation ranks variables in ring order.
//
// local-degrevlex is the negative-degree reverse lexicographic order: smaller
// total degree is larger, so 1 outranks every variable and the leading term
// of a polynomial is one of its lowest-degree terms.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), perm_(nvars) {
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  }
  MonomialOrder(OrderKind kind, std::vector<std::size_t> perm) : kind_(kind), perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (auto p : perm_) {
      if (p >= perm_.size() || seen[p]) throw std::invalid_argument("MonomialOrder: not a permutation");
      seen[p] = true;
    }
  }

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  std::size_t arity() const { return perm_.size(); }
  bool is_local() const { return kind_ == OrderKind::kLocalDegRevLex; }

  // greater means "more leading".
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == OrderKind::kLex) {
      for (auto v : perm_)
        if (a[v] != b[v]) return a[v] <=> b[v];
      return std::strong_ordering::equal;
    }
    auto da = a.degree(), db = b.degree();
    if (da != db) return kind_ == OrderKind::kDegRevLex ? da <=> db : db <=> da;
    for (std::size_t i = perm_.size(); i-- > 0;) {
      auto v = perm_[i];
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::kDegRevLex;
  std::vector<std::size_t> perm_;
};

}  // namespace localmult

#endif  // LOCALMULT_MONOMIAL_ORDER_HPP
