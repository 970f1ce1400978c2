#ifndef LOCALMULT_POLY_RING_HPP
#define LOCALMULT_POLY_RING_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "localmult/monomial_order.hpp"

namespace localmult {

// Shared immutable description of Q[v1..vn] with a monomial order.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> variables, OrderKind kind)
      : PolyRing(variables, MonomialOrder(kind, variables.size())) {}

  PolyRing(std::vector<std::string> variables, MonomialOrder order) {
    if (order.arity() != variables.size())
      throw std::invalid_argument("PolyRing: order arity does not match variable count");
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (variables[i].empty()) throw std::invalid_argument("PolyRing: empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (variables[i] == variables[j])
          throw std::invalid_argument("PolyRing: duplicate variable '" + variables[i] + "'");
    }
    data_ = std::make_shared<const Data>(Data{std::move(variables), std::move(order)});
  }

  std::size_t size() const { return data_->variables.size(); }
  const std::vector<std::string>& variables() const { return data_->variables; }
  const std::string& variable(std::size_t i) const { return data_->variables.at(i); }
  const MonomialOrder& order() const { return data_->order; }
  bool is_local() const { return data_->order.is_local(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(data_->variables.begin(), data_->variables.end(), name);
    if (it == data_->variables.end()) return std::nullopt;
    return static_cast<std::size_t>(it - data_->variables.begin());
  }

  // Same variables, different order.
  PolyRing with_order(MonomialOrder order) const { return PolyRing(variables(), std::move(order)); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.data_ == b.data_ ||
           (a.data_->variables == b.data_->variables && a.data_->order == b.data_->order);
  }

 private:
  struct Data {
    std::vector<std::string> variables;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace localmult

#endif  // LOCALMULT_POLY_RING_HPP
