#ifndef LOCALMULT_IDEAL_HPP
#define LOCALMULT_IDEAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "localmult/polynomial.hpp"

namespace localmult {

// Finite generating set; zero generators are dropped on construction.
class Ideal {
 public:
  explicit Ideal(PolyRing ring) : ring_(std::move(ring)) {}
  Ideal(PolyRing ring, const std::vector<Polynomial>& gens) : ring_(std::move(ring)) {
    for (const auto& g : gens) add(g);
  }

  void add(const Polynomial& g) {
    if (!(g.ring() == ring_)) throw RingMismatch();
    if (!g.is_zero()) gens_.push_back(g);
  }

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  // Same generators viewed in a ring with the same variables.
  Ideal in_ring(const PolyRing& target) const {
    Ideal r(target);
    for (const auto& g : gens_) r.add(g.in_ring(target));
    return r;
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    if (!(a.ring_ == b.ring_)) throw RingMismatch();
    Ideal r = a;
    for (const auto& g : b.gens_) r.add(g);
    return r;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ")";
  }

 private:
  PolyRing ring_;
  std::vector<Polynomial> gens_;
};

}  // namespace localmult

#endif  // LOCALMULT_IDEAL_HPP
