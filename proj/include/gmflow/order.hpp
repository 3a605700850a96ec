// Monomial orders: grevlex, lex, and weight-refined orders.
#ifndef GMFLOW_ORDER_HPP
#define GMFLOW_ORDER_HPP

#include <string>

#include "gmflow/monomial.hpp"

namespace gmflow {

enum class Cmp { less, equal, greater };

/// Total multiplicative order on monomials.  The tie-break convention is
/// x1 > x2 > ... > xn throughout, so reduced Groebner bases are canonical.
///
/// grevlex and lex are global (1 is minimal).  A weight-refined order is
/// global iff all weights are nonnegative; non-global instances are accepted
/// only for computations on homogeneous input (see groebner_basis).
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, weighted };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
  /// Higher weight_value sorts greater; ties broken by grevlex.
  static MonomialOrder weighted(WeightVector w) {
    return MonomialOrder(Kind::weighted, std::move(w));
  }

  Kind kind() const { return kind_; }
  const WeightVector& weights() const { return weights_; }
  bool is_global() const;

  Cmp compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::less; }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Cmp::greater;
  }

  std::string describe() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  MonomialOrder(Kind k, WeightVector w) : kind_(k), weights_(std::move(w)) {}

  Kind kind_;
  WeightVector weights_;
};

Cmp grevlex_compare(const Monomial& a, const Monomial& b);

}  // namespace gmflow

#endif
