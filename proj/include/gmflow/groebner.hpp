// Buchberger's algorithm, reduced bases, normal forms, staircases, and
// initial ideals with respect to weight vectors.
#ifndef GMFLOW_GROEBNER_HPP
#define GMFLOW_GROEBNER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "gmflow/polynomial.hpp"

namespace gmflow {

/// A finite list of generators; the zero polynomial may appear but is
/// ignored semantically.
struct Ideal {
  std::size_t nvars = 0;
  std::vector<Polynomial> generators;

  Ideal(std::size_t n, std::vector<Polynomial> gens);
};

/// Reduced Groebner basis: monic elements, no monomial of any element
/// divisible by the leading monomial of another, sorted by ascending leading
/// monomial.  For a fixed order the reduced basis of an ideal is unique, so
/// equality of bases decides equality of ideals.
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder ord, std::size_t nvars, std::vector<Polynomial> elements);

  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  bool is_unit_ideal() const;
  std::vector<Monomial> leading_monomials() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.elems_ == b.elems_;
  }

 private:
  MonomialOrder order_;
  std::size_t nvars_;
  std::vector<Polynomial> elems_;
};

/// Computes the unique reduced basis.  Global orders terminate always;
/// non-global weight-refined orders are accepted only when every generator
/// is homogeneous in total degree (the homogeneous case is the one place
/// they are needed, and there termination is restored).
GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& ord);

/// The unique remainder of f modulo G: no monomial of the result is
/// divisible by a leading monomial of G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Divisor selection hook for path-independence checks: given the indices of
/// all basis elements whose leading monomial divides the current monomial,
/// returns the position (into that list) to use.
using DivisorChooser = std::function<std::size_t(const std::vector<std::size_t>&)>;
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const DivisorChooser& pick);

struct Staircase {
  bool finite = false;
  std::vector<Monomial> standard_monomials;  // empty when infinite
  long colength = -1;                        // -1 when infinite
  std::optional<std::size_t> witness_variable;  // 0-based; set when infinite
};

/// Standard monomials (those not divisible by any leading monomial) and the
/// colength, which equals the Q-dimension of the quotient ring when finite.
Staircase staircase(const GroebnerBasis& G);

bool ideal_equals(const Ideal& a, const Ideal& b, const MonomialOrder& ord);
bool ideal_equals(const Ideal& a, const Ideal& b);  // defaults to grevlex

enum class Direction { max, min };

/// Ideal of the w-extremal homogeneous parts of all elements of I.  The
/// direction=max convention matches the t->0 limit of positive-weight
/// actions; direction=min is in_{-w} max.
Ideal initial_ideal(const Ideal& ideal, const WeightVector& w, Direction dir);

/// True when every S-polynomial of the basis reduces to zero.
bool buchberger_criterion_holds(const GroebnerBasis& G);

}  // namespace gmflow

#endif
