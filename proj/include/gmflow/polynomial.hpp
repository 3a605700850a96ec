// Sparse multivariate polynomials over Q in canonical form.
#ifndef GMFLOW_POLYNOMIAL_HPP
#define GMFLOW_POLYNOMIAL_HPP

#include <cstddef>
#include <vector>

#include "gmflow/order.hpp"

namespace gmflow {

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Canonical sparse polynomial: no zero coefficients, terms sorted in
/// descending grevlex.  Two polynomials are equal iff their term lists are.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
  static Polynomial constant(std::size_t nvars, const Rational& c);
  /// x_{j} for 0-based j.
  static Polynomial variable(std::size_t nvars, std::size_t j);
  static Polynomial from_monomial(Monomial m, Rational c = Rational(1));
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_constant() const;
  /// Single term with coefficient 1?
  bool is_monomial() const { return terms_.size() == 1 && terms_[0].coeff.is_one(); }
  bool is_single_term() const { return terms_.size() == 1; }
  long total_degree() const;  // -1 for the zero polynomial
  unsigned degree_in(std::size_t j) const;

  const Term& leading_term(const MonomialOrder& ord) const;  // throws on zero
  Rational constant_coefficient() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  /// Replace x_j by `value` (same ambient ring).
  Polynomial substitute(std::size_t j, const Polynomial& value) const;
  /// Set the last variable to `value` and drop it from the ring.
  Polynomial specialize_last(const Rational& value) const;
  /// Append `extra` fresh variables (exponents 0).
  Polynomial extended(std::size_t extra) const;
  /// Drop the last variable; pre: it occurs in no term.
  Polynomial restricted() const;

  Int max_weight(const WeightVector& w) const;  // throws on zero polynomial
  /// Sum of the terms of extremal weight (max or min).
  Polynomial initial_form(const WeightVector& w, bool take_max) const;
  bool is_weight_homogeneous(const WeightVector& w) const;
  bool is_degree_homogeneous() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void check_arity(const Polynomial& o) const;

  std::size_t nvars_;
  std::vector<Term> terms_;
};

}  // namespace gmflow

#endif
