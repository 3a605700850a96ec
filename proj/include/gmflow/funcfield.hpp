// Polynomials over the rational-function field Q(s), represented
// fraction-free as x-monomials with coefficients in Q[s], and a Buchberger
// loop using pseudo-reduction with content removal in s.
#ifndef GMFLOW_FUNCFIELD_HPP
#define GMFLOW_FUNCFIELD_HPP

#include <vector>

#include "gmflow/polynomial.hpp"

namespace gmflow {

/// Dense univariate polynomial in s over Q; c[k] is the coefficient of s^k.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly variable();  // s

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading_coeff() const;
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly scaled(const Rational& q) const;

  /// Quotient and remainder over Q.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  /// Exact quotient; throws if the division leaves a remainder.
  UPoly divexact(const UPoly& divisor) const;
  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(const UPoly& a, const UPoly& b);

  Rational evaluate(const Rational& s) const;

  /// All rational roots, ascending.  Uses the rational root theorem after
  /// clearing denominators; throws if the integer coefficients are too large
  /// to factor by trial division.
  std::vector<Rational> rational_roots() const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Term and polynomial with x-monomials and Q[s]-coefficients.
struct FFTerm {
  Monomial mono;   // in the x-variables only
  UPoly coeff;
};

class FFPoly {
 public:
  explicit FFPoly(std::size_t nvars) : nvars_(nvars) {}
  static FFPoly from_terms(std::size_t nvars, std::vector<FFTerm> terms);
  /// Split a polynomial in n+1 variables (last one = s) into x-monomials
  /// with s-coefficients.
  static FFPoly from_parameter_polynomial(const Polynomial& p);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<FFTerm>& terms() const { return terms_; }

  const FFTerm& leading_term(const MonomialOrder& ord) const;
  FFPoly operator-(const FFPoly& o) const;
  FFPoly times(const Monomial& m, const UPoly& c) const;
  FFPoly scaled_by(const UPoly& c) const;

  /// Divide out the common Q[s]-content and make the s-leading coefficient
  /// of the order-leading term equal to 1.
  FFPoly normalized(const MonomialOrder& ord) const;
  /// Monic gcd of all coefficients.
  UPoly content() const;

  /// Terms of maximal w-weight (the w-initial form over Q(s)).
  FFPoly initial_form_max(const WeightVector& w) const;

  /// Back to a polynomial in n+1 variables with s last.
  Polynomial to_parameter_polynomial() const;

 private:
  std::size_t nvars_;
  std::vector<FFTerm> terms_;  // descending grevlex, nonzero coefficients
};

/// Groebner basis over Q(s) for a global order on the x-monomials:
/// minimalized, interreduced, content-normalized.
std::vector<FFPoly> groebner_basis_ff(const std::vector<FFPoly>& gens, const MonomialOrder& ord);

}  // namespace gmflow

#endif
