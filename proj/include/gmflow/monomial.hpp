// Monomials in a fixed number of variables, and integer weight vectors.
#ifndef GMFLOW_MONOMIAL_HPP
#define GMFLOW_MONOMIAL_HPP

#include <cstddef>
#include <vector>

#include "gmflow/rational.hpp"

namespace gmflow {

/// Exponent vector of fixed length; the variable count is the length.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

  std::size_t nvars() const { return e_.size(); }
  unsigned exponent(std::size_t j) const { return e_[j]; }
  void set_exponent(std::size_t j, unsigned v) { e_[j] = v; }
  const std::vector<unsigned>& exponents() const { return e_; }

  long total_degree() const;
  bool is_one() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  /// Exact quotient; pre: m.divides(*this).
  Monomial divided_by(const Monomial& m) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

 private:
  std::vector<unsigned> e_;
};

/// One integer weight per variable.  Entries are arbitrary-precision: the
/// monomialization search uses weights (c, c^2, ..., c^n) with c potentially
/// large.
struct WeightVector {
  std::vector<Int> w;

  WeightVector() = default;
  explicit WeightVector(std::vector<Int> weights) : w(std::move(weights)) {}
  static WeightVector from_longs(const std::vector<long>& v);

  std::size_t size() const { return w.size(); }
  bool all_positive() const;
  bool all_nonnegative() const;
};

/// Sum of w_j * exponent_j.  Throws on length mismatch.
Int weight_value(const Monomial& m, const WeightVector& w);

}  // namespace gmflow

#endif
