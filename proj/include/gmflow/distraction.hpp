// Distraction smoothing of zero-dimensional monomial ideals: the explicit
// generator family, the predicted points, and the smoothing verification.
#ifndef GMFLOW_DISTRACTION_HPP
#define GMFLOW_DISTRACTION_HPP

#include <string>
#include <vector>

#include "gmflow/groebner.hpp"

namespace gmflow {

/// Zero-dimensional monomial ideal carried by its minimal generators.  Any
/// generating set is accepted; minimality is recomputed by divisibility
/// filtering.
class MonomialIdeal {
 public:
  static MonomialIdeal from_monomials(std::size_t nvars, std::vector<Monomial> gens);
  /// Requires every generator to be a term; coefficients are dropped.
  static MonomialIdeal from_ideal(const Ideal& ideal);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& minimal_generators() const { return gens_; }
  long colength() const { return colength_; }
  const std::vector<Monomial>& standard_monomials() const { return standard_; }
  /// Largest exponent appearing in any minimal generator.
  unsigned max_exponent() const;

  Ideal to_ideal() const;

 private:
  MonomialIdeal() = default;

  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
  std::vector<Monomial> standard_;
  long colength_ = 0;
};

/// Distraction parameters a_0, ..., a_{m-1}.
struct DistractionParams {
  std::vector<Rational> a;

  bool distinct() const;
  /// The default choice a_l = l.
  static DistractionParams standard(std::size_t m);
};

/// J_a = (f_1, ..., f_r) with
///   f_i = prod_j (x_j - a_0)(x_j - a_1) ... (x_j - a_{M_ij - 1}).
/// Needs as many parameters as the largest exponent.
Ideal distraction_ideal(const MonomialIdeal& I, const DistractionParams& params);

/// The d points (a_{L_1}, ..., a_{L_n}) over the standard monomials x^L;
/// pairwise distinct when the parameters are.
std::vector<std::vector<Rational>> standard_points(const MonomialIdeal& I,
                                                   const DistractionParams& params);

struct SmoothingReport {
  bool ok = false;
  long expected_degree = 0;
  long computed_colength = 0;
  std::size_t point_count = 0;
  std::vector<std::string> checks;    // one line per verified fact
  std::vector<std::string> failures;  // nonempty only on an implementation bug
};

/// Checks colength(J_a) = d, distinctness of the d points, and vanishing of
/// every generator at every point; together these identify J_a with the
/// radical ideal of the point set.
SmoothingReport verify_smoothing(const MonomialIdeal& I, const DistractionParams& params);

}  // namespace gmflow

#endif
