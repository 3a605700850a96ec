// Fixed-point census for diagonal G_m-actions on P^r and the
// Poincare-polynomial shadow of the associated motive decompositions.
#ifndef GMFLOW_BB_HPP
#define GMFLOW_BB_HPP

#include <string>
#include <vector>

#include "gmflow/newton.hpp"

namespace gmflow {

/// Connected component of the fixed locus: all coordinates of one weight.
/// a_plus + dim + b_minus = r always (the tangent-space identity).
struct FixedComponent {
  long weight = 0;   // the shared weight value
  long dim = 0;      // multiplicity of the weight, minus 1
  long a_plus = 0;   // #coordinates of strictly larger weight
  long b_minus = 0;  // #coordinates of strictly smaller weight
};

/// One component per distinct weight value, sorted by increasing weight.
std::vector<FixedComponent> fixed_components(const ActionWeights& a);

/// Polynomial in q with non-negative integer coefficients.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::vector<long> coeffs);
  /// [m]_q = 1 + q + ... + q^{m-1}.
  static PoincarePolynomial q_integer(long m);

  const std::vector<long>& coeffs() const { return c_; }
  long evaluate_at_one() const;
  PoincarePolynomial shifted(long k) const;  // multiply by q^k
  PoincarePolynomial operator+(const PoincarePolynomial& o) const;
  /// Coefficient reversal against degree `top`.
  PoincarePolynomial reversed(long top) const;

  friend bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    return a.c_ == b.c_;
  }

  std::string str() const;  // e.g. "1 + q + q^2"

 private:
  std::vector<long> c_;
};

struct PoincareIdentity {
  std::vector<FixedComponent> components;
  PoincarePolynomial lhs;  // sum over components of [dim+1]_q q^{b_i}
  PoincarePolynomial rhs;  // [r+1]_q
  bool equal = false;
};

/// The census identity sum_i [dim_i+1]_q q^{b_i} = [r+1]_q, recomputed with
/// the a_i-twists and q-reversal as a cross-check.
PoincareIdentity poincare_identity(const ActionWeights& a);

struct AttractorPair {
  PoincarePolynomial p_y;  // direct route, via the b_i
  PoincarePolynomial p_u;  // duality route, via r - a_i - dim_i
  bool equal = false;
};

/// P(M(Y)) against P(M(U)) for Y the union of unstable sets of the r_cut
/// lowest-weight components; the two routes share no code path, so equality
/// is a genuine cross-check.
AttractorPair attractor_pair_poincare(const ActionWeights& a, std::size_t r_cut);

}  // namespace gmflow

#endif
