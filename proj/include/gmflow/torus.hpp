// Torus limits of zero-dimensional subschemes of affine space under
// positive-weight diagonal actions, monomialization, and the
// supported-at-origin test.
#ifndef GMFLOW_TORUS_HPP
#define GMFLOW_TORUS_HPP

#include "gmflow/groebner.hpp"

namespace gmflow {

/// Zero-dimensional closed subscheme of A^n, carried as its defining ideal
/// together with the degree (colength), which is recomputed and asserted by
/// every operation that produces one.
class Subscheme0D {
 public:
  /// Throws if the ideal is not zero-dimensional or has colength 0.
  static Subscheme0D from_ideal(Ideal ideal);

  const Ideal& ideal() const { return ideal_; }
  long degree() const { return degree_; }
  std::size_t nvars() const { return ideal_.nvars; }
  /// Reduced grevlex basis, cached at construction.
  const GroebnerBasis& grevlex_basis() const { return basis_; }

 private:
  Subscheme0D(Ideal ideal, GroebnerBasis basis, long degree)
      : ideal_(std::move(ideal)), basis_(std::move(basis)), degree_(degree) {}

  Ideal ideal_;
  GroebnerBasis basis_;
  long degree_;
};

/// lim_{t->0} t(S) for the action t.x_j = t^{w_j} x_j with all w_j > 0:
/// the subscheme of the w-maximal initial ideal.  The degeneration is flat,
/// so the degree is preserved (asserted).
Subscheme0D limit_subscheme(const Subscheme0D& S, const WeightVector& w);

struct Monomialization {
  Int c;                  // smallest tried scale that worked
  WeightVector weights;   // (c, c^2, ..., c^n)
  Subscheme0D limit;      // monomial subscheme, same degree
};

inline const Int kDefaultMonomializationCap = Int(1) << 30;

/// Searches c = d+1, 2(d+1), 4(d+1), ... up to `cap` for a scale whose
/// weight vector (c, c^2, ..., c^n) degenerates S to a monomial ideal.
Monomialization monomial_degeneration(const Subscheme0D& S,
                                      const Int& cap = kDefaultMonomializationCap);

/// True iff every variable is nilpotent on the quotient ring, decided by
/// normal_form(x_j^d) == 0 for all j.
bool is_supported_at_origin(const Subscheme0D& S);

/// Weight vector (c, c^2, ..., c^n).
WeightVector geometric_weights(const Int& c, std::size_t n);

bool is_monomial_ideal(const GroebnerBasis& G);

}  // namespace gmflow

#endif
