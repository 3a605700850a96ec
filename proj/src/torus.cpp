#include "gmflow/torus.hpp"

namespace gmflow {

Subscheme0D Subscheme0D::from_ideal(Ideal ideal) {
  GroebnerBasis basis = groebner_basis(ideal, MonomialOrder::grevlex());
  const Staircase st = staircase(basis);
  if (!st.finite) {
    std::string var = st.witness_variable ? "x" + std::to_string(*st.witness_variable + 1) : "?";
    throw Error("subscheme: ideal is not zero-dimensional (no pure power of " + var + ")");
  }
  if (st.colength == 0) throw Error("subscheme: unit ideal has degree 0");
  return Subscheme0D(std::move(ideal), std::move(basis), st.colength);
}

Subscheme0D limit_subscheme(const Subscheme0D& S, const WeightVector& w) {
  if (!w.all_positive()) throw Error("limit_subscheme: weights must be positive");
  Subscheme0D limit = Subscheme0D::from_ideal(initial_ideal(S.ideal(), w, Direction::max));
  if (limit.degree() != S.degree())
    throw Error("limit_subscheme: colength changed under a flat degeneration (" +
                std::to_string(limit.degree()) + " vs " + std::to_string(S.degree()) +
                "); this indicates a Groebner bug");
  return limit;
}

WeightVector geometric_weights(const Int& c, std::size_t n) {
  WeightVector w;
  Int p = 1;
  for (std::size_t j = 0; j < n; ++j) {
    p *= c;
    w.w.push_back(p);
  }
  return w;
}

bool is_monomial_ideal(const GroebnerBasis& G) {
  for (const auto& g : G.elements())
    if (!g.is_single_term()) return false;
  return true;
}

Monomialization monomial_degeneration(const Subscheme0D& S, const Int& cap) {
  const Int start = Int(S.degree() + 1);
  for (Int c = start; c <= cap; c *= 2) {
    const WeightVector w = geometric_weights(c, S.nvars());
    Subscheme0D limit = limit_subscheme(S, w);
    if (is_monomial_ideal(limit.grevlex_basis()))
      return Monomialization{c, w, std::move(limit)};
  }
  throw Error("monomial_degeneration: no scale up to cap " + cap.get_str() +
              " produced a monomial limit; this indicates a bug, since a "
              "sufficiently large scale always exists");
}

bool is_supported_at_origin(const Subscheme0D& S) {
  const unsigned d = static_cast<unsigned>(S.degree());
  for (std::size_t j = 0; j < S.nvars(); ++j) {
    Monomial m(S.nvars());
    m.set_exponent(j, d);
    if (!normal_form(Polynomial::from_monomial(m), S.grevlex_basis()).is_zero()) return false;
  }
  return true;
}

}  // namespace gmflow
