#include "gmflow/distraction.hpp"

#include <algorithm>

#include "gmflow/parse.hpp"

namespace gmflow {

MonomialIdeal MonomialIdeal::from_monomials(std::size_t nvars, std::vector<Monomial> gens) {
  for (const auto& m : gens)
    if (m.nvars() != nvars) throw Error("monomial ideal: generator arity mismatch");
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const Monomial& m) { return m.is_one(); }),
             gens.end());
  // A generator containing 1 would be the unit ideal; colength 0 is rejected
  // below via the staircase anyway, so treat it directly.
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < gens.size() && !redundant; ++k) {
      if (k == i) continue;
      if (gens[k].divides(gens[i]) && (gens[k] != gens[i] || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  if (minimal.empty()) throw Error("monomial ideal: empty or unit generating set");
  std::sort(minimal.begin(), minimal.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_compare(a, b) == Cmp::less;
  });

  MonomialIdeal I;
  I.nvars_ = nvars;
  I.gens_ = std::move(minimal);
  // The reduced grevlex basis of a monomial ideal is its minimal generators,
  // so the staircase can be read off directly.
  std::vector<Polynomial> polys;
  for (const auto& m : I.gens_) polys.push_back(Polynomial::from_monomial(m));
  const Staircase st =
      staircase(GroebnerBasis(MonomialOrder::grevlex(), nvars, std::move(polys)));
  if (!st.finite) {
    std::string var = st.witness_variable ? "x" + std::to_string(*st.witness_variable + 1) : "?";
    throw Error("monomial ideal: not zero-dimensional (no pure power of " + var + ")");
  }
  I.standard_ = st.standard_monomials;
  I.colength_ = st.colength;
  return I;
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    if (!g.is_single_term())
      throw Error("monomial ideal: generator " + to_string(g) + " is not a monomial");
    gens.push_back(g.terms()[0].mono);
  }
  return from_monomials(ideal.nvars, std::move(gens));
}

unsigned MonomialIdeal::max_exponent() const {
  unsigned m = 0;
  for (const auto& g : gens_)
    for (std::size_t j = 0; j < nvars_; ++j) m = std::max(m, g.exponent(j));
  return m;
}

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> gens;
  for (const auto& m : gens_) gens.push_back(Polynomial::from_monomial(m));
  return Ideal(nvars_, std::move(gens));
}

bool DistractionParams::distinct() const {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = i + 1; k < a.size(); ++k)
      if (a[i] == a[k]) return false;
  return true;
}

DistractionParams DistractionParams::standard(std::size_t m) {
  DistractionParams p;
  for (std::size_t l = 0; l < m; ++l) p.a.emplace_back(static_cast<long>(l));
  return p;
}

Ideal distraction_ideal(const MonomialIdeal& I, const DistractionParams& params) {
  if (params.a.size() < I.max_exponent())
    throw Error("distraction: " + std::to_string(params.a.size()) +
                " parameters but an exponent of " + std::to_string(I.max_exponent()));
  const std::size_t n = I.nvars();
  std::vector<Polynomial> gens;
  for (const auto& M : I.minimal_generators()) {
    Polynomial f = Polynomial::constant(n, Rational(1));
    for (std::size_t j = 0; j < n; ++j)
      for (unsigned l = 0; l < M.exponent(j); ++l)
        f = f * (Polynomial::variable(n, j) - Polynomial::constant(n, params.a[l]));
    gens.push_back(std::move(f));
  }
  return Ideal(n, std::move(gens));
}

std::vector<std::vector<Rational>> standard_points(const MonomialIdeal& I,
                                                   const DistractionParams& params) {
  if (!params.distinct()) throw Error("distraction: parameters must be pairwise distinct");
  if (params.a.size() < I.max_exponent())
    throw Error("distraction: not enough parameters for the staircase");
  std::vector<std::vector<Rational>> points;
  for (const auto& L : I.standard_monomials()) {
    std::vector<Rational> p;
    for (std::size_t j = 0; j < I.nvars(); ++j) p.push_back(params.a[L.exponent(j)]);
    points.push_back(std::move(p));
  }
  return points;
}

SmoothingReport verify_smoothing(const MonomialIdeal& I, const DistractionParams& params) {
  if (!params.distinct()) throw Error("distraction: parameters must be pairwise distinct");
  SmoothingReport report;
  report.expected_degree = I.colength();

  const Ideal J = distraction_ideal(I, params);
  const Staircase st = staircase(groebner_basis(J, MonomialOrder::grevlex()));
  report.computed_colength = st.finite ? st.colength : -1;
  if (st.finite && st.colength == I.colength())
    report.checks.push_back("colength(J_a) = " + std::to_string(I.colength()));
  else
    report.failures.push_back("colength(J_a) = " +
                              (st.finite ? std::to_string(st.colength) : std::string("infinite")) +
                              ", expected " + std::to_string(I.colength()));

  const auto points = standard_points(I, params);
  report.point_count = points.size();
  bool distinct = true;
  for (std::size_t i = 0; i < points.size() && distinct; ++i)
    for (std::size_t k = i + 1; k < points.size() && distinct; ++k)
      if (points[i] == points[k]) distinct = false;
  if (distinct)
    report.checks.push_back(std::to_string(points.size()) + " predicted points pairwise distinct");
  else
    report.failures.push_back("predicted points not pairwise distinct");

  bool vanish = true;
  for (const auto& g : J.generators)
    for (const auto& p : points)
      if (!g.evaluate(p).is_zero()) {
        vanish = false;
        report.failures.push_back("generator " + to_string(g) + " does not vanish at a point");
      }
  if (vanish)
    report.checks.push_back("every generator vanishes at every predicted point");

  report.ok = report.failures.empty();
  if (report.ok)
    report.checks.push_back("J_a is the radical ideal of the " + std::to_string(points.size()) +
                            " points");
  return report;
}

}  // namespace gmflow
