#include "gmflow/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace gmflow {

Ideal::Ideal(std::size_t n, std::vector<Polynomial> gens) : nvars(n), generators(std::move(gens)) {
  if (generators.empty()) throw Error("ideal: needs at least one generator");
  for (const auto& g : generators)
    if (g.nvars() != nvars) throw Error("ideal: generator arity mismatch");
}

GroebnerBasis::GroebnerBasis(MonomialOrder ord, std::size_t nvars,
                             std::vector<Polynomial> elements)
    : order_(std::move(ord)), nvars_(nvars), elems_(std::move(elements)) {}

bool GroebnerBasis::is_unit_ideal() const {
  return elems_.size() == 1 && elems_[0].is_constant() && !elems_[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> lms;
  lms.reserve(elems_.size());
  for (const auto& g : elems_) lms.push_back(g.leading_term(order_).mono);
  return lms;
}

namespace {

std::vector<std::size_t> divisor_candidates(const Monomial& m,
                                            const std::vector<Polynomial>& G,
                                            const MonomialOrder& ord) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (G[i].leading_term(ord).mono.divides(m)) out.push_back(i);
  return out;
}

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord, const DivisorChooser& pick) {
  Polynomial h = f;
  Polynomial remainder(f.nvars());
  while (!h.is_zero()) {
    const Term lt = h.leading_term(ord);
    const auto candidates = divisor_candidates(lt.mono, G, ord);
    if (candidates.empty()) {
      const Polynomial t = Polynomial::from_monomial(lt.mono, lt.coeff);
      remainder = remainder + t;
      h = h - t;
      continue;
    }
    const std::size_t which = pick ? candidates[pick(candidates)] : candidates[0];
    const Polynomial& g = G[which];
    const Term glt = g.leading_term(ord);
    h = h - g.times_monomial(lt.mono.divided_by(glt.mono), lt.coeff / glt.coeff);
  }
  return remainder;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const Term lf = f.leading_term(ord);
  const Term lg = g.leading_term(ord);
  const Monomial l = Monomial::lcm(lf.mono, lg.mono);
  return f.times_monomial(l.divided_by(lf.mono), Rational(1) / lf.coeff) -
         g.times_monomial(l.divided_by(lg.mono), Rational(1) / lg.coeff);
}

struct Pair {
  std::size_t i, j;  // i < j
};

}  // namespace

GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& ord) {
  if (ord.kind() == MonomialOrder::Kind::weighted && ord.weights().size() != ideal.nvars)
    throw Error("groebner: weight vector arity mismatch");

  std::vector<Polynomial> G;
  for (const auto& g : ideal.generators)
    if (!g.is_zero()) G.push_back(g);

  if (!ord.is_global())
    for (const auto& g : G)
      if (!g.is_degree_homogeneous())
        throw Error("groebner: non-global order requires homogeneous generators");

  if (G.empty()) return GroebnerBasis(ord, ideal.nvars, {});

  // Pair queue keyed by lcm of leading monomials; pending lcm lookups drive
  // the chain criterion below.
  auto lcm_of = [&](const Pair& p) {
    return Monomial::lcm(G[p.i].leading_term(ord).mono, G[p.j].leading_term(ord).mono);
  };
  std::vector<Pair> queue;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) queue.push_back({i, j});

  auto pending = [&](std::size_t a, std::size_t b) {
    for (const auto& p : queue)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    return false;
  };

  while (!queue.empty()) {
    // Normal strategy: smallest lcm degree first, ties by the order.
    std::size_t best = 0;
    Monomial best_lcm = lcm_of(queue[0]);
    for (std::size_t k = 1; k < queue.size(); ++k) {
      const Monomial l = lcm_of(queue[k]);
      const long dl = l.total_degree(), db = best_lcm.total_degree();
      if (dl < db || (dl == db && ord.less(l, best_lcm))) {
        best = k;
        best_lcm = l;
      }
    }
    const Pair p = queue[best];
    queue.erase(queue.begin() + static_cast<long>(best));

    const Monomial lmi = G[p.i].leading_term(ord).mono;
    const Monomial lmj = G[p.j].leading_term(ord).mono;
    if (Monomial::coprime(lmi, lmj)) continue;  // first criterion

    // Chain criterion: drop (i,j) if some k has LT(k) | lcm(i,j) and both
    // (i,k) and (j,k) were already treated.
    bool skip = false;
    const Monomial l = Monomial::lcm(lmi, lmj);
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (G[k].leading_term(ord).mono.divides(l) && !pending(p.i, k) && !pending(p.j, k))
        skip = true;
    }
    if (skip) continue;

    const Polynomial r = reduce_full(spoly(G[p.i], G[p.j], ord), G, ord, nullptr);
    if (r.is_zero()) continue;
    G.push_back(r);
    for (std::size_t i = 0; i + 1 < G.size(); ++i) queue.push_back({i, G.size() - 1});
  }

  // Minimalize: keep only elements whose leading monomial no other leading
  // monomial divides.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const Monomial lm = G[i].leading_term(ord).mono;
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial other = G[k].leading_term(ord).mono;
      if (other.divides(lm) && (other != lm || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // Interreduce tails and make monic.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    Polynomial r = others.empty() ? minimal[i] : reduce_full(minimal[i], others, ord, nullptr);
    if (r.is_zero()) continue;  // fully redundant element
    reduced.push_back(r.scaled(Rational(1) / r.leading_term(ord).coeff));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
  });
  return GroebnerBasis(ord, ideal.nvars, std::move(reduced));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  return normal_form(f, G, nullptr);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const DivisorChooser& pick) {
  if (f.nvars() != G.nvars()) throw Error("normal_form: variable count mismatch");
  if (G.elements().empty()) return f;
  return reduce_full(f, G.elements(), G.order(), pick);
}

Staircase staircase(const GroebnerBasis& G) {
  Staircase st;
  const std::size_t n = G.nvars();
  if (G.is_unit_ideal()) {
    st.finite = true;
    st.colength = 0;
    return st;
  }
  const auto lms = G.leading_monomials();

  // Pure-power bound per variable; absence of a pure power means the
  // quotient is infinite-dimensional in that direction.
  std::vector<unsigned> bound(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    bool found = false;
    for (const auto& lm : lms) {
      bool pure = lm.exponent(j) > 0;
      for (std::size_t k = 0; k < n && pure; ++k)
        if (k != j && lm.exponent(k) > 0) pure = false;
      if (pure) {
        bound[j] = found ? std::min(bound[j], lm.exponent(j)) : lm.exponent(j);
        found = true;
      }
    }
    if (!found) {
      st.finite = false;
      st.witness_variable = j;
      return st;
    }
  }

  std::vector<unsigned> e(n, 0);
  std::vector<Monomial> standard;
  while (true) {
    Monomial m{std::vector<unsigned>(e)};
    bool in_ideal = false;
    for (const auto& lm : lms)
      if (lm.divides(m)) {
        in_ideal = true;
        break;
      }
    if (!in_ideal) standard.push_back(std::move(m));
    std::size_t j = 0;
    while (j < n) {
      if (++e[j] < bound[j]) break;
      e[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  std::sort(standard.begin(), standard.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_compare(a, b) == Cmp::less;
  });
  st.finite = true;
  st.standard_monomials = std::move(standard);
  st.colength = static_cast<long>(st.standard_monomials.size());
  return st;
}

bool ideal_equals(const Ideal& a, const Ideal& b, const MonomialOrder& ord) {
  if (a.nvars != b.nvars) throw Error("ideal_equals: variable count mismatch");
  return groebner_basis(a, ord) == groebner_basis(b, ord);
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
  return ideal_equals(a, b, MonomialOrder::grevlex());
}

namespace {

Polynomial homogenize_last(const Polynomial& f) {
  // New last variable absorbs the degree deficit.
  const std::size_t n = f.nvars();
  const long d = f.total_degree();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    std::vector<unsigned> e = t.mono.exponents();
    e.push_back(static_cast<unsigned>(d - t.mono.total_degree()));
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(n + 1, std::move(out));
}

}  // namespace

Ideal initial_ideal(const Ideal& ideal, const WeightVector& w, Direction dir) {
  if (w.size() != ideal.nvars) throw Error("initial_ideal: weight arity mismatch");
  WeightVector v = w;
  if (dir == Direction::min)
    for (auto& x : v.w) x = -x;

  if (v.all_nonnegative()) {
    const GroebnerBasis G = groebner_basis(ideal, MonomialOrder::weighted(v));
    std::vector<Polynomial> forms;
    if (G.elements().empty()) forms.push_back(Polynomial::zero(ideal.nvars));
    for (const auto& g : G.elements()) forms.push_back(g.initial_form(v, true));
    return Ideal(ideal.nvars, std::move(forms));
  }

  // Mixed or negative weights: pass through the homogenization, where the
  // weight-refined order terminates.  Homogenizing a degree-compatible
  // reduced basis generates the homogenized ideal.
  const GroebnerBasis G0 = groebner_basis(ideal, MonomialOrder::grevlex());
  if (G0.elements().empty()) return Ideal(ideal.nvars, {Polynomial::zero(ideal.nvars)});
  std::vector<Polynomial> hom;
  for (const auto& g : G0.elements()) hom.push_back(homogenize_last(g));
  WeightVector vh = v;
  vh.w.emplace_back(0);
  const GroebnerBasis Gh =
      groebner_basis(Ideal(ideal.nvars + 1, std::move(hom)), MonomialOrder::weighted(vh));
  std::vector<Polynomial> forms;
  if (Gh.elements().empty()) forms.push_back(Polynomial::zero(ideal.nvars));
  for (const auto& g : Gh.elements())
    forms.push_back(g.initial_form(vh, true).specialize_last(Rational(1)));
  return Ideal(ideal.nvars, std::move(forms));
}

bool buchberger_criterion_holds(const GroebnerBasis& G) {
  const auto& elems = G.elements();
  for (std::size_t j = 1; j < elems.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!normal_form(spoly(elems[i], elems[j], G.order()), G).is_zero()) return false;
  return true;
}

}  // namespace gmflow
