#include "gmflow/funcfield.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gmflow {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void UPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::variable() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

Rational UPoly::leading_coeff() const {
  if (is_zero()) throw Error("upoly: leading coefficient of zero");
  return c_.back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x = -x;
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[i + k] += c_[i] * o.c_[k];
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& q) const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= q;
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw Error("upoly: division by zero");
  std::vector<Rational> rem = c_;
  const long dd = divisor.degree();
  const Rational lead = divisor.leading_coeff();
  if (static_cast<long>(rem.size()) - 1 < dd) return {UPoly(), *this};
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  for (long k = static_cast<long>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    const Rational q = rem[k] / lead;
    quot[k - dd] = q;
    for (long i = 0; i <= dd; ++i) rem[k - dd + i] -= q * divisor.c_[i];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::divexact(const UPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw Error("upoly: inexact division");
  return q;
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(x.leading_coeff().reciprocal());  // monic
}

Rational UPoly::evaluate(const Rational& s) const {
  Rational v(0);
  for (std::size_t k = c_.size(); k-- > 0;) v = v * s + c_[k];
  return v;
}

namespace {

std::vector<Int> positive_divisors(const Int& n) {
  const Int a = abs(n);
  if (!a.fits_slong_p() || a.get_si() > 4000000000L)
    throw Error("exceptional set: coefficient too large to factor (" + a.get_str() + ")");
  const long v = a.get_si();
  std::vector<Int> divs;
  for (long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.emplace_back(d);
      if (d != v / d) divs.emplace_back(v / d);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> UPoly::rational_roots() const {
  if (is_zero()) throw Error("upoly: the zero polynomial has every root");
  std::set<Rational> roots;
  // Factor out powers of s.
  std::size_t low = 0;
  while (low < c_.size() && c_[low].is_zero()) ++low;
  if (low > 0) roots.insert(Rational(0));
  std::vector<Rational> body(c_.begin() + static_cast<long>(low), c_.end());
  if (body.size() <= 1) return {roots.begin(), roots.end()};

  // Clear denominators to a primitive integer polynomial.
  Int denlcm = 1;
  for (const auto& q : body) {
    Int d = q.denominator();
    denlcm = denlcm / ::gcd(denlcm, d) * d;
  }
  std::vector<Int> ic;
  Int numgcd = 0;
  for (const auto& q : body) {
    Int v = q.numerator() * (denlcm / q.denominator());
    numgcd = ::gcd(numgcd, v);
    ic.push_back(std::move(v));
  }
  for (auto& v : ic) v /= numgcd;

  for (const Int& p : positive_divisors(ic.front()))
    for (const Int& q : positive_divisors(ic.back()))
      for (int sign : {1, -1}) {
        const Rational cand(sign * p, q);
        bool dup = roots.count(cand) > 0;
        if (!dup && evaluate(cand).is_zero()) roots.insert(cand);
      }
  return {roots.begin(), roots.end()};
}

namespace {
struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) == Cmp::greater;
  }
};
}  // namespace

FFPoly FFPoly::from_terms(std::size_t nvars, std::vector<FFTerm> terms) {
  std::map<Monomial, UPoly, GrevlexDesc> acc;
  for (auto& t : terms) {
    if (t.mono.nvars() != nvars) throw Error("ffpoly: term arity mismatch");
    auto [it, fresh] = acc.try_emplace(t.mono, t.coeff);
    if (!fresh) it->second = it->second + t.coeff;
  }
  FFPoly p(nvars);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

FFPoly FFPoly::from_parameter_polynomial(const Polynomial& p) {
  if (p.nvars() == 0) throw Error("ffpoly: needs the parameter variable");
  const std::size_t n = p.nvars() - 1;
  std::vector<FFTerm> terms;
  for (const auto& t : p.terms()) {
    std::vector<unsigned> e(t.mono.exponents().begin(), t.mono.exponents().end() - 1);
    const unsigned k = t.mono.exponent(n);
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = t.coeff;
    terms.push_back({Monomial(std::move(e)), UPoly(std::move(c))});
  }
  return from_terms(n, std::move(terms));
}

const FFTerm& FFPoly::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw Error("ffpoly: leading term of zero");
  const FFTerm* best = &terms_[0];
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (ord.greater(terms_[i].mono, best->mono)) best = &terms_[i];
  return *best;
}

FFPoly FFPoly::operator-(const FFPoly& o) const {
  if (nvars_ != o.nvars_) throw Error("ffpoly: variable count mismatch");
  std::vector<FFTerm> terms = terms_;
  for (const auto& t : o.terms_) terms.push_back({t.mono, -t.coeff});
  return from_terms(nvars_, std::move(terms));
}

FFPoly FFPoly::times(const Monomial& m, const UPoly& c) const {
  FFPoly p(nvars_);
  if (c.is_zero()) return p;
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

FFPoly FFPoly::scaled_by(const UPoly& c) const { return times(Monomial(nvars_), c); }

UPoly FFPoly::content() const {
  UPoly g;
  for (const auto& t : terms_) g = UPoly::gcd(g, t.coeff);
  return g;
}

FFPoly FFPoly::normalized(const MonomialOrder& ord) const {
  if (terms_.empty()) return *this;
  const UPoly g = content();
  FFPoly p(nvars_);
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff.divexact(g)});
  const Rational lead = p.leading_term(ord).coeff.leading_coeff();
  if (!lead.is_one())
    for (auto& t : p.terms_) t.coeff = t.coeff.scaled(lead.reciprocal());
  return p;
}

FFPoly FFPoly::initial_form_max(const WeightVector& w) const {
  if (terms_.empty()) return *this;
  Int best = weight_value(terms_[0].mono, w);
  for (std::size_t i = 1; i < terms_.size(); ++i)
    best = std::max(best, weight_value(terms_[i].mono, w));
  FFPoly p(nvars_);
  for (const auto& t : terms_)
    if (weight_value(t.mono, w) == best) p.terms_.push_back(t);
  return p;
}

Polynomial FFPoly::to_parameter_polynomial() const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    for (std::size_t k = 0; k < t.coeff.coeffs().size(); ++k) {
      if (t.coeff.coeffs()[k].is_zero()) continue;
      std::vector<unsigned> e = t.mono.exponents();
      e.push_back(static_cast<unsigned>(k));
      out.push_back({Monomial(std::move(e)), t.coeff.coeffs()[k]});
    }
  return Polynomial::from_terms(nvars_ + 1, std::move(out));
}

namespace {

FFPoly strip_content(const FFPoly& p) {
  const UPoly c = p.content();
  if (c.is_zero() || c.degree() <= 0) return p;
  std::vector<FFTerm> stripped;
  for (const auto& t : p.terms()) stripped.push_back({t.mono, t.coeff.divexact(c)});
  return FFPoly::from_terms(p.nvars(), std::move(stripped));
}

// Full pseudo-division; multiplies through by leading s-coefficients instead
// of dividing, then strips content.  The whole polynomial stays in one piece
// so the pseudo-multipliers rescale it consistently: the result is
// C(s)*f mod (G) for a single nonzero C, and no monomial of it is divisible
// by a leading monomial of G.
FFPoly reduce_ff(const FFPoly& f, const std::vector<FFPoly>& G, const MonomialOrder& ord) {
  FFPoly h = f;
  while (!h.is_zero()) {
    // Greatest reducible monomial of h, if any.
    const FFTerm* target = nullptr;
    const FFPoly* divisor = nullptr;
    for (const auto& t : h.terms()) {
      if (target && !ord.greater(t.mono, target->mono)) continue;
      for (const auto& g : G)
        if (g.leading_term(ord).mono.divides(t.mono)) {
          target = &t;
          divisor = &g;
          break;
        }
    }
    if (!target) break;
    const FFTerm glt = divisor->leading_term(ord);
    h = strip_content(h.scaled_by(glt.coeff) -
                      divisor->times(target->mono.divided_by(glt.mono), target->coeff));
  }
  return h;
}

}  // namespace

std::vector<FFPoly> groebner_basis_ff(const std::vector<FFPoly>& gens, const MonomialOrder& ord) {
  if (!ord.is_global()) throw Error("groebner_ff: needs a global order");
  std::vector<FFPoly> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(g.normalized(ord));
  if (G.empty()) return G;

  struct Pair {
    std::size_t i, j;
  };
  std::vector<Pair> queue;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) queue.push_back({i, j});

  while (!queue.empty()) {
    const Pair p = queue.back();
    queue.pop_back();
    const FFTerm li = G[p.i].leading_term(ord);
    const FFTerm lj = G[p.j].leading_term(ord);
    if (Monomial::coprime(li.mono, lj.mono)) continue;
    const Monomial l = Monomial::lcm(li.mono, lj.mono);
    const FFPoly s = G[p.i].times(l.divided_by(li.mono), lj.coeff) -
                     G[p.j].times(l.divided_by(lj.mono), li.coeff);
    const FFPoly r = reduce_ff(s, G, ord);
    if (r.is_zero()) continue;
    G.push_back(r.normalized(ord));
    for (std::size_t i = 0; i + 1 < G.size(); ++i) queue.push_back({i, G.size() - 1});
  }

  // Minimalize.
  std::vector<FFPoly> minimal;
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
  // Interreduce tails.
  std::vector<FFPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FFPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    FFPoly r = others.empty() ? minimal[i] : reduce_ff(minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(r.normalized(ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const FFPoly& a, const FFPoly& b) {
    return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
  });
  return reduced;
}

}  // namespace gmflow
