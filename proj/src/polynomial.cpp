#include "gmflow/polynomial.hpp"

#include <algorithm>
#include <map>

namespace gmflow {

namespace {
struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) == Cmp::greater;
  }
};
}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t j) {
  if (j >= nvars) throw Error("polynomial: variable index out of range");
  Monomial m(nvars);
  m.set_exponent(j, 1);
  return from_monomial(m);
}

Polynomial Polynomial::from_monomial(Monomial m, Rational c) {
  Polynomial p(m.nvars());
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::map<Monomial, Rational, GrevlexDesc> acc;
  for (auto& t : terms) {
    if (t.mono.nvars() != nvars) throw Error("polynomial: term arity mismatch");
    auto [it, fresh] = acc.try_emplace(t.mono, t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  Polynomial p(nvars);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t j) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(j));
  return d;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw Error("polynomial: leading term of zero");
  const Term* best = &terms_[0];
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (ord.greater(terms_[i].mono, best->mono)) best = &terms_[i];
  return *best;
}

Rational Polynomial::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

void Polynomial::check_arity(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw Error("polynomial: variable count mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial p(nvars_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_arity(o);
  Polynomial p(nvars_);
  p.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, k = 0;
  while (i < terms_.size() && k < o.terms_.size()) {
    const Cmp c = grevlex_compare(terms_[i].mono, o.terms_[k].mono);
    if (c == Cmp::greater) {
      p.terms_.push_back(terms_[i++]);
    } else if (c == Cmp::less) {
      p.terms_.push_back(o.terms_[k++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[k].coeff;
      if (!s.is_zero()) p.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++k;
    }
  }
  for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
  for (; k < o.terms_.size(); ++k) p.terms_.push_back(o.terms_[k]);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_arity(o);
  std::map<Monomial, Rational, GrevlexDesc> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      auto [it, fresh] = acc.try_emplace(a.mono * b.mono, Rational(0));
      if (fresh)
        it->second = a.coeff * b.coeff;
      else
        it->second += a.coeff * b.coeff;
    }
  Polynomial p(nvars_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p(nvars_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (m.nvars() != nvars_) throw Error("polynomial: variable count mismatch");
  Polynomial p(nvars_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;  // multiplying by a fixed monomial preserves grevlex order
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw Error("polynomial: evaluation point arity mismatch");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t j = 0; j < nvars_; ++j)
      if (const unsigned e = t.mono.exponent(j)) v *= point[j].pow(e);
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::size_t j, const Polynomial& value) const {
  if (j >= nvars_) throw Error("polynomial: variable index out of range");
  check_arity(value);
  // Powers of `value` built in one ascending sweep; exponents in degeneration
  // families can reach the thousands.
  unsigned max_e = 0;
  for (const auto& t : terms_) max_e = std::max(max_e, t.mono.exponent(j));
  std::vector<Polynomial> powers;
  powers.reserve(max_e + 1);
  powers.push_back(constant(nvars_, Rational(1)));
  for (unsigned e = 1; e <= max_e; ++e) powers.push_back(powers.back() * value);

  Polynomial sum(nvars_);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const unsigned e = m.exponent(j);
    m.set_exponent(j, 0);
    sum = sum + powers[e].times_monomial(m, t.coeff);
  }
  return sum;
}

Polynomial Polynomial::specialize_last(const Rational& value) const {
  if (nvars_ == 0) throw Error("polynomial: no variable to specialize");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<unsigned> e(t.mono.exponents().begin(), t.mono.exponents().end() - 1);
    Rational c = t.coeff;
    if (const unsigned k = t.mono.exponent(nvars_ - 1)) c *= value.pow(k);
    out.push_back({Monomial(std::move(e)), std::move(c)});
  }
  return from_terms(nvars_ - 1, std::move(out));
}

Polynomial Polynomial::extended(std::size_t extra) const {
  Polynomial p(nvars_ + extra);
  for (const auto& t : terms_) {
    std::vector<unsigned> e = t.mono.exponents();
    e.resize(nvars_ + extra, 0);
    p.terms_.push_back({Monomial(std::move(e)), t.coeff});
  }
  return p;  // grevlex position of padded monomials is unchanged
}

Polynomial Polynomial::restricted() const {
  if (nvars_ == 0) throw Error("polynomial: no variable to drop");
  Polynomial p(nvars_ - 1);
  for (const auto& t : terms_) {
    if (t.mono.exponent(nvars_ - 1) != 0)
      throw Error("polynomial: cannot drop a variable that occurs");
    std::vector<unsigned> e(t.mono.exponents().begin(), t.mono.exponents().end() - 1);
    p.terms_.push_back({Monomial(std::move(e)), t.coeff});
  }
  return p;
}

Int Polynomial::max_weight(const WeightVector& w) const {
  if (terms_.empty()) throw Error("polynomial: weight of zero polynomial");
  Int best = weight_value(terms_[0].mono, w);
  for (std::size_t i = 1; i < terms_.size(); ++i)
    best = std::max(best, weight_value(terms_[i].mono, w));
  return best;
}

Polynomial Polynomial::initial_form(const WeightVector& w, bool take_max) const {
  if (terms_.empty()) return *this;
  Int best = weight_value(terms_[0].mono, w);
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    const Int v = weight_value(terms_[i].mono, w);
    if (take_max ? v > best : v < best) best = v;
  }
  Polynomial p(nvars_);
  for (const auto& t : terms_)
    if (weight_value(t.mono, w) == best) p.terms_.push_back(t);
  return p;
}

bool Polynomial::is_weight_homogeneous(const WeightVector& w) const {
  if (terms_.size() <= 1) return true;
  const Int v0 = weight_value(terms_[0].mono, w);
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (weight_value(terms_[i].mono, w) != v0) return false;
  return true;
}

bool Polynomial::is_degree_homogeneous() const {
  if (terms_.size() <= 1) return true;
  const long d0 = terms_[0].mono.total_degree();
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].mono.total_degree() != d0) return false;
  return true;
}

}  // namespace gmflow
