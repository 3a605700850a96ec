#include "gmflow/monomial.hpp"

#include <algorithm>

namespace gmflow {

long Monomial::total_degree() const {
  long d = 0;
  for (unsigned e : e_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](unsigned e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  if (nvars() != m.nvars()) throw Error("monomial: variable count mismatch");
  for (std::size_t j = 0; j < e_.size(); ++j)
    if (e_[j] > m.e_[j]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  if (nvars() != m.nvars()) throw Error("monomial: variable count mismatch");
  Monomial r(nvars());
  for (std::size_t j = 0; j < e_.size(); ++j) r.e_[j] = e_[j] + m.e_[j];
  return r;
}

Monomial Monomial::divided_by(const Monomial& m) const {
  if (!m.divides(*this)) throw Error("monomial: inexact division");
  Monomial r(nvars());
  for (std::size_t j = 0; j < e_.size(); ++j) r.e_[j] = e_[j] - m.e_[j];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error("monomial: variable count mismatch");
  Monomial r(a.nvars());
  for (std::size_t j = 0; j < a.e_.size(); ++j) r.e_[j] = std::max(a.e_[j], b.e_[j]);
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error("monomial: variable count mismatch");
  for (std::size_t j = 0; j < a.e_.size(); ++j)
    if (a.e_[j] > 0 && b.e_[j] > 0) return false;
  return true;
}

WeightVector WeightVector::from_longs(const std::vector<long>& v) {
  WeightVector r;
  r.w.reserve(v.size());
  for (long x : v) r.w.emplace_back(x);
  return r;
}

bool WeightVector::all_positive() const {
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return sgn(x) > 0; });
}

bool WeightVector::all_nonnegative() const {
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return sgn(x) >= 0; });
}

Int weight_value(const Monomial& m, const WeightVector& w) {
  if (m.nvars() != w.size()) throw Error("weight_value: length mismatch");
  Int s = 0;
  for (std::size_t j = 0; j < w.size(); ++j) s += w.w[j] * m.exponent(j);
  return s;
}

}  // namespace gmflow
