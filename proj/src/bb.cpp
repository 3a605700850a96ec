#include "gmflow/bb.hpp"

#include <algorithm>
#include <map>

namespace gmflow {

std::vector<FixedComponent> fixed_components(const ActionWeights& a) {
  if (a.a.empty()) throw Error("fixed_components: empty weight vector");
  const long r = static_cast<long>(a.a.size()) - 1;
  std::map<long, long> multiplicity;
  for (long w : a.a) ++multiplicity[w];

  std::vector<FixedComponent> out;
  long below = 0;
  for (const auto& [w, mult] : multiplicity) {
    FixedComponent z;
    z.weight = w;
    z.dim = mult - 1;
    z.b_minus = below;
    z.a_plus = r + 1 - below - mult;
    out.push_back(z);
    below += mult;
  }
  for (const auto& z : out)
    if (z.a_plus + z.dim + z.b_minus != r)
      throw Error("fixed_components: tangent-space identity violated; this indicates a bug");
  return out;
}

PoincarePolynomial::PoincarePolynomial(std::vector<long> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  for (long x : c_)
    if (x < 0) throw Error("poincare: negative coefficient");
}

PoincarePolynomial PoincarePolynomial::q_integer(long m) {
  if (m < 0) throw Error("poincare: negative q-integer");
  return PoincarePolynomial(std::vector<long>(static_cast<std::size_t>(m), 1));
}

long PoincarePolynomial::evaluate_at_one() const {
  long s = 0;
  for (long x : c_) s += x;
  return s;
}

PoincarePolynomial PoincarePolynomial::shifted(long k) const {
  if (k < 0) throw Error("poincare: negative shift");
  if (c_.empty()) return *this;
  std::vector<long> r(c_.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(k)] = c_[i];
  return PoincarePolynomial(std::move(r));
}

PoincarePolynomial PoincarePolynomial::operator+(const PoincarePolynomial& o) const {
  std::vector<long> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return PoincarePolynomial(std::move(r));
}

PoincarePolynomial PoincarePolynomial::reversed(long top) const {
  if (static_cast<long>(c_.size()) - 1 > top) throw Error("poincare: reversal degree too small");
  std::vector<long> r(static_cast<std::size_t>(top) + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(top) - i] = c_[i];
  return PoincarePolynomial(std::move(r));
}

std::string PoincarePolynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
      out += i == 1 ? "q" : "q^" + std::to_string(i);
    }
  }
  return out;
}

PoincareIdentity poincare_identity(const ActionWeights& a) {
  PoincareIdentity id;
  id.components = fixed_components(a);
  const long r = static_cast<long>(a.a.size()) - 1;

  PoincarePolynomial via_b, via_a;
  for (const auto& z : id.components) {
    via_b = via_b + PoincarePolynomial::q_integer(z.dim + 1).shifted(z.b_minus);
    via_a = via_a + PoincarePolynomial::q_integer(z.dim + 1).shifted(z.a_plus);
  }
  id.lhs = via_b;
  id.rhs = PoincarePolynomial::q_integer(r + 1);
  // The a-twist census must agree after q-reversal: the two decompositions
  // differ by inverting the action.
  id.equal = (id.lhs == id.rhs) && (via_a.reversed(r) == id.rhs);
  return id;
}

AttractorPair attractor_pair_poincare(const ActionWeights& a, std::size_t r_cut) {
  const auto components = fixed_components(a);
  if (r_cut < 1 || r_cut > components.size())
    throw Error("attractor_pair: r_cut out of range [1," +
                std::to_string(components.size()) + "]");
  const long r = static_cast<long>(a.a.size()) - 1;

  AttractorPair pair;
  for (std::size_t i = 0; i < r_cut; ++i) {
    const auto& z = components[i];
    pair.p_y = pair.p_y + PoincarePolynomial::q_integer(z.dim + 1).shifted(z.b_minus);
    // Duality route: twist by n - a_i - dim_i, using the palindromy of
    // [m]_q; deliberately independent of b_minus.
    pair.p_u = pair.p_u + PoincarePolynomial::q_integer(z.dim + 1).shifted(r - z.a_plus - z.dim);
  }
  pair.equal = pair.p_y == pair.p_u;
  return pair;
}

}  // namespace gmflow
