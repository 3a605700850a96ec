#include "gmflow/order.hpp"

namespace gmflow {

Cmp grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error("order: variable count mismatch");
  const long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? Cmp::less : Cmp::greater;
  // Equal degree: the last variable where the exponents differ decides,
  // and the monomial with the SMALLER exponent there is the greater one.
  for (std::size_t j = a.nvars(); j-- > 0;) {
    const unsigned ea = a.exponent(j), eb = b.exponent(j);
    if (ea != eb) return ea < eb ? Cmp::greater : Cmp::less;
  }
  return Cmp::equal;
}

static Cmp lex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error("order: variable count mismatch");
  for (std::size_t j = 0; j < a.nvars(); ++j) {
    const unsigned ea = a.exponent(j), eb = b.exponent(j);
    if (ea != eb) return ea < eb ? Cmp::less : Cmp::greater;
  }
  return Cmp::equal;
}

bool MonomialOrder::is_global() const {
  switch (kind_) {
    case Kind::grevlex:
    case Kind::lex:
      return true;
    case Kind::weighted:
      return weights_.all_nonnegative();
  }
  return false;
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_compare(a, b);
    case Kind::lex:
      return lex_compare(a, b);
    case Kind::weighted: {
      const Int wa = weight_value(a, weights_);
      const Int wb = weight_value(b, weights_);
      if (wa != wb) return wa < wb ? Cmp::less : Cmp::greater;
      return grevlex_compare(a, b);
    }
  }
  throw Error("order: unknown kind");
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::weighted: {
      std::string s = "weighted(";
      for (std::size_t j = 0; j < weights_.size(); ++j) {
        if (j) s += ",";
        s += weights_.w[j].get_str();
      }
      return s + ")";
    }
  }
  return "?";
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  return a.kind_ == b.kind_ && a.weights_.w == b.weights_.w;
}

}  // namespace gmflow
