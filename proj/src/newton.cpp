#include "gmflow/newton.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gmflow {

TruncatedSeries::TruncatedSeries(std::map<long, Rational> terms, long truncation_order) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second.is_zero())
      it = terms.erase(it);
    else
      ++it;
  }
  if (terms.empty())
    throw Error(
        "series: no terms below the truncation order and no zero flag; the "
        "valuation is undetermined");
  if (terms.rbegin()->first >= truncation_order)
    throw Error("series: stored exponent at or beyond the truncation order");
  terms_ = std::move(terms);
  trunc_ = truncation_order;
  zero_ = false;
}

TruncatedSeries TruncatedSeries::zero(long truncation_order) {
  TruncatedSeries s;
  s.trunc_ = truncation_order;
  s.zero_ = true;
  return s;
}

long TruncatedSeries::valuation() const {
  if (zero_) throw Error("series: valuation of the zero series is infinite");
  return terms_.begin()->first;
}

Rational TruncatedSeries::leading_coeff() const {
  if (zero_) throw Error("series: zero series has no leading coefficient");
  return terms_.begin()->second;
}

TruncatedSeries TruncatedSeries::extended_to(long new_order) const {
  if (new_order < trunc_) throw Error("series: cannot shrink the truncation order");
  TruncatedSeries s = *this;
  s.trunc_ = new_order;
  return s;
}

std::string TruncatedSeries::str() const {
  if (zero_) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational a = c.abs();
    if (k == 0) {
      out += a.str();
    } else {
      if (!a.is_one()) out += a.str() + "*";
      out += "u";
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

// Minimal scanner for the series literal grammar.
class SeriesScanner {
 public:
  explicit SeriesScanner(const std::string& text) : text_(text) {}

  std::map<long, Rational> parse_terms() {
    std::map<long, Rational> acc;
    skip_ws();
    bool negate = accept('-');
    read_term(acc, negate);
    skip_ws();
    while (pos_ < text_.size()) {
      bool minus;
      if (accept('+'))
        minus = false;
      else if (accept('-'))
        minus = true;
      else
        throw Error("series: expected '+' or '-' at position " + std::to_string(pos_));
      read_term(acc, minus);
      skip_ws();
    }
    for (auto it = acc.begin(); it != acc.end();)
      it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  Int nat() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw Error("series: expected a number at position " + std::to_string(pos_));
    return Int(text_.substr(start, pos_ - start));
  }
  long integer() {
    skip_ws();
    const bool neg = accept('-');
    const Int n = nat();
    if (!n.fits_slong_p()) throw Error("series: exponent too large");
    return neg ? -n.get_si() : n.get_si();
  }

  void read_term(std::map<long, Rational>& acc, bool minus) {
    Rational c(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Int num = nat();
      Int den(1);
      if (accept('/')) {
        den = nat();
        if (sgn(den) == 0) throw Error("series: zero denominator");
      }
      c = Rational(num, den);
      have_coeff = true;
    }
    long k = 0;
    if (!have_coeff || accept('*')) {
      if (!accept('u'))
        throw Error("series: expected 'u' at position " + std::to_string(pos_));
      k = accept('^') ? integer() : 1;
    }
    if (minus) c = -c;
    auto [it, fresh] = acc.try_emplace(k, c);
    if (!fresh) it->second += c;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

TruncatedSeries TruncatedSeries::parse(const std::string& text, long truncation_order) {
  std::string stripped;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
  if (stripped == "0") return TruncatedSeries::zero(truncation_order);
  return TruncatedSeries(SeriesScanner(text).parse_terms(), truncation_order);
}

SeriesPoint::SeriesPoint(std::vector<TruncatedSeries> coords) : coordinates(std::move(coords)) {
  if (coordinates.empty()) throw Error("series point: needs at least one coordinate");
  const bool any_finite = std::any_of(coordinates.begin(), coordinates.end(),
                                      [](const TruncatedSeries& z) { return !z.identically_zero(); });
  if (!any_finite) throw Error("series point: all coordinates identically zero");
}

ProjectivePointQ::ProjectivePointQ(std::vector<Rational> coords) : c_(std::move(coords)) {
  std::size_t first = c_.size();
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) {
      first = i;
      break;
    }
  if (first == c_.size()) throw Error("projective point: all coordinates zero");
  const Rational scale = c_[first].reciprocal();
  for (auto& x : c_) x *= scale;
}

std::vector<std::size_t> ProjectivePointQ::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) s.push_back(i);
  return s;
}

std::string ProjectivePointQ::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ", ";
    out += c_[i].str();
  }
  return out + "]";
}

namespace {

void check_arity(const SeriesPoint& z, const ActionWeights& a) {
  if (z.coordinates.size() != a.a.size())
    throw Error("newton: series point and weights have different lengths");
}

// b*a + v as an exact rational.
Rational line_value(const Rational& b, long a, long v) {
  return b * Rational(a) + Rational(v);
}

}  // namespace

NewtonPolygon newton_polygon(const SeriesPoint& z, const ActionWeights& a) {
  check_arity(z, a);

  // Finite-valuation points, one per coordinate.
  struct Pt {
    long a, v;
    std::size_t index;
  };
  std::vector<Pt> pts;
  for (std::size_t i = 0; i < z.coordinates.size(); ++i)
    if (!z.coordinates[i].identically_zero())
      pts.push_back({a.a[i], z.coordinates[i].valuation(), i});
  if (pts.empty()) throw Error("newton: no coordinate with finite valuation");

  // Per distinct weight keep the lowest valuation; higher points at the same
  // weight sit above the hull.
  std::map<long, long> lowest;
  for (const auto& p : pts) {
    auto [it, fresh] = lowest.try_emplace(p.a, p.v);
    if (!fresh) it->second = std::min(it->second, p.v);
  }

  // Monotone-chain lower hull over (weight, valuation), strict turns only.
  std::vector<std::pair<long, long>> base(lowest.begin(), lowest.end());
  std::vector<std::pair<long, long>> hull;
  for (const auto& p : base) {
    while (hull.size() >= 2) {
      const auto& q = hull[hull.size() - 1];
      const auto& r = hull[hull.size() - 2];
      // Drop q unless it lies strictly below the chord r-p.
      const Int cross = Int(q.first - r.first) * Int(p.second - r.second) -
                        Int(q.second - r.second) * Int(p.first - r.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  NewtonPolygon poly;
  for (const auto& [wa, wv] : hull) {
    NewtonVertex vert;
    vert.weight = wa;
    vert.valuation = wv;
    for (const auto& p : pts)
      if (p.a == wa && p.v == wv) vert.support.push_back(p.index);
    poly.vertices.push_back(std::move(vert));
  }
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    NewtonEdge e;
    e.from = k;
    e.to = k + 1;
    const auto [a0, v0] = hull[k];
    const auto [a1, v1] = hull[k + 1];
    e.slope = Rational(Int(v1 - v0), Int(a1 - a0));
    for (const auto& p : pts) {
      if (p.a < a0 || p.a > a1) continue;
      // On the segment: (v - v0)*(a1 - a0) == (a - a0)*(v1 - v0).
      if (Int(p.v - v0) * Int(a1 - a0) == Int(p.a - a0) * Int(v1 - v0))
        e.support.push_back(p.index);
    }
    poly.edges.push_back(std::move(e));
  }
  return poly;
}

ProjectivePointQ limit_point(const SeriesPoint& z, const ActionWeights& a, const Rational& b) {
  check_arity(z, a);
  bool have = false;
  Rational best(0);
  for (std::size_t i = 0; i < z.coordinates.size(); ++i) {
    if (z.coordinates[i].identically_zero()) continue;
    const Rational v = line_value(b, a.a[i], z.coordinates[i].valuation());
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  if (!have) throw Error("newton: no coordinate with finite valuation");
  std::vector<Rational> coords(z.coordinates.size(), Rational(0));
  for (std::size_t i = 0; i < z.coordinates.size(); ++i) {
    if (z.coordinates[i].identically_zero()) continue;
    if (line_value(b, a.a[i], z.coordinates[i].valuation()) == best)
      coords[i] = z.coordinates[i].leading_coeff();
  }
  return ProjectivePointQ(std::move(coords));
}

namespace {

ProjectivePointQ point_from_support(const SeriesPoint& z, const std::vector<std::size_t>& support,
                                    std::size_t total) {
  std::vector<Rational> coords(total, Rational(0));
  for (std::size_t i : support) coords[i] = z.coordinates[i].leading_coeff();
  return ProjectivePointQ(std::move(coords));
}

}  // namespace

BrokenTrajectory broken_trajectory(const SeriesPoint& z, const ActionWeights& a) {
  BrokenTrajectory out;
  out.polygon = newton_polygon(z, a);
  const std::size_t total = z.coordinates.size();
  for (const auto& v : out.polygon.vertices)
    out.fixed_points.push_back(point_from_support(z, v.support, total));
  for (const auto& e : out.polygon.edges) {
    out.orbit_reps.push_back(point_from_support(z, e.support, total));
    out.critical_slopes.push_back(-e.slope);
    out.edge_supports.push_back(e.support);
    // Geometric orbit degree: weight span over the gcd of weight gaps.
    long lo = a.a[e.support.front()], hi = lo;
    for (std::size_t i : e.support) {
      lo = std::min(lo, a.a[i]);
      hi = std::max(hi, a.a[i]);
    }
    long g = 0;
    for (std::size_t i : e.support) g = std::gcd(g, a.a[i] - lo);
    out.orbit_degrees.push_back((hi - lo) / g);
  }
  return out;
}

std::pair<ProjectivePointQ, ProjectivePointQ> orbit_limits(const ProjectivePointQ& p,
                                                           const ActionWeights& a) {
  if (p.coords().size() != a.a.size())
    throw Error("orbit_limits: point and weights have different lengths");
  const auto support = p.support();
  long lo = a.a[support.front()], hi = lo;
  for (std::size_t i : support) {
    lo = std::min(lo, a.a[i]);
    hi = std::max(hi, a.a[i]);
  }
  std::vector<Rational> zero_side(p.coords().size(), Rational(0));
  std::vector<Rational> infinity_side(p.coords().size(), Rational(0));
  for (std::size_t i : support) {
    if (a.a[i] == lo) zero_side[i] = p.coords()[i];
    if (a.a[i] == hi) infinity_side[i] = p.coords()[i];
  }
  return {ProjectivePointQ(std::move(zero_side)), ProjectivePointQ(std::move(infinity_side))};
}

}  // namespace gmflow
