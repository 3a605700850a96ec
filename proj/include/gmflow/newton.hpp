// Newton-polygon analysis of curve germs in P^r under diagonal G_m-actions:
// limit points for rescalings u^b and the full broken trajectory.
#ifndef GMFLOW_NEWTON_HPP
#define GMFLOW_NEWTON_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gmflow/rational.hpp"

namespace gmflow {

/// Laurent series in u known up to (not including) exponent N.  A series
/// must either be flagged identically zero or carry at least one term, so
/// its valuation is always determined.
class TruncatedSeries {
 public:
  TruncatedSeries(std::map<long, Rational> terms, long truncation_order);
  static TruncatedSeries zero(long truncation_order);
  /// Grammar: sum of c*u^k terms (k any integer), e.g. "1 + 2*u^3", "u^-1";
  /// the literal "0" marks the identically-zero series.
  static TruncatedSeries parse(const std::string& text, long truncation_order);

  bool identically_zero() const { return zero_; }
  long truncation_order() const { return trunc_; }
  const std::map<long, Rational>& terms() const { return terms_; }

  long valuation() const;        // throws on the zero series
  Rational leading_coeff() const;  // coefficient at the valuation

  /// Same series viewed at a larger truncation order.
  TruncatedSeries extended_to(long new_order) const;

  std::string str() const;

 private:
  TruncatedSeries() = default;

  std::map<long, Rational> terms_;
  long trunc_ = 0;
  bool zero_ = false;
};

/// Point of P^r over truncated series; not all coordinates zero.
struct SeriesPoint {
  std::vector<TruncatedSeries> coordinates;

  explicit SeriesPoint(std::vector<TruncatedSeries> coords);
  std::size_t dim() const { return coordinates.size() - 1; }  // the r in P^r
};

/// Integer weights of the diagonal action t.[z_0,...,z_r] =
/// [t^{a_0} z_0, ..., t^{a_r} z_r].  Order is not assumed sorted.
struct ActionWeights {
  std::vector<long> a;
};

/// Point of P^r(Q), stored normalized: first nonzero coordinate is 1, so
/// projective equality is plain equality.
class ProjectivePointQ {
 public:
  explicit ProjectivePointQ(std::vector<Rational> coords);

  const std::vector<Rational>& coords() const { return c_; }
  std::vector<std::size_t> support() const;

  friend bool operator==(const ProjectivePointQ& a, const ProjectivePointQ& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const ProjectivePointQ& a, const ProjectivePointQ& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

struct NewtonVertex {
  long weight;                       // the a-coordinate
  long valuation;                    // the ord_u-coordinate
  std::vector<std::size_t> support;  // coordinate indices realizing the vertex
};

struct NewtonEdge {
  std::size_t from, to;              // vertex indices
  Rational slope;
  std::vector<std::size_t> support;  // all indices on the edge, endpoints included
};

/// Lower convex hull of the finite points (a_i, ord_u(z_i)); vertices in
/// increasing weight.  Vertical sides are not edges.
struct NewtonPolygon {
  std::vector<NewtonVertex> vertices;
  std::vector<NewtonEdge> edges;
};

NewtonPolygon newton_polygon(const SeriesPoint& z, const ActionWeights& a);

/// lim_{u->0}[u^{b a_0} z_0(u), ..., u^{b a_r} z_r(u)]: coordinate i keeps
/// the leading coefficient of z_i exactly when b*a_i + ord_u(z_i) is
/// minimal, and is 0 otherwise.
ProjectivePointQ limit_point(const SeriesPoint& z, const ActionWeights& a, const Rational& b);

/// Chain of torus orbits connecting the fixed points cut out by the Newton
/// polygon: lim_{t->0} t(y_i) = x_{i-1} and lim_{t->infinity} t(y_i) = x_i.
struct BrokenTrajectory {
  std::vector<ProjectivePointQ> fixed_points;        // x_0..x_n
  std::vector<ProjectivePointQ> orbit_reps;          // y_1..y_n
  std::vector<Rational> critical_slopes;             // b_1 > ... > b_n
  std::vector<std::vector<std::size_t>> edge_supports;
  std::vector<long> orbit_degrees;                   // width / gcd of weight gaps
  NewtonPolygon polygon;
};

BrokenTrajectory broken_trajectory(const SeriesPoint& z, const ActionWeights& a);

/// (t->0 limit, t->infinity limit): the minimum- and maximum-weight slices
/// of the support.  Both outputs are fixed points.
std::pair<ProjectivePointQ, ProjectivePointQ> orbit_limits(const ProjectivePointQ& p,
                                                           const ActionWeights& a);

}  // namespace gmflow

#endif
