// Chain-of-affine-lines connectivity certificates between points of
// Hilb_d(A^n): one-parameter segments, certificate assembly and
// verification, and limit families over the parameter line.
#ifndef GMFLOW_CHAINS_HPP
#define GMFLOW_CHAINS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmflow/distraction.hpp"
#include "gmflow/torus.hpp"

namespace gmflow {

using PointConfig = std::vector<std::vector<Rational>>;

/// One affine line into the Hilbert scheme.  An ideal-family segment lists
/// generators in x_1..x_n and one parameter s (an honest extra variable,
/// always last); a point-motion segment moves exactly one point of a
/// configuration of d distinct points along a straight line.
struct Segment {
  enum class Kind { ideal_family, point_motion };

  Kind kind = Kind::ideal_family;
  std::size_t nvars = 0;  // ambient n, without the parameter
  long degree = 0;

  // ideal-family only: polynomials in n+1 variables, parameter last.
  std::vector<Polynomial> family;

  // point-motion only.
  PointConfig start;
  PointConfig end;
  std::size_t moving_index = 0;

  /// Specialization of an ideal-family segment at parameter value s.
  Ideal fiber(const Rational& s) const;
  /// Configuration of a point-motion segment at parameter value s.
  PointConfig configuration(const Rational& s) const;
};

/// Segment traversed backwards: s -> 1-s for families, endpoints swapped
/// for motions.
Segment reverse_segment(const Segment& seg);

/// Shared-endpoint record between consecutive segments, with the evidence
/// route used to certify the equality:
///   ideal-ideal    reduced-basis equality of the two ideal fibers
///   ideal-points   colength d plus vanishing of every generator at each of
///                  the d distinct points (jointly sufficient for equality)
///   points-points  set equality of configurations
struct Gluing {
  enum class Kind { ideal_ideal, ideal_points, points_ideal, points_points };
  Kind kind = Kind::ideal_ideal;
  std::size_t after = 0;  // between segments[after] and segments[after+1]
  std::optional<Ideal> shared_ideal;     // in the ambient n variables
  std::optional<PointConfig> shared_points;
};

struct ChainCertificate {
  std::size_t nvars = 0;
  long degree = 0;
  Ideal source;
  Ideal target;
  std::vector<Segment> segments;
  std::vector<Gluing> gluings;  // one per consecutive pair
};

/// Groebner degeneration segment: for each element g = sum c_m x^m of the
/// w-refined reduced basis, emits sum c_m s^{W - w.m} x^m with W the top
/// weight of g.  The s=1 fiber is S, the s=0 fiber is limit_subscheme(S, w).
Segment degeneration_segment(const Subscheme0D& S, const WeightVector& w);

/// Distraction family with every parameter a_l replaced by s*a_l; the s=0
/// fiber is I, the s=1 fiber is distraction_ideal(I, a).
Segment distraction_segment(const MonomialIdeal& I, const DistractionParams& params);

/// Moves P onto Q (as sets) one point at a time, each move a straight line
/// whose full parameter line avoids the static points; detours through a
/// waypoint are inserted when the direct line is blocked.  Needs n >= 2.
std::vector<Segment> motion_segments(const PointConfig& P, const PointConfig& Q);

/// The pencil (1-s)f + sg of monic degree-d univariate polynomials; monic
/// for every s, hence of colength d everywhere.
Segment hilb_line_segment(const Polynomial& f, const Polynomial& g);

/// Full connectivity certificate between two subschemes of the same (n, d):
/// degeneration to a monomial ideal, distraction to d points, motions to the
/// standard configuration (l, 0, ..., 0), then the mirror of the same for
/// the target.  In one variable a single pencil segment is used.
ChainCertificate connect(const Subscheme0D& S1, const Subscheme0D& S2);

struct ChainReport {
  bool ok = false;
  std::vector<std::string> checks;
  std::vector<std::string> failures;
};

/// Re-derives every claim in the certificate: fiber colengths at s = 0, 1
/// and the interior samples k/(samples+1), exact collision solving and
/// sampled distinctness for motions, gluing equalities, and the endpoint
/// identification with source and target.
ChainReport verify_chain(const ChainCertificate& cert, int samples_per_segment);

struct LimitFamily {
  Segment family;                     // w-limit family, constant off Z
  std::vector<Rational> exceptional;  // Z: rational zeros of leading s-coefficients
};

/// lim_{t->0} t(fiber(s)) as a family over the parameter line minus Z,
/// computed from a Groebner basis over Q(s) by taking w-maximal forms and
/// clearing s-contents.
LimitFamily limit_of_family(const Segment& seg, const WeightVector& w);

nlohmann::json certificate_to_json(const ChainCertificate& cert);
ChainCertificate certificate_from_json(const nlohmann::json& doc);

}  // namespace gmflow

#endif
