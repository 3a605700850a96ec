#include "gmflow/chains.hpp"

#include <algorithm>
#include <set>

#include "gmflow/funcfield.hpp"
#include "gmflow/parse.hpp"

namespace gmflow {

namespace {

bool point_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t j = 0; j < std::min(a.size(), b.size()); ++j) {
    if (a[j] < b[j]) return true;
    if (b[j] < a[j]) return false;
  }
  return a.size() < b.size();
}

PointConfig sorted_config(PointConfig c) {
  std::sort(c.begin(), c.end(), point_less);
  return c;
}

bool config_set_equal(const PointConfig& a, const PointConfig& b) {
  return sorted_config(a) == sorted_config(b);
}

bool pairwise_distinct(const PointConfig& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t k = i + 1; k < c.size(); ++k)
      if (c[i] == c[k]) return false;
  return true;
}

std::vector<Polynomial> reduced_generators(const Ideal& ideal) {
  const GroebnerBasis G = groebner_basis(ideal, MonomialOrder::grevlex());
  if (G.elements().empty()) return {Polynomial::zero(ideal.nvars)};
  return G.elements();
}

std::string point_str(const std::vector<Rational>& p) {
  std::string s = "(";
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) s += ",";
    s += p[j].str();
  }
  return s + ")";
}

}  // namespace

Ideal Segment::fiber(const Rational& s) const {
  if (kind != Kind::ideal_family) throw Error("segment: fiber of a point-motion segment");
  std::vector<Polynomial> gens;
  for (const auto& g : family) gens.push_back(g.specialize_last(s));
  return Ideal(nvars, std::move(gens));
}

PointConfig Segment::configuration(const Rational& s) const {
  if (kind != Kind::point_motion) throw Error("segment: configuration of an ideal family");
  PointConfig c = start;
  for (std::size_t j = 0; j < nvars; ++j)
    c[moving_index][j] = start[moving_index][j] +
                         s * (end[moving_index][j] - start[moving_index][j]);
  return c;
}

Segment reverse_segment(const Segment& seg) {
  Segment r = seg;
  if (seg.kind == Segment::Kind::ideal_family) {
    const std::size_t param = seg.nvars;  // 0-based index of s
    const Polynomial one_minus_s = Polynomial::constant(param + 1, Rational(1)) -
                                   Polynomial::variable(param + 1, param);
    r.family.clear();
    for (const auto& g : seg.family) r.family.push_back(g.substitute(param, one_minus_s));
  } else {
    std::swap(r.start, r.end);
  }
  return r;
}

Segment degeneration_segment(const Subscheme0D& S, const WeightVector& w) {
  if (!w.all_positive()) throw Error("degeneration_segment: weights must be positive");
  if (w.size() != S.nvars()) throw Error("degeneration_segment: weight arity mismatch");
  const std::size_t n = S.nvars();
  const GroebnerBasis G = groebner_basis(S.ideal(), MonomialOrder::weighted(w));

  Segment seg;
  seg.kind = Segment::Kind::ideal_family;
  seg.nvars = n;
  seg.degree = S.degree();
  for (const auto& g : G.elements()) {
    const Int top = g.max_weight(w);
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      const Int gap = top - weight_value(t.mono, w);
      if (!gap.fits_uint_p() || gap.get_ui() > 10'000'000u)
        throw Error("degeneration_segment: parameter exponent " + gap.get_str() +
                    " is too large to expand");
      std::vector<unsigned> e = t.mono.exponents();
      e.push_back(static_cast<unsigned>(gap.get_ui()));
      terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    seg.family.push_back(Polynomial::from_terms(n + 1, std::move(terms)));
  }
  return seg;
}

Segment distraction_segment(const MonomialIdeal& I, const DistractionParams& params) {
  if (!params.distinct()) throw Error("distraction_segment: parameters must be distinct");
  if (params.a.size() < I.max_exponent())
    throw Error("distraction_segment: not enough parameters");
  const std::size_t n = I.nvars();
  Segment seg;
  seg.kind = Segment::Kind::ideal_family;
  seg.nvars = n;
  seg.degree = I.colength();
  const Polynomial s_var = Polynomial::variable(n + 1, n);
  for (const auto& M : I.minimal_generators()) {
    Polynomial f = Polynomial::constant(n + 1, Rational(1));
    for (std::size_t j = 0; j < n; ++j)
      for (unsigned l = 0; l < M.exponent(j); ++l)
        f = f * (Polynomial::variable(n + 1, j) - s_var.scaled(params.a[l]));
    seg.family.push_back(std::move(f));
  }
  return seg;
}

namespace {

// Parameter at which the line p + s*(q - p) passes through r, if any.
// Linear with rational data, so any collision parameter is rational.
std::optional<Rational> collision_parameter(const std::vector<Rational>& p,
                                            const std::vector<Rational>& q,
                                            const std::vector<Rational>& r) {
  const std::size_t n = p.size();
  std::size_t pivot = n;
  for (std::size_t j = 0; j < n; ++j)
    if (p[j] != q[j]) {
      pivot = j;
      break;
    }
  if (pivot == n) return std::nullopt;  // degenerate move, caller rejects p == q
  const Rational s = (r[pivot] - p[pivot]) / (q[pivot] - p[pivot]);
  for (std::size_t j = 0; j < n; ++j)
    if (p[j] + s * (q[j] - p[j]) != r[j]) return std::nullopt;
  return s;
}

bool line_clear(const std::vector<Rational>& p, const std::vector<Rational>& q,
                const PointConfig& statics) {
  for (const auto& r : statics)
    if (collision_parameter(p, q, r)) return false;
  return true;
}

Int ceil_abs(const Rational& x) {
  const Rational a = x.abs();
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
  return q;
}

// Waypoint for a blocked move: coordinate offsets from the target first
// (second coordinate leading), then a varying-direction fallback whose
// candidate lines through the target are pairwise distinct, so the finitely
// many static points can only block finitely many of them.
std::vector<Rational> find_waypoint(const std::vector<Rational>& from,
                                    const std::vector<Rational>& to,
                                    const PointConfig& statics, const Int& k0, long d) {
  const std::size_t n = to.size();
  auto admissible = [&](const std::vector<Rational>& w) {
    for (const auto& r : statics)
      if (w == r) return false;
    return w != from && line_clear(from, w, statics) && line_clear(w, to, statics);
  };

  std::vector<std::size_t> dirs = {1, 0};
  for (std::size_t j = 2; j < n; ++j) dirs.push_back(j);
  const long budget = 2 * d + 8;
  for (std::size_t j : dirs)
    for (long step = 0; step <= budget; ++step) {
      std::vector<Rational> w = to;
      w[j] += Rational(k0 + step);
      if (admissible(w)) return w;
    }
  for (long step = 0; step <= 3 * d + 16; ++step) {
    const Rational k(k0 + step);
    std::vector<Rational> w = to;
    w[0] += k;
    w[1] += k * k;
    if (admissible(w)) return w;
  }
  throw Error("motion: waypoint search exhausted; this indicates a bug");
}

Segment make_move(const PointConfig& config, std::size_t index,
                  const std::vector<Rational>& destination, std::size_t n, long d) {
  Segment seg;
  seg.kind = Segment::Kind::point_motion;
  seg.nvars = n;
  seg.degree = d;
  seg.start = config;
  seg.end = config;
  seg.end[index] = destination;
  seg.moving_index = index;
  return seg;
}

}  // namespace

std::vector<Segment> motion_segments(const PointConfig& P, const PointConfig& Q) {
  if (P.size() != Q.size()) throw Error("motion: configurations have different sizes");
  if (P.empty()) throw Error("motion: empty configuration");
  const std::size_t n = P.front().size();
  if (n < 2) throw Error("motion: needs n >= 2 (use hilb_line_segment in one variable)");
  for (const auto& p : P)
    if (p.size() != n) throw Error("motion: point arity mismatch");
  for (const auto& q : Q)
    if (q.size() != n) throw Error("motion: point arity mismatch");
  if (!pairwise_distinct(P) || !pairwise_distinct(Q))
    throw Error("motion: configurations must consist of distinct points");
  const long d = static_cast<long>(P.size());

  // Points to move and their targets, in canonical order.
  const PointConfig sortedQ = sorted_config(Q);
  auto in_Q = [&](const std::vector<Rational>& p) {
    return std::binary_search(sortedQ.begin(), sortedQ.end(), p, point_less);
  };
  PointConfig current = P;
  std::vector<std::vector<Rational>> targets;
  for (const auto& q : Q) {
    if (std::find(P.begin(), P.end(), q) == P.end()) targets.push_back(q);
  }
  std::sort(targets.begin(), targets.end(), point_less);

  Int k0 = 1;
  for (const auto& cfg : {P, Q})
    for (const auto& p : cfg)
      for (const auto& x : p) k0 = std::max(k0, Int(ceil_abs(x) + 1));

  std::vector<Segment> moves;
  for (const auto& target : targets) {
    // Canonically first point of the current configuration that has to go.
    std::size_t index = current.size();
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (in_Q(current[i])) continue;
      if (index == current.size() || point_less(current[i], current[index])) index = i;
    }
    if (index == current.size()) throw Error("motion: matching failed; this indicates a bug");

    PointConfig statics;
    for (std::size_t i = 0; i < current.size(); ++i)
      if (i != index) statics.push_back(current[i]);

    if (line_clear(current[index], target, statics)) {
      moves.push_back(make_move(current, index, target, n, d));
      current[index] = target;
    } else {
      const auto waypoint = find_waypoint(current[index], target, statics, k0, d);
      moves.push_back(make_move(current, index, waypoint, n, d));
      current[index] = waypoint;
      moves.push_back(make_move(current, index, target, n, d));
      current[index] = target;
    }
  }
  return moves;
}

Segment hilb_line_segment(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != 1 || g.nvars() != 1)
    throw Error("hilb_line_segment: univariate polynomials required");
  const long d = f.total_degree();
  if (d < 1 || g.total_degree() != d) throw Error("hilb_line_segment: degree mismatch");
  const MonomialOrder ord = MonomialOrder::grevlex();
  if (!f.leading_term(ord).coeff.is_one() || !g.leading_term(ord).coeff.is_one())
    throw Error("hilb_line_segment: polynomials must be monic");
  Segment seg;
  seg.kind = Segment::Kind::ideal_family;
  seg.nvars = 1;
  seg.degree = d;
  const Polynomial F = f.extended(1);
  const Polynomial G = g.extended(1);
  const Polynomial s = Polynomial::variable(2, 1);
  seg.family.push_back(F + s * (G - F));
  return seg;
}

namespace {

PointConfig standard_configuration(std::size_t n, long d) {
  PointConfig c;
  for (long l = 0; l < d; ++l) {
    std::vector<Rational> p(n, Rational(0));
    p[0] = Rational(l);
    c.push_back(std::move(p));
  }
  return c;
}

// S -> monomial limit -> d points -> standard configuration.
std::vector<Segment> half_chain(const Subscheme0D& S) {
  const Monomialization mono = monomial_degeneration(S);
  std::vector<Segment> segs;
  segs.push_back(reverse_segment(degeneration_segment(S, mono.weights)));

  const MonomialIdeal M = MonomialIdeal::from_ideal(
      Ideal(S.nvars(), mono.limit.grevlex_basis().elements()));
  const DistractionParams params = DistractionParams::standard(M.max_exponent());
  segs.push_back(distraction_segment(M, params));

  const PointConfig points = standard_points(M, params);
  for (auto& move : motion_segments(points, standard_configuration(S.nvars(), S.degree())))
    segs.push_back(std::move(move));
  return segs;
}

Gluing make_gluing(std::size_t after, const Segment& left, const Segment& right) {
  Gluing g;
  g.after = after;
  const bool li = left.kind == Segment::Kind::ideal_family;
  const bool ri = right.kind == Segment::Kind::ideal_family;
  if (li && ri) {
    g.kind = Gluing::Kind::ideal_ideal;
    g.shared_ideal = Ideal(left.nvars, reduced_generators(left.fiber(Rational(1))));
  } else if (li && !ri) {
    g.kind = Gluing::Kind::ideal_points;
    g.shared_points = right.start;
  } else if (!li && ri) {
    g.kind = Gluing::Kind::points_ideal;
    g.shared_points = left.end;
  } else {
    g.kind = Gluing::Kind::points_points;
    g.shared_points = left.end;
  }
  return g;
}

}  // namespace

ChainCertificate connect(const Subscheme0D& S1, const Subscheme0D& S2) {
  if (S1.nvars() != S2.nvars())
    throw Error("connect: subschemes live in different ambient spaces");
  if (S1.degree() != S2.degree()) throw Error("connect: degrees differ");
  const std::size_t n = S1.nvars();
  const long d = S1.degree();

  if (groebner_basis(S1.ideal(), MonomialOrder::grevlex()) ==
      groebner_basis(S2.ideal(), MonomialOrder::grevlex()))
    return ChainCertificate{n, d, S1.ideal(), S2.ideal(), {}, {}};

  std::vector<Segment> segments;
  if (n == 1) {
    const auto f = S1.grevlex_basis().elements();
    const auto g = S2.grevlex_basis().elements();
    if (f.size() != 1 || g.size() != 1)
      throw Error("connect: unexpected univariate basis shape");
    segments.push_back(hilb_line_segment(f[0], g[0]));
  } else {
    segments = half_chain(S1);
    std::vector<Segment> back = half_chain(S2);
    for (std::size_t i = back.size(); i-- > 0;) segments.push_back(reverse_segment(back[i]));
  }

  std::vector<Gluing> gluings;
  for (std::size_t i = 0; i + 1 < segments.size(); ++i)
    gluings.push_back(make_gluing(i, segments[i], segments[i + 1]));
  return ChainCertificate{n, d, S1.ideal(), S2.ideal(), std::move(segments),
                          std::move(gluings)};
}

namespace {

struct Verifier {
  const ChainCertificate& cert;
  int samples;
  ChainReport report;

  void note(bool pass, const std::string& line) {
    (pass ? report.checks : report.failures).push_back(line);
  }

  std::vector<Rational> sample_values() const {
    std::vector<Rational> vals = {Rational(0), Rational(1)};
    for (int k = 1; k <= samples; ++k) vals.emplace_back(k, samples + 1);
    return vals;
  }

  long colength_of(const Ideal& ideal) const {
    const Staircase st = staircase(groebner_basis(ideal, MonomialOrder::grevlex()));
    return st.finite ? st.colength : -1;
  }

  void check_ideal_points(const Ideal& ideal, const PointConfig& pts, const std::string& where) {
    note(static_cast<long>(pts.size()) == cert.degree && pairwise_distinct(pts),
         where + ": " + std::to_string(pts.size()) + " distinct points");
    note(colength_of(ideal) == cert.degree, where + ": ideal colength equals the degree");
    bool vanish = true;
    for (const auto& g : ideal.generators)
      for (const auto& p : pts)
        if (!g.evaluate(p).is_zero()) vanish = false;
    note(vanish, where + ": every generator vanishes at every point");
  }

  void check_endpoint(const Segment& seg, bool at_start, const Ideal& expected,
                      const std::string& which) {
    if (seg.kind == Segment::Kind::ideal_family) {
      const Ideal fib = seg.fiber(Rational(at_start ? 0 : 1));
      note(ideal_equals(fib, expected), which + " matches by reduced-basis equality");
    } else {
      check_ideal_points(expected, at_start ? seg.start : seg.end, which);
    }
  }

  void check_segment(std::size_t i, const Segment& seg) {
    const std::string tag = "segment " + std::to_string(i);
    if (seg.kind == Segment::Kind::ideal_family) {
      if (seg.family.empty()) {
        note(false, tag + ": ideal family without generators");
        return;
      }
      for (const auto& s : sample_values()) {
        const long col = colength_of(seg.fiber(s));
        note(col == cert.degree, tag + ": fiber at s=" + s.str() + " has colength " +
                                     (col < 0 ? std::string("infinite") : std::to_string(col)) +
                                     " (expected " + std::to_string(cert.degree) + ")");
      }
    } else {
      const bool shape = seg.start.size() == seg.end.size() &&
                         static_cast<long>(seg.start.size()) == cert.degree &&
                         seg.moving_index < seg.start.size();
      note(shape, tag + ": configuration shape");
      if (!shape) return;
      bool single = true;
      for (std::size_t k = 0; k < seg.start.size(); ++k)
        if (k != seg.moving_index && seg.start[k] != seg.end[k]) single = false;
      note(single, tag + ": only the declared point moves");
      note(pairwise_distinct(seg.start) && pairwise_distinct(seg.end),
           tag + ": endpoint configurations are distinct point sets");

      // Exact collision solving: the full parameter line must miss every
      // static point.
      const auto& p = seg.start[seg.moving_index];
      const auto& q = seg.end[seg.moving_index];
      bool clear = true;
      for (std::size_t k = 0; k < seg.start.size(); ++k) {
        if (k == seg.moving_index) continue;
        if (p == q) {
          if (seg.start[k] == p) {
            clear = false;
            note(false, tag + ": stationary move coincides with a static point");
          }
          continue;
        }
        if (const auto s = collision_parameter(p, q, seg.start[k]))
          note(clear = false, tag + ": collision with " + point_str(seg.start[k]) +
                                  " at s=" + s->str());
      }
      if (clear) note(true, tag + ": no collision parameter exists on the motion line");
      bool sampled = true;
      for (const auto& s : sample_values())
        if (!pairwise_distinct(seg.configuration(s))) sampled = false;
      note(sampled, tag + ": sampled configurations pairwise distinct");
    }
  }

  void check_gluing(const Gluing& g) {
    const std::string tag = "gluing " + std::to_string(g.after) + "/" +
                            std::to_string(g.after + 1);
    if (g.after + 1 >= cert.segments.size()) {
      note(false, tag + ": index out of range");
      return;
    }
    const Segment& left = cert.segments[g.after];
    const Segment& right = cert.segments[g.after + 1];
    const bool li = left.kind == Segment::Kind::ideal_family;
    const bool ri = right.kind == Segment::Kind::ideal_family;

    switch (g.kind) {
      case Gluing::Kind::ideal_ideal: {
        if (!li || !ri) {
          note(false, tag + ": evidence kind does not match the segment kinds");
          return;
        }
        const Ideal lhs = left.fiber(Rational(1));
        const Ideal rhs = right.fiber(Rational(0));
        note(ideal_equals(lhs, rhs), tag + ": shared ideal fiber (reduced bases agree)");
        if (g.shared_ideal)
          note(ideal_equals(lhs, *g.shared_ideal), tag + ": recorded endpoint matches");
        break;
      }
      case Gluing::Kind::ideal_points:
      case Gluing::Kind::points_ideal: {
        const bool left_ideal = g.kind == Gluing::Kind::ideal_points;
        if (left_ideal != li || left_ideal == ri) {
          note(false, tag + ": evidence kind does not match the segment kinds");
          return;
        }
        const Ideal ideal = left_ideal ? left.fiber(Rational(1)) : right.fiber(Rational(0));
        const PointConfig& pts = left_ideal ? right.start : left.end;
        if (g.shared_points)
          note(config_set_equal(*g.shared_points, pts), tag + ": recorded endpoint matches");
        check_ideal_points(ideal, pts, tag);
        break;
      }
      case Gluing::Kind::points_points: {
        if (li || ri) {
          note(false, tag + ": evidence kind does not match the segment kinds");
          return;
        }
        note(config_set_equal(left.end, right.start), tag + ": configurations agree as sets");
        if (g.shared_points)
          note(config_set_equal(*g.shared_points, right.start),
               tag + ": recorded endpoint matches");
        break;
      }
    }
  }

  ChainReport run() {
    note(cert.gluings.size() + 1 == cert.segments.size() ||
             (cert.segments.empty() && cert.gluings.empty()),
         "certificate structure: one gluing per consecutive pair");

    if (cert.segments.empty()) {
      note(ideal_equals(cert.source, cert.target), "empty chain: source equals target");
    } else {
      check_endpoint(cert.segments.front(), true, cert.source, "source endpoint");
      for (std::size_t i = 0; i < cert.segments.size(); ++i) check_segment(i, cert.segments[i]);
      for (const auto& g : cert.gluings) check_gluing(g);
      check_endpoint(cert.segments.back(), false, cert.target, "target endpoint");
    }
    report.ok = report.failures.empty();
    return report;
  }
};

}  // namespace

ChainReport verify_chain(const ChainCertificate& cert, int samples_per_segment) {
  if (samples_per_segment < 1) throw Error("verify_chain: samples must be positive");
  Verifier v{cert, samples_per_segment, {}};
  return v.run();
}

LimitFamily limit_of_family(const Segment& seg, const WeightVector& w) {
  if (seg.kind != Segment::Kind::ideal_family)
    throw Error("limit_of_family: ideal-family segment required");
  if (w.size() != seg.nvars) throw Error("limit_of_family: weight arity mismatch");
  if (!w.all_positive()) throw Error("limit_of_family: weights must be positive");

  std::vector<FFPoly> gens;
  for (const auto& g : seg.family) gens.push_back(FFPoly::from_parameter_polynomial(g));
  const MonomialOrder ord = MonomialOrder::weighted(w);
  const std::vector<FFPoly> G = groebner_basis_ff(gens, ord);
  if (G.empty()) throw Error("limit_of_family: zero ideal as generic fiber");

  // Generic-fiber staircase from the leading monomials.
  std::vector<Polynomial> lt;
  for (const auto& g : G) lt.push_back(Polynomial::from_monomial(g.leading_term(ord).mono));
  const Staircase st = staircase(GroebnerBasis(ord, seg.nvars, std::move(lt)));
  if (!st.finite) throw Error("limit_of_family: generic fiber is not zero-dimensional");
  if (st.colength != seg.degree)
    throw Error("limit_of_family: generic fiber has colength " + std::to_string(st.colength) +
                ", segment declares " + std::to_string(seg.degree));

  std::set<Rational> exceptional;
  Segment out;
  out.kind = Segment::Kind::ideal_family;
  out.nvars = seg.nvars;
  out.degree = seg.degree;
  for (const auto& g : G) {
    for (const auto& root : g.leading_term(ord).coeff.rational_roots())
      exceptional.insert(root);
    const FFPoly form = g.initial_form_max(w);
    const UPoly content = form.content();
    if (content.degree() > 0)
      for (const auto& root : content.rational_roots()) exceptional.insert(root);
    out.family.push_back(form.normalized(ord).to_parameter_polynomial());
  }
  return LimitFamily{std::move(out), {exceptional.begin(), exceptional.end()}};
}

namespace {

nlohmann::json points_to_json(const PointConfig& pts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : pts) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : p) row.push_back(x.str());
    arr.push_back(std::move(row));
  }
  return arr;
}

PointConfig points_from_json(const nlohmann::json& arr) {
  PointConfig pts;
  for (const auto& row : arr) {
    std::vector<Rational> p;
    for (const auto& x : row) p.push_back(Rational::from_string(x.get<std::string>()));
    pts.push_back(std::move(p));
  }
  return pts;
}

nlohmann::json ideal_to_json(const Ideal& ideal) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : ideal.generators) arr.push_back(to_string(g));
  return arr;
}

Ideal ideal_from_json(const nlohmann::json& arr, std::size_t nvars) {
  std::vector<Polynomial> gens;
  for (const auto& g : arr) gens.push_back(parse_polynomial(g.get<std::string>(), nvars));
  return Ideal(nvars, std::move(gens));
}

}  // namespace

nlohmann::json certificate_to_json(const ChainCertificate& cert) {
  nlohmann::json doc;
  doc["format"] = "gmflow-chain-certificate";
  doc["version"] = 1;
  doc["ambient"] = cert.nvars;
  doc["degree"] = cert.degree;
  doc["source"] = ideal_to_json(cert.source);
  doc["target"] = ideal_to_json(cert.target);

  nlohmann::json segs = nlohmann::json::array();
  for (const auto& seg : cert.segments) {
    nlohmann::json s;
    if (seg.kind == Segment::Kind::ideal_family) {
      s["kind"] = "ideal-family";
      nlohmann::json gens = nlohmann::json::array();
      for (const auto& g : seg.family) gens.push_back(to_string(g, true));
      s["generators"] = std::move(gens);
    } else {
      s["kind"] = "point-motion";
      s["start"] = points_to_json(seg.start);
      s["end"] = points_to_json(seg.end);
      s["moving"] = seg.moving_index;
    }
    segs.push_back(std::move(s));
  }
  doc["segments"] = std::move(segs);

  nlohmann::json glues = nlohmann::json::array();
  for (const auto& g : cert.gluings) {
    nlohmann::json e;
    e["after"] = g.after;
    switch (g.kind) {
      case Gluing::Kind::ideal_ideal: e["kind"] = "ideal-ideal"; break;
      case Gluing::Kind::ideal_points: e["kind"] = "ideal-points"; break;
      case Gluing::Kind::points_ideal: e["kind"] = "points-ideal"; break;
      case Gluing::Kind::points_points: e["kind"] = "points-points"; break;
    }
    if (g.shared_ideal) e["ideal"] = ideal_to_json(*g.shared_ideal);
    if (g.shared_points) e["points"] = points_to_json(*g.shared_points);
    glues.push_back(std::move(e));
  }
  doc["gluings"] = std::move(glues);
  return doc;
}

ChainCertificate certificate_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("format", "") != "gmflow-chain-certificate")
    throw Error("certificate: unrecognized document format");
  const std::size_t n = doc.at("ambient").get<std::size_t>();
  const long d = doc.at("degree").get<long>();

  std::vector<Segment> segments;
  for (const auto& s : doc.at("segments")) {
    Segment seg;
    seg.nvars = n;
    seg.degree = d;
    const std::string kind = s.at("kind").get<std::string>();
    if (kind == "ideal-family") {
      seg.kind = Segment::Kind::ideal_family;
      for (const auto& g : s.at("generators"))
        seg.family.push_back(parse_polynomial(g.get<std::string>(), n + 1, true));
    } else if (kind == "point-motion") {
      seg.kind = Segment::Kind::point_motion;
      seg.start = points_from_json(s.at("start"));
      seg.end = points_from_json(s.at("end"));
      seg.moving_index = s.at("moving").get<std::size_t>();
    } else {
      throw Error("certificate: unknown segment kind \"" + kind + "\"");
    }
    segments.push_back(std::move(seg));
  }

  std::vector<Gluing> gluings;
  for (const auto& e : doc.at("gluings")) {
    Gluing g;
    g.after = e.at("after").get<std::size_t>();
    const std::string kind = e.at("kind").get<std::string>();
    if (kind == "ideal-ideal")
      g.kind = Gluing::Kind::ideal_ideal;
    else if (kind == "ideal-points")
      g.kind = Gluing::Kind::ideal_points;
    else if (kind == "points-ideal")
      g.kind = Gluing::Kind::points_ideal;
    else if (kind == "points-points")
      g.kind = Gluing::Kind::points_points;
    else
      throw Error("certificate: unknown gluing kind \"" + kind + "\"");
    if (e.contains("ideal")) g.shared_ideal = ideal_from_json(e.at("ideal"), n);
    if (e.contains("points")) g.shared_points = points_from_json(e.at("points"));
    gluings.push_back(std::move(g));
  }

  return ChainCertificate{n, d, ideal_from_json(doc.at("source"), n),
                          ideal_from_json(doc.at("target"), n), std::move(segments),
                          std::move(gluings)};
}

}  // namespace gmflow
