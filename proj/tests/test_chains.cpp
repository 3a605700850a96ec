#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmflow/chains.hpp"
#include "test_util.hpp"

using namespace gmflow;
using testutil::ideal_of;
using testutil::Rng;

namespace {

Subscheme0D scheme(std::size_t n, const std::vector<std::string>& gens) {
  return Subscheme0D::from_ideal(ideal_of(n, gens));
}

std::vector<Rational> rats(const std::vector<long>& v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Polynomial fam(const std::string& text, std::size_t n) {
  return parse_polynomial(text, n + 1, true);
}

long colength(const Ideal& ideal) {
  const Staircase st = staircase(groebner_basis(ideal, MonomialOrder::grevlex()));
  return st.finite ? st.colength : -1;
}

// Random zero-dimensional subscheme with colength exactly d.
Subscheme0D random_scheme(Rng& rng, std::size_t n, long d) {
  while (true) {
    const Ideal I = testutil::rand_zero_dim_ideal(rng, n, 3);
    if (colength(I) == d) return Subscheme0D::from_ideal(I);
  }
}

// One perturbed coefficient: the last term of the first multi-term family
// generator, else a coordinate of the first motion target.
ChainCertificate mutate(const ChainCertificate& cert) {
  ChainCertificate bad = cert;
  for (auto& seg : bad.segments) {
    if (seg.kind != Segment::Kind::ideal_family) continue;
    for (auto& g : seg.family) {
      if (g.term_count() < 2) continue;
      std::vector<Term> terms(g.terms().begin(), g.terms().end());
      terms.back().coeff += Rational(1);
      g = Polynomial::from_terms(g.nvars(), std::move(terms));
      return bad;
    }
  }
  for (auto& seg : bad.segments) {
    if (seg.kind != Segment::Kind::point_motion) continue;
    seg.end[seg.moving_index][1] += Rational(1);
    return bad;
  }
  throw Error("mutate: certificate has nothing to perturb");
}

}  // namespace

TEST_CASE("degeneration segment of the Remark subscheme") {
  const Subscheme0D S = scheme(2, {"x1 - x2^2", "x2^3"});
  const Segment seg = degeneration_segment(S, WeightVector::from_longs({1, 1}));
  REQUIRE(seg.kind == Segment::Kind::ideal_family);
  // Basis element y^2 - x picks up one power of s on the low-weight term.
  CHECK(std::count(seg.family.begin(), seg.family.end(), fam("x2^2 - x1*s", 2)) == 1);
  CHECK(ideal_equals(seg.fiber(Rational(1)), S.ideal()));
  CHECK(ideal_equals(seg.fiber(Rational(0)), ideal_of(2, {"x1^2", "x1*x2", "x2^2"})));
}

TEST_CASE("degeneration segment is constant on monomial ideals") {
  const Subscheme0D S = scheme(2, {"x1^2", "x1*x2", "x2^2"});
  const Segment seg = degeneration_segment(S, WeightVector::from_longs({3, 1}));
  for (const auto& g : seg.family) CHECK(g.degree_in(2) == 0);
  CHECK(ideal_equals(seg.fiber(Rational(1)), seg.fiber(Rational(0))));
}

TEST_CASE("degeneration segment in one variable") {
  const Subscheme0D S = scheme(1, {"x1 - 1"});
  const Segment seg = degeneration_segment(S, WeightVector::from_longs({1}));
  REQUIRE(seg.family.size() == 1);
  CHECK(seg.family[0] == fam("x1 - s", 1));
  CHECK(ideal_equals(seg.fiber(Rational(1)), ideal_of(1, {"x1 - 1"})));
  CHECK(ideal_equals(seg.fiber(Rational(0)), ideal_of(1, {"x1"})));
}

TEST_CASE("distraction segments") {
  const MonomialIdeal Z = MonomialIdeal::from_ideal(ideal_of(2, {"x1^2", "x1*x2", "x2^2"}));
  const Segment seg = distraction_segment(Z, DistractionParams{rats({0, 1})});
  CHECK(ideal_equals(seg.fiber(Rational(0)), Z.to_ideal()));
  CHECK(ideal_equals(seg.fiber(Rational(1)),
                     distraction_ideal(Z, DistractionParams{rats({0, 1})})));
  CHECK(std::count(seg.family.begin(), seg.family.end(), fam("x1^2 - x1*s", 2)) == 1);

  const MonomialIdeal L = MonomialIdeal::from_ideal(ideal_of(2, {"x1", "x2^3"}));
  const Segment segL = distraction_segment(L, DistractionParams{rats({0, 1, 2})});
  CHECK(std::count(segL.family.begin(), segL.family.end(),
                   fam("x2^3 - 3*x2^2*s + 2*x2*s^2", 2)) == 1);

  const MonomialIdeal U = MonomialIdeal::from_ideal(ideal_of(1, {"x1^3"}));
  const Segment segU = distraction_segment(U, DistractionParams{rats({0, 1, 2})});
  REQUIRE(segU.family.size() == 1);
  CHECK(segU.family[0] == fam("x1^3 - 3*x1^2*s + 2*x1*s^2", 1));
  CHECK_THROWS_AS(distraction_segment(Z, DistractionParams{rats({0, 0})}), Error);
}

TEST_CASE("motion segments: direct move") {
  const PointConfig P = {rats({0, 0}), rats({1, 0}), rats({0, 1})};
  const PointConfig Q = {rats({0, 0}), rats({1, 0}), rats({2, 0})};
  const auto moves = motion_segments(P, Q);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].start[moves[0].moving_index] == rats({0, 1}));
  CHECK(moves[0].end[moves[0].moving_index] == rats({2, 0}));
}

TEST_CASE("motion segments: identity and single point") {
  CHECK(motion_segments({rats({1, 2})}, {rats({1, 2})}).empty());
  const auto moves = motion_segments({rats({5, 7})}, {rats({0, 0})});
  REQUIRE(moves.size() == 1);
  CHECK_THROWS_AS(motion_segments({rats({1})}, {rats({2})}), Error);  // n = 1
  CHECK_THROWS_AS(motion_segments({}, {}), Error);                    // d = 0
}

TEST_CASE("motion segments: detour around a blocking point") {
  // Moving (0,0) -> (2,2) passes through the static point (1,1).
  const PointConfig P = {rats({0, 0}), rats({1, 1})};
  const PointConfig Q = {rats({2, 2}), rats({1, 1})};
  const auto moves = motion_segments(P, Q);
  REQUIRE(moves.size() == 2);
  // Both sub-moves stay clear of the static point: exact solve on the lines.
  for (const auto& seg : moves) {
    const auto& p = seg.start[seg.moving_index];
    const auto& q = seg.end[seg.moving_index];
    for (std::size_t k = 0; k < seg.start.size(); ++k) {
      if (k == seg.moving_index) continue;
      const auto& r = seg.start[k];
      // r on the line p + s(q-p) has a rational witness; check none exists.
      bool on_line = false;
      if (q[0] != p[0]) {
        const Rational s = (r[0] - p[0]) / (q[0] - p[0]);
        on_line = p[1] + s * (q[1] - p[1]) == r[1];
      } else {
        on_line = r[0] == p[0];
      }
      CHECK(!on_line);
    }
  }
  CHECK(moves[0].start == P);
  CHECK(moves[1].end[moves[1].moving_index] == rats({2, 2}));
}

TEST_CASE("pencil of univariate polynomials") {
  const Segment seg = hilb_line_segment(testutil::parse("x1^2", 1),
                                        testutil::parse("x1^2 - x1", 1));
  REQUIRE(seg.family.size() == 1);
  CHECK(seg.family[0] == fam("x1^2 - x1*s", 1));

  const Segment cubic = hilb_line_segment(
      testutil::parse("x1^3", 1),
      testutil::parse("x1^3 - 6*x1^2 + 11*x1 - 6", 1));  // (x-1)(x-2)(x-3)
  for (const auto& s : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)})
    CHECK(colength(cubic.fiber(s)) == 3);

  CHECK_THROWS_AS(hilb_line_segment(testutil::parse("x1^2", 1), testutil::parse("x1^3", 1)),
                  Error);
  CHECK_THROWS_AS(hilb_line_segment(testutil::parse("2*x1^2", 1), testutil::parse("x1^2", 1)),
                  Error);
}

TEST_CASE("connect and verify the worked pair") {
  const Subscheme0D S1 = scheme(2, {"x1 - x2^2", "x2^3"});
  const Subscheme0D S2 = scheme(2, {"x1", "x2^3"});
  const ChainCertificate cert = connect(S1, S2);
  CHECK(cert.segments.size() <= 10);  // 2 * (1 + 1 + d) with d = 3
  const ChainReport report = verify_chain(cert, 10);
  for (const auto& f : report.failures) MESSAGE(f);
  CHECK(report.ok);
  CHECK(report.failures.empty());

  // Round-trip through the serialized form and verify again.
  const ChainCertificate back = certificate_from_json(certificate_to_json(cert));
  CHECK(certificate_to_json(back) == certificate_to_json(cert));
  CHECK(verify_chain(back, 5).ok);
}

TEST_CASE("equal endpoints give the empty chain") {
  const Subscheme0D S = scheme(2, {"x1 - x2^2", "x2^3"});
  const ChainCertificate cert = connect(S, scheme(2, {"x2^3", "x1 - x2^2"}));
  CHECK(cert.segments.empty());
  CHECK(verify_chain(cert, 10).ok);
}

TEST_CASE("univariate connect uses a single pencil segment") {
  const Subscheme0D S1 = scheme(1, {"x1^3"});
  const Subscheme0D S2 = scheme(1, {"x1^3 - 6*x1^2 + 11*x1 - 6"});
  const ChainCertificate cert = connect(S1, S2);
  CHECK(cert.segments.size() == 1);
  CHECK(verify_chain(cert, 10).ok);
}

TEST_CASE("mutated certificates fail verification") {
  const ChainCertificate cert =
      connect(scheme(2, {"x1 - x2^2", "x2^3"}), scheme(2, {"x1", "x2^3"}));
  const ChainCertificate bad = mutate(cert);
  const ChainReport report = verify_chain(bad, 10);
  CHECK(!report.ok);
  CHECK(!report.failures.empty());
}

TEST_CASE("random pairs connect, verify, and mutate-fail") {
  Rng rng(808);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(testutil::rand_long(rng, 0, 1));
    const long d = testutil::rand_long(rng, 1, 4);
    const Subscheme0D S1 = random_scheme(rng, n, d);
    Subscheme0D S2 = random_scheme(rng, n, d);
    while (ideal_equals(S1.ideal(), S2.ideal())) S2 = random_scheme(rng, n, d);

    const ChainCertificate fwd = connect(S1, S2);
    const ChainCertificate bwd = connect(S2, S1);
    CHECK(verify_chain(fwd, 4).ok);
    CHECK(verify_chain(bwd, 4).ok);
    CHECK(fwd.segments.size() == bwd.segments.size());
    CHECK(!verify_chain(mutate(fwd), 4).ok);
  }
}

TEST_CASE("limit of the Remark family") {
  Segment seg;
  seg.kind = Segment::Kind::ideal_family;
  seg.nvars = 2;
  seg.degree = 3;
  seg.family = {fam("x1 - x2^2*s", 2), fam("x2^3", 2)};

  const WeightVector w = WeightVector::from_longs({1, 1});
  const LimitFamily lim = limit_of_family(seg, w);

  // Constant family (x^2, xy, y^2) and exceptional set {0}.
  CHECK(lim.exceptional == std::vector<Rational>{Rational(0)});
  const Ideal Z = ideal_of(2, {"x1^2", "x1*x2", "x2^2"});
  for (const auto& s : {Rational(2), Rational(1, 2), Rational(-7)})
    CHECK(ideal_equals(lim.family.fiber(s), Z));

  // Off Z the limit of the fiber matches the fiber of the limit.
  for (const auto& s : {Rational(1), Rational(3), Rational(-3, 5)}) {
    const Subscheme0D fiber = Subscheme0D::from_ideal(seg.fiber(s));
    CHECK(ideal_equals(limit_subscheme(fiber, w).ideal(), lim.family.fiber(s)));
  }

  // At the exceptional value the fiber is its own limit and differs.
  const Subscheme0D S0 = Subscheme0D::from_ideal(seg.fiber(Rational(0)));
  const Ideal at0 = limit_subscheme(S0, w).ideal();
  CHECK(ideal_equals(at0, ideal_of(2, {"x1", "x2^3"})));
  CHECK(!ideal_equals(at0, lim.family.fiber(Rational(0))));
}

TEST_CASE("limit of a constant monomial family") {
  Segment seg;
  seg.kind = Segment::Kind::ideal_family;
  seg.nvars = 2;
  seg.degree = 3;
  seg.family = {fam("x1^2", 2), fam("x1*x2", 2), fam("x2^2", 2)};
  const LimitFamily lim = limit_of_family(seg, WeightVector::from_longs({1, 1}));
  CHECK(lim.exceptional.empty());
  CHECK(ideal_equals(lim.family.fiber(Rational(5)), ideal_of(2, {"x1^2", "x1*x2", "x2^2"})));
}

TEST_CASE("limit of family commutes with specialization on degeneration segments") {
  Rng rng(606);
  for (int trial = 0; trial < 5; ++trial) {
    const Subscheme0D S = random_scheme(rng, 2, 3);
    WeightVector w;
    for (int j = 0; j < 2; ++j) w.w.emplace_back(testutil::rand_long(rng, 1, 3));
    const Segment seg = degeneration_segment(S, WeightVector::from_longs({2, 3}));
    const LimitFamily lim = limit_of_family(seg, w);
    int used = 0;
    for (long k = 1; used < 10; ++k) {
      const Rational s(k, 7);
      if (std::find(lim.exceptional.begin(), lim.exceptional.end(), s) !=
          lim.exceptional.end())
        continue;
      const Subscheme0D fiber = Subscheme0D::from_ideal(seg.fiber(s));
      CHECK(ideal_equals(limit_subscheme(fiber, w).ideal(), lim.family.fiber(s)));
      ++used;
    }
  }
}

TEST_CASE("limit family that varies with the parameter") {
  // Fiber at s: the two points (0,0) and (s, s^2).  Off s=0 the total-degree
  // limit is the s-dependent ideal (s*x - y, y^2); at s=0 the fiber collapses
  // to a double structure fixed by the action.
  Segment seg;
  seg.kind = Segment::Kind::ideal_family;
  seg.nvars = 2;
  seg.degree = 2;
  seg.family = {fam("x2 - x1*s", 2), fam("x1^2 - x1*s", 2)};

  const WeightVector w = WeightVector::from_longs({1, 1});
  const LimitFamily lim = limit_of_family(seg, w);
  CHECK(lim.exceptional == std::vector<Rational>{Rational(0)});
  for (const auto& s : {Rational(1), Rational(-2), Rational(5, 3)}) {
    std::vector<Polynomial> expected = {
        parse_polynomial("x1", 2).scaled(s) - parse_polynomial("x2", 2),
        parse_polynomial("x2^2", 2)};
    CHECK(ideal_equals(lim.family.fiber(s), Ideal(2, expected)));
    const Subscheme0D fiber = Subscheme0D::from_ideal(seg.fiber(s));
    CHECK(ideal_equals(limit_subscheme(fiber, w).ideal(), lim.family.fiber(s)));
  }
  // The s=0 fiber of the limit family degenerates (colength drops), which is
  // exactly why 0 is excluded.
  CHECK(colength(lim.family.fiber(Rational(0))) != 2);
}

TEST_CASE("limit of a distraction family") {
  const MonomialIdeal Z = MonomialIdeal::from_ideal(ideal_of(2, {"x1^2", "x1*x2", "x2^2"}));
  const Segment seg = distraction_segment(Z, DistractionParams{rats({0, 1})});
  const WeightVector w = WeightVector::from_longs({1, 1});
  const LimitFamily lim = limit_of_family(seg, w);
  for (const auto& z : lim.exceptional) CHECK(z == Rational(0));
  for (const auto& s : {Rational(1), Rational(5), Rational(-1, 3)}) {
    const Subscheme0D fiber = Subscheme0D::from_ideal(seg.fiber(s));
    CHECK(ideal_equals(lim.family.fiber(s), limit_subscheme(fiber, w).ideal()));
    CHECK(ideal_equals(lim.family.fiber(s), Z.to_ideal()));
  }
}

TEST_CASE("motion through collinear configurations") {
  // Statics sit on both coordinate lines through the target, forcing the
  // varying-direction waypoint fallback.
  const PointConfig P = {rats({0, 0}), rats({1, 3}), rats({0, 2})};
  const PointConfig Q = {rats({0, 3}), rats({1, 3}), rats({0, 2})};
  const auto moves = motion_segments(P, Q);
  CHECK(moves.size() == 2);
  PointConfig current = P;
  for (const auto& seg : moves) {
    CHECK(seg.start == current);
    const auto& p = seg.start[seg.moving_index];
    const auto& q = seg.end[seg.moving_index];
    for (std::size_t k = 0; k < seg.start.size(); ++k) {
      if (k == seg.moving_index) continue;
      const auto& r = seg.start[k];
      // No rational s with p + s(q-p) = r.
      bool on_line = true;
      Rational s;
      bool pinned = false;
      for (std::size_t j = 0; j < 2 && on_line; ++j) {
        const Rational delta = q[j] - p[j];
        if (delta.is_zero()) {
          if (r[j] != p[j]) on_line = false;
        } else if (!pinned) {
          s = (r[j] - p[j]) / delta;
          pinned = true;
        } else if (p[j] + s * delta != r[j]) {
          on_line = false;
        }
      }
      CHECK(!on_line);
    }
    current = seg.end;
  }
  std::vector<std::vector<Rational>> want = Q, got = current;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  CHECK(got == want);
}

TEST_CASE("verify rejects malformed gluing kinds") {
  const ChainCertificate cert =
      connect(scheme(2, {"x1 - x2^2", "x2^3"}), scheme(2, {"x1", "x2^3"}));
  ChainCertificate bad = cert;
  REQUIRE(!bad.gluings.empty());
  bad.gluings[0].kind = Gluing::Kind::points_points;
  CHECK(!verify_chain(bad, 3).ok);
}
