#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmflow/distraction.hpp"
#include "gmflow/torus.hpp"
#include "test_util.hpp"

using namespace gmflow;
using testutil::ideal_of;

namespace {

MonomialIdeal mono_ideal(std::size_t n, const std::vector<std::string>& gens) {
  return MonomialIdeal::from_ideal(ideal_of(n, gens));
}

std::vector<Rational> rats(const std::vector<long>& v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("minimal generators are recomputed") {
  const MonomialIdeal I = mono_ideal(2, {"x1^2", "x1^2*x2", "x1*x2", "x2^2", "x2^3"});
  std::vector<std::string> gens;
  for (const auto& m : I.minimal_generators()) gens.push_back(to_string(m));
  CHECK(gens == std::vector<std::string>{"x2^2", "x1*x2", "x1^2"});
  CHECK(I.colength() == 3);
  CHECK(I.max_exponent() == 2);
  CHECK_THROWS_AS(mono_ideal(2, {"x2^3"}), Error);              // not zero-dimensional
  CHECK_THROWS_AS(mono_ideal(2, {"x1 - x2", "x2^2"}), Error);   // not monomial
}

TEST_CASE("distraction ideal examples") {
  const MonomialIdeal Z = mono_ideal(2, {"x1^2", "x1*x2", "x2^2"});
  const Ideal J = distraction_ideal(Z, DistractionParams{rats({0, 1})});
  CHECK(ideal_equals(J, ideal_of(2, {"x1^2 - x1", "x1*x2", "x2^2 - x2"})));

  // All parameters zero recovers the monomial ideal.
  const Ideal J0 = distraction_ideal(Z, DistractionParams{rats({0, 0})});
  CHECK(ideal_equals(J0, Z.to_ideal()));

  const MonomialIdeal L = mono_ideal(2, {"x1", "x2^3"});
  const Ideal JL = distraction_ideal(L, DistractionParams{rats({0, 1, 2})});
  CHECK(ideal_equals(JL, ideal_of(2, {"x1", "x2^3 - 3*x2^2 + 2*x2"})));

  CHECK_THROWS_AS(distraction_ideal(L, DistractionParams{rats({0, 1})}), Error);
}

TEST_CASE("standard points") {
  const MonomialIdeal Z = mono_ideal(2, {"x1^2", "x1*x2", "x2^2"});
  const auto pz = standard_points(Z, DistractionParams{rats({0, 1})});
  CHECK(pz == std::vector<std::vector<Rational>>{rats({0, 0}), rats({0, 1}), rats({1, 0})});

  const MonomialIdeal L = mono_ideal(2, {"x1", "x2^3"});
  const auto pl = standard_points(L, DistractionParams{rats({0, 1, 2})});
  CHECK(pl == std::vector<std::vector<Rational>>{rats({0, 0}), rats({0, 1}), rats({0, 2})});

  const MonomialIdeal U = mono_ideal(1, {"x1^2"});
  const auto pu = standard_points(U, DistractionParams{rats({0, 1})});
  CHECK(pu == std::vector<std::vector<Rational>>{rats({0}), rats({1})});

  CHECK_THROWS_AS(standard_points(Z, DistractionParams{rats({0, 0})}), Error);
}

TEST_CASE("smoothing verification") {
  const SmoothingReport r1 =
      verify_smoothing(mono_ideal(2, {"x1^2", "x1*x2", "x2^2"}), DistractionParams{rats({0, 1})});
  CHECK(r1.ok);
  CHECK(r1.point_count == 3);
  CHECK(r1.computed_colength == 3);

  const SmoothingReport r2 =
      verify_smoothing(mono_ideal(2, {"x1", "x2^3"}), DistractionParams{rats({0, 1, 2})});
  CHECK(r2.ok);

  CHECK_THROWS_AS(
      verify_smoothing(mono_ideal(2, {"x1^2", "x1*x2", "x2^2"}), DistractionParams{rats({0, 0})}),
      Error);
}

TEST_CASE("staircase enumeration counts") {
  CHECK(testutil::enumerate_monomial_ideals(1, 6).size() == 6);
  CHECK(testutil::enumerate_monomial_ideals(2, 6).size() == 29);   // partitions of 1..6
  CHECK(testutil::enumerate_monomial_ideals(3, 6).size() == 95);   // plane partitions of 1..6
}

TEST_CASE("distraction theorem on every monomial ideal with n <= 3, d <= 6") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& gens : testutil::enumerate_monomial_ideals(n, 6)) {
      const MonomialIdeal I = MonomialIdeal::from_monomials(n, gens);
      const DistractionParams params = DistractionParams::standard(I.max_exponent());
      const Ideal J = distraction_ideal(I, params);
      const GroebnerBasis G = groebner_basis(J, MonomialOrder::grevlex());

      // Colength is preserved along the family.
      const Staircase st = staircase(G);
      REQUIRE(st.finite);
      CHECK(st.colength == I.colength());

      // The grevlex initial ideal is I itself.
      std::vector<Polynomial> lms;
      for (const auto& m : G.leading_monomials()) lms.push_back(Polynomial::from_monomial(m));
      CHECK(ideal_equals(Ideal(n, lms), I.to_ideal()));

      // The predicted points are distinct and satisfy every generator.
      const auto points = standard_points(I, params);
      CHECK(points.size() == static_cast<std::size_t>(I.colength()));
      for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t k = i + 1; k < points.size(); ++k) CHECK(points[i] != points[k]);
      for (const auto& g : J.generators)
        for (const auto& p : points) CHECK(g.evaluate(p).is_zero());

      // Degeneration consistency: the total-degree limit recovers I.
      WeightVector ones;
      for (std::size_t j = 0; j < n; ++j) ones.w.emplace_back(1);
      const Subscheme0D SJ = Subscheme0D::from_ideal(J);
      CHECK(ideal_equals(limit_subscheme(SJ, ones).ideal(), I.to_ideal()));
    }
  }
}

TEST_CASE("parameter homogeneity") {
  int checked = 0;
  for (const auto& gens : testutil::enumerate_monomial_ideals(2, 4)) {
    const MonomialIdeal I = MonomialIdeal::from_monomials(2, gens);
    const DistractionParams base = DistractionParams::standard(I.max_exponent());
    DistractionParams scaled;
    for (const auto& a : base.a) scaled.a.push_back(a * Rational(3, 2));
    const auto p0 = standard_points(I, base);
    const auto p1 = standard_points(I, scaled);
    REQUIRE(p0.size() == p1.size());
    for (std::size_t i = 0; i < p0.size(); ++i)
      for (std::size_t j = 0; j < p0[i].size(); ++j)
        CHECK(p1[i][j] == p0[i][j] * Rational(3, 2));
    CHECK(verify_smoothing(I, scaled).ok == verify_smoothing(I, base).ok);
    ++checked;
  }
  CHECK(checked == 11);  // partitions of 1..4
}
