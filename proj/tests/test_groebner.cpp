#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace gmflow;
using testutil::ideal_of;
using testutil::Rng;

namespace {

// Exact Gaussian elimination rank.
std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<Monomial> monomials_up_to(std::size_t n, long maxdeg) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(n, 0);
  while (true) {
    Monomial m{std::vector<unsigned>(e)};
    if (m.total_degree() <= maxdeg) out.push_back(m);
    std::size_t j = 0;
    while (j < n) {
      if (++e[j] <= static_cast<unsigned>(maxdeg)) break;
      e[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return out;
}

// Quotient dimension up to the cutoff by exact linear algebra: monomials of
// degree <= D modulo the span of the shifts m*g with deg(m*g) <= D.  With a
// degree-compatible reduced basis this span is exactly the low-degree slice
// of the ideal.
long colength_by_linear_algebra(const GroebnerBasis& G) {
  long cutoff = 1;
  for (const auto& g : G.elements()) cutoff += g.total_degree();
  const auto monos = monomials_up_to(G.nvars(), cutoff);
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i].exponents()] = i;

  std::vector<std::vector<Rational>> rows;
  for (const auto& g : G.elements())
    for (const auto& m : monos) {
      if (m.total_degree() + g.total_degree() > cutoff) continue;
      std::vector<Rational> row(monos.size(), Rational(0));
      for (const auto& t : g.terms()) row[index.at((t.mono * m).exponents())] = t.coeff;
      rows.push_back(std::move(row));
    }
  return static_cast<long>(monos.size() - rank_of(std::move(rows)));
}

}  // namespace

TEST_CASE("reduced basis of (x - y^2, y^3) against the saturation oracle") {
  const Ideal I = ideal_of(2, {"x1 - x2^2", "x2^3"});
  const GroebnerBasis G = groebner_basis(I, MonomialOrder::grevlex());

  // Leading-monomial set {y^2, xy, x^2}.
  std::vector<std::string> lms;
  for (const auto& m : G.leading_monomials()) lms.push_back(to_string(m));
  CHECK(lms == std::vector<std::string>{"x2^2", "x1*x2", "x1^2"});

  const auto oracle = testutil::oracle_groebner(I.generators, MonomialOrder::grevlex());
  CHECK(G.elements() == oracle);
  CHECK(buchberger_criterion_holds(G));
}

TEST_CASE("principal and unit ideals") {
  const GroebnerBasis G1 = groebner_basis(ideal_of(1, {"x1"}), MonomialOrder::grevlex());
  CHECK(G1.elements() == std::vector<Polynomial>{testutil::parse("x1", 1)});

  const GroebnerBasis G2 = groebner_basis(ideal_of(1, {"x1 - 1", "x1"}), MonomialOrder::grevlex());
  REQUIRE(G2.elements().size() == 1);
  CHECK(G2.is_unit_ideal());
}

TEST_CASE("normal form examples") {
  const GroebnerBasis Gmono =
      groebner_basis(ideal_of(2, {"x1^2", "x1*x2", "x2^2"}), MonomialOrder::grevlex());
  CHECK(normal_form(testutil::parse("x2^3", 2), Gmono).is_zero());
  CHECK(normal_form(testutil::parse("x1 + x2", 2), Gmono) == testutil::parse("x1 + x2", 2));

  const GroebnerBasis G =
      groebner_basis(ideal_of(2, {"x1 - x2^2", "x2^3"}), MonomialOrder::grevlex());
  CHECK(normal_form(testutil::parse("x1 - x2^2", 2), G).is_zero());
}

TEST_CASE("staircase examples") {
  const Staircase s1 =
      staircase(groebner_basis(ideal_of(2, {"x1^2", "x1*x2", "x2^2"}), MonomialOrder::grevlex()));
  REQUIRE(s1.finite);
  CHECK(s1.colength == 3);
  std::vector<std::string> std1;
  for (const auto& m : s1.standard_monomials) std1.push_back(to_string(m));
  CHECK(std1 == std::vector<std::string>{"1", "x2", "x1"});

  const Staircase s2 =
      staircase(groebner_basis(ideal_of(2, {"x1", "x2^3"}), MonomialOrder::grevlex()));
  REQUIRE(s2.finite);
  CHECK(s2.colength == 3);
  std::vector<std::string> std2;
  for (const auto& m : s2.standard_monomials) std2.push_back(to_string(m));
  CHECK(std2 == std::vector<std::string>{"1", "x2", "x2^2"});

  const Staircase s3 = staircase(groebner_basis(ideal_of(2, {"x1"}), MonomialOrder::grevlex()));
  CHECK(!s3.finite);
  CHECK(s3.colength == -1);
  REQUIRE(s3.witness_variable.has_value());
  CHECK(*s3.witness_variable == 1);  // no pure power of x2
}

TEST_CASE("ideal equality") {
  CHECK(ideal_equals(ideal_of(2, {"x1^2", "x1*x2", "x2^2"}),
                     ideal_of(2, {"x2^2", "x1*x2", "x1^2"})));
  CHECK(!ideal_equals(ideal_of(2, {"x1 - x2^2", "x2^3"}),
                      ideal_of(2, {"x1^2", "x1*x2", "x2^2"})));
  CHECK(ideal_equals(ideal_of(1, {"x1 - 1", "x1"}), ideal_of(1, {"1"})));
}

TEST_CASE("initial ideal examples") {
  const Ideal I = ideal_of(2, {"x1 - x2^2", "x2^3"});
  const Ideal Z = ideal_of(2, {"x1^2", "x1*x2", "x2^2"});

  const Ideal in11 = initial_ideal(I, WeightVector::from_longs({1, 1}), Direction::max);
  CHECK(ideal_equals(in11, Z));

  // Monomial ideals are their own initial ideals.
  CHECK(ideal_equals(initial_ideal(Z, WeightVector::from_longs({2, 7}), Direction::max), Z));

  // Weights (3, 9), checked against the independent saturation oracle run
  // under the (3,9)-refined order.
  const WeightVector w39 = WeightVector::from_longs({3, 9});
  const Ideal in39 = initial_ideal(I, w39, Direction::max);
  CHECK(ideal_equals(in39, Z));
  const auto oracle = testutil::oracle_groebner(I.generators, MonomialOrder::weighted(w39));
  std::vector<Polynomial> oracle_forms;
  for (const auto& g : oracle) oracle_forms.push_back(g.initial_form(w39, true));
  CHECK(ideal_equals(in39, Ideal(2, oracle_forms)));
}

TEST_CASE("initial ideal in the min direction goes through homogenization") {
  const Ideal I = ideal_of(2, {"x1 - x2^2"});
  const Ideal lo = initial_ideal(I, WeightVector::from_longs({1, 1}), Direction::min);
  CHECK(ideal_equals(lo, ideal_of(2, {"x1"})));
  const Ideal hi = initial_ideal(I, WeightVector::from_longs({1, 1}), Direction::max);
  CHECK(ideal_equals(hi, ideal_of(2, {"x2^2"})));

  // min direction = the t -> infinity flow.  Scaling sends V(x - a*y^2, y^3)
  // to V(x - (a/t)*y^2, y^3), so the limit is V(x, y^3).
  const Ideal Sa = ideal_of(2, {"x1 - x2^2", "x2^3"});
  const Ideal out = initial_ideal(Sa, WeightVector::from_longs({1, 1}), Direction::min);
  CHECK(ideal_equals(out, ideal_of(2, {"x1", "x2^3"})));

  // A point away from the origin escapes affine space as t -> infinity:
  // the limit ideal is the unit ideal.
  const Ideal escape = initial_ideal(ideal_of(1, {"x1 - 1"}),
                                     WeightVector::from_longs({1}), Direction::min);
  CHECK(groebner_basis(escape, MonomialOrder::grevlex()).is_unit_ideal());

  // Idempotence on both routes.
  CHECK(ideal_equals(initial_ideal(out, WeightVector::from_longs({1, 1}), Direction::min), out));
}

TEST_CASE("initial ideal output is weight-homogeneous") {
  Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(testutil::rand_long(rng, 0, 1));
    const Ideal I = testutil::rand_zero_dim_ideal(rng, n);
    WeightVector w;
    for (std::size_t j = 0; j < n; ++j) w.w.emplace_back(testutil::rand_long(rng, 1, 5));
    const Ideal in = initial_ideal(I, w, Direction::max);
    for (const auto& g : in.generators) CHECK(g.is_weight_homogeneous(w));
  }
}

TEST_CASE("uniqueness of the reduced basis under permutation and rescaling") {
  Rng rng(4242);
  int done = 0;
  while (done < 100) {
    const std::size_t n = 1 + static_cast<std::size_t>(testutil::rand_long(rng, 0, 2));
    std::vector<Polynomial> gens;
    const int k = static_cast<int>(testutil::rand_long(rng, 1, 4));
    for (int i = 0; i < k; ++i) {
      Polynomial p = testutil::rand_polynomial(rng, n, 4, 4);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    const Ideal I(n, gens);
    const GroebnerBasis G = groebner_basis(I, MonomialOrder::grevlex());

    std::vector<Polynomial> shuffled(gens.rbegin(), gens.rend());
    for (auto& g : shuffled) g = g.scaled(testutil::rand_nonzero_rational(rng));
    const GroebnerBasis G2 = groebner_basis(Ideal(n, shuffled), MonomialOrder::grevlex());
    CHECK(G == G2);
    CHECK(buchberger_criterion_holds(G));
    ++done;
  }
}

TEST_CASE("normal form is independent of the divisor selection") {
  Rng rng(31415);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(testutil::rand_long(rng, 0, 2));
    const Ideal I = testutil::rand_zero_dim_ideal(rng, n);
    const GroebnerBasis G = groebner_basis(I, MonomialOrder::grevlex());
    const Polynomial f = testutil::rand_polynomial(rng, n, 6, 5);
    const Polynomial r0 = normal_form(f, G);
    for (int run = 0; run < 3; ++run) {
      const auto seed = rng();
      auto chooser = [seed, state = Rng(seed)](const std::vector<std::size_t>& c) mutable {
        return std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(state);
      };
      CHECK(normal_form(f, G, chooser) == r0);
    }
  }
}

TEST_CASE("staircase colength agrees with exact linear algebra") {
  Rng rng(2718);
  int done = 0;
  while (done < 40) {
    const std::size_t n = 1 + static_cast<std::size_t>(testutil::rand_long(rng, 0, 2));
    const Ideal I = testutil::rand_zero_dim_ideal(rng, n, 2);
    const GroebnerBasis G = groebner_basis(I, MonomialOrder::grevlex());
    const Staircase st = staircase(G);
    REQUIRE(st.finite);
    if (st.colength > 8) continue;
    CHECK(st.colength == colength_by_linear_algebra(G));
    ++done;
  }
  // And the worked examples.
  for (const auto& gens :
       {std::vector<std::string>{"x1^2", "x1*x2", "x2^2"}, std::vector<std::string>{"x1", "x2^3"},
        std::vector<std::string>{"x1 - x2^2", "x2^3"}}) {
    const GroebnerBasis G = groebner_basis(ideal_of(2, gens), MonomialOrder::grevlex());
    CHECK(staircase(G).colength == colength_by_linear_algebra(G));
  }
}

TEST_CASE("arity mismatches are rejected") {
  CHECK_THROWS_AS(ideal_equals(ideal_of(2, {"x1"}), ideal_of(3, {"x1"})), Error);
  const GroebnerBasis G = groebner_basis(ideal_of(2, {"x1"}), MonomialOrder::grevlex());
  CHECK_THROWS_AS(normal_form(testutil::parse("x1", 3), G), Error);
  CHECK_THROWS_AS(initial_ideal(ideal_of(2, {"x1"}), WeightVector::from_longs({1}), Direction::max),
                  Error);
}
