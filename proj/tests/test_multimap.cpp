#include "doctest.h"
#include "test_support.hpp"

#include "shifted_poisson/multimap.hpp"

#include <memory>
#include <stdexcept>

using namespace shifted_poisson;

namespace {

/// a (deg -1) --d--> b (deg 0), d(a) = 2b, plus spectator s (deg 0).
GradedSpacePtr complex_ab() {
  return std::make_shared<const GradedSpace>(
      std::map<int, std::vector<std::string>>{{-1, {"a"}}, {0, {"b", "s"}}},
      std::vector<DifferentialEntry>{{"a", "b", Rational(2)}});
}

/// a (deg -1) --d--> b (deg 0), d(a) = b.
GradedSpacePtr complex_unit() {
  return std::make_shared<const GradedSpace>(
      std::map<int, std::vector<std::string>>{{-1, {"a"}}, {0, {"b"}}},
      std::vector<DifferentialEntry>{{"a", "b", Rational(1)}});
}

}  // namespace

TEST_SUITE("multimap") {

TEST_CASE("construction validates entries") {
  const auto space = complex_ab();
  const int a = space->id_of("a");
  const int b = space->id_of("b");
  // Word length mismatch.
  CHECK_THROWS_AS(MultiMap(space, 2, 1, 0, {{{a}, {b}, Rational(1)}}), std::invalid_argument);
  // Degree homogeneity: a -> a is degree 0, a -> b is degree 1.
  CHECK_THROWS_AS(
      MultiMap(space, 1, 1, 0, {{{a}, {a}, Rational(1)}, {{a}, {b}, Rational(1)}}),
      std::invalid_argument);
  // Out-of-range id.
  CHECK_THROWS_AS(MultiMap(space, 1, 1, 0, {{{7}, {b}, Rational(1)}}), std::invalid_argument);
  // Zero coefficients are dropped, duplicates accumulate.
  const MultiMap map(space, 1, 1, 0,
                     {{{a}, {a}, Rational(0)},
                      {{b}, {b}, Rational(2)},
                      {{b}, {b}, Rational(3)}});
  CHECK(map.entry_count() == 1);
  CHECK(map.coeff({b}, {b}) == Rational(5));
  CHECK(map.coeff({a}, {a}) == Rational(0));
}

TEST_CASE("arithmetic and equality") {
  const auto space = complex_ab();
  const int b = space->id_of("b");
  const int s = space->id_of("s");
  const MultiMap f(space, 1, 1, 0, {{{b}, {b}, Rational(1)}});
  const MultiMap g(space, 1, 1, 0, {{{b}, {s}, Rational(2)}});
  const MultiMap sum = f + g;
  CHECK(sum.coeff({b}, {b}) == Rational(1));
  CHECK(sum.coeff({b}, {s}) == Rational(2));
  CHECK((sum - f) == g);
  CHECK((f - f).is_zero());
  CHECK(f.scaled(Rational(-3)).coeff({b}, {b}) == Rational(-3));
  CHECK((-f).coeff({b}, {b}) == Rational(-1));
  // Shape mismatch is an error.
  const MultiMap wide(space, 2, 1, 0, {});
  CHECK_THROWS_AS(f + wide, std::invalid_argument);
  // Same coefficients on a different space object are not equal (identity matters).
  const auto space2 = complex_ab();
  const MultiMap f2(space2, 1, 1, 0, {{{b}, {b}, Rational(1)}});
  CHECK(f != f2);
}

TEST_CASE("word_degree sums slot degrees") {
  const auto space = complex_ab();
  const MultiMap probe(space, 2, 1, 1, {});
  CHECK(probe.word_degree({space->id_of("a"), space->id_of("b")}) == -1);
}

TEST_CASE("hom_differential: frozen hand computation, single slots") {
  // L(b) = a has degree -1 (odd), so dL = d∘L + L∘d:
  //   (d∘L)(b) = d(a) = 2b, (L∘d)(a) = L(2b) = 2a.
  const auto space = complex_ab();
  const int a = space->id_of("a");
  const int b = space->id_of("b");
  const MultiMap L(space, 1, 1, -1, {{{b}, {a}, Rational(1)}});
  const MultiMap dL = hom_differential(L);
  CHECK(dL.degree() == 0);
  CHECK(dL.arity_in() == 1);
  CHECK(dL.arity_out() == 1);
  CHECK(dL.coeff({b}, {b}) == Rational(2));
  CHECK(dL.coeff({a}, {a}) == Rational(2));
  CHECK(dL.entry_count() == 2);
}

TEST_CASE("hom_differential: frozen hand computation, input Koszul passing") {
  // L(a,b) = a has degree 0 (even), so dL = d∘L - L∘d with
  //   (L∘d)(x1,x2) = L(dx1,x2) + (-1)^{deg x1} L(x1,dx2).
  // Evaluations: dL(a,b) = d(a) = b; dL(a,a) = -[(-1)^{-1} L(a,b)] = a.
  const auto space = complex_unit();
  const int a = space->id_of("a");
  const int b = space->id_of("b");
  const MultiMap L(space, 2, 1, 0, {{{a, b}, {a}, Rational(1)}});
  const MultiMap dL = hom_differential(L);
  CHECK(dL.degree() == 1);
  CHECK(dL.coeff({a, b}, {b}) == Rational(1));
  CHECK(dL.coeff({a, a}, {a}) == Rational(1));
  CHECK(dL.entry_count() == 2);
}

TEST_CASE("hom_differential: frozen hand computation, output Koszul passing") {
  // M(a) = a⊗a has degree -1 (odd), so dM = d∘M + M∘d and d acts on the
  // output word as a derivation: d(a⊗a) = b⊗a + (-1)^{-1} a⊗b.
  const auto space = complex_unit();
  const int a = space->id_of("a");
  const int b = space->id_of("b");
  const MultiMap M(space, 1, 2, -1, {{{a}, {a, a}, Rational(1)}});
  const MultiMap dM = hom_differential(M);
  CHECK(dM.degree() == 0);
  CHECK(dM.coeff({a}, {b, a}) == Rational(1));
  CHECK(dM.coeff({a}, {a, b}) == Rational(-1));
  CHECK(dM.entry_count() == 2);
}

TEST_CASE("hom_differential squares to zero on randomized maps") {
  test_support::Rng rng(424242);
  int nontrivial = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto space = test_support::random_space(rng, 4, true);
    const int arity_in = test_support::rand_int(rng, 0, 3);
    const int arity_out = test_support::rand_int(rng, 0, 3);
    if (arity_in == 0 && arity_out == 0) continue;
    const MultiMap map = test_support::random_multimap(space, arity_in, arity_out, rng);
    const MultiMap first = hom_differential(map);
    CHECK(first.degree() == map.degree() + 1);
    const MultiMap second = hom_differential(first);
    INFO("map = " << test_support::map_string(map));
    CHECK(second.is_zero());
    if (!first.is_zero()) ++nontrivial;
  }
  // The sample must actually exercise the differential.
  CHECK(nontrivial >= 10);
}

}  // TEST_SUITE
