#include "doctest.h"
#include "test_support.hpp"

#include "shifted_poisson/examples.hpp"
#include "shifted_poisson/linfty.hpp"

#include <memory>
#include <stdexcept>

using namespace shifted_poisson;

namespace {

/// sl2 with the single structure constant [h,e] = 2e replaced by [h,e] = 3e.
LieNAlgebra perturbed_sl2() {
  const auto sl2 = make_sl2();
  const auto space = sl2.space();
  const int e = space->id_of("e");
  const int h = space->id_of("h");
  const int f = space->id_of("f");
  const MultiMap l2(space, 2, 1, 0,
                    {{{h, e}, {e}, Rational(3)},
                     {{e, h}, {e}, Rational(-3)},
                     {{h, f}, {f}, Rational(-2)},
                     {{f, h}, {f}, Rational(2)},
                     {{e, f}, {h}, Rational(1)},
                     {{f, e}, {h}, Rational(-1)}});
  return LieNAlgebra(space, 1, {{2, l2}});
}

}  // namespace

TEST_SUITE("linfty") {

TEST_CASE("constructor validates the bracket family") {
  const auto sl2 = make_sl2();
  const auto space = sl2.space();
  const int e = space->id_of("e");
  const int h = space->id_of("h");
  // Wrong arity shape.
  CHECK_THROWS_AS(LieNAlgebra(space, 1, {{2, MultiMap(space, 1, 1, 0, {})}}),
                  std::invalid_argument);
  // Wrong degree.
  CHECK_THROWS_AS(LieNAlgebra(space, 1, {{2, MultiMap(space, 2, 1, 1, {})}}),
                  std::invalid_argument);
  // Not antisymmetric.
  CHECK_THROWS_AS(
      LieNAlgebra(space, 1, {{2, MultiMap(space, 2, 1, 0, {{{h, e}, {e}, Rational(1)}})}}),
      std::invalid_argument);
  // Arity above N+1 must vanish: a nonzero ternary bracket on a Lie 1-algebra.
  const MultiMap l3 = project_symmetries(
      MultiMap(space, 3, 1, -1, {}), 0);
  CHECK_NOTHROW(LieNAlgebra(space, 1, {{3, l3}}));  // zero is fine
  // Space outside [-N+1, 0].
  const auto shifted = std::make_shared<const GradedSpace>(
      std::map<int, std::vector<std::string>>{{-1, {"c"}}});
  CHECK_THROWS_AS(LieNAlgebra(shifted, 1, {}), std::invalid_argument);
  CHECK_NOTHROW(LieNAlgebra(shifted, 2, {}));
}

TEST_CASE("bracket lookup and bracket2 on sl2") {
  const auto sl2 = make_sl2();
  const auto space = sl2.space();
  CHECK(sl2.N() == 1);
  CHECK(sl2.bracket(2) != nullptr);
  CHECK(sl2.bracket(3) == nullptr);
  const int e = space->id_of("e");
  const int h = space->id_of("h");
  const auto he = sl2.bracket2(h, e);
  REQUIRE(he.size() == 1);
  CHECK(he[0].first == e);
  CHECK(he[0].second == Rational(2));
  CHECK(sl2.bracket2(e, e).empty());
}

TEST_CASE("weight_one_family: alternating signs on the brackets") {
  const auto sl2 = make_sl2();
  const auto family = weight_one_family(sl2, 0);
  REQUIRE(family.has_component(1, 2));
  // pi^(1,2) = -l_2.
  CHECK(*family.component(1, 2) == sl2.bracket(2)->scaled(Rational(-1)));
  CHECK(!family.has_component(1, 1));
  CHECK(!family.has_component(1, 3));

  // A string algebra has a ternary bracket: pi^(1,3) = +l_3.
  const auto base = make_sl2();
  const auto string = make_string(base, killing_cocycle(base));
  const auto family3 = weight_one_family(string.algebra, 0);
  REQUIRE(family3.has_component(1, 3));
  CHECK(*family3.component(1, 3) == *string.algebra.bracket(3));
}

TEST_CASE("check_linfty vanishes on every built-in algebra") {
  for (const auto& name : builtin_names()) {
    const auto algebra = builtin(name);
    INFO("builtin = " << name);
    CHECK(check_linfty(algebra).zero());
  }
}

TEST_CASE("a single perturbed structure constant breaks the Jacobi row (1,3)") {
  const auto broken = perturbed_sl2();
  const auto report = check_linfty(broken);
  REQUIRE(!report.zero());
  auto it = report.rows.find({1, 3});
  REQUIRE(it != report.rows.end());
  const auto space = broken.space();
  const int e = space->id_of("e");
  const int h = space->id_of("h");
  const int f = space->id_of("f");
  // The Jacobiator [[e,h],f] + [[h,f],e] + [[f,e],h] = -h for [h,e] = 3e;
  // the residual row carries it with coefficient of magnitude 1.
  const Rational c = it->second.coeff({e, h, f}, {h});
  CHECK(rational_abs(c) == Rational(1));
  // Six antisymmetric arrangements of (e,h,f), all mapping to h.
  CHECK(it->second.entry_count() == 6);
  // The report's worst entry lives in that row.
  const auto worst = report.worst_entry();
  REQUIRE(worst.has_value());
  CHECK(worst->m == 1);
  CHECK(worst->l == 3);
}

TEST_CASE("ternary square auto-vanishing holds for all built-in Lie 2-algebras") {
  for (const auto& name : builtin_names()) {
    const auto algebra = builtin(name);
    if (algebra.N() != 2) continue;
    INFO("builtin = " << name);
    CHECK(ternary_square_autovanish(algebra));
  }
}

TEST_CASE("adjoint and coadjoint actions on sl2") {
  const auto sl2 = make_sl2();
  const auto space = sl2.space();
  const int e = space->id_of("e");
  const int h = space->id_of("h");
  const int f = space->id_of("f");
  // x = h over the degree-0 basis (e, h, f).
  Vector x(3, Rational(0));
  const auto ids = space->ids_at(0);
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == h) x[i] = 1;
  const MultiMap ad = adjoint_action(sl2, x);
  CHECK(ad.coeff({e}, {e}) == Rational(2));
  CHECK(ad.coeff({f}, {f}) == Rational(-2));
  CHECK(ad.coeff({h}, {h}) == Rational(0));
  const MultiMap coad = coadjoint_action(sl2, x);
  // <ad*_x theta^a, e_b> + <theta^a, ad_x e_b> = 0 for all a, b.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Rational lhs = coad.coeff({ids[static_cast<std::size_t>(a)]},
                                      {ids[static_cast<std::size_t>(b)]});
      const Rational rhs = ad.coeff({ids[static_cast<std::size_t>(b)]},
                                    {ids[static_cast<std::size_t>(a)]});
      CHECK(lhs + rhs == 0);
    }
}

TEST_CASE("coefficient vectors must match the degree-0 dimension") {
  const auto sl2 = make_sl2();
  CHECK_THROWS_AS(adjoint_action(sl2, Vector{Rational(1)}), std::invalid_argument);
}

}  // TEST_SUITE
