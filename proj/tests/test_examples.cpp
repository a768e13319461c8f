#include "doctest.h"
#include "test_support.hpp"

#include "shifted_poisson/examples.hpp"
#include "shifted_poisson/linalg.hpp"
#include "shifted_poisson/linfty.hpp"

#include <memory>
#include <stdexcept>

using namespace shifted_poisson;

namespace {

Rational bracket_coeff(const LieNAlgebra& algebra, const std::string& a, const std::string& b,
                       const std::string& out) {
  const auto space = algebra.space();
  for (const auto& [id, c] : algebra.bracket2(space->id_of(a), space->id_of(b)))
    if (id == space->id_of(out)) return c;
  return Rational(0);
}

/// Direct sum of two copies of the 2-dim nonabelian algebra; has non-closed
/// 3-forms (unlike every builtin), so it exercises cocycle validation.
LieNAlgebra two_affine_lines() {
  const auto space = std::make_shared<const GradedSpace>(
      std::map<int, std::vector<std::string>>{{0, {"a1", "b1", "a2", "b2"}}});
  const int a1 = space->id_of("a1");
  const int b1 = space->id_of("b1");
  const int a2 = space->id_of("a2");
  const int b2 = space->id_of("b2");
  const MultiMap l2(space, 2, 1, 0,
                    {{{a1, b1}, {b1}, Rational(1)},
                     {{b1, a1}, {b1}, Rational(-1)},
                     {{a2, b2}, {b2}, Rational(1)},
                     {{b2, a2}, {b2}, Rational(-1)}});
  return LieNAlgebra(space, 1, {{2, l2}});
}

}  // namespace

TEST_SUITE("examples") {

TEST_CASE("sl2 structure constants in the (e, h, f) basis") {
  const auto sl2 = make_sl2();
  CHECK(sl2.space()->dim() == 3);
  CHECK(sl2.space()->min_degree() == 0);
  CHECK(bracket_coeff(sl2, "h", "e", "e") == Rational(2));
  CHECK(bracket_coeff(sl2, "h", "f", "f") == Rational(-2));
  CHECK(bracket_coeff(sl2, "e", "f", "h") == Rational(1));
  CHECK(bracket_coeff(sl2, "f", "e", "h") == Rational(-1));
  CHECK(check_linfty(sl2).zero());
}

TEST_CASE("gl(2) elementary-matrix brackets") {
  const auto gl2 = make_gl(2);
  CHECK(gl2.space()->dim() == 4);
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb.
  CHECK(bracket_coeff(gl2, "E11", "E12", "E12") == Rational(1));
  CHECK(bracket_coeff(gl2, "E12", "E21", "E11") == Rational(1));
  CHECK(bracket_coeff(gl2, "E12", "E21", "E22") == Rational(-1));
  CHECK(bracket_coeff(gl2, "E11", "E22", "E11") == Rational(0));
  CHECK(check_linfty(gl2).zero());
}

TEST_CASE("heisenberg and the 2-dim nonabelian algebra") {
  const auto heis = make_heisenberg();
  CHECK(bracket_coeff(heis, "x", "y", "z") == Rational(1));
  CHECK(bracket_coeff(heis, "x", "z", "z") == Rational(0));
  CHECK(check_linfty(heis).zero());

  const auto aff = make_2dim_nonabelian();
  CHECK(aff.space()->dim() == 2);
  CHECK(bracket_coeff(aff, "a", "b", "b") == Rational(1));
  CHECK(check_linfty(aff).zero());
}

TEST_CASE("shifted abelian spaces") {
  const auto one = make_abelian_shifted(1);
  CHECK(one.N() == 2);
  CHECK(one.space()->dim() == 1);
  CHECK(one.space()->degree_of(0) == -1);
  CHECK(one.space()->name_of(0) == "c");
  CHECK(one.brackets().empty());
  const auto two = make_abelian_shifted(2);
  CHECK(two.space()->dim() == 2);
  CHECK(two.space()->has_name("c1"));
  CHECK(two.space()->has_name("c2"));
}

TEST_CASE("Killing form of sl2 and its degeneracy on gl2") {
  const auto sl2 = make_sl2();
  const Matrix k = killing_form(sl2);
  // Basis order (e, h, f): K(e,f) = K(f,e) = 4, K(h,h) = 8.
  CHECK(k == Matrix{{Rational(0), Rational(0), Rational(4)},
                    {Rational(0), Rational(8), Rational(0)},
                    {Rational(4), Rational(0), Rational(0)}});
  CHECK(rank(killing_form(make_gl(2))) == 3);
}

TEST_CASE("Killing cocycle of sl2: K([x,y], z), totally antisymmetric and closed") {
  const auto sl2 = make_sl2();
  const MultiMap kappa = killing_cocycle(sl2);
  CHECK(kappa.arity_in() == 3);
  CHECK(kappa.arity_out() == 0);
  CHECK(kappa.degree() == 0);
  const auto space = sl2.space();
  const int e = space->id_of("e");
  const int h = space->id_of("h");
  const int f = space->id_of("f");
  // K([e,h], f) = K(-2e, f) = -8.
  CHECK(kappa.coeff({e, h, f}, {}) == Rational(-8));
  CHECK(kappa.coeff({h, e, f}, {}) == Rational(8));
  CHECK(kappa.coeff({e, e, f}, {}) == Rational(0));
  CHECK(is_projected(kappa, 0));
  CHECK_NOTHROW(make_string(sl2, kappa));
}

TEST_CASE("trace cocycle on gl(2)") {
  const auto gl2 = make_gl(2);
  const MultiMap tau = trace_cocycle_gl(gl2, 2);
  const auto space = gl2.space();
  // Tr(E11 [E12, E21]) = Tr(E11 (E11 - E22)) = 1.
  CHECK(tau.coeff({space->id_of("E11"), space->id_of("E12"), space->id_of("E21")}, {}) ==
        Rational(1));
  CHECK(is_projected(tau, 0));
  CHECK_NOTHROW(make_string(gl2, tau));
  CHECK_THROWS_AS(trace_cocycle_gl(make_sl2(), 2), std::invalid_argument);
}

TEST_CASE("string extension: layout and brackets") {
  const auto sl2 = make_sl2();
  const auto string = make_string(sl2, killing_cocycle(sl2));
  const auto space = string.algebra.space();
  CHECK(string.algebra.N() == 2);
  CHECK(space->dim() == 4);
  CHECK(space->degree_of(string.c_id) == -1);
  REQUIRE(string.h_ids.size() == 3);
  // The degree-0 copy keeps sl2's bracket; c is central.
  CHECK(bracket_coeff(string.algebra, "h", "e", "e") == Rational(2));
  CHECK(string.algebra.bracket2(string.c_id, string.h_ids[0]).empty());
  // l_3(x,y,z) = kappa(x,y,z) c.
  const MultiMap* l3 = string.algebra.bracket(3);
  REQUIRE(l3 != nullptr);
  const int e = space->id_of("e");
  const int h = space->id_of("h");
  const int f = space->id_of("f");
  CHECK(l3->coeff({e, h, f}, {string.c_id}) == Rational(-8));
  CHECK(check_linfty(string.algebra).zero());
}

TEST_CASE("string extension rejects malformed 3-forms") {
  const auto sl2 = make_sl2();
  const auto space = sl2.space();
  const int e = space->id_of("e");
  const int h = space->id_of("h");
  const int f = space->id_of("f");
  // Not antisymmetric.
  const MultiMap lopsided(space, 3, 0, 0, {{{e, h, f}, {}, Rational(1)}});
  CHECK_THROWS_AS(make_string(sl2, lopsided), std::invalid_argument);
  // Wrong shape.
  const MultiMap wrong_shape(space, 2, 0, 0, {});
  CHECK_THROWS_AS(make_string(sl2, wrong_shape), std::invalid_argument);

  // Antisymmetric but not closed: on aff1 ⊕ aff1 the dual 3-form of
  // (a1, b1, b2) has d-kappa(a1,b1,a2,b2) = kappa([a2,b2],a1,b1) != 0.
  const auto pair = two_affine_lines();
  const auto pspace = pair.space();
  const MultiMap open_form = project_symmetries(
      MultiMap(pspace, 3, 0, 0,
               {{{pspace->id_of("a1"), pspace->id_of("b1"), pspace->id_of("b2")},
                 {},
                 Rational(6)}}),
      0);
  REQUIRE(!open_form.is_zero());
  CHECK_THROWS_AS(make_string(pair, open_form), std::invalid_argument);
}

TEST_CASE("cotangent extension: layout and coadjoint brackets") {
  const auto sl2 = make_sl2();
  const auto cot = make_cotangent(sl2);
  const auto space = cot.algebra.space();
  CHECK(cot.algebra.N() == 2);
  CHECK(space->dim() == 6);
  REQUIRE(cot.theta_ids.size() == 3);
  REQUIRE(cot.x_ids.size() == 3);
  for (int id : cot.theta_ids) CHECK(space->degree_of(id) == -1);
  for (int id : cot.x_ids) CHECK(space->degree_of(id) == 0);
  CHECK(space->has_name("th_e"));
  // [x, theta^a] = ad*_x theta^a: [h, theta^e] = -2 theta^e.
  const auto sl2_space = sl2.space();
  const std::size_t ih = 1;  // (e, h, f) order
  CHECK(sl2_space->name_of(sl2_space->ids_at(0)[ih]) == "h");
  const auto bracket = cot.algebra.bracket2(cot.x_ids[ih], cot.theta_ids[0]);
  REQUIRE(bracket.size() == 1);
  CHECK(bracket[0].first == cot.theta_ids[0]);
  CHECK(bracket[0].second == Rational(-2));
  // Two degree -1 vectors bracket to zero; no ternary bracket.
  CHECK(cot.algebra.bracket2(cot.theta_ids[0], cot.theta_ids[1]).empty());
  CHECK(cot.algebra.bracket(3) == nullptr);
  CHECK(check_linfty(cot.algebra).zero());
}

TEST_CASE("builtin catalog: frozen names, all pass the homotopy Jacobi check") {
  const auto names = builtin_names();
  CHECK(names == std::vector<std::string>{"abelian1", "abelian2", "sl2", "gl2", "heisenberg",
                                          "aff1", "string-sl2", "string-gl2-trace",
                                          "cotangent-sl2", "cotangent-heisenberg"});
  for (const auto& name : names) CHECK_NOTHROW(builtin(name));
  CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);
}

}  // TEST_SUITE
