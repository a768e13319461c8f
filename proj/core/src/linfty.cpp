#include "shifted_poisson/linfty.hpp"

#include <stdexcept>
#include <string>

namespace shifted_poisson {

LieNAlgebra::LieNAlgebra(GradedSpacePtr space, int N, std::map<int, MultiMap> brackets)
    : m_space(std::move(space)), m_N(N), m_brackets(std::move(brackets)) {
  if (!m_space) throw std::invalid_argument("Lie N-algebra needs a space");
  if (m_N < 1) throw std::invalid_argument("N must be >= 1");
  if (m_space->min_degree() < -m_N + 1 || m_space->max_degree() > 0)
    throw std::invalid_argument("space of a Lie " + std::to_string(m_N) +
                                "-algebra must be concentrated in degrees [" +
                                std::to_string(-m_N + 1) + ", 0]");
  for (const auto& [arity, bracket] : m_brackets) {
    if (arity < 2) throw std::invalid_argument("bracket arity must be >= 2");
    if (bracket.space().get() != m_space.get())
      throw std::invalid_argument("bracket lives on a different space");
    if (bracket.arity_in() != arity || bracket.arity_out() != 1)
      throw std::invalid_argument("bracket of arity " + std::to_string(arity) +
                                  " must be a (1," + std::to_string(arity) + ") map");
    if (bracket.degree() != 2 - arity)
      throw std::invalid_argument("bracket of arity " + std::to_string(arity) +
                                  " must have degree " + std::to_string(2 - arity));
    if (arity > m_N + 1 && !bracket.is_zero())
      throw std::invalid_argument("bracket of arity " + std::to_string(arity) +
                                  " must vanish on a Lie " + std::to_string(m_N) + "-algebra");
    // Input antisymmetry; the single output imposes no output symmetry.
    if (!is_projected(bracket, 0))
      throw std::invalid_argument("bracket of arity " + std::to_string(arity) +
                                  " is not antisymmetric");
  }
}

const MultiMap* LieNAlgebra::bracket(int arity) const {
  auto it = m_brackets.find(arity);
  return it == m_brackets.end() ? nullptr : &it->second;
}

std::vector<std::pair<int, Rational>> LieNAlgebra::bracket2(int a, int b) const {
  std::vector<std::pair<int, Rational>> value;
  const MultiMap* l2 = bracket(2);
  if (!l2) return value;
  for (int out = 0; out < m_space->dim(); ++out) {
    Rational c = l2->coeff({a, b}, {out});
    if (c != 0) value.emplace_back(out, c);
  }
  return value;
}

PolyvectorFamily weight_one_family(const LieNAlgebra& algebra, int shift) {
  PolyvectorFamily family(algebra.space(), shift);
  for (const auto& [arity, bracket] : algebra.brackets()) {
    if (bracket.is_zero()) continue;
    family.set_component(bracket.scaled(Rational(((arity - 1) & 1) ? -1 : 1)));
  }
  return family;
}

ResidualReport check_linfty(const LieNAlgebra& algebra) {
  // The weight-one residual rows carry no dependence on the shift.
  return mc_residual(weight_one_family(algebra, 0), 1);
}

bool ternary_square_autovanish(const LieNAlgebra& algebra) {
  const MultiMap* l3 = algebra.bracket(3);
  if (!l3 || l3->is_zero()) return true;
  return compose_tilde(*l3, *l3, 0).is_zero();
}

namespace {

Vector check_degree_zero_coefficients(const LieNAlgebra& algebra, const Vector& x) {
  const auto ids = algebra.space()->ids_at(0);
  if (x.size() != ids.size())
    throw std::invalid_argument("coefficient vector length does not match the degree-0 dimension");
  return x;
}

}  // namespace

MultiMap adjoint_action(const LieNAlgebra& algebra, const Vector& x) {
  check_degree_zero_coefficients(algebra, x);
  const auto ids = algebra.space()->ids_at(0);
  std::map<int, std::size_t> position;
  for (std::size_t i = 0; i < ids.size(); ++i) position[ids[i]] = i;

  std::vector<MapEntry> entries;
  if (const MultiMap* l2 = algebra.bracket(2)) {
    for (const auto& [key, coeff] : l2->coeffs()) {
      auto it = position.find(key.in[0]);
      if (it == position.end()) continue;
      const Rational& xc = x[it->second];
      if (xc == 0) continue;
      entries.emplace_back(IndexWord{key.in[1]}, key.out, xc * coeff);
    }
  }
  return MultiMap(algebra.space(), 1, 1, 0, entries);
}

MultiMap coadjoint_action(const LieNAlgebra& algebra, const Vector& x) {
  check_degree_zero_coefficients(algebra, x);
  const auto ids = algebra.space()->ids_at(0);
  std::map<int, std::size_t> position;
  for (std::size_t i = 0; i < ids.size(); ++i) position[ids[i]] = i;

  // ad*_x theta^a = -sum_b <theta^a, [x, e_b]> theta^b: the negative transpose
  // of ad_x restricted to the degree-0 block.
  std::vector<MapEntry> entries;
  if (const MultiMap* l2 = algebra.bracket(2)) {
    for (const auto& [key, coeff] : l2->coeffs()) {
      auto it = position.find(key.in[0]);
      if (it == position.end()) continue;
      if (!position.count(key.in[1]) || !position.count(key.out[0])) continue;
      const Rational& xc = x[it->second];
      if (xc == 0) continue;
      entries.emplace_back(IndexWord{key.out[0]}, IndexWord{key.in[1]}, -(xc * coeff));
    }
  }
  return MultiMap(algebra.space(), 1, 1, 0, entries);
}

}  // namespace shifted_poisson
