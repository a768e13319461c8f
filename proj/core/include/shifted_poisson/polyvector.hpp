#pragma once

#include "shifted_poisson/multimap.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace shifted_poisson {

/// Degree of an (m,l)-map viewed as an n-shifted polyvector of weight m:
/// |M| + m*n + l - n - 1.
int shifted_degree(const MultiMap& map, int n);

/// Projection onto maps that are antisymmetric in their inputs (sign = the
/// permutation signature times the Koszul sign) and n-symmetric in their
/// outputs (sign = signature^n times the Koszul sign). Idempotent; commutes
/// with hom_differential.
MultiMap project_symmetries(const MultiMap& map, int n);

/// True iff the map is fixed by project_symmetries.
bool is_projected(const MultiMap& map, int n);

/// Composition of an (m1,l1)-map L with an (m2,l2)-map Lp obtained by plugging
/// the first output of Lp into the last input of L and shuffle-summing the
/// remaining inputs and outputs with their Koszul/shuffle signs; the result is
/// an (m1+m2-1, l1+l2-1)-map of degree |L|+|Lp|, re-projected onto the
/// symmetry-reduced storage. Structurally zero when L has no inputs or Lp has
/// no outputs. Throws std::invalid_argument if the spaces differ or a result
/// arity would be negative.
MultiMap compose_tilde(const MultiMap& L, const MultiMap& Lp, int n);

/// Graded bracket {P,Q} = P∘̃Q - (-1)^{pq} Q∘̃P with p,q the shifted degrees.
MultiMap schouten_bracket(const MultiMap& P, const MultiMap& Q, int n);

/// Family of symmetry-projected (m,l)-components of a single n-shifted
/// polyvector of total shifted degree 2, indexed by (weight m, inputs l).
/// Component (m,l) must have degree (1-m)n + 2 - l.
class PolyvectorFamily {
 public:
  PolyvectorFamily(GradedSpacePtr space, int shift);

  int shift() const { return m_shift; }
  const GradedSpacePtr& space() const { return m_space; }

  /// Installs (or replaces) the component of shape (arity_out, arity_in).
  /// Throws std::invalid_argument if the space differs, the degree is not
  /// (1-m)n+2-l, or the map is not symmetry-projected.
  void set_component(const MultiMap& component);

  bool has_component(int m, int l) const;
  /// nullptr when absent.
  const MultiMap* component(int m, int l) const;
  const std::map<std::pair<int, int>, MultiMap>& components() const { return m_components; }

  /// Largest weight among installed components (0 when empty).
  int max_weight() const;
  /// Largest input arity among installed components (0 when empty).
  int max_inputs() const;

 private:
  GradedSpacePtr m_space;
  int m_shift;
  std::map<std::pair<int, int>, MultiMap> m_components;
};

/// One residual coefficient, addressed by its row and tensor multi-index.
struct ResidualEntry {
  int m = 0;
  int l = 0;
  IndexWord in;
  IndexWord out;
  Rational coeff;
};

/// Outcome of a Maurer-Cartan residual evaluation: the nonzero residual rows.
class ResidualReport {
 public:
  std::map<std::pair<int, int>, MultiMap> rows;

  bool zero() const { return rows.empty(); }

  /// The largest-magnitude residual coefficient (first in row/key order among
  /// ties); nullopt when the residual vanishes.
  std::optional<ResidualEntry> worst_entry() const;
};

/// Evaluates the Maurer-Cartan residual rows R^(m,l) of the family:
///   R^(m,l) = (-1)^{(m-1)n+l-1} ∂pi^(m,l)
///           + sum over m1+m2-1=m, l1+l2-1=l of compose_tilde(pi^(m1,l1), pi^(m2,l2), n),
/// for 1 <= m <= weight_cap and 0 <= l <= 2*max_inputs-1. The family is a
/// Maurer-Cartan element iff all rows vanish. Throws std::invalid_argument if a
/// component has weight above weight_cap (the truncation would silently drop
/// its rows).
ResidualReport mc_residual(const PolyvectorFamily& family, int weight_cap);

/// Shape of a potential higher component: weight m, inputs l, forced degree.
struct ComponentShape {
  int m = 0;
  int l = 0;
  int degree = 0;
  friend bool operator==(const ComponentShape& a, const ComponentShape& b) {
    return a.m == b.m && a.l == b.l && a.degree == b.degree;
  }
};

/// All component shapes (m,l) with 2 <= m <= m_max, 0 <= l <= l_max whose
/// forced degree (1-m)n+2-l can be realized by a nonzero map on a space
/// concentrated in degrees [-N+1, 0]; ordered by (m,l).
std::vector<ComponentShape> enumerate_components(int N, int n, int m_max, int l_max);

}  // namespace shifted_poisson
