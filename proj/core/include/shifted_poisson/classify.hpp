#pragma once

#include "shifted_poisson/linalg.hpp"
#include "shifted_poisson/linfty.hpp"
#include "shifted_poisson/multimap.hpp"
#include "shifted_poisson/polyvector.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace shifted_poisson {

/// Thrown when a specialized identity list and the generic Maurer-Cartan
/// residual disagree on the same datum. This is never a property of the input:
/// it signals a defect in one of the two evaluation paths.
class InternalInconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown by solve_linear_stratum when two unknown components multiply each
/// other in some residual row, so the stratum is not linear.
class NonlinearSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Verdict of a specialized verifier. The datum satisfies the classification
/// identities iff no identity name is listed as failed.
struct CheckResult {
  std::vector<std::string> failed_identities;

  bool valid() const { return failed_identities.empty(); }
};

/// Classification of 2-shifted structures on an ordinary Lie algebra: the
/// datum is a single (2,0)-map T of degree 0, and the identities are
/// (i) "symmetry"   - T is a symmetric 2-tensor, and
/// (ii) "invariance" - (ad_y x 1 + 1 x ad_y) T = 0 for every y.
/// The verdict is asserted to coincide with vanishing of the Maurer-Cartan
/// residual of the family {bracket, T}; disagreement throws
/// InternalInconsistencyError. Wrong shape, degree, or space throws
/// std::invalid_argument.
CheckResult verify_2shifted_lie(const LieNAlgebra& algebra, const MultiMap& T);

/// Classification of 1-shifted structures on an ordinary Lie algebra: the
/// data are a cobracket delta (a (2,1)-map of degree 0 with antisymmetric
/// outputs) and a trivector t (an antisymmetric (3,0)-map of degree 0), and
/// the identities are
///   "cobracket-cocycle"     - delta([y1,y2]) = (ad_{y1} x 1 + 1 x ad_{y1}) delta(y2) - (y1 <-> y2),
///   "cojacobi-defect"       - the alternating sum of (delta x 1) delta equals
///                             the adjoint spread of t, and
///   "trivector-invariance"  - the shuffle-alternation of (delta x 1 x 1) t vanishes.
/// Disagreement with the Maurer-Cartan residual throws
/// InternalInconsistencyError; shape/degree/symmetry violations throw
/// std::invalid_argument.
CheckResult verify_1shifted_lie(const LieNAlgebra& algebra, const MultiMap& cobracket,
                                const MultiMap& trivector);

/// Classification of n-shifted structures on a Lie 2-algebra for n in {2,3,4}.
/// The family may only contain the components admissible at that shift
/// ((2,0) for n=4; (2,0),(2,1) for n=3; weights 2..4 for n=2); anything else
/// throws std::invalid_argument naming the offending component. For n=4 and
/// n=3 the identity lists are evaluated by independent structure-constant
/// loops; for n=2 the nine obstruction rows (2,1),(2,2),(2,3),(3,0),(3,1),
/// (3,2),(4,0),(4,1),(5,0) are assembled one by one. In every case the
/// verdict is asserted against the full Maurer-Cartan residual.
CheckResult verify_lie2_shifted(const LieNAlgebra& algebra, const PolyvectorFamily& pi, int n);

/// 3-shifted structures on the string-type extension of a Lie algebra h by a
/// closed antisymmetric 3-form kappa. The datum is a vector `one` in h and a
/// linear form `form` on h (coefficients over h's basis), and the reduced
/// identities are
///   "centrality"      - [x, one] = 0 for all x,
///   "form-annihilation" - form(one) = 0, and
///   "bracket-pairing" - form([x,y]) = -kappa(x, y, one).
/// The verdict is asserted to agree with verify_lie2_shifted at shift 3 on
/// the assembled polyvector family. An invalid cocycle throws
/// std::invalid_argument.
CheckResult verify_string_3shifted(const LieNAlgebra& h, const MultiMap& kappa, const Vector& one,
                                   const Vector& form);

/// 3-shifted structures on the shifted cotangent extension of a Lie algebra h.
/// The data are r in h* x h (r[a][u] is the coefficient of theta^a x x_u) and
/// q : h -> Sym^2 h* (q[i][a][b], one matrix per basis vector of h; only the
/// symmetric part of each matrix enters, since the codomain is the symmetric
/// square). The identities are
///   "invariance"           - (ad*_x x 1 + 1 x ad_x) r = 0,
///   "cobracket-cocycle"    - q([x,y]) = (ad*_x x 1 + 1 x ad*_x) q(y) - (x <-> y),
///   "mixed-symmetrization" - the plain (2,1)-shuffle sum of (q x 1) r vanishes.
/// The verdict is asserted to agree with verify_lie2_shifted at shift 3.
CheckResult verify_cotangent_3shifted(const LieNAlgebra& h, const Matrix& r,
                                      const std::vector<Matrix>& q);

/// Solution set of the residual equations restricted to a linear stratum: the
/// listed unknown components enter every residual row at most linearly (this
/// is checked; genuine quadratic coupling throws NonlinearSystemError naming
/// the offending rows).
class SolutionSpace {
 public:
  /// One scalar coordinate of the unknown vector: component shape (m,l) plus
  /// the leading tensor multi-index of the corresponding projected basis map.
  struct Coordinate {
    int m = 0;
    int l = 0;
    MapKey leading;
  };

  SolutionSpace(GradedSpacePtr space, int shift, std::vector<Coordinate> coordinates,
                std::vector<MultiMap> coordinate_maps, std::vector<Vector> basis,
                std::optional<Vector> affine_offset, bool consistent);

  const std::vector<Coordinate>& coordinates() const { return m_coordinates; }
  /// Projected basis maps, one per coordinate; a coordinate vector x realizes
  /// the component family sum_t x[t] * coordinate_map[t].
  const std::vector<MultiMap>& coordinate_maps() const { return m_coordinate_maps; }
  /// Kernel basis of the homogeneous part, in coordinate space.
  const std::vector<Vector>& basis() const { return m_basis; }
  /// Particular solution when the fixed components create an inhomogeneity;
  /// absent for homogeneous systems.
  const std::optional<Vector>& affine_offset() const { return m_affine_offset; }
  /// False when the linear system has no solution at all.
  bool consistent() const { return m_consistent; }

  int dimension() const { return static_cast<int>(m_basis.size()); }

  /// The family realized by the coordinate vector x (unknown components only;
  /// fixed components are not included). Throws std::invalid_argument on a
  /// length mismatch.
  PolyvectorFamily realize(const Vector& x) const;

 private:
  GradedSpacePtr m_space;
  int m_shift;
  std::vector<Coordinate> m_coordinates;
  std::vector<MultiMap> m_coordinate_maps;
  std::vector<Vector> m_basis;
  std::optional<Vector> m_affine_offset;
  bool m_consistent;
};

/// Basis of the symmetry-projected subspace of (l -> m)-maps at the forced
/// degree (1-m)n+2-l, in reduced echelon form over the admissible tensor
/// multi-indices (deterministic; empty when the degree is unrealizable).
std::vector<MultiMap> component_space_basis(const GradedSpacePtr& space, int n, int m, int l);

/// Solves the residual equations for the unknown components over the linear
/// stratum determined by the algebra's brackets and the fixed components.
/// Unknown shapes whose projected component space is zero-dimensional are
/// dropped before the linearity check. Every reported solution is re-verified
/// against the Maurer-Cartan residual; failure to verify throws
/// InternalInconsistencyError.
SolutionSpace solve_linear_stratum(const LieNAlgebra& algebra, int n, const PolyvectorFamily& fixed,
                                   const std::vector<std::pair<int, int>>& unknowns);

}  // namespace shifted_poisson
