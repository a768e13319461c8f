#pragma once

#include "shifted_poisson/linalg.hpp"
#include "shifted_poisson/polyvector.hpp"

#include <map>

namespace shifted_poisson {

/// Lie N-algebra: a graded space concentrated in degrees [-N+1, 0] together
/// with antisymmetric brackets l_k : g^{⊗k} -> g of degree 2-k (k >= 2; the
/// unary bracket is the space differential). Brackets of arity k > N+1 must
/// vanish for degree reasons and are rejected if nonzero.
class LieNAlgebra {
 public:
  /// `brackets`: arity -> bracket map. Each must be a (1,k) map of degree 2-k,
  /// antisymmetric in its inputs. Throws std::invalid_argument on violations.
  LieNAlgebra(GradedSpacePtr space, int N, std::map<int, MultiMap> brackets);

  const GradedSpacePtr& space() const { return m_space; }
  int N() const { return m_N; }
  const std::map<int, MultiMap>& brackets() const { return m_brackets; }
  /// nullptr when the bracket of that arity was not provided (i.e. vanishes).
  const MultiMap* bracket(int arity) const;

  /// The binary bracket value [a,b] as a sparse list of (basis id, coefficient).
  std::vector<std::pair<int, Rational>> bracket2(int a, int b) const;

 private:
  GradedSpacePtr m_space;
  int m_N;
  std::map<int, MultiMap> m_brackets;
};

/// The weight-one components pi^(1,k) = (-1)^{k-1} l_k of the polyvector
/// encoding the algebra structure, as a family with the given shift.
PolyvectorFamily weight_one_family(const LieNAlgebra& algebra, int shift);

/// Evaluates the homotopy-Jacobi residual tower: the weight-one residual rows
/// (1,l) for 2 <= l <= 2N+1. The algebra satisfies the L-infinity identities
/// iff the report is zero. (These rows are independent of the ambient shift.)
ResidualReport check_linfty(const LieNAlgebra& algebra);

/// True iff the ternary bracket composed with itself vanishes slot-wise, i.e.
/// the (1,5) residual row is identically zero by degree reasons. Holds for
/// every Lie 2-algebra because l_3 maps (g^0)^3 into g^{-1} and vanishes on
/// any input containing a degree -1 vector.
bool ternary_square_autovanish(const LieNAlgebra& algebra);

/// ad_x = l_2(x, -) as a (1,1) map of degree 0, for x given by coefficients
/// over the degree-0 basis (ids_at(0) order).
MultiMap adjoint_action(const LieNAlgebra& algebra, const Vector& x);

/// ad*_x on the dual of the degree-0 part, encoded over the same basis ids
/// (entry a -> b carries the coefficient of theta^b in ad*_x theta^a), so that
/// <ad*_x theta^a, e_b> + <theta^a, ad_x e_b> = 0 holds for the dual pairing.
MultiMap coadjoint_action(const LieNAlgebra& algebra, const Vector& x);

}  // namespace shifted_poisson
