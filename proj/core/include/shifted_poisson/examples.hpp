#pragma once

#include "shifted_poisson/linfty.hpp"

#include <string>
#include <vector>

namespace shifted_poisson {

/// Lie algebra of strictly upper triangular structure: the (2-dimensional)
/// nonabelian Lie algebra [a,b] = b.
LieNAlgebra make_2dim_nonabelian();

/// sl2 with basis (e,h,f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieNAlgebra make_sl2();

/// gl(k) with basis E_ab (row-major names "E11", "E12", ...):
/// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb.
LieNAlgebra make_gl(int k);

/// Heisenberg algebra with basis (x,y,z): [x,y] = z, z central.
LieNAlgebra make_heisenberg();

/// Abelian Lie 2-algebra concentrated in degree -1 with the given dimension
/// (degree 0 part has dimension zero). Basis "c" for dim 1, else "c1","c2",...
LieNAlgebra make_abelian_shifted(int dim);

/// Killing form of a Lie algebra as a matrix over the degree-0 basis:
/// K_ij = trace(ad_i ad_j).
Matrix killing_form(const LieNAlgebra& algebra);

/// The closed antisymmetric 3-form kappa(x,y,z) = K([x,y], z) built from the
/// Killing form, as a (0,3) map of degree 0.
MultiMap killing_cocycle(const LieNAlgebra& algebra);

/// The closed antisymmetric 3-form kappa(x,y,z) = Tr([x,y] z) on gl(k), with
/// the trace taken in the defining representation.
MultiMap trace_cocycle_gl(const LieNAlgebra& gl, int k);

/// String-type Lie 2-algebra K[1] ⊕ h for a Lie algebra h and a closed
/// antisymmetric 3-form kappa: l_2 = the bracket of h (the central generator c
/// in degree -1 does not act), l_3(x,y,z) = kappa(x,y,z) c, zero differential.
struct StringAlgebra {
  LieNAlgebra algebra;
  int c_id = -1;                ///< id of the central degree -1 generator
  std::vector<int> h_ids;      ///< ids of the degree-0 copy of h, in h basis order
  MultiMap kappa;              ///< the 3-form, transported to the new space
};

/// Throws std::invalid_argument if kappa has the wrong shape, is not
/// antisymmetric, or is not closed (fails the cocycle identity).
StringAlgebra make_string(const LieNAlgebra& h, const MultiMap& kappa);

/// Shifted cotangent Lie 2-algebra h*[1] ⊕ h: the mixed bracket is the
/// coadjoint action [x, theta^a] = ad*_x theta^a, brackets of two degree -1
/// vectors vanish, l_3 = 0, zero differential.
struct CotangentAlgebra {
  LieNAlgebra algebra;
  std::vector<int> theta_ids;  ///< ids of the degree -1 dual basis, in h basis order
  std::vector<int> x_ids;      ///< ids of the degree-0 copy of h, in h basis order
};

CotangentAlgebra make_cotangent(const LieNAlgebra& h);

/// Names of the built-in examples, in catalog order.
std::vector<std::string> builtin_names();

/// Builds a built-in example by catalog name; throws std::invalid_argument for
/// unknown names.
LieNAlgebra builtin(const std::string& name);

}  // namespace shifted_poisson
