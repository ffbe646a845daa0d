#pragma once

#include <vector>

#include "omegalie/representation.hpp"
#include "omegalie/yang_baxter.hpp"

namespace omegalie {

/// [Tu, Tv] = T(rho(Tu)v - rho(Tv)u) + 2r(Tv)Tu - 2r(Tu)Tv on all basis pairs of V.
/// T is n x m (V -> L).
Report check_o_operator(const Representation& rep, const Mat& T);

/// Same identity with rho1 of a GenI pair transporting the bracket.
Report check_o_operator_gen(const GenRepPair& pair, const Mat& T);

/// u * v = rho(Tu)v - 2r(Tu)v together with the induced omega (general flavor).
LeftSymmetricAlgebra lsa_from_o_operator(const Representation& rep, const Mat& T);

/// l1(u)v = u.v - 2r(v)u, l2(u)v = u.v, on the sub-adjacent algebra.
GenRepPair genrep_from_lsa(const LeftSymmetricAlgebra& V);

struct LsaOmegaLie {
  OmegaLieAlgebra algebra;
  std::vector<int> complement;  // 0-based standard basis vectors spanning the chosen complement of [A,A]
};

/// Commutator algebra of a plain left-symmetric product with r vanishing on
/// [A,A] and equal to c on each complement basis vector.
LsaOmegaLie omega_lie_from_lsa(const LeftSymmetricAlgebra& A, const Rat& c);

/// rho(x)y = x.y + 2r(x)y.
Representation rep_from_lsa(const OmegaLieAlgebra& Aw, const LeftSymmetricAlgebra& A);

struct Lift {
  OmegaLieAlgebra H;  // L semidirect the dual representation
  TwoTensor R;        // Tbar - sigma(Tbar)
};

Lift lift_o_operator(const Representation& rep, const Mat& T);

/// O-operator verdict versus vanishing of the lifted residual (u_r = 0).
/// Carries both underlying checks as clauses, so an operator that fails
/// yields FAIL while the agreement clause still passes.
Report crosscheck_lift(const Representation& rep, const Mat& T);

}  // namespace omegalie
