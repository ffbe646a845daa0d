#pragma once

#include <vector>

#include "omegalie/representation.hpp"

namespace omegalie {

/// L together with a multiplicative structure on its dual space and the two
/// mutual actions. Basis of L* is the dual basis e_1*, ..., e_n*.
struct DualPair {
  OmegaLieAlgebra L;
  OmegaLieAlgebra Lstar;
  GenRepPair pairL;      // L acting on L*
  GenRepPair pairLstar;  // L* acting on L
  Vec u_r;               // element of L representing r*

  /// Both actions are the generalized duals of the generalized adjoints.
  static DualPair standard(const OmegaLieAlgebra& L, const OmegaLieAlgebra& Lstar);
};

/// Coordinates of u_r are the coefficients of r* in the dual basis.
Vec u_r_of(const OmegaLieAlgebra& Lstar);

/// Structural invariants of a DualPair (u_r matches r*, both actions associated GenII).
Report check_dual_pair(const DualPair& dp);

/// Candidate bracket on L + L* (L first, then L*), with r + r*. Only
/// anticommutativity is asserted.
OmegaLieAlgebra double_bracket(const DualPair& dp);

/// The four compatibility conditions between the two actions, evaluated directly.
Report check_matched_pair(const DualPair& dp);

struct BilinearForm {
  Mat matrix;
  bool nondegenerate = false;

  static BilinearForm of(Mat m);
};

/// B(x + a, y + b) = <b, x> + <a, y> on L + L*.
BilinearForm standard_form(int n);

Report check_invariant_form(const OmegaLieAlgebra& H, const BilinearForm& B);

Report check_manin_triple(const OmegaLieAlgebra& H, const Subspace& first, const Subspace& second,
                          const BilinearForm& B);

/// Delta(e_k) = sum_{i,j} d[k](i, j) e_i (x) e_j.
using Cobracket = std::vector<Mat>;

Cobracket cobracket_of_dual(const OmegaLieAlgebra& Lstar);
/// Delta applied to an arbitrary vector.
Mat delta_at(const Cobracket& delta, const Vec& x);

Report check_mult_bialgebra(const DualPair& dp);

/// Runs the bialgebra, matched-pair and Manin-triple checks; passes iff the
/// three verdicts agree. `concurrent` runs the three checkers on separate threads.
Report crosscheck_bialgebra(const DualPair& dp, bool concurrent = false);

}  // namespace omegalie
