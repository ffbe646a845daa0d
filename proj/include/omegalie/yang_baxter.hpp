#pragma once

#include <array>
#include <utility>
#include <vector>

#include "omegalie/bialgebra.hpp"

namespace omegalie {

/// R = sum_{i,j} R(i, j) e_i (x) e_j.
using TwoTensor = Mat;

struct YbeContext {
  OmegaLieAlgebra L;
  Vec u_r;
  CenterRule center_rule = CenterRule::Center;

  static YbeContext with_zero(const OmegaLieAlgebra& L) { return {L, zero_vec(L.dim), CenterRule::Center}; }
};

/// How far the cyclic sum in the co-Jacobiator reaches: over all four summands
/// (default) or over the iterated cobracket only.
enum class JacScope { AllSummands, FirstSummand };
const char* to_string(JacScope scope);
const char* to_string(CenterRule rule);

bool is_skew(const TwoTensor& R);

/// R in W (x) W for the admissible subspace W, and u_r central.
Report check_r_admissible(const YbeContext& ctx, const TwoTensor& R);

/// [R, R]_L from R's coordinates, including the 3(...) u_r terms.
Tensor3 yb_residual(const YbeContext& ctx, const TwoTensor& R);

/// Delta(x) = (ad1 x (x) id + id (x) ad1 x) R - 2 x (x) u_r + u_r (x) x.
Cobracket delta_from_r(const YbeContext& ctx, const TwoTensor& R);

Tensor3 jac_delta(const Vec& u_r, const Cobracket& D, int x, JacScope scope = JacScope::AllSummands);

/// Derivation action of ad1 e_x on all three tensor slots.
Tensor3 ad_x_t3(const OmegaLieAlgebra& L, int x, const Tensor3& T);

/// Co-Jacobiator of Delta_R versus ad_x [R,R], on every basis x where
/// [x, R + sigma(R)] = 0.
Report check_lemma42(const YbeContext& ctx, const TwoTensor& R, JacScope scope = JacScope::AllSummands);

/// Bracket and r* on the dual space read off from Delta_R.
OmegaLieAlgebra dual_structure_from_r(const YbeContext& ctx, const TwoTensor& R);

/// Clause "invariance": [x, R + sigma(R)] = 0; clause "ad-invariance": ad_x [R,R] = 0.
Report check_dual_conditions(const YbeContext& ctx, const TwoTensor& R);

/// Compatibility identity of a Yang-Baxter bialgebra for Delta_R.
Report check_yb_bialgebra(const YbeContext& ctx, const TwoTensor& R);

/// Cross-check: the dual structure is omega-Lie exactly when both conditions hold.
Report crosscheck_dual_structure(const YbeContext& ctx, const TwoTensor& R);

// ---- tensor form ----

using Decomposition = std::vector<std::pair<Vec, Vec>>;

struct TensorFormResult {
  /// Indexed by unit-slot mask (bit s set = slot s holds the unit). Each
  /// tensor has extent 1 along unit slots; entry 0 is the pure-L part.
  std::array<Tensor3, 8> parts;

  const Tensor3& pure() const { return parts[0]; }
  bool unit_part_zero() const;
};

/// Literal term-by-term expansion of [R12,R13] + [R12,R23] + [R13,R23] on the
/// given summands, including the 3/(2s) u_r terms.
TensorFormResult tensor_form_residual(const YbeContext& ctx, const TwoTensor& R, const Decomposition& decomposition);

}  // namespace omegalie
