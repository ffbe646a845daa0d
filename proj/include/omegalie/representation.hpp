#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omegalie/algebra.hpp"

namespace omegalie {

/// One operator per basis element: family[i] is the image of e_i.
using OperatorFamily = std::vector<Mat>;

/// sum_i x_i family[i].
Mat evaluate(const OperatorFamily& family, const Vec& x);

struct Representation {
  OmegaLieAlgebra algebra;
  int m = 0;  // carrier dimension
  OperatorFamily rho;
  std::string label;
};

enum class GenKind { GenI, GenII, AssociatedGenII };
const char* to_string(GenKind kind);

struct GenRepPair {
  OmegaLieAlgebra algebra;
  int m = 0;
  OperatorFamily rho1;
  OperatorFamily rho2;
  GenKind kind = GenKind::GenI;
  std::string label;
};

Report check_representation(const Representation& rep);

/// rho*(e_i) = -rho(e_i)^T + 2 r(e_i) id on the dual carrier.
Representation dual_representation(const Representation& rep);

Report check_gen_rep(const GenRepPair& pair);
Report check_gen_rep(const GenRepPair& pair, GenKind kind);

/// ad1 x (y) = [x, y], ad2 x (y) = [x, y] + r(y) x.
GenRepPair adjoint_pair(const OmegaLieAlgebra& L);

/// Componentwise dual of a GenI pair; the result is checked as GenII.
GenRepPair generalized_dual_pair(const GenRepPair& pair);

/// L + V with [e_i, v] = rho(e_i) v and r extended by zero on V.
OmegaLieAlgebra semidirect_rep(const OmegaLieAlgebra& L, const Representation& rep);

// ---- generalized algebras ----

/// rho1([x,y]_1) = rho2(x) rho1(y) - rho2(y) rho1(x) + r([x,y]_1) id.
Report check_rep_I(const GeneralizedOmegaLieAlgebra& G, const OperatorFamily& rho1, const OperatorFamily& rho2);

/// Representation II identity plus the identity tying f to (rho1, rho2).
Report check_special_rep_II(const GeneralizedOmegaLieAlgebra& G, const OperatorFamily& rho1,
                            const OperatorFamily& rho2, const OperatorFamily& f);

/// Solves the f-identity for f on the basis (free directions set to zero);
/// nullopt when no f exists.
std::optional<OperatorFamily> solve_special_f(const GeneralizedOmegaLieAlgebra& G, const OperatorFamily& rho1,
                                              const OperatorFamily& rho2);

struct GeneralizedConstruction {
  GeneralizedOmegaLieAlgebra algebra;
  Report input;   // the representation-data check
  Report output;  // check_generalized on the product
};

GeneralizedConstruction semidirect_gen_I(const GeneralizedOmegaLieAlgebra& G, const OperatorFamily& rho1,
                                         const OperatorFamily& rho2);

/// Second bracket carries the extra -f(x)(v) term, and no matching -f(y)(u).
GeneralizedConstruction semidirect_special_II(const GeneralizedOmegaLieAlgebra& G, const OperatorFamily& rho1,
                                              const OperatorFamily& rho2, const OperatorFamily& f);

}  // namespace omegalie
