#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "omegalie/linalg.hpp"
#include "omegalie/report.hpp"

namespace omegalie {

/// (i, j, k, value): [e_i, e_j] has coefficient `value` on e_k. 0-based.
using StructureEntry = std::tuple<int, int, int, Rat>;

/// Builds the full structure tensor from entries with i < j, filling in
/// the antisymmetric partner. Conflicting duplicates raise PARSE_ERROR.
Tensor3 antisymmetric_structure(int n, const std::vector<StructureEntry>& entries);

/// Matrix of y -> t(e_i, y), i.e. M(k, j) = t(i, j, k).
Mat left_operator(const Tensor3& t, int i);
/// Sum_{i,j} x_i y_j t(i, j, :).
Vec bilinear(const Tensor3& t, const Vec& x, const Vec& y);

enum class Flavor { GeneralOmega, Multiplicative };

struct OmegaLieAlgebra {
  int dim = 0;
  Tensor3 c;  // [e_i, e_j] = sum_k c(i, j, k) e_k
  Flavor flavor = Flavor::Multiplicative;
  Mat omega;  // GeneralOmega flavor
  Vec r;      // Multiplicative flavor
  std::string label;

  static OmegaLieAlgebra multiplicative(Tensor3 c, Vec r, std::string label = {});
  static OmegaLieAlgebra general(Tensor3 c, Mat omega, std::string label = {});

  bool is_multiplicative() const { return flavor == Flavor::Multiplicative; }
  Vec bracket(int i, int j) const;
  Rat r_of(const Vec& x) const;
  /// omega(e_i, e_j); r([e_i, e_j]) in the multiplicative flavor.
  Rat omega_at(int i, int j) const;
};

Vec bracket_eval(const OmegaLieAlgebra& L, const Vec& x, const Vec& y);

Report check_omega_lie(const OmegaLieAlgebra& L);

/// A linear form r with r([e_i, e_j]) = omega(e_i, e_j) for all i < j, or
/// nullopt when omega is not a pullback of the bracket.
std::optional<Vec> infer_r(const OmegaLieAlgebra& L);

struct GeneralizedOmegaLieAlgebra {
  int dim = 0;
  Tensor3 c1;  // anticommutative
  Tensor3 c2;  // arbitrary
  Vec r;
  std::string label;

  /// A multiplicative algebra viewed as a generalized one with both brackets equal.
  static GeneralizedOmegaLieAlgebra from(const OmegaLieAlgebra& L);
};

Report check_generalized(const GeneralizedOmegaLieAlgebra& G);

/// Which vectors may serve as the distinguished central element u_r.
enum class CenterRule { Center, Zero };

Subspace center(const OmegaLieAlgebra& L);
Subspace center(const OmegaLieAlgebra& L, CenterRule rule);

/// ker r intersected with {x : r([x, e_j]) = 0 for all j}.
Subspace admissible_subspace(const OmegaLieAlgebra& L);

enum class LsaFlavor { Plain, GeneralOmega, Multiplicative };

struct LeftSymmetricAlgebra {
  int dim = 0;
  Tensor3 a;  // e_i . e_j = sum_k a(i, j, k) e_k
  LsaFlavor flavor = LsaFlavor::Plain;
  Mat omega;  // GeneralOmega flavor
  Vec r;      // Multiplicative flavor
  std::string label;

  static LeftSymmetricAlgebra plain(Tensor3 a, std::string label = {});
  static LeftSymmetricAlgebra general(Tensor3 a, Mat omega, std::string label = {});
  static LeftSymmetricAlgebra multiplicative(Tensor3 a, Vec r, std::string label = {});

  Vec product(int i, int j) const;
  Rat omega_at(int i, int j) const;
};

Report check_lsa(const LeftSymmetricAlgebra& V);

/// Commutator algebra of a left-symmetric product. Plain products give a
/// multiplicative algebra with r = 0.
OmegaLieAlgebra subadjacent(const LeftSymmetricAlgebra& V);

}  // namespace omegalie
