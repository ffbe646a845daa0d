#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omegalie/yang_baxter.hpp"

namespace omegalie {

struct SolveOptions {
  int max_iterations = 500;
  double step_tolerance = 1e-12;
  double residual_tolerance = 1e-10;
  int restarts = 32;
  std::uint64_t seed = 1;
  long max_denominator = 64;
  int workers = 1;  // restarts are spread over this many threads; results do not depend on it
};

/// Skew solutions of [R,R] = 0 searched over R in Lambda^2 W, W the admissible subspace.
struct SolveProblem {
  YbeContext ctx;
  SolveOptions options;
  int n = 0;
  std::vector<double> c;        // n^3 structure constants
  std::vector<double> u;        // n
  std::vector<TwoTensor> basis;  // exact skew basis w_p ^ w_q of Lambda^2 W
  std::vector<std::vector<double>> basis_f;  // same, n^2 row-major

  /// Throws EMPTY_PARAMETER_SPACE when Lambda^2 W = 0.
  static SolveProblem build(const YbeContext& ctx, const SolveOptions& options = {});
  int params() const { return static_cast<int>(basis.size()); }
  bool cone() const;  // u_r = 0: solutions are closed under scaling
};

struct SolveResult {
  std::vector<double> best_coords;
  std::vector<double> best_R_float;  // n^2 row-major
  double residual_norm = 0.0;
  bool converged = false;
  std::optional<TwoTensor> rationalized_R;
  std::vector<Rat> rationalized_coords;
  bool exact_verified = false;
  std::vector<double> trace;   // residual norm per iteration of the winning restart
  std::string step_kinds;      // per iteration: 'G' Gauss-Newton, 'D' gradient descent
  int winning_restart = -1;
  int restarts_converged = 0;
};

/// Residual [R,R] in floating point for R = sum_k coords[k] basis[k] (n^3 entries).
std::vector<double> residual_float(const SolveProblem& problem, const std::vector<double>& coords);
double residual_norm_sq(const SolveProblem& problem, const std::vector<double>& coords);
std::vector<double> residual_gradient(const SolveProblem& problem, const std::vector<double>& coords);

SolveResult minimize(const SolveProblem& problem);

/// Continued-fraction rounding of each coordinate, then an exact re-check.
/// Precondition: result.converged.
SolveResult rationalize_verify(const SolveProblem& problem, SolveResult result);

/// minimize followed by rationalize_verify when converged.
SolveResult solve(const SolveProblem& problem);

}  // namespace omegalie
