#include "omegalie/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "omegalie/error.hpp"
#include "omegalie/kernels.hpp"

namespace omegalie {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<double> combine(const SolveProblem& P, const std::vector<double>& coords) {
  require_dims(coords.size() == P.basis_f.size(), "coordinate vector has the wrong length");
  std::vector<double> R(static_cast<std::size_t>(P.n * P.n), 0.0);
  const auto& ops = kernels::active_ops();
  for (std::size_t k = 0; k < coords.size(); ++k) ops.axpy(coords[k], P.basis_f[k].data(), R.data(), R.size());
  return R;
}

// 3 (sigma(R) (x) u + R with u in the middle + u (x) sigma(R)), linear in R.
void add_unit_terms(const SolveProblem& P, const double* R, double* T) {
  const int n = P.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double r = R[a * n + b];
      if (r == 0.0) continue;
      for (int s = 0; s < n; ++s) {
        const double w = 3.0 * r * P.u[s];
        T[(b * n + a) * n + s] += w;
        T[(a * n + s) * n + b] += w;
        T[(s * n + b) * n + a] += w;
      }
    }
}

struct Workspace {
  std::vector<double> scratch;
  explicit Workspace(int n) : scratch(static_cast<std::size_t>(n) * n * n) {}
};

std::vector<double> residual_with(const SolveProblem& P, const std::vector<double>& R, Workspace& ws) {
  const int n = P.n;
  std::vector<double> T(static_cast<std::size_t>(n) * n * n, 0.0);
  kernels::active_ops().yb_blocks(n, P.c.data(), R.data(), R.data(), T.data(), ws.scratch.data());
  add_unit_terms(P, R.data(), T.data());
  return T;
}

// Column k of the Jacobian: blocks(B_k, R) + blocks(R, B_k) + unit terms of B_k.
Eigen::MatrixXd jacobian(const SolveProblem& P, const std::vector<double>& R, Workspace& ws) {
  const int n = P.n;
  const std::size_t len = static_cast<std::size_t>(n) * n * n;
  Eigen::MatrixXd J(static_cast<Eigen::Index>(len), P.params());
  std::vector<double> col(len);
  const auto& ops = kernels::active_ops();
  for (int k = 0; k < P.params(); ++k) {
    std::fill(col.begin(), col.end(), 0.0);
    const double* Bk = P.basis_f[k].data();
    ops.yb_blocks(n, P.c.data(), Bk, R.data(), col.data(), ws.scratch.data());
    ops.yb_blocks(n, P.c.data(), R.data(), Bk, col.data(), ws.scratch.data());
    add_unit_terms(P, Bk, col.data());
    for (std::size_t i = 0; i < len; ++i) J(static_cast<Eigen::Index>(i), k) = col[i];
  }
  return J;
}

double norm_sq(const std::vector<double>& v) { return kernels::active_ops().dot(v.data(), v.data(), v.size()); }

void project(const SolveProblem& P, std::vector<double>& x) {
  if (!P.cone()) return;
  const double nrm = std::sqrt(norm_sq(x));
  if (nrm > 0.0)
    for (auto& v : x) v /= nrm;
}

struct Candidate {
  std::vector<double> coords;
  double residual = 0.0;
  bool converged = false;
  bool trivial = false;
  std::vector<double> trace;
  std::string kinds;
};

Candidate run_restart(const SolveProblem& P, int index) {
  const SolveOptions& o = P.options;
  std::mt19937_64 rng(splitmix64(o.seed ^ splitmix64(static_cast<std::uint64_t>(index) + 1)));
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(P.params()));
  for (auto& v : x) v = dist(rng);
  project(P, x);

  Workspace ws(P.n);
  auto objective = [&](const std::vector<double>& coords) { return norm_sq(residual_with(P, combine(P, coords), ws)); };

  Candidate cand;
  double f = objective(x);
  double mu = 1e-3;
  const double tol_sq = o.residual_tolerance * o.residual_tolerance;
  for (int it = 0; it < o.max_iterations && f >= tol_sq; ++it) {
    const std::vector<double> R = combine(P, x);
    const std::vector<double> T = residual_with(P, R, ws);
    const Eigen::MatrixXd J = jacobian(P, R, ws);
    const Eigen::Map<const Eigen::VectorXd> t(T.data(), static_cast<Eigen::Index>(T.size()));
    const Eigen::VectorXd g = J.transpose() * t;
    Eigen::MatrixXd A = J.transpose() * J;
    A.diagonal().array() += mu;

    auto try_direction = [&](const Eigen::VectorXd& d, int halvings, std::vector<double>& out, double& fout) {
      double step = 1.0;
      for (int h = 0; h <= halvings; ++h, step *= 0.5) {
        out = x;
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += step * d(static_cast<Eigen::Index>(k));
        project(P, out);
        fout = objective(out);
        if (fout < f) return true;
      }
      return false;
    };

    std::vector<double> next;
    double fnext = f;
    char kind = 'G';
    const Eigen::VectorXd gn = A.ldlt().solve(-g);
    bool ok = gn.allFinite() && try_direction(gn, 30, next, fnext);
    if (ok) {
      mu = std::max(mu / 3.0, 1e-12);
    } else {
      kind = 'D';
      const double gnorm = g.norm();
      ok = gnorm > 0.0 && try_direction(-g / gnorm, 50, next, fnext);
      mu *= 10.0;
    }
    if (!ok) break;
    double moved = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) moved = std::max(moved, std::abs(next[k] - x[k]));
    x = std::move(next);
    f = fnext;
    cand.trace.push_back(std::sqrt(f));
    cand.kinds.push_back(kind);
    if (moved < o.step_tolerance) break;
  }
  cand.coords = std::move(x);
  cand.residual = std::sqrt(f);
  cand.converged = cand.residual < o.residual_tolerance;
  cand.trivial = !P.cone() && std::sqrt(norm_sq(cand.coords)) < 1e-6;
  return cand;
}

bool better(const Candidate& a, const Candidate& b) {
  if (a.trivial != b.trivial) return !a.trivial;
  if (a.residual != b.residual) return a.residual < b.residual;
  return a.coords < b.coords;
}

}  // namespace

bool SolveProblem::cone() const {
  return std::all_of(u.begin(), u.end(), [](double v) { return v == 0.0; });
}

SolveProblem SolveProblem::build(const YbeContext& ctx, const SolveOptions& options) {
  SolveProblem P;
  P.ctx = ctx;
  P.options = options;
  const int n = ctx.L.dim;
  P.n = n;
  require_dims(ctx.u_r.size() == static_cast<std::size_t>(n), "u_r has the wrong length");
  P.c.resize(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) P.c[(i * n + j) * n + k] = to_double(ctx.L.c(i, j, k));
  for (const auto& v : ctx.u_r) P.u.push_back(to_double(v));
  const Subspace W = admissible_subspace(ctx.L);
  const auto& w = W.basis();
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t q = p + 1; q < w.size(); ++q) {
      TwoTensor B = sub(outer(w[p], w[q]), outer(w[q], w[p]));
      std::vector<double> bf;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) bf.push_back(to_double(B(i, j)));
      P.basis.push_back(std::move(B));
      P.basis_f.push_back(std::move(bf));
    }
  if (P.basis.empty())
    throw Error(ErrorCode::EmptyParameterSpace, "admissible subspace carries no nonzero skew tensor");
  return P;
}

std::vector<double> residual_float(const SolveProblem& problem, const std::vector<double>& coords) {
  Workspace ws(problem.n);
  return residual_with(problem, combine(problem, coords), ws);
}

double residual_norm_sq(const SolveProblem& problem, const std::vector<double>& coords) {
  return norm_sq(residual_float(problem, coords));
}

std::vector<double> residual_gradient(const SolveProblem& problem, const std::vector<double>& coords) {
  Workspace ws(problem.n);
  const std::vector<double> R = combine(problem, coords);
  const std::vector<double> T = residual_with(problem, R, ws);
  const Eigen::MatrixXd J = jacobian(problem, R, ws);
  const Eigen::Map<const Eigen::VectorXd> t(T.data(), static_cast<Eigen::Index>(T.size()));
  const Eigen::VectorXd g = 2.0 * (J.transpose() * t);
  return {g.data(), g.data() + g.size()};
}

SolveResult minimize(const SolveProblem& problem) {
  const int restarts = std::max(1, problem.options.restarts);
  std::vector<Candidate> cands(static_cast<std::size_t>(restarts));
  const int workers = std::clamp(problem.options.workers, 1, restarts);
  if (workers == 1) {
    for (int i = 0; i < restarts; ++i) cands[i] = run_restart(problem, i);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int i = w; i < restarts; i += workers) cands[i] = run_restart(problem, i);
      });
    for (auto& t : pool) t.join();
  }
  int best = 0;
  SolveResult out;
  for (int i = 0; i < restarts; ++i) {
    if (cands[i].converged) ++out.restarts_converged;
    if (better(cands[i], cands[best])) best = i;
  }
  Candidate& c = cands[best];
  out.best_coords = c.coords;
  out.best_R_float = combine(problem, c.coords);
  out.residual_norm = c.residual;
  out.converged = c.converged;
  out.trace = std::move(c.trace);
  out.step_kinds = std::move(c.kinds);
  out.winning_restart = best;
  return out;
}

SolveResult rationalize_verify(const SolveProblem& problem, SolveResult result) {
  if (!result.converged) throw Error(ErrorCode::Precondition, "rationalize_verify needs a converged candidate");
  std::vector<double> x = result.best_coords;
  if (problem.cone()) {
    double mx = 0.0;
    for (double v : x) mx = std::max(mx, std::abs(v));
    if (mx > 0.0)
      for (auto& v : x) v /= mx;
  }
  std::vector<Rat> q;
  TwoTensor R(problem.n, problem.n);
  for (std::size_t k = 0; k < x.size(); ++k) {
    q.push_back(rationalize(x[k], problem.options.max_denominator));
    axpy(q.back(), problem.basis[k], R);
  }
  const bool ok = is_skew(R) && yb_residual(problem.ctx, R).is_zero();
  result.exact_verified = ok;
  if (ok) {
    result.rationalized_R = std::move(R);
    result.rationalized_coords = std::move(q);
  } else {
    result.rationalized_R.reset();
    result.rationalized_coords.clear();
  }
  return result;
}

SolveResult solve(const SolveProblem& problem) {
  SolveResult r = minimize(problem);
  if (r.converged) r = rationalize_verify(problem, std::move(r));
  return r;
}

}  // namespace omegalie
