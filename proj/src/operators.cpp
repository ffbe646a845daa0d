#include "omegalie/operators.hpp"

#include <string>

#include "omegalie/error.hpp"

namespace omegalie {

namespace {

void require_map(const OmegaLieAlgebra& L, int m, const Mat& T) {
  require_dims(T.rows() == L.dim && T.cols() == m,
               "O-operator must be " + std::to_string(L.dim) + "x" + std::to_string(m));
  if (!L.is_multiplicative()) throw Error(ErrorCode::Precondition, "O-operators need a linear form r");
}

void o_identity(const OmegaLieAlgebra& L, const OperatorFamily& rho, const Mat& T, Clause& clause) {
  const int m = T.cols();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Vec u = unit_vec(m, a), v = unit_vec(m, b);
      const Vec Tu = T.col(a), Tv = T.col(b);
      const Vec lhs = bracket_eval(L, Tu, Tv);
      Vec rhs = matvec(T, sub(matvec(evaluate(rho, Tu), v), matvec(evaluate(rho, Tv), u)));
      axpy(2 * L.r_of(Tv), Tu, rhs);
      axpy(-2 * L.r_of(Tu), Tv, rhs);
      clause.expect_equal({a, b}, lhs, rhs);
    }
}

}  // namespace

Report check_o_operator(const Representation& rep, const Mat& T) {
  require_map(rep.algebra, rep.m, T);
  require_pass(check_representation(rep), "check_o_operator: representation is invalid");
  Report out("O-operator");
  o_identity(rep.algebra, rep.rho, T,
             out.clause("o-operator", "[Tu,Tv] = T(rho(Tu)v - rho(Tv)u) + 2r(Tv)Tu - 2r(Tu)Tv"));
  return out;
}

Report check_o_operator_gen(const GenRepPair& pair, const Mat& T) {
  require_map(pair.algebra, pair.m, T);
  require_pass(check_gen_rep(pair, GenKind::GenI), "check_o_operator_gen: pair is not GenI");
  Report out("O-operator (generalized)");
  o_identity(pair.algebra, pair.rho1, T,
             out.clause("o-operator", "[Tu,Tv] = T(rho1(Tu)v - rho1(Tv)u) + 2r(Tv)Tu - 2r(Tu)Tv"));
  return out;
}

LeftSymmetricAlgebra lsa_from_o_operator(const Representation& rep, const Mat& T) {
  require_pass(check_o_operator(rep, T), "lsa_from_o_operator: T is not an O-operator");
  const OmegaLieAlgebra& L = rep.algebra;
  const int m = rep.m;
  Tensor3 a(m);
  Mat w(m, m);
  for (int i = 0; i < m; ++i) {
    const Vec Tu = T.col(i);
    Mat left = evaluate(rep.rho, Tu);
    for (int d = 0; d < m; ++d) left(d, d) -= 2 * L.r_of(Tu);
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) a(i, j, k) = left(k, j);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Vec Tu = T.col(i), Tv = T.col(j);
      const Vec u = unit_vec(m, i), v = unit_vec(m, j);
      w(i, j) = 2 * L.r_of(matvec(T, matvec(evaluate(rep.rho, Tv), u))) -
                2 * L.r_of(matvec(T, matvec(evaluate(rep.rho, Tu), v))) + L.r_of(bracket_eval(L, Tu, Tv));
    }
  LeftSymmetricAlgebra V = LeftSymmetricAlgebra::general(std::move(a), std::move(w), "from-O-operator");
  require_pass(check_lsa(V), "lsa_from_o_operator: induced product is not omega-left-symmetric");
  return V;
}

GenRepPair genrep_from_lsa(const LeftSymmetricAlgebra& V) {
  if (V.flavor != LsaFlavor::Multiplicative)
    throw Error(ErrorCode::Precondition, "genrep_from_lsa needs a multiplicative left-symmetric algebra");
  const OmegaLieAlgebra L = subadjacent(V);
  const int n = V.dim;
  GenRepPair pair{L, n, {}, {}, GenKind::GenI, "left-multiplication"};
  for (int i = 0; i < n; ++i) {
    Mat l2 = left_operator(V.a, i);
    Mat l1(l2);
    for (int j = 0; j < n; ++j) l1(i, j) -= 2 * V.r[j];
    pair.rho1.push_back(std::move(l1));
    pair.rho2.push_back(std::move(l2));
  }
  require_pass(check_gen_rep(pair), "genrep_from_lsa: (l1, l2) fails the GenI identity");
  require_pass(check_o_operator_gen(pair, Mat::identity(n)), "genrep_from_lsa: identity is not an O-operator");
  return pair;
}

LsaOmegaLie omega_lie_from_lsa(const LeftSymmetricAlgebra& A, const Rat& c) {
  if (c == 0) throw Error(ErrorCode::Precondition, "omega_lie_from_lsa: the scale c must be nonzero");
  if (A.flavor != LsaFlavor::Plain)
    throw Error(ErrorCode::Precondition, "omega_lie_from_lsa expects a plain left-symmetric algebra");
  require_pass(check_lsa(A), "omega_lie_from_lsa: input is not left-symmetric");
  const int n = A.dim;
  Tensor3 br(n);
  std::vector<Vec> commutators;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec v = zero_vec(n);
      for (int k = 0; k < n; ++k) {
        br(i, j, k) = A.a(i, j, k) - A.a(j, i, k);
        v[k] = br(i, j, k);
      }
      commutators.push_back(std::move(v));
    }
  Mat m = Mat::from_rows(commutators, n);
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots) is_pivot[p] = true;
  LsaOmegaLie out;
  Vec r = zero_vec(n);
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) {
      r[j] = c;
      out.complement.push_back(j);
    }
  // r vanishes on each echelon row e_p + sum_{j free} m(row, j) e_j.
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    Rat acc = 0;
    for (int j : out.complement) acc += m(static_cast<int>(row), j);
    r[pivots[row]] = -c * acc;
  }
  out.algebra = OmegaLieAlgebra::multiplicative(std::move(br), std::move(r), A.label);
  require_pass(check_omega_lie(out.algebra), "omega_lie_from_lsa: result fails the omega-Jacobi identity");
  return out;
}

Representation rep_from_lsa(const OmegaLieAlgebra& Aw, const LeftSymmetricAlgebra& A) {
  require_dims(Aw.dim == A.dim, "rep_from_lsa: algebra and product differ in dimension");
  if (!Aw.is_multiplicative()) throw Error(ErrorCode::Precondition, "rep_from_lsa needs a multiplicative algebra");
  const int n = A.dim;
  Representation rep{Aw, n, {}, "left-multiplication + 2r"};
  for (int i = 0; i < n; ++i) {
    Mat rho = left_operator(A.a, i);
    for (int j = 0; j < n; ++j) rho(j, j) += 2 * Aw.r[i];
    rep.rho.push_back(std::move(rho));
  }
  require_pass(check_representation(rep), "rep_from_lsa: result is not a representation");
  require_pass(check_o_operator(rep, Mat::identity(n)), "rep_from_lsa: identity is not an O-operator");
  return rep;
}

Lift lift_o_operator(const Representation& rep, const Mat& T) {
  const OmegaLieAlgebra& L = rep.algebra;
  require_map(L, rep.m, T);
  const int n = L.dim;
  const int m = rep.m;
  Lift out{semidirect_rep(L, dual_representation(rep)), Mat(n + m, n + m)};
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a) {
      out.R(i, n + a) = T(i, a);
      out.R(n + a, i) = -T(i, a);
    }
  return out;
}

Report crosscheck_lift(const Representation& rep, const Mat& T) {
  const Lift lift = lift_o_operator(rep, T);
  const YbeContext ctx = YbeContext::with_zero(lift.H);
  const Tensor3 residual = yb_residual(ctx, lift.R);
  Report oop = check_o_operator(rep, T);
  Report adm = check_r_admissible(ctx, lift.R);

  Report out("O-operator lift");
  out.set_meta("u_r", "0");
  out.set_meta("admissible", adm.verdict());
  Clause& oc = out.clause("o-operator", oop.clauses().front().anchor);
  oc.violations = oop.clauses().front().violations;
  out.clause("lift-residual-zero", "[R,R] = 0 for R = Tbar - sigma(Tbar)")
      .expect_equal({}, residual, Tensor3(lift.H.dim));
  out.clause("verdict-agreement", "lifted residual vanishes iff T is an O-operator")
      .expect_equal({}, Value::flag(residual.is_zero()), Value::flag(oop.passed()));
  out.add_detail("admissibility", std::move(adm));
  return out;
}

}  // namespace omegalie
