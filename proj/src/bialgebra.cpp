#include "omegalie/bialgebra.hpp"

#include <future>
#include <string>

#include "omegalie/error.hpp"

namespace omegalie {

namespace {

// (A (x) B) M in coordinates: A M B^T.
Mat act(const Mat& a, const Mat& b, const Mat& m) { return matmul(matmul(a, m), transpose(b)); }

Vec apply_op(const OperatorFamily& family, const Vec& x, const Vec& v) { return matvec(evaluate(family, x), v); }

Vec combine(std::initializer_list<std::pair<Rat, Vec>> terms, int n) {
  Vec out = zero_vec(n);
  for (const auto& [s, v] : terms) axpy(s, v, out);
  return out;
}

}  // namespace

Vec u_r_of(const OmegaLieAlgebra& Lstar) {
  if (!Lstar.is_multiplicative()) throw Error(ErrorCode::Precondition, "dual structure needs a linear form r*");
  return Lstar.r;
}

DualPair DualPair::standard(const OmegaLieAlgebra& L, const OmegaLieAlgebra& Lstar) {
  require_dims(L.dim == Lstar.dim, "dual pair: L and L* differ in dimension");
  DualPair dp{L, Lstar, generalized_dual_pair(adjoint_pair(L)), generalized_dual_pair(adjoint_pair(Lstar)),
              u_r_of(Lstar)};
  dp.pairL.kind = GenKind::AssociatedGenII;
  dp.pairLstar.kind = GenKind::AssociatedGenII;
  return dp;
}

Report check_dual_pair(const DualPair& dp) {
  Report out("dual pair");
  Clause& u = out.clause("u_r-pairing", "<r*, a> = <a, u_r>");
  u.expect_equal({}, dp.u_r, u_r_of(dp.Lstar));
  Clause& a = out.clause("action-on-dual", "L acts on L* by an associated GenII pair");
  a.expect(check_gen_rep(dp.pairL, GenKind::AssociatedGenII).passed());
  Clause& b = out.clause("action-on-L", "L* acts on L by an associated GenII pair");
  b.expect(check_gen_rep(dp.pairLstar, GenKind::AssociatedGenII).passed());
  return out;
}

OmegaLieAlgebra double_bracket(const DualPair& dp) {
  const int n = dp.L.dim;
  require_dims(dp.Lstar.dim == n && dp.u_r.size() == static_cast<std::size_t>(n), "double_bracket: dimensions");
  const auto& p1 = dp.pairL.rho1;
  const auto& p2 = dp.pairL.rho2;
  const auto& s1 = dp.pairLstar.rho1;
  const auto& s2 = dp.pairLstar.rho2;
  Tensor3 c(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        c(i, j, k) = dp.L.c(i, j, k);
        c(n + i, n + j, n + k) = dp.Lstar.c(i, j, k);
      }
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        // [e_i, e_b*] = -rho2*(e_b*) e_i + rho1(e_i) e_b* - delta_bi r
        c(i, n + b, k) = -s2[b](k, i);
        c(i, n + b, n + k) = p1[i](k, b) - (b == i ? dp.L.r[k] : Rat(0));
        // [e_b*, e_i] = rho1*(e_b*) e_i - delta_bi u_r - rho2(e_i) e_b*
        c(n + b, i, k) = s1[b](k, i) - (b == i ? dp.u_r[k] : Rat(0));
        c(n + b, i, n + k) = -p2[i](k, b);
      }
  Vec r(dp.L.r);
  r.insert(r.end(), dp.Lstar.r.begin(), dp.Lstar.r.end());
  OmegaLieAlgebra H = OmegaLieAlgebra::multiplicative(std::move(c), std::move(r), "double");
  Report anti = check_omega_lie(H);
  if (!anti.find("anticommutativity")->passed())
    throw AxiomViolation("double_bracket: assembled bracket is not anticommutative", anti);
  return H;
}

Report check_matched_pair(const DualPair& dp) {
  const OmegaLieAlgebra& L = dp.L;
  const OmegaLieAlgebra& Ls = dp.Lstar;
  const int n = L.dim;
  const Vec& r = L.r;
  const Vec& rs = Ls.r;
  const Vec& u = dp.u_r;
  const auto& p1 = dp.pairL.rho1;
  const auto& p2 = dp.pairL.rho2;
  const auto& s1 = dp.pairLstar.rho1;
  const auto& s2 = dp.pairLstar.rho2;

  Report out("matched pair");
  Clause& c1 = out.clause("condition-1", "rho2*(w) acting on [x,y]");
  Clause& c2 = out.clause("condition-2", "[eta,xi]*(z) u_r");
  Clause& c3 = out.clause("condition-3", "rho2(z) acting on [xi,eta]*");
  Clause& c4 = out.clause("condition-4", "w([y,x]) r");

  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vec w = unit_vec(n, a), x = unit_vec(n, i), y = unit_vec(n, j);
        const Vec s2w_x = apply_op(s2, w, x), s2w_y = apply_op(s2, w, y);
        const Vec p2x_w = apply_op(p2, x, w), p2y_w = apply_op(p2, y, w);
        const Vec lhs1 = apply_op(s2, w, L.bracket(i, j));
        Vec rhs1 = add(bracket_eval(L, s2w_x, y), bracket_eval(L, x, s2w_y));
        rhs1 = add(rhs1, apply_op(s1, p2y_w, x));
        rhs1 = sub(rhs1, apply_op(s1, p2x_w, y));
        axpy(dot(p2x_w, y) - dot(p2y_w, x), u, rhs1);
        axpy(dot(r, s2w_y), x, rhs1);
        axpy(-dot(r, s2w_x), y, rhs1);
        axpy(dot(rs, p2x_w), y, rhs1);
        axpy(-dot(rs, p2y_w), x, rhs1);
        c1.expect_equal({a, i, j}, lhs1, rhs1);

        const Vec lhs4 = scale(dot(w, L.bracket(j, i)), r);
        const Vec rhs4 = combine({{2 * r[i], p2y_w},
                                  {2 * r[j], apply_op(p1, x, w)},
                                  {-2 * r[i], apply_op(p1, y, w)},
                                  {-2 * r[j], p2x_w},
                                  {-dot(p2y_w, x), r},
                                  {dot(p2x_w, y), r}},
                                 n);
        c4.expect_equal({a, i, j}, lhs4, rhs4);
      }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const Vec xi = unit_vec(n, a), eta = unit_vec(n, b), z = unit_vec(n, k);
        const Vec s2eta_z = apply_op(s2, eta, z), s2xi_z = apply_op(s2, xi, z);
        const Vec lhs2 = scale(dot(Ls.bracket(b, a), z), u);
        const Vec rhs2 = combine({{2 * rs[a], s2eta_z},
                                  {2 * rs[b], apply_op(s1, xi, z)},
                                  {-2 * rs[a], apply_op(s1, eta, z)},
                                  {-2 * rs[b], s2xi_z},
                                  {-dot(xi, s2eta_z), u},
                                  {dot(eta, s2xi_z), u}},
                                 n);
        c2.expect_equal({a, b, k}, lhs2, rhs2);

        const Vec p2z_xi = apply_op(p2, z, xi), p2z_eta = apply_op(p2, z, eta);
        const Vec lhs3 = apply_op(p2, z, Ls.bracket(a, b));
        Vec rhs3 = add(bracket_eval(Ls, p2z_xi, eta), bracket_eval(Ls, xi, p2z_eta));
        rhs3 = add(rhs3, apply_op(p1, s2eta_z, xi));
        rhs3 = sub(rhs3, apply_op(p1, s2xi_z, eta));
        axpy(dot(eta, s2xi_z) - dot(xi, s2eta_z), r, rhs3);
        axpy(dot(rs, p2z_eta), xi, rhs3);
        axpy(-dot(rs, p2z_xi), eta, rhs3);
        axpy(dot(r, s2xi_z), eta, rhs3);
        axpy(-dot(r, s2eta_z), xi, rhs3);
        c3.expect_equal({a, b, k}, lhs3, rhs3);
      }
  return out;
}

BilinearForm BilinearForm::of(Mat m) {
  require_dims(m.rows() == m.cols(), "bilinear form must be square");
  const bool nondeg = determinant(m) != 0;
  return {std::move(m), nondeg};
}

BilinearForm standard_form(int n) {
  Mat m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = 1;
  }
  return BilinearForm::of(std::move(m));
}

Report check_invariant_form(const OmegaLieAlgebra& H, const BilinearForm& B) {
  const int n = H.dim;
  require_dims(B.matrix.rows() == n && B.matrix.cols() == n, "check_invariant_form: form and algebra differ in size");
  if (!H.is_multiplicative()) throw Error(ErrorCode::Precondition, "invariant forms need a linear form r");
  Report out("invariant bilinear form");
  Clause& cl = out.clause("invariance", "B([x,y],z) = B(x,[y,z]) - 2r(y)B(x,z) + r(x)B(y,z) + r(z)B(x,y)");
  const Mat& b = B.matrix;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Rat lhs = dot(H.bracket(i, j), b.col(k));
        const Rat rhs = dot(b.row(i), H.bracket(j, k)) - 2 * H.r[j] * b(i, k) + H.r[i] * b(j, k) + H.r[k] * b(i, j);
        cl.expect_equal({i, j, k}, lhs, rhs);
      }
  return out;
}

Report check_manin_triple(const OmegaLieAlgebra& H, const Subspace& first, const Subspace& second,
                          const BilinearForm& B) {
  const int n = H.dim;
  require_dims(first.ambient() == n && second.ambient() == n, "check_manin_triple: subspace ambient dimension");
  require_dims(B.matrix.rows() == n && B.matrix.cols() == n, "check_manin_triple: form size");
  Report out("Manin triple");
  out.clause("omega-lie", "ambient algebra satisfies the omega-Jacobi identity").expect(check_omega_lie(H).passed());
  Clause& sym = out.clause("symmetric", "B(x,y) = B(y,x)");
  sym.expect_equal({}, B.matrix, transpose(B.matrix));
  out.clause("nondegenerate", "det B != 0").expect(determinant(B.matrix) != 0);
  Report inv = check_invariant_form(H, B);
  Clause& invc = out.clause("invariant", "B is invariant");
  invc.violations = inv.clauses().front().violations;

  auto subalgebra = [&](const Subspace& s, Clause& cl) {
    for (std::size_t p = 0; p < s.basis().size(); ++p)
      for (std::size_t q = 0; q < s.basis().size(); ++q) {
        const Vec br = bracket_eval(H, s.basis()[p], s.basis()[q]);
        if (!s.contains(br)) cl.violations.push_back({{int(p), int(q)}, Value::of(br), Value::flag(false)});
      }
  };
  auto isotropic = [&](const Subspace& s, Clause& cl) {
    for (std::size_t p = 0; p < s.basis().size(); ++p)
      for (std::size_t q = 0; q < s.basis().size(); ++q)
        cl.expect_equal({int(p), int(q)}, dot(s.basis()[p], matvec(B.matrix, s.basis()[q])), Rat(0));
  };
  subalgebra(first, out.clause("subalgebra-first", "first summand closed under the bracket"));
  subalgebra(second, out.clause("subalgebra-second", "second summand closed under the bracket"));
  isotropic(first, out.clause("isotropic-first", "B vanishes on the first summand"));
  isotropic(second, out.clause("isotropic-second", "B vanishes on the second summand"));
  Clause& ds = out.clause("direct-sum", "H is the direct sum of the two summands");
  ds.expect(first.dim() + second.dim() == n && intersect(first, second).dim() == 0);
  return out;
}

Cobracket cobracket_of_dual(const OmegaLieAlgebra& Lstar) {
  const int n = Lstar.dim;
  const Vec rs = u_r_of(Lstar);
  Cobracket d(static_cast<std::size_t>(n), Mat(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[k](i, j) = Lstar.c(i, j, k) + (i == k ? rs[j] : Rat(0)) - (j == k ? 2 * rs[i] : Rat(0));
  return d;
}

Mat delta_at(const Cobracket& delta, const Vec& x) {
  require_dims(delta.size() == x.size() && !delta.empty(), "cobracket apply: length mismatch");
  Mat out(delta[0].rows(), delta[0].cols());
  for (std::size_t k = 0; k < x.size(); ++k) axpy(x[k], delta[k], out);
  return out;
}

Report check_mult_bialgebra(const DualPair& dp) {
  const OmegaLieAlgebra& L = dp.L;
  const int n = L.dim;
  const Vec& r = L.r;
  const Vec& rs = dp.Lstar.r;
  const Vec& u = dp.u_r;
  const Cobracket D = cobracket_of_dual(dp.Lstar);
  const GenRepPair ad = adjoint_pair(L);
  const GenRepPair AD = generalized_dual_pair(adjoint_pair(dp.Lstar));
  const Mat id = Mat::identity(n);

  Report out("multiplicative bialgebra");
  out.set_meta("operator-binding", "generalized duals of the adjoint pair of L*");
  Clause& c1 = out.clause("cocycle", "Delta([x,y]) in terms of ad2 and u_r");
  Clause& c2 = out.clause("u_r-compatibility", "<xi (x) eta, Delta z> u_r in terms of AD1*, AD2*");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec x = unit_vec(n, i), y = unit_vec(n, j);
      const Mat& a2x = ad.rho2[i];
      const Mat& a2y = ad.rho2[j];
      const Mat lhs = delta_at(D, L.bracket(i, j));
      Mat rhs = add(act(id, a2x, D[j]), act(a2x, id, D[j]));
      rhs = sub(rhs, add(act(id, a2y, D[i]), act(a2y, id, D[i])));
      axpy(2 * r[j], D[i], rhs);
      axpy(-2 * r[i], D[j], rhs);
      rhs = add(rhs, outer(sub(matvec(a2x, u), scale(2 * r[i], u)), y));
      rhs = sub(rhs, outer(sub(matvec(a2y, u), scale(2 * r[j], u)), x));
      c1.expect_equal({i, j}, lhs, rhs);
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const Vec xi = unit_vec(n, a), eta = unit_vec(n, b), z = unit_vec(n, k);
        const Vec s2eta_z = apply_op(AD.rho2, eta, z), s2xi_z = apply_op(AD.rho2, xi, z);
        const Vec lhs = scale(D[k](a, b), u);
        const Vec rhs = combine({{-2 * rs[a], s2eta_z},
                                 {-2 * rs[b], apply_op(AD.rho1, xi, z)},
                                 {2 * rs[a], apply_op(AD.rho1, eta, z)},
                                 {2 * rs[b], s2xi_z},
                                 {dot(xi, s2eta_z), u},
                                 {-dot(eta, s2xi_z), u},
                                 {rs[b] * dot(xi, z), u},
                                 {-2 * rs[a] * dot(eta, z), u}},
                                n);
        c2.expect_equal({a, b, k}, lhs, rhs);
      }
  return out;
}

Report crosscheck_bialgebra(const DualPair& dp, bool concurrent) {
  const int n = dp.L.dim;
  auto manin = [&dp, n]() {
    const OmegaLieAlgebra H = double_bracket(dp);
    std::vector<Vec> lo, hi;
    for (int i = 0; i < n; ++i) {
      lo.push_back(unit_vec(2 * n, i));
      hi.push_back(unit_vec(2 * n, n + i));
    }
    return check_manin_triple(H, Subspace::span(2 * n, lo), Subspace::span(2 * n, hi), standard_form(n));
  };
  auto bialg = [&dp]() { return check_mult_bialgebra(dp); };
  auto matched = [&dp]() { return check_matched_pair(dp); };
  Report b, m, t;
  if (concurrent) {
    auto fb = std::async(std::launch::async, bialg);
    auto fm = std::async(std::launch::async, matched);
    auto ft = std::async(std::launch::async, manin);
    b = fb.get();
    m = fm.get();
    t = ft.get();
  } else {
    b = bialg();
    m = matched();
    t = manin();
  }
  Report out("bialgebra / matched pair / Manin triple agreement");
  out.set_meta("bialgebra", b.verdict());
  out.set_meta("matched-pair", m.verdict());
  out.set_meta("manin-triple", t.verdict());
  Clause& agree = out.clause("verdict-agreement", "the three characterizations agree");
  agree.expect_equal({}, Value::flag(b.passed()), Value::flag(m.passed()));
  agree.expect_equal({}, Value::flag(m.passed()), Value::flag(t.passed()));
  out.add_detail("bialgebra", std::move(b));
  out.add_detail("matched-pair", std::move(m));
  out.add_detail("manin-triple", std::move(t));
  return out;
}

}  // namespace omegalie
