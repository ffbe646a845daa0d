#include "omegalie/representation.hpp"

#include <string>

#include "omegalie/error.hpp"

namespace omegalie {

namespace {

void require_family(const OperatorFamily& family, int n, int m, const char* what) {
  require_dims(family.size() == static_cast<std::size_t>(n),
               std::string(what) + ": expected " + std::to_string(n) + " operators");
  for (const auto& op : family)
    require_dims(op.rows() == m && op.cols() == m,
                 std::string(what) + ": operators must be " + std::to_string(m) + "x" + std::to_string(m));
}

Vec fiber(const Tensor3& t, int i, int j) {
  Vec v(static_cast<std::size_t>(t.dim(2)));
  for (int k = 0; k < t.dim(2); ++k) v[k] = t(i, j, k);
  return v;
}

Mat commutator_term(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  return sub(matmul(a, b), matmul(c, d));
}

// Representation-I shaped identity: rho1([x,y]) = rho2(x)rho1(y) - rho2(y)rho1(x) + r([x,y]) id.
void rep_I_identity(const Tensor3& c, const Vec& r, const OperatorFamily& rho1, const OperatorFamily& rho2,
                    int m, Clause& clause) {
  const int n = c.n();
  const Mat id = Mat::identity(m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec xy = fiber(c, i, j);
      Mat rhs = commutator_term(rho2[i], rho1[j], rho2[j], rho1[i]);
      axpy(dot(r, xy), id, rhs);
      clause.expect_equal({i, j}, evaluate(rho1, xy), rhs);
    }
}

// The r-weighted combination shared by the Representation II and f identities.
Mat twisted_terms(const Vec& r, const OperatorFamily& rho1, const OperatorFamily& rho2, int i, int j, int m) {
  Mat out(m, m);
  axpy(2 * r[i], rho1[j], out);
  axpy(-2 * r[j], rho1[i], out);
  axpy(-2 * r[i], rho2[j], out);
  axpy(2 * r[j], rho2[i], out);
  return out;
}

void rep_II_identity(const Tensor3& c, const Vec& r, const OperatorFamily& rho1, const OperatorFamily& rho2,
                     int m, Clause& clause) {
  const int n = c.n();
  const Mat id = Mat::identity(m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec xy = fiber(c, i, j);
      Mat rhs = commutator_term(rho1[i], rho2[j], rho1[j], rho2[i]);
      axpy(dot(r, xy), id, rhs);
      rhs = add(rhs, twisted_terms(r, rho1, rho2, i, j, m));
      clause.expect_equal({i, j}, evaluate(rho1, xy), rhs);
    }
}

OperatorFamily dual_family(const OperatorFamily& rho, const Vec& r) {
  OperatorFamily out;
  out.reserve(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    Mat d = scale(Rat(-1), transpose(rho[i]));
    for (int a = 0; a < d.rows(); ++a) d(a, a) += 2 * r[i];
    out.push_back(std::move(d));
  }
  return out;
}

// Structure tensors of L + V where x acts on V through `left` (for [x, v]) and
// `right` (for [v, y] = -right(y) v).
void embed_action(Tensor3& c, int n, int m, const OperatorFamily& left, const OperatorFamily& right) {
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        c(i, n + a, n + b) += left[i](b, a);
        c(n + a, i, n + b) -= right[i](b, a);
      }
}

void embed_base(Tensor3& c, const Tensor3& base) {
  const int n = base.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c(i, j, k) = base(i, j, k);
}

Vec extend_by_zero(const Vec& r, int m) {
  Vec out(r);
  out.resize(r.size() + static_cast<std::size_t>(m), Rat(0));
  return out;
}

}  // namespace

Mat evaluate(const OperatorFamily& family, const Vec& x) {
  require_dims(family.size() == x.size(), "evaluate: family size differs from vector length");
  require_dims(!family.empty(), "evaluate: empty operator family");
  Mat out(family[0].rows(), family[0].cols());
  for (std::size_t i = 0; i < x.size(); ++i) axpy(x[i], family[i], out);
  return out;
}

const char* to_string(GenKind kind) {
  switch (kind) {
    case GenKind::GenI: return "GenI";
    case GenKind::GenII: return "GenII";
    case GenKind::AssociatedGenII: return "AssociatedGenII";
  }
  return "?";
}

Report check_representation(const Representation& rep) {
  const OmegaLieAlgebra& L = rep.algebra;
  require_family(rep.rho, L.dim, rep.m, "check_representation");
  Report out("representation");
  Clause& cl = out.clause("representation", "rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) + omega(x,y) id");
  const Mat id = Mat::identity(rep.m);
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      Mat rhs = commutator_term(rep.rho[i], rep.rho[j], rep.rho[j], rep.rho[i]);
      axpy(L.omega_at(i, j), id, rhs);
      cl.expect_equal({i, j}, evaluate(rep.rho, L.bracket(i, j)), rhs);
    }
  return out;
}

Representation dual_representation(const Representation& rep) {
  if (!rep.algebra.is_multiplicative())
    throw Error(ErrorCode::Precondition, "dual representation needs a multiplicative algebra");
  require_pass(check_representation(rep), "dual_representation: input is not a representation");
  Representation out{rep.algebra, rep.m, dual_family(rep.rho, rep.algebra.r), rep.label.empty() ? "" : rep.label + "*"};
  require_pass(check_representation(out), "dual_representation: dual fails the representation identity");
  return out;
}

Report check_gen_rep(const GenRepPair& pair) { return check_gen_rep(pair, pair.kind); }

Report check_gen_rep(const GenRepPair& pair, GenKind kind) {
  const OmegaLieAlgebra& L = pair.algebra;
  if (!L.is_multiplicative()) throw Error(ErrorCode::Precondition, "generalized representations need r");
  require_family(pair.rho1, L.dim, pair.m, "check_gen_rep (rho1)");
  require_family(pair.rho2, L.dim, pair.m, "check_gen_rep (rho2)");
  Report out(std::string("generalized representation ") + to_string(kind));
  if (kind == GenKind::GenI) {
    rep_I_identity(L.c, L.r, pair.rho1, pair.rho2, pair.m,
                   out.clause("gen-I", "rho1([x,y]) = rho2(x)rho1(y) - rho2(y)rho1(x) + r([x,y]) id"));
    return out;
  }
  rep_II_identity(L.c, L.r, pair.rho1, pair.rho2, pair.m,
                  out.clause("gen-II", "rho1([x,y]) = rho1(x)rho2(y) - rho1(y)rho2(x) + r([x,y]) id + twisted r-terms"));
  if (kind == GenKind::AssociatedGenII) {
    Clause& cl = out.clause("associated", "rho2(x)(xi) = rho1(x)(xi) - xi(x) r, carrier = dual space");
    if (!cl.expect(pair.m == L.dim)) return out;
    for (int i = 0; i < L.dim; ++i) {
      Mat expected(pair.rho1[i]);
      for (int b = 0; b < L.dim; ++b) expected(b, i) -= L.r[b];
      cl.expect_equal({i}, pair.rho2[i], expected);
    }
  }
  return out;
}

GenRepPair adjoint_pair(const OmegaLieAlgebra& L) {
  if (!L.is_multiplicative()) throw Error(ErrorCode::Precondition, "adjoint pair needs a multiplicative algebra");
  GenRepPair pair{L, L.dim, {}, {}, GenKind::GenI, "adjoint"};
  for (int i = 0; i < L.dim; ++i) {
    Mat ad1 = left_operator(L.c, i);
    Mat ad2(ad1);
    for (int j = 0; j < L.dim; ++j) ad2(i, j) += L.r[j];
    pair.rho1.push_back(std::move(ad1));
    pair.rho2.push_back(std::move(ad2));
  }
  require_pass(check_gen_rep(pair), "adjoint_pair: generalized adjoint fails the GenI identity");
  return pair;
}

GenRepPair generalized_dual_pair(const GenRepPair& pair) {
  require_pass(check_gen_rep(pair, GenKind::GenI), "generalized_dual_pair: input is not a GenI pair");
  const Vec& r = pair.algebra.r;
  GenRepPair out{pair.algebra, pair.m, dual_family(pair.rho1, r), dual_family(pair.rho2, r), GenKind::GenII,
                 pair.label.empty() ? "" : pair.label + "*"};
  require_pass(check_gen_rep(out), "generalized_dual_pair: dual fails the GenII identity");
  return out;
}

OmegaLieAlgebra semidirect_rep(const OmegaLieAlgebra& L, const Representation& rep) {
  require_pass(check_representation(rep), "semidirect_rep: input is not a representation");
  const int n = L.dim;
  const int m = rep.m;
  Tensor3 c(n + m);
  embed_base(c, L.c);
  embed_action(c, n, m, rep.rho, rep.rho);
  OmegaLieAlgebra H;
  if (L.is_multiplicative()) {
    H = OmegaLieAlgebra::multiplicative(std::move(c), extend_by_zero(L.r, m));
  } else {
    Mat w(n + m, n + m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w(i, j) = L.omega(i, j);
    H = OmegaLieAlgebra::general(std::move(c), std::move(w));
  }
  require_pass(check_omega_lie(H), "semidirect_rep: product fails the omega-Jacobi identity");
  return H;
}

Report check_rep_I(const GeneralizedOmegaLieAlgebra& G, const OperatorFamily& rho1, const OperatorFamily& rho2) {
  require_dims(!rho1.empty() || G.dim == 0, "check_rep_I: empty family");
  const int m = rho1.empty() ? 0 : rho1[0].rows();
  require_family(rho1, G.dim, m, "check_rep_I (rho1)");
  require_family(rho2, G.dim, m, "check_rep_I (rho2)");
  Report out("representation I");
  rep_I_identity(G.c1, G.r, rho1, rho2, m,
                 out.clause("rep-I", "rho1([x,y]_1) = rho2(x)rho1(y) - rho2(y)rho1(x) + r([x,y]_1) id"));
  return out;
}

Report check_special_rep_II(const GeneralizedOmegaLieAlgebra& G, const OperatorFamily& rho1,
                            const OperatorFamily& rho2, const OperatorFamily& f) {
  require_dims(!rho1.empty() || G.dim == 0, "check_special_rep_II: empty family");
  const int m = rho1.empty() ? 0 : rho1[0].rows();
  require_family(rho1, G.dim, m, "check_special_rep_II (rho1)");
  require_family(rho2, G.dim, m, "check_special_rep_II (rho2)");
  require_family(f, G.dim, m, "check_special_rep_II (f)");
  Report out("special representation II");
  rep_II_identity(G.c1, G.r, rho1, rho2, m,
                  out.clause("rep-II", "rho1([x,y]_1) = rho1(x)rho2(y) - rho1(y)rho2(x) + r([x,y]_1) id + twisted r-terms"));
  Clause& fc = out.clause("f-identity", "f([x,y]_1) = 2r(x)rho1(y) - 2r(y)rho1(x) - 2r(x)rho2(y) + 2r(y)rho2(x)");
  for (int i = 0; i < G.dim; ++i)
    for (int j = 0; j < G.dim; ++j)
      fc.expect_equal({i, j}, evaluate(f, fiber(G.c1, i, j)), twisted_terms(G.r, rho1, rho2, i, j, m));
  return out;
}

std::optional<OperatorFamily> solve_special_f(const GeneralizedOmegaLieAlgebra& G, const OperatorFamily& rho1,
                                              const OperatorFamily& rho2) {
  const int n = G.dim;
  const int m = rho1.empty() ? 0 : rho1[0].rows();
  require_family(rho1, n, m, "solve_special_f (rho1)");
  require_family(rho2, n, m, "solve_special_f (rho2)");
  std::vector<Vec> rows;
  std::vector<Mat> targets;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rows.push_back(fiber(G.c1, i, j));
      targets.push_back(twisted_terms(G.r, rho1, rho2, i, j, m));
    }
  const Mat a = Mat::from_rows(rows, n);
  OperatorFamily f(static_cast<std::size_t>(n), Mat(m, m));
  // One linear system per matrix entry: sum_l c1(i,j,l) f_l(a,b) = target_ij(a,b).
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      Vec b;
      for (const auto& t : targets) b.push_back(t(p, q));
      auto x = solve_linear(a, b);
      if (!x) return std::nullopt;
      for (int l = 0; l < n; ++l) f[l](p, q) = (*x)[l];
    }
  return f;
}

GeneralizedConstruction semidirect_gen_I(const GeneralizedOmegaLieAlgebra& G, const OperatorFamily& rho1,
                                         const OperatorFamily& rho2) {
  Report input = check_rep_I(G, rho1, rho2);
  const int n = G.dim;
  const int m = rho1.empty() ? 0 : rho1[0].rows();
  GeneralizedOmegaLieAlgebra H{n + m, Tensor3(n + m), Tensor3(n + m), extend_by_zero(G.r, m), G.label};
  embed_base(H.c1, G.c1);
  embed_base(H.c2, G.c2);
  embed_action(H.c1, n, m, rho1, rho1);
  embed_action(H.c2, n, m, rho1, rho2);
  Report output = check_generalized(H);
  return {std::move(H), std::move(input), std::move(output)};
}

GeneralizedConstruction semidirect_special_II(const GeneralizedOmegaLieAlgebra& G, const OperatorFamily& rho1,
                                              const OperatorFamily& rho2, const OperatorFamily& f) {
  Report input = check_special_rep_II(G, rho1, rho2, f);
  const int n = G.dim;
  const int m = rho1.empty() ? 0 : rho1[0].rows();
  GeneralizedOmegaLieAlgebra H{n + m, Tensor3(n + m), Tensor3(n + m), extend_by_zero(G.r, m), G.label};
  embed_base(H.c1, G.c1);
  embed_base(H.c2, G.c2);
  embed_action(H.c1, n, m, rho2, rho2);
  OperatorFamily shifted;
  for (int i = 0; i < n; ++i) shifted.push_back(sub(rho1[i], f[i]));
  embed_action(H.c2, n, m, shifted, rho1);
  Report output = check_generalized(H);
  return {std::move(H), std::move(input), std::move(output)};
}

}  // namespace omegalie
