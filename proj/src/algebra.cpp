#include "omegalie/algebra.hpp"

#include <string>

#include "omegalie/error.hpp"

namespace omegalie {

namespace {

void require_cubic(const Tensor3& t, int n, const char* what) {
  require_dims(t.dim(0) == n && t.dim(1) == n && t.dim(2) == n,
               std::string(what) + ": structure tensor must be " + std::to_string(n) + "^3");
}

Vec fiber(const Tensor3& t, int i, int j) {
  Vec v(static_cast<std::size_t>(t.dim(2)));
  for (int k = 0; k < t.dim(2); ++k) v[k] = t(i, j, k);
  return v;
}

// [[e_i, e_j], e_k] for a structure tensor (first bracket inner, second outer).
Vec nested(const Tensor3& inner, const Tensor3& outer, int i, int j, int k) {
  const int n = inner.dim(2);
  Vec out = zero_vec(n);
  for (int l = 0; l < n; ++l) {
    const Rat& c = inner(i, j, l);
    if (c == 0) continue;
    for (int m = 0; m < n; ++m)
      if (outer(l, k, m) != 0) out[m] += c * outer(l, k, m);
  }
  return out;
}

void check_anticommutative(const Tensor3& c, Clause& clause) {
  const int n = c.n();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      clause.expect_equal({i, j}, fiber(c, i, j), scale(Rat(-1), fiber(c, j, i)));
}

}  // namespace

Tensor3 antisymmetric_structure(int n, const std::vector<StructureEntry>& entries) {
  Tensor3 c(n);
  Tensor3 seen(n);
  for (const auto& [i, j, k, v] : entries) {
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
      throw Error(ErrorCode::ParseError, "structure entry index out of range");
    if (i == j) {
      if (v != 0) throw Error(ErrorCode::ParseError, "structure entry [e_i, e_i] must vanish");
      continue;
    }
    const int a = i < j ? i : j;
    const int b = i < j ? j : i;
    const Rat value = i < j ? v : Rat(-v);
    if (seen(a, b, k) != 0 && c(a, b, k) != value)
      throw Error(ErrorCode::ParseError, "contradictory structure entries for (" + std::to_string(a + 1) + "," +
                                             std::to_string(b + 1) + "," + std::to_string(k + 1) + ")");
    seen(a, b, k) = 1;
    c(a, b, k) = value;
    c(b, a, k) = -value;
  }
  return c;
}

Mat left_operator(const Tensor3& t, int i) {
  Mat m(t.dim(2), t.dim(1));
  for (int j = 0; j < t.dim(1); ++j)
    for (int k = 0; k < t.dim(2); ++k) m(k, j) = t(i, j, k);
  return m;
}

Vec bilinear(const Tensor3& t, const Vec& x, const Vec& y) {
  require_dims(x.size() == static_cast<std::size_t>(t.dim(0)) && y.size() == static_cast<std::size_t>(t.dim(1)),
               "bilinear: argument length mismatch");
  Vec out = zero_vec(t.dim(2));
  for (int i = 0; i < t.dim(0); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < t.dim(1); ++j) {
      if (y[j] == 0) continue;
      const Rat w = x[i] * y[j];
      for (int k = 0; k < t.dim(2); ++k)
        if (t(i, j, k) != 0) out[k] += w * t(i, j, k);
    }
  }
  return out;
}

// ---- OmegaLieAlgebra -------------------------------------------------------

OmegaLieAlgebra OmegaLieAlgebra::multiplicative(Tensor3 c, Vec r, std::string label) {
  OmegaLieAlgebra L;
  L.dim = c.n();
  require_cubic(c, L.dim, "multiplicative algebra");
  require_dims(r.size() == static_cast<std::size_t>(L.dim), "linear form r has the wrong length");
  L.c = std::move(c);
  L.flavor = Flavor::Multiplicative;
  L.r = std::move(r);
  L.label = std::move(label);
  return L;
}

OmegaLieAlgebra OmegaLieAlgebra::general(Tensor3 c, Mat omega, std::string label) {
  OmegaLieAlgebra L;
  L.dim = c.n();
  require_cubic(c, L.dim, "omega-Lie algebra");
  require_dims(omega.rows() == L.dim && omega.cols() == L.dim, "omega must be n x n");
  L.c = std::move(c);
  L.flavor = Flavor::GeneralOmega;
  L.omega = std::move(omega);
  L.label = std::move(label);
  return L;
}

Vec OmegaLieAlgebra::bracket(int i, int j) const { return fiber(c, i, j); }

Rat OmegaLieAlgebra::r_of(const Vec& x) const {
  if (!is_multiplicative()) throw Error(ErrorCode::Precondition, "algebra has no linear form r");
  return dot(r, x);
}

Rat OmegaLieAlgebra::omega_at(int i, int j) const {
  if (is_multiplicative()) return dot(r, bracket(i, j));
  return omega(i, j);
}

Vec bracket_eval(const OmegaLieAlgebra& L, const Vec& x, const Vec& y) {
  require_dims(x.size() == static_cast<std::size_t>(L.dim) && y.size() == static_cast<std::size_t>(L.dim),
               "bracket_eval: vectors must have the algebra's dimension");
  return bilinear(L.c, x, y);
}

Report check_omega_lie(const OmegaLieAlgebra& L) {
  require_cubic(L.c, L.dim, "check_omega_lie");
  if (L.is_multiplicative())
    require_dims(L.r.size() == static_cast<std::size_t>(L.dim), "linear form r has the wrong length");
  else
    require_dims(L.omega.rows() == L.dim && L.omega.cols() == L.dim, "omega must be n x n");

  Report rep("omega-Lie algebra");
  rep.set_meta("flavor", L.is_multiplicative() ? "multiplicative" : "general-omega");
  Clause& anti = rep.clause("anticommutativity", "[x,x] = 0");
  Clause& jac = rep.clause("omega-jacobi", "[[x,y],z] + cyc = omega(x,y) z + cyc");
  check_anticommutative(L.c, anti);

  const int n = L.dim;
  Mat w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = L.omega_at(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs = add(add(nested(L.c, L.c, i, j, k), nested(L.c, L.c, j, k, i)), nested(L.c, L.c, k, i, j));
        Vec rhs = zero_vec(n);
        rhs[k] += w(i, j);
        rhs[i] += w(j, k);
        rhs[j] += w(k, i);
        jac.expect_equal({i, j, k}, lhs, rhs);
      }
  return rep;
}

std::optional<Vec> infer_r(const OmegaLieAlgebra& L) {
  const int n = L.dim;
  std::vector<Vec> rows;
  Vec rhs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      rows.push_back(L.bracket(i, j));
      rhs.push_back(L.omega_at(i, j));
    }
  if (rows.empty()) return zero_vec(n);
  return solve_linear(Mat::from_rows(rows, n), rhs);
}

// ---- generalized -----------------------------------------------------------

GeneralizedOmegaLieAlgebra GeneralizedOmegaLieAlgebra::from(const OmegaLieAlgebra& L) {
  if (!L.is_multiplicative()) throw Error(ErrorCode::Precondition, "generalized view needs a multiplicative algebra");
  return {L.dim, L.c, L.c, L.r, L.label};
}

Report check_generalized(const GeneralizedOmegaLieAlgebra& G) {
  require_cubic(G.c1, G.dim, "check_generalized (first bracket)");
  require_cubic(G.c2, G.dim, "check_generalized (second bracket)");
  require_dims(G.r.size() == static_cast<std::size_t>(G.dim), "linear form r has the wrong length");
  Report rep("generalized multiplicative omega-Lie algebra");
  Clause& anti = rep.clause("anticommutativity-1", "[x,x]_1 = 0");
  Clause& jac = rep.clause("twisted-jacobi", "[[x,y]_1,z]_2 + cyc = r([x,y]_1) z + cyc");
  check_anticommutative(G.c1, anti);
  const int n = G.dim;
  auto w = [&](int i, int j) { return dot(G.r, fiber(G.c1, i, j)); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs = add(add(nested(G.c1, G.c2, i, j, k), nested(G.c1, G.c2, j, k, i)), nested(G.c1, G.c2, k, i, j));
        Vec rhs = zero_vec(n);
        rhs[k] += w(i, j);
        rhs[i] += w(j, k);
        rhs[j] += w(k, i);
        jac.expect_equal({i, j, k}, lhs, rhs);
      }
  return rep;
}

// ---- distinguished subspaces -----------------------------------------------

Subspace center(const OmegaLieAlgebra& L) {
  const int n = L.dim;
  // Row (j, k), column i: coefficient of x_i in [x, e_j]_k.
  Mat m(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) m(j * n + k, i) = L.c(i, j, k);
  return nullspace(m);
}

Subspace center(const OmegaLieAlgebra& L, CenterRule rule) {
  return rule == CenterRule::Center ? center(L) : Subspace::zero(L.dim);
}

Subspace admissible_subspace(const OmegaLieAlgebra& L) {
  if (!L.is_multiplicative()) throw Error(ErrorCode::Precondition, "admissible subspace needs a linear form r");
  const int n = L.dim;
  Mat m(n + 1, n);
  for (int i = 0; i < n; ++i) m(0, i) = L.r[i];
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(j + 1, i) = dot(L.r, L.bracket(i, j));
  return nullspace(m);
}

// ---- left-symmetric --------------------------------------------------------

LeftSymmetricAlgebra LeftSymmetricAlgebra::plain(Tensor3 a, std::string label) {
  LeftSymmetricAlgebra V;
  V.dim = a.n();
  require_cubic(a, V.dim, "left-symmetric algebra");
  V.a = std::move(a);
  V.label = std::move(label);
  return V;
}

LeftSymmetricAlgebra LeftSymmetricAlgebra::general(Tensor3 a, Mat omega, std::string label) {
  LeftSymmetricAlgebra V = plain(std::move(a), std::move(label));
  require_dims(omega.rows() == V.dim && omega.cols() == V.dim, "omega must be n x n");
  V.flavor = LsaFlavor::GeneralOmega;
  V.omega = std::move(omega);
  return V;
}

LeftSymmetricAlgebra LeftSymmetricAlgebra::multiplicative(Tensor3 a, Vec r, std::string label) {
  LeftSymmetricAlgebra V = plain(std::move(a), std::move(label));
  require_dims(r.size() == static_cast<std::size_t>(V.dim), "linear form r has the wrong length");
  V.flavor = LsaFlavor::Multiplicative;
  V.r = std::move(r);
  return V;
}

Vec LeftSymmetricAlgebra::product(int i, int j) const { return fiber(a, i, j); }

Rat LeftSymmetricAlgebra::omega_at(int i, int j) const {
  switch (flavor) {
    case LsaFlavor::Plain: return Rat(0);
    case LsaFlavor::GeneralOmega: return omega(i, j);
    case LsaFlavor::Multiplicative: return dot(r, product(i, j)) - dot(r, product(j, i));
  }
  return Rat(0);
}

Report check_lsa(const LeftSymmetricAlgebra& V) {
  require_cubic(V.a, V.dim, "check_lsa");
  const int n = V.dim;
  Report rep("omega-left-symmetric algebra");
  rep.set_meta("flavor", V.flavor == LsaFlavor::Plain           ? "plain"
                         : V.flavor == LsaFlavor::GeneralOmega ? "general-omega"
                                                                : "multiplicative");
  Clause& ls = rep.clause("left-symmetry", "(u.v).w - u.(v.w) - (v.u).w + v.(u.w) = omega(u,v) w");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs = nested(V.a, V.a, i, j, k);
        lhs = sub(lhs, bilinear(V.a, unit_vec(n, i), V.product(j, k)));
        lhs = sub(lhs, nested(V.a, V.a, j, i, k));
        lhs = add(lhs, bilinear(V.a, unit_vec(n, j), V.product(i, k)));
        Vec rhs = zero_vec(n);
        rhs[k] = V.omega_at(i, j);
        ls.expect_equal({i, j, k}, lhs, rhs);
      }
  // A multiplicative product may also carry an explicit omega; it must then be r's coboundary.
  if (V.flavor == LsaFlavor::Multiplicative && V.omega.rows() == n && V.omega.cols() == n) {
    Clause& cob = rep.clause("multiplicative-omega", "omega(u,v) = r(u.v) - r(v.u)");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cob.expect_equal({i, j}, V.omega(i, j), V.omega_at(i, j));
  }
  return rep;
}

OmegaLieAlgebra subadjacent(const LeftSymmetricAlgebra& V) {
  require_pass(check_lsa(V), "subadjacent: input is not an omega-left-symmetric algebra");
  const int n = V.dim;
  Tensor3 c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c(i, j, k) = V.a(i, j, k) - V.a(j, i, k);
  OmegaLieAlgebra L;
  switch (V.flavor) {
    case LsaFlavor::Plain: L = OmegaLieAlgebra::multiplicative(std::move(c), zero_vec(n), V.label); break;
    case LsaFlavor::GeneralOmega: L = OmegaLieAlgebra::general(std::move(c), V.omega, V.label); break;
    case LsaFlavor::Multiplicative: L = OmegaLieAlgebra::multiplicative(std::move(c), V.r, V.label); break;
  }
  require_pass(check_omega_lie(L), "subadjacent: commutator algebra fails the omega-Jacobi identity");
  return L;
}

}  // namespace omegalie
