#include "omegalie/yang_baxter.hpp"

#include <optional>
#include <string>

#include "omegalie/error.hpp"

namespace omegalie {

namespace {

void require_ctx(const YbeContext& ctx, const TwoTensor& R) {
  const int n = ctx.L.dim;
  require_dims(ctx.u_r.size() == static_cast<std::size_t>(n), "u_r has the wrong length");
  require_dims(R.rows() == n && R.cols() == n, "two-tensor must be n x n");
}

Tensor3 cyclic(const Tensor3& X) {
  const int n = X.n();
  Tensor3 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(i, j, k) = X(i, j, k) + X(k, i, j) + X(j, k, i);
  return out;
}

}  // namespace

const char* to_string(JacScope scope) {
  return scope == JacScope::AllSummands ? "all-summands" : "first-summand";
}

const char* to_string(CenterRule rule) { return rule == CenterRule::Center ? "center" : "zero"; }

bool is_skew(const TwoTensor& R) { return R.rows() == R.cols() && add(R, transpose(R)).is_zero(); }

Report check_r_admissible(const YbeContext& ctx, const TwoTensor& R) {
  require_ctx(ctx, R);
  Report out("admissibility");
  out.set_meta("center-rule", to_string(ctx.center_rule));
  const Subspace W = admissible_subspace(ctx.L);
  const Mat A = W.annihilator();
  Clause& comp = out.clause("components-in-W", "components lie in ker r and satisfy r o ad1 = 0");
  if (A.rows() > 0) {
    comp.expect_equal({0}, matmul(A, R), Mat(A.rows(), R.cols()));
    comp.expect_equal({1}, matmul(R, transpose(A)), Mat(R.rows(), A.rows()));
  }
  Clause& cen = out.clause("u_r-central", "u_r lies in C(L)");
  cen.expect(center(ctx.L, ctx.center_rule).contains(ctx.u_r));
  return out;
}

Tensor3 yb_residual(const YbeContext& ctx, const TwoTensor& R) {
  require_ctx(ctx, R);
  const int n = ctx.L.dim;
  const Tensor3& c = ctx.L.c;
  const Vec& u = ctx.u_r;
  Tensor3 T(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const Rat& cab = c(a, b, k);
        if (cab == 0) continue;
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            if (R(a, p) != 0 && R(b, q) != 0) T(k, p, q) += R(a, p) * R(b, q) * cab;
            if (R(p, a) != 0 && R(b, q) != 0) T(p, k, q) += R(p, a) * R(b, q) * cab;
            if (R(p, a) != 0 && R(q, b) != 0) T(p, q, k) += R(p, a) * R(q, b) * cab;
          }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (R(a, b) == 0) continue;
      for (int s = 0; s < n; ++s) {
        if (u[s] == 0) continue;
        const Rat w = 3 * R(a, b) * u[s];
        T(b, a, s) += w;  // y (x) x (x) u
        T(a, s, b) += w;  // x (x) u (x) y
        T(s, b, a) += w;  // u (x) y (x) x
      }
    }
  return T;
}

Cobracket delta_from_r(const YbeContext& ctx, const TwoTensor& R) {
  require_ctx(ctx, R);
  const int n = ctx.L.dim;
  const Tensor3& c = ctx.L.c;
  const Vec& u = ctx.u_r;
  Cobracket D(static_cast<std::size_t>(n), Mat(n, n));
  for (int k = 0; k < n; ++k)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        Rat acc = 0;
        for (int a = 0; a < n; ++a) {
          if (c(k, a, p) != 0) acc += c(k, a, p) * R(a, q);
          if (c(k, a, q) != 0) acc += R(p, a) * c(k, a, q);
        }
        if (k == p) acc -= 2 * u[q];
        if (k == q) acc += u[p];
        D[k](p, q) = acc;
      }
  return D;
}

Tensor3 jac_delta(const Vec& u_r, const Cobracket& D, int x, JacScope scope) {
  const int n = static_cast<int>(u_r.size());
  require_dims(D.size() == u_r.size() && x >= 0 && x < n, "jac_delta: shape mismatch");
  const Mat& Dx = D[x];
  Tensor3 first(n);  // (id (x) Delta) Delta(x)
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (Dx(p, q) == 0) continue;
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          if (D[q](s, t) != 0) first(p, s, t) += Dx(p, q) * D[q](s, t);
    }
  Tensor3 rest(n);  // 2 sigma(Delta x) (x) u + u (x) Delta x + 2 u (x) u (x) x
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int t = 0; t < n; ++t)
        rest(p, q, t) = 2 * Dx(q, p) * u_r[t] + u_r[p] * Dx(q, t) + (t == x ? 2 * u_r[p] * u_r[q] : Rat(0));
  if (scope == JacScope::FirstSummand) return add(cyclic(first), rest);
  return cyclic(add(first, rest));
}

Tensor3 ad_x_t3(const OmegaLieAlgebra& L, int x, const Tensor3& T) {
  const int n = L.dim;
  require_dims(T.cubic() && T.n() == n && x >= 0 && x < n, "ad_x_t3: shape mismatch");
  Tensor3 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Rat& t = T(i, j, k);
        if (t == 0) continue;
        for (int m = 0; m < n; ++m) {
          if (L.c(x, i, m) != 0) out(m, j, k) += L.c(x, i, m) * t;
          if (L.c(x, j, m) != 0) out(i, m, k) += L.c(x, j, m) * t;
          if (L.c(x, k, m) != 0) out(i, j, m) += L.c(x, k, m) * t;
        }
      }
  return out;
}

namespace {

// [x, R + sigma(R)]_L for every basis x, as a cobracket with u_r = 0.
Cobracket symmetric_part_action(const YbeContext& ctx, const TwoTensor& R) {
  YbeContext plain{ctx.L, zero_vec(ctx.L.dim), ctx.center_rule};
  return delta_from_r(plain, add(R, transpose(R)));
}

}  // namespace

Report check_lemma42(const YbeContext& ctx, const TwoTensor& R, JacScope scope) {
  require_ctx(ctx, R);
  const int n = ctx.L.dim;
  Report out("co-Jacobiator versus ad_x [R,R]");
  out.set_meta("jac-scope", to_string(scope));
  const Cobracket S = symmetric_part_action(ctx, R);
  const Cobracket D = delta_from_r(ctx, R);
  const Tensor3 T = yb_residual(ctx, R);
  Clause& eq = out.clause("jac-equals-ad", "Jac_Delta(x) = ad_x [R,R]_L where [x, R + sigma R] = 0");
  std::string applies;
  for (int x = 0; x < n; ++x) {
    if (!S[x].is_zero()) continue;
    applies += (applies.empty() ? "" : ",") + std::to_string(x + 1);
    eq.expect_equal({x}, jac_delta(ctx.u_r, D, x, scope), ad_x_t3(ctx.L, x, T));
  }
  out.set_meta("hypothesis-holds-at", applies.empty() ? "none" : applies);
  return out;
}

OmegaLieAlgebra dual_structure_from_r(const YbeContext& ctx, const TwoTensor& R) {
  const int n = ctx.L.dim;
  const Cobracket D = delta_from_r(ctx, R);
  const Vec& u = ctx.u_r;
  Tensor3 cs(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        cs(i, j, k) = D[k](i, j) - (i == k ? u[j] : Rat(0)) + (j == k ? 2 * u[i] : Rat(0));
  return OmegaLieAlgebra::multiplicative(std::move(cs), u, "dual-from-R");
}

Report check_dual_conditions(const YbeContext& ctx, const TwoTensor& R) {
  require_ctx(ctx, R);
  const int n = ctx.L.dim;
  Report out("dual-structure conditions");
  Clause& inv = out.clause("invariance", "[x, R + sigma(R)]_L = 0");
  Clause& adr = out.clause("ad-invariance", "ad_x [R,R]_L = 0");
  const Cobracket S = symmetric_part_action(ctx, R);
  const Tensor3 T = yb_residual(ctx, R);
  for (int x = 0; x < n; ++x) {
    inv.expect_equal({x}, S[x], Mat(n, n));
    adr.expect_equal({x}, ad_x_t3(ctx.L, x, T), Tensor3(n));
  }
  return out;
}

Report check_yb_bialgebra(const YbeContext& ctx, const TwoTensor& R) {
  require_ctx(ctx, R);
  const OmegaLieAlgebra& L = ctx.L;
  if (!L.is_multiplicative()) throw Error(ErrorCode::Precondition, "Yang-Baxter bialgebra needs r");
  const int n = L.dim;
  const Vec& r = L.r;
  const Vec& u = ctx.u_r;
  const Cobracket D = delta_from_r(ctx, R);
  const GenRepPair ad = adjoint_pair(L);
  const Mat id = Mat::identity(n);
  const Rat ru = dot(r, u);
  auto act = [](const Mat& a, const Mat& b, const Mat& m) { return matmul(matmul(a, m), transpose(b)); };

  Report out("Yang-Baxter bialgebra");
  Clause& cl = out.clause("compatibility", "Delta[x,y] via ad2, R and u_r");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec x = unit_vec(n, i), y = unit_vec(n, j);
      const Vec xy = L.bracket(i, j);
      const Mat& a2x = ad.rho2[i];
      const Mat& a2y = ad.rho2[j];
      const Mat lhs = delta_at(D, xy);
      Mat rhs = add(act(a2x, id, D[j]), act(id, a2x, D[j]));
      rhs = sub(rhs, add(act(a2y, id, D[i]), act(id, a2y, D[i])));
      axpy(-2 * dot(r, L.bracket(j, i)), R, rhs);
      axpy(2 * r[j], outer(x, u), rhs);
      axpy(-2 * r[i], outer(y, u), rhs);
      axpy(Rat(-1), outer(u, xy), rhs);
      axpy(-r[j], outer(u, x), rhs);
      axpy(r[i], outer(u, y), rhs);
      axpy(Rat(2), outer(xy, u), rhs);
      axpy(3 * ru, outer(y, x), rhs);
      axpy(-3 * ru, outer(x, y), rhs);
      cl.expect_equal({i, j}, lhs, rhs);
    }
  return out;
}

Report crosscheck_dual_structure(const YbeContext& ctx, const TwoTensor& R) {
  Report conditions = check_dual_conditions(ctx, R);
  const OmegaLieAlgebra Ls = dual_structure_from_r(ctx, R);
  Report omega = check_omega_lie(Ls);
  Report bialg = check_yb_bialgebra(ctx, R);
  Report out("dual structure from R");
  out.set_meta("conditions", conditions.verdict());
  out.set_meta("dual-omega-lie", omega.verdict());
  out.set_meta("yb-bialgebra", bialg.verdict());
  out.clause("verdict-agreement", "dual structure is omega-Lie iff both conditions hold")
      .expect_equal({}, Value::flag(conditions.passed()), Value::flag(omega.passed()));
  Clause& bc = out.clause("bialgebra-when-valid", "both conditions imply the compatibility identity");
  if (conditions.passed()) bc.expect(bialg.passed());
  out.add_detail("conditions", std::move(conditions));
  out.add_detail("dual-omega-lie", std::move(omega));
  out.add_detail("yb-bialgebra", std::move(bialg));
  return out;
}

// ---- tensor form -----------------------------------------------------------

namespace {

struct Slot {
  bool unit = false;
  Vec v;  // meaningful when !unit
};

class TensorFormExpander {
 public:
  TensorFormExpander(const YbeContext& ctx, std::size_t s)
      : ctx_(ctx), n_(ctx.L.dim), weight_(Rat(3) / Rat(2 * static_cast<long>(s))) {
    for (int mask = 0; mask < 8; ++mask)
      result_.parts[mask] = Tensor3(mask & 1 ? 1 : n_, mask & 2 ? 1 : n_, mask & 4 ? 1 : n_);
  }

  // [a (x) b (x) c, d (x) e (x) f] with the literal substitution rules.
  void bracket(const std::array<Slot, 3>& l, const std::array<Slot, 3>& r) {
    const Slot& a = l[0]; const Slot& b = l[1]; const Slot& c = l[2];
    const Slot& d = r[0]; const Slot& e = r[1]; const Slot& f = r[2];
    emit(Rat(1), lie(a, d), b, f);
    emit(Rat(1), a, lie(b, e), f);
    emit(Rat(1), a, e, lie(c, f));
    const Slot u{false, ctx_.u_r};
    emit(weight_, lie(a, u), b, c);
    emit(weight_, a, lie(b, u), c);
    emit(weight_, b, a, lie(c, u));
    emit(weight_, lie(d, u), f, e);
    emit(weight_, d, lie(e, u), f);
    emit(weight_, d, e, lie(f, u));
  }

  TensorFormResult take() { return std::move(result_); }

 private:
  // [1, u_r] = u_r, [1, h] = 0 otherwise (literal comparison), [h, 1] = -[1, h], [1, 1] = 0.
  Slot lie(const Slot& x, const Slot& y) const {
    if (x.unit && y.unit) return {false, zero_vec(n_)};
    if (x.unit) return {false, y.v == ctx_.u_r ? ctx_.u_r : zero_vec(n_)};
    if (y.unit) return {false, x.v == ctx_.u_r ? scale(Rat(-1), ctx_.u_r) : zero_vec(n_)};
    return {false, bracket_eval(ctx_.L, x.v, y.v)};
  }

  void emit(const Rat& w, const Slot& s0, const Slot& s1, const Slot& s2) {
    const Slot* slots[3] = {&s0, &s1, &s2};
    int mask = 0;
    for (int t = 0; t < 3; ++t) {
      if (slots[t]->unit) mask |= 1 << t;
      else if (is_zero(slots[t]->v)) return;
    }
    Tensor3& out = result_.parts[mask];
    auto coord = [&](int t, int idx) -> Rat { return slots[t]->unit ? Rat(1) : slots[t]->v[idx]; };
    for (int i = 0; i < out.dim(0); ++i)
      for (int j = 0; j < out.dim(1); ++j)
        for (int k = 0; k < out.dim(2); ++k) out(i, j, k) += w * coord(0, i) * coord(1, j) * coord(2, k);
  }

  const YbeContext& ctx_;
  int n_;
  Rat weight_;
  TensorFormResult result_;
};

}  // namespace

bool TensorFormResult::unit_part_zero() const {
  for (int mask = 1; mask < 8; ++mask)
    if (!parts[mask].is_zero()) return false;
  return true;
}

TensorFormResult tensor_form_residual(const YbeContext& ctx, const TwoTensor& R, const Decomposition& decomposition) {
  require_ctx(ctx, R);
  if (decomposition.empty()) throw Error(ErrorCode::EmptyDecomposition, "tensor form needs at least one summand");
  const int n = ctx.L.dim;
  Mat total(n, n);
  for (const auto& [x, y] : decomposition) {
    require_dims(x.size() == static_cast<std::size_t>(n) && y.size() == static_cast<std::size_t>(n),
                 "decomposition vectors have the wrong length");
    total = add(total, outer(x, y));
  }
  if (!(total == R)) throw Error(ErrorCode::Precondition, "decomposition does not sum to R");

  const Slot one{true, {}};
  std::vector<std::array<Slot, 3>> r12, r13, r23;
  for (const auto& [x, y] : decomposition) {
    const Slot sx{false, x}, sy{false, y};
    r12.push_back({sx, sy, one});
    r13.push_back({sx, one, sy});
    r23.push_back({one, sx, sy});
  }
  TensorFormExpander ex(ctx, decomposition.size());
  for (std::size_t i = 0; i < decomposition.size(); ++i)
    for (std::size_t j = 0; j < decomposition.size(); ++j) {
      ex.bracket(r12[i], r13[j]);
      ex.bracket(r12[i], r23[j]);
      ex.bracket(r13[i], r23[j]);
    }
  return ex.take();
}

}  // namespace omegalie
