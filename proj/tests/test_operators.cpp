#include "doctest.h"
#include "support.hpp"

using namespace omegalie;
using fx::mat;
using fx::vec;

namespace {

Representation e1_rep() {
  const LsaOmegaLie A = omega_lie_from_lsa(fx::e1_lsa(), Rat(1));
  return rep_from_lsa(A.algebra, fx::e1_lsa());
}

/// Every n x m matrix with entries in {-1,0,1}.
std::vector<Mat> all_maps(int n, int m) {
  std::vector<Mat> out;
  const int cells = n * m;
  std::vector<int> d(static_cast<std::size_t>(cells), -1);
  while (true) {
    Mat T(n, m);
    for (int k = 0; k < cells; ++k) T(k / m, k % m) = d[k];
    out.push_back(T);
    int k = 0;
    while (k < cells && d[k] == 1) d[k++] = -1;
    if (k == cells) break;
    ++d[k];
  }
  return out;
}

/// Brute-force O-operator identity written against raw coefficients.
bool oracle_o_operator(const Representation& rep, const Mat& T) {
  const OmegaLieAlgebra& L = rep.algebra;
  const int n = L.dim, m = rep.m;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      for (int k = 0; k < n; ++k) {
        Rat lhs = 0, rhs = 0, ru = 0, rv = 0;
        for (int a = 0; a < n; ++a) {
          ru += L.r[a] * T(a, u);
          rv += L.r[a] * T(a, v);
          for (int b = 0; b < n; ++b) lhs += T(a, u) * T(b, v) * L.c(a, b, k);
        }
        for (int w = 0; w < m; ++w)
          for (int a = 0; a < n; ++a) rhs += T(k, w) * (T(a, u) * rep.rho[a](w, v) - T(a, v) * rep.rho[a](w, u));
        rhs += 2 * rv * T(k, u) - 2 * ru * T(k, v);
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("check_o_operator examples") {
  CHECK(check_o_operator(fx::rep(fx::b2(), {mat({{0}}), mat({{1}})}), Mat(2, 1)).passed());
  CHECK(check_o_operator(fx::rep(fx::ax2(), {mat({{1}}), mat({{0}})}), Mat(2, 1)).passed());
  CHECK(check_o_operator(e1_rep(), Mat::identity(1)).passed());
  const Report b = check_o_operator(fx::rep(fx::b2(), fx::zeros(2, 2)), Mat::identity(2));
  CHECK_FALSE(b.passed());
  CHECK(b.find("o-operator")->violations.front().indices == std::vector<int>{0, 1});
  CHECK_THROWS_AS(check_o_operator(fx::rep(fx::b2(), fx::zeros(2, 2)), Mat::identity(3)), Error);
  CHECK_THROWS_AS(check_o_operator(fx::rep(fx::ax2(), fx::zeros(2, 1)), Mat(2, 1)), AxiomViolation);
}

TEST_CASE("check_o_operator_gen examples") {
  const auto nc2r = LeftSymmetricAlgebra::multiplicative(fx::nc2().a, vec({1, 0}), "NC2r");
  const GenRepPair p = genrep_from_lsa(nc2r);
  CHECK(check_o_operator_gen(p, Mat::identity(2)).passed());
  CHECK(check_o_operator_gen(p, Mat(2, 2)).passed());
  const Mat D = mat({{1, 0}, {0, 2}});
  // Oracle: the same identity evaluated with rho1 as the transport.
  const Representation as_rep{p.algebra, 2, p.rho1, {}};
  CHECK(check_o_operator_gen(p, D).passed() == oracle_o_operator(as_rep, D));
}

TEST_CASE("lsa_from_o_operator examples") {
  const LeftSymmetricAlgebra V = lsa_from_o_operator(e1_rep(), Mat::identity(1));
  CHECK(V.a(0, 0, 0) == 1);
  CHECK(V.omega == Mat(1, 1));
  CHECK(check_lsa(V).passed());
  const LeftSymmetricAlgebra Z = lsa_from_o_operator(fx::rep(fx::b2(), fx::zeros(2, 2)), Mat(2, 2));
  CHECK(Z.a.is_zero());
  CHECK(Z.omega == Mat(2, 2));
  CHECK_THROWS_AS(lsa_from_o_operator(fx::rep(fx::b2(), fx::zeros(2, 2)), Mat::identity(2)), AxiomViolation);
}

TEST_CASE("genrep_from_lsa examples") {
  const GenRepPair e = genrep_from_lsa(LeftSymmetricAlgebra::multiplicative(fx::e1_lsa().a, vec({1})));
  CHECK(e.rho1[0] == mat({{-1}}));
  CHECK(e.rho2[0] == mat({{1}}));
  CHECK(check_gen_rep(e, GenKind::GenI).passed());
  const auto dn = LeftSymmetricAlgebra::multiplicative(fx::dual_numbers().a, vec({0, 0}));
  const GenRepPair d = genrep_from_lsa(dn);
  CHECK(d.rho1 == d.rho2);
  for (int i = 0; i < 2; ++i) CHECK(d.rho2[i] == left_operator(dn.a, i));
  const GenRepPair n = genrep_from_lsa(LeftSymmetricAlgebra::multiplicative(fx::nc2().a, vec({1, 0})));
  CHECK(check_gen_rep(n, GenKind::GenI).passed());
  CHECK(check_o_operator_gen(n, Mat::identity(2)).passed());
  CHECK_THROWS_AS(genrep_from_lsa(fx::nc2()), Error);
}

TEST_CASE("omega_lie_from_lsa examples") {
  const LsaOmegaLie e = omega_lie_from_lsa(fx::e1_lsa(), Rat(1));
  CHECK(e.algebra.c.is_zero());
  CHECK(e.algebra.r == vec({1}));
  const LsaOmegaLie n = omega_lie_from_lsa(fx::nc2(), Rat(1));
  CHECK(n.algebra.c == fx::ncr().c);
  CHECK(n.algebra.r == vec({1, 0}));
  CHECK(n.complement == std::vector<int>{0});
  const LsaOmegaLie k = omega_lie_from_lsa(fx::dual_numbers(), Rat(1));
  CHECK(k.algebra.c.is_zero());
  CHECK(k.algebra.r == vec({1, 1}));
  CHECK_THROWS_AS(omega_lie_from_lsa(fx::nc2(), Rat(0)), Error);
}

TEST_CASE("rep_from_lsa examples") {
  CHECK(e1_rep().rho[0] == mat({{3}}));
  const Representation n = rep_from_lsa(omega_lie_from_lsa(fx::nc2(), Rat(1)).algebra, fx::nc2());
  Mat expected = left_operator(fx::nc2().a, 0);
  for (int i = 0; i < 2; ++i) expected(i, i) += 2;
  CHECK(n.rho[0] == expected);
  CHECK(check_representation(n).passed());
  CHECK_THROWS_AS(rep_from_lsa(fx::b2(), fx::e1_lsa()), Error);
}

TEST_CASE("lift_o_operator examples") {
  const Lift l = lift_o_operator(e1_rep(), Mat::identity(1));
  CHECK(l.H.c == fx::bracket(2, {{1, 2, 2, -1}}));
  CHECK(l.H.r == vec({1, 0}));
  CHECK(l.R == mat({{0, 1}, {-1, 0}}));
  CHECK(yb_residual(YbeContext::with_zero(l.H), l.R).is_zero());
  // Components lie outside ker r on H, reported independently of the residual.
  CHECK_FALSE(check_r_admissible(YbeContext::with_zero(l.H), l.R).passed());

  const Lift z = lift_o_operator(fx::rep(fx::b2(), fx::zeros(2, 2)), Mat(2, 2));
  CHECK(z.R.is_zero());
  const Lift b = lift_o_operator(fx::rep(fx::b2(), fx::zeros(2, 2)), Mat::identity(2));
  CHECK_FALSE(yb_residual(YbeContext::with_zero(b.H), b.R).is_zero());
  const Report x = crosscheck_lift(fx::rep(fx::b2(), fx::zeros(2, 2)), Mat::identity(2));
  CHECK_FALSE(x.passed());
  CHECK(x.find("verdict-agreement")->passed());
}

TEST_CASE("property: checker agrees with the raw-coefficient oracle") {
  const std::vector<Representation> reps{fx::rep(fx::b2(), fx::zeros(2, 1)), fx::rep(fx::ax2(), {mat({{1}}), mat({{0}})}),
                                         fx::rep(fx::b2(), adjoint_pair(fx::b2()).rho1), e1_rep()};
  for (const auto& rep : reps)
    for (const auto& T : all_maps(rep.algebra.dim, rep.m)) CHECK(check_o_operator(rep, T).passed() == oracle_o_operator(rep, T));
}

TEST_CASE("property: O-operators induce left-symmetric algebras") {
  const Representation ad{fx::b2(), 2, adjoint_pair(fx::b2()).rho1, {}};
  int count = 0;
  for (const auto& T : all_maps(2, 2))
    if (check_o_operator(ad, T).passed()) {
      CHECK(check_lsa(lsa_from_o_operator(ad, T)).passed());
      ++count;
    }
  CHECK(count > 1);
}

TEST_CASE("property: left-symmetric pipeline for corpus LSAs and c in {1, 2}") {
  for (const auto& A : {fx::e1_lsa(), fx::nc2(), fx::dual_numbers()})
    for (long c : {1L, 2L}) {
      const LsaOmegaLie Aw = omega_lie_from_lsa(A, Rat(c));
      CHECK(check_omega_lie(Aw.algebra).passed());
      const Representation rho = rep_from_lsa(Aw.algebra, A);
      CHECK(check_representation(rho).passed());
      CHECK(check_o_operator(rho, Mat::identity(A.dim)).passed());
      CHECK(crosscheck_lift(rho, Mat::identity(A.dim)).passed());
    }
}

TEST_CASE("property: in dimension one every map is an O-operator") {
  for (long r : {0L, 1L, -2L})
    for (long s : {-1L, 0L, 3L}) {
      const auto L = fx::abelian(1, vec({r}));
      for (long t : {-2L, 0L, 1L, 5L}) CHECK(check_o_operator(fx::rep(L, {mat({{s}})}), mat({{t}})).passed());
    }
}

TEST_CASE("property: lift residual vanishes exactly for O-operators") {
  const std::vector<Representation> reps{fx::rep(fx::b2(), fx::zeros(2, 1)), fx::rep(fx::b2(), {mat({{0}}), mat({{1}})}),
                                         fx::rep(fx::ax2(), {mat({{1}}), mat({{0}})}),
                                         fx::rep(fx::b2(), adjoint_pair(fx::b2()).rho1), e1_rep(),
                                         rep_from_lsa(omega_lie_from_lsa(fx::nc2(), Rat(1)).algebra, fx::nc2())};
  int pass = 0, fail = 0;
  for (const auto& rep : reps)
    for (const auto& T : all_maps(rep.algebra.dim, rep.m)) {
      const Report x = crosscheck_lift(rep, T);
      CHECK(x.find("verdict-agreement")->passed());
      (x.find("o-operator")->passed() ? pass : fail)++;
    }
  CHECK(pass > 0);
  CHECK(fail > 0);
}

TEST_CASE("property: with r = 0 the lift is the classical construction") {
  for (const auto& L : {fx::b2(), fx::heisenberg(), fx::sl2()}) {
    const OperatorFamily ad = adjoint_pair(L).rho1;
    const Representation rep = fx::rep(L, ad);
    std::vector<Mat> coad;
    for (const auto& m : ad) coad.push_back(scale(Rat(-1), transpose(m)));
    const Tensor3 Hc = oracle::classical_semidirect(L.c, coad);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
      Mat T(L.dim, L.dim);
      for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j) T(i, j) = fx::random_rat(rng, -1, 1);
      const Lift l = lift_o_operator(rep, T);
      CHECK(l.H.c == Hc);
      CHECK(yb_residual(YbeContext::with_zero(l.H), l.R) == oracle::classical_cybe(Hc, l.R));
    }
  }
}
