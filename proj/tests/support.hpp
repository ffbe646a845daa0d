#pragma once

// Shared fixtures and brute-force oracles for the test suites. The oracles are
// written directly against flat coefficient arrays and share no code with the
// library's checkers.

#include <functional>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "omegalie/operators.hpp"
#include "omegalie/solver.hpp"

namespace fx {

using namespace omegalie;

inline Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

inline Mat mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> rs;
  int cols = 0;
  for (const auto& r : rows) {
    rs.push_back(vec(r));
    cols = static_cast<int>(r.size());
  }
  return Mat::from_rows(rs, cols);
}

/// Bracket from 1-based (i, j, k, value) entries with i < j.
inline Tensor3 bracket(int n, std::initializer_list<std::tuple<int, int, int, long>> entries) {
  std::vector<StructureEntry> es;
  for (const auto& [i, j, k, v] : entries) es.emplace_back(i - 1, j - 1, k - 1, Rat(v));
  return antisymmetric_structure(n, es);
}

/// Arbitrary product from 1-based entries.
inline Tensor3 product(int n, std::initializer_list<std::tuple<int, int, int, long>> entries) {
  Tensor3 t(n);
  for (const auto& [i, j, k, v] : entries) t(i - 1, j - 1, k - 1) += Rat(v);
  return t;
}

inline OmegaLieAlgebra b2() { return OmegaLieAlgebra::multiplicative(bracket(2, {{1, 2, 1, 1}}), vec({0, 0}), "B2"); }
inline OmegaLieAlgebra ax2() { return OmegaLieAlgebra::multiplicative(bracket(2, {{1, 2, 1, 1}}), vec({1, 0}), "AX2"); }
inline OmegaLieAlgebra abelian(int n, Vec r) { return OmegaLieAlgebra::multiplicative(Tensor3(n), std::move(r), "abelian"); }
inline OmegaLieAlgebra abelian(int n) { return abelian(n, zero_vec(n)); }
inline OmegaLieAlgebra b2_plus_line() {
  return OmegaLieAlgebra::multiplicative(bracket(3, {{1, 2, 1, 1}}), vec({0, 0, 0}), "B2+line");
}
inline OmegaLieAlgebra heisenberg() {
  return OmegaLieAlgebra::multiplicative(bracket(3, {{1, 2, 3, 1}}), vec({0, 0, 0}), "heisenberg");
}
inline OmegaLieAlgebra sl2() {
  // h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h
  return OmegaLieAlgebra::multiplicative(bracket(3, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}}), vec({0, 0, 0}), "sl2");
}
/// [e1,e2] = e2 with r = (1,0): the algebra produced from NC2 with c = 1.
inline OmegaLieAlgebra ncr() { return OmegaLieAlgebra::multiplicative(bracket(2, {{1, 2, 2, 1}}), vec({1, 0}), "NCr"); }
/// A three-dimensional algebra with nonzero r and a nonzero admissible subspace:
/// [e1,e2] = e2, r = (1,0,0), e3 central.
inline OmegaLieAlgebra ncr_plus_line() {
  return OmegaLieAlgebra::multiplicative(bracket(3, {{1, 2, 2, 1}}), vec({1, 0, 0}), "NCr+line");
}

inline LeftSymmetricAlgebra e1_lsa() { return LeftSymmetricAlgebra::plain(product(1, {{1, 1, 1, 1}}), "E1"); }
inline LeftSymmetricAlgebra nc2() { return LeftSymmetricAlgebra::plain(product(2, {{1, 1, 1, 1}, {1, 2, 2, 1}}), "NC2"); }
/// K[t]/(t^2) with unit e1 and e2 = t.
inline LeftSymmetricAlgebra dual_numbers() {
  return LeftSymmetricAlgebra::plain(product(2, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}}), "K[t]/t^2");
}

/// Zero operators on a carrier of dimension m.
inline OperatorFamily zeros(int n, int m) { return OperatorFamily(static_cast<std::size_t>(n), Mat(m, m)); }

inline Representation rep(const OmegaLieAlgebra& L, OperatorFamily rho) {
  const int m = rho.empty() ? 0 : rho[0].rows();
  return {L, m, std::move(rho), {}};
}

/// Multiplicative algebras used by the corpus-wide properties.
inline std::vector<OmegaLieAlgebra> corpus() {
  std::vector<OmegaLieAlgebra> out{b2(),       ax2(),        abelian(2),     abelian(2, vec({1, 0})), abelian(1, vec({1})),
                                   b2_plus_line(), heisenberg(), sl2(),       ncr(),                   ncr_plus_line()};
  for (const auto& A : {e1_lsa(), nc2(), dual_numbers()}) out.push_back(omega_lie_from_lsa(A, Rat(1)).algebra);
  return out;
}

/// Every skew matrix with upper entries in {-1,0,1} that lies in W (x) W.
inline std::vector<TwoTensor> skew_grid(const OmegaLieAlgebra& L) {
  const int n = L.dim;
  const Subspace W = admissible_subspace(L);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<TwoTensor> out;
  std::vector<int> digits(slots.size(), -1);
  while (true) {
    TwoTensor R(n, n);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      R(slots[s].first, slots[s].second) = digits[s];
      R(slots[s].second, slots[s].first) = -digits[s];
    }
    bool inside = true;
    for (int i = 0; i < n && inside; ++i) inside = W.contains(R.row(i)) && W.contains(R.col(i));
    if (inside) out.push_back(R);
    std::size_t s = 0;
    while (s < digits.size() && digits[s] == 1) digits[s++] = -1;
    if (s == digits.size()) break;
    ++digits[s];
  }
  return out;
}

/// Every multiplicative dim-2 algebra with [e1,e2] and r entries in {-1,0,1}.
inline std::vector<OmegaLieAlgebra> dim2_grid() {
  std::vector<OmegaLieAlgebra> out;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int r1 = -1; r1 <= 1; ++r1)
        for (int r2 = -1; r2 <= 1; ++r2) {
          Tensor3 c(2);
          c(0, 1, 0) = a;
          c(0, 1, 1) = b;
          c(1, 0, 0) = -a;
          c(1, 0, 1) = -b;
          out.push_back(OmegaLieAlgebra::multiplicative(c, {Rat(r1), Rat(r2)}));
        }
  return out;
}

inline Rat random_rat(std::mt19937_64& rng, int lo, int hi) {
  return Rat(std::uniform_int_distribution<int>(lo, hi)(rng));
}

}  // namespace fx

namespace oracle {

using namespace omegalie;

// Flat coefficient arrays: t[(i*n + j)*n + k].
using Flat = std::vector<Rat>;

inline Flat flat(const Tensor3& t) { return t.data(); }

inline std::set<std::vector<int>> anticommutativity_failures(int n, const Flat& c) {
  std::set<std::vector<int>> bad;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (c[(i * n + j) * n + k] + c[(j * n + i) * n + k] != 0) bad.insert({i, j});
  return bad;
}

/// Triples where sum_cyc [[x,y]_1, z]_2 differs from sum_cyc w(x,y) z.
inline std::set<std::vector<int>> jacobi_failures(int n, const Flat& c1, const Flat& c2,
                                                  const std::function<Rat(int, int)>& w) {
  // Full Jacobiator tensor J[i][j][k][m] first, then compare.
  std::vector<Rat> J(static_cast<std::size_t>(n) * n * n * n);
  auto at = [&](int i, int j, int k, int m) -> Rat& { return J[((static_cast<std::size_t>(i) * n + j) * n + k) * n + m]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) at(i, j, k, m) += c1[(i * n + j) * n + l] * c2[(l * n + k) * n + m];
  std::set<std::vector<int>> bad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Rat lhs = at(i, j, k, m) + at(j, k, i, m) + at(k, i, j, m);
          Rat rhs = (m == k ? w(i, j) : Rat(0)) + (m == i ? w(j, k) : Rat(0)) + (m == j ? w(k, i) : Rat(0));
          if (lhs != rhs) bad.insert({i, j, k});
        }
  return bad;
}

/// Triples where (u.v).w - u.(v.w) - (v.u).w + v.(u.w) differs from w(u,v) w.
inline std::set<std::vector<int>> left_symmetry_failures(int n, const Flat& a, const std::function<Rat(int, int)>& w) {
  auto prod = [&](int i, int j, int k) { return a[(i * n + j) * n + k]; };
  std::set<std::vector<int>> bad;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int x = 0; x < n; ++x)
        for (int m = 0; m < n; ++m) {
          Rat s = 0;
          for (int l = 0; l < n; ++l) {
            s += prod(u, v, l) * prod(l, x, m);  // (u.v).x
            s -= prod(v, x, l) * prod(u, l, m);  // u.(v.x)
            s -= prod(v, u, l) * prod(l, x, m);  // (v.u).x
            s += prod(u, x, l) * prod(v, l, m);  // v.(u.x)
          }
          if (s != (m == x ? w(u, v) : Rat(0))) bad.insert({u, v, x});
        }
  return bad;
}

/// Classical CYBE tensor [r12,r13] + [r12,r23] + [r13,r23] for a Lie bracket.
inline Tensor3 classical_cybe(const Tensor3& c, const Mat& R) {
  const int n = c.n();
  Tensor3 T(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          // r12 = R(a,b) e_a e_b 1, r13 = R(p,q) e_p 1 e_q, r23 = R(p,q) 1 e_p e_q
          for (int s = 0; s < n; ++s) {
            const Rat x = R(a, b) * R(p, q);
            if (x == 0) continue;
            T(s, b, q) += x * c(a, p, s);  // [r12, r13]
            T(a, s, q) += x * c(b, p, s);  // [r12, r23]
            T(a, p, s) += x * c(b, q, s);  // [r13, r23]
          }
        }
  return T;
}

/// Classical semidirect product bracket of a Lie algebra with a representation.
inline Tensor3 classical_semidirect(const Tensor3& c, const std::vector<Mat>& rho) {
  const int n = c.n();
  const int m = rho.empty() ? 0 : rho[0].rows();
  Tensor3 H(n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) H(i, j, k) = c(i, j, k);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        H(i, n + a, n + b) = rho[i](b, a);
        H(n + a, i, n + b) = -rho[i](b, a);
      }
  return H;
}

/// Classical representation identity rho([x,y]) = [rho x, rho y].
inline bool classical_rep(const Tensor3& c, const std::vector<Mat>& rho) {
  const int n = c.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat lhs(rho[0].rows(), rho[0].rows());
      for (int k = 0; k < n; ++k) axpy(c(i, j, k), rho[k], lhs);
      if (lhs != sub(matmul(rho[i], rho[j]), matmul(rho[j], rho[i]))) return false;
    }
  return true;
}

}  // namespace oracle
