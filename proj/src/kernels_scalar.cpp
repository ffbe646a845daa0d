#include "omegalie/kernels.hpp"

#include <algorithm>

namespace omegalie::kernels {

namespace {

inline void axpy_n(double a, const double* x, double* y, int n) {
  for (int q = 0; q < n; ++q) y[q] += a * x[q];
}

void yb_blocks(int n, const double* c, const double* A, const double* B, double* T, double* scratch) {
  const int n2 = n * n;
  std::fill(scratch, scratch + n2 * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const double cab = c[(a * n + b) * n + k];
        if (cab == 0.0) continue;
        const double* Bb = B + b * n;
        for (int p = 0; p < n; ++p) {
          // [e_a, e_b] (x) e_p (x) e_q with weight A(a,p) B(b,q)
          axpy_n(cab * A[a * n + p], Bb, T + (k * n + p) * n, n);
          const double w = cab * A[p * n + a];
          // e_p (x) [e_a, e_b] (x) e_q with weight A(p,a) B(b,q)
          axpy_n(w, Bb, T + (p * n + k) * n, n);
          // e_p (x) e_q (x) [e_a, e_b] with weight A(p,a) B(q,b); staged as (p,k,q)
          for (int q = 0; q < n; ++q) scratch[(p * n + k) * n + q] += w * B[q * n + b];
        }
      }
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k)
      for (int q = 0; q < n; ++q) T[(p * n + q) * n + k] += scratch[(p * n + k) * n + q];
}

double dot(const double* x, const double* y, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] += a * x[i];
}

const Ops kScalar{yb_blocks, dot, axpy};

}  // namespace

const Ops& scalar_ops() { return kScalar; }

}  // namespace omegalie::kernels
