// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>

#include "omegalie/kernels.hpp"

namespace omegalie::kernels {

namespace {

inline __m256i tail_mask(int rem) {
  const __m256i idx = _mm256_setr_epi64x(0, 1, 2, 3);
  return _mm256_cmpgt_epi64(_mm256_set1_epi64x(rem), idx);
}

inline void axpy_n(double a, const double* x, double* y, int n) {
  const __m256d va = _mm256_set1_pd(a);
  int q = 0;
  for (; q + 4 <= n; q += 4)
    _mm256_storeu_pd(y + q, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + q), _mm256_loadu_pd(y + q)));
  if (q < n) {
    const __m256i m = tail_mask(n - q);
    const __m256d r = _mm256_fmadd_pd(va, _mm256_maskload_pd(x + q, m), _mm256_maskload_pd(y + q, m));
    _mm256_maskstore_pd(y + q, m, r);
  }
}

void yb_blocks(int n, const double* c, const double* A, const double* B, double* T, double* scratch) {
  const int n2 = n * n;
  std::fill(scratch, scratch + n2 * n, 0.0);
  // Transposed copy of B makes the third block contiguous in q as well.
  double Bt[64 * 64];
  const bool small = n <= 64;
  if (small)
    for (int q = 0; q < n; ++q)
      for (int b = 0; b < n; ++b) Bt[b * n + q] = B[q * n + b];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const double cab = c[(a * n + b) * n + k];
        if (cab == 0.0) continue;
        const double* Bb = B + b * n;
        for (int p = 0; p < n; ++p) {
          axpy_n(cab * A[a * n + p], Bb, T + (k * n + p) * n, n);
          const double w = cab * A[p * n + a];
          axpy_n(w, Bb, T + (p * n + k) * n, n);
          if (small) {
            axpy_n(w, Bt + b * n, scratch + (p * n + k) * n, n);
          } else {
            for (int q = 0; q < n; ++q) scratch[(p * n + k) * n + q] += w * B[q * n + b];
          }
        }
      }
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k)
      for (int q = 0; q < n; ++q) T[(p * n + q) * n + k] += scratch[(p * n + k) * n + q];
}

double dot(const double* x, const double* y, std::size_t len) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < len; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t len) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < len; ++i) y[i] += a * x[i];
}

const Ops kAvx2{yb_blocks, dot, axpy};

}  // namespace

const Ops* avx2_ops_impl() { return &kAvx2; }

}  // namespace omegalie::kernels
