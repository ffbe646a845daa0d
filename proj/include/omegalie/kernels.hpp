#pragma once

#include <cstddef>

// Double-precision contractions used by the numerical solver. Each kernel has a
// portable scalar reference and, when built, an AVX2/FMA variant; the variant
// is picked once at runtime from the CPU feature flags.
namespace omegalie::kernels {

struct Ops {
  /// T += the three bracket blocks of [A, B] for structure constants c (n^3,
  /// row-major). A and B are n x n; T is n^3. `scratch` needs n^3 doubles.
  void (*yb_blocks)(int n, const double* c, const double* A, const double* B, double* T, double* scratch);
  double (*dot)(const double* x, const double* y, std::size_t len);
  void (*axpy)(double a, const double* x, double* y, std::size_t len);
};

enum class Isa { Scalar, Avx2 };

const Ops& scalar_ops();
/// nullptr when the AVX2 variant was not compiled in.
const Ops* avx2_ops();
bool cpu_has_avx2();

/// Dispatched table: AVX2 when compiled and supported, otherwise scalar.
const Ops& active_ops();
Isa active_isa();
const char* to_string(Isa isa);

/// Test hook: pins the dispatched table (falls back to scalar if unavailable).
void force_isa(Isa isa);

}  // namespace omegalie::kernels
