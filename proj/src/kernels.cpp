#include "omegalie/kernels.hpp"

#include <atomic>

namespace omegalie::kernels {

#ifdef OMEGALIE_HAVE_AVX2
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#ifdef OMEGALIE_HAVE_AVX2
  return avx2_ops_impl();
#else
  return nullptr;
#endif
}

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Isa detect() { return avx2_ops() != nullptr && cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

const Ops& active_ops() { return selected().load() == Isa::Avx2 ? *avx2_ops() : scalar_ops(); }

Isa active_isa() { return selected().load(); }

const char* to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && (avx2_ops() == nullptr || !cpu_has_avx2())) isa = Isa::Scalar;
  selected().store(isa);
}

}  // namespace omegalie::kernels
