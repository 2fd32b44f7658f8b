#include "chebop/simd/kernels.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace chebop::simd {

#if !defined(CHEBOP_HAVE_AVX2)
namespace avx2 {
void exp_sum(const ExpSumArgs&) { throw std::logic_error("AVX2 kernels not compiled in"); }
void poly_eval(const PolyEvalArgs&) { throw std::logic_error("AVX2 kernels not compiled in"); }
}  // namespace avx2
#endif

#if !defined(CHEBOP_HAVE_NEON)
namespace neon {
void exp_sum(const ExpSumArgs&) { throw std::logic_error("NEON kernels not compiled in"); }
void poly_eval(const PolyEvalArgs&) { throw std::logic_error("NEON kernels not compiled in"); }
}  // namespace neon
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(CHEBOP_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(CHEBOP_HAVE_NEON)
      return true;  // Advanced SIMD is mandatory on AArch64.
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

namespace {
std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{best_isa()};
  return isa;
}
}  // namespace

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa))
    throw std::invalid_argument("ISA " + std::string(isa_name(isa)) + " is not available");
  active().store(isa, std::memory_order_relaxed);
}

void exp_sum(const ExpSumArgs& args) {
  switch (active_isa()) {
    case Isa::Avx2: return avx2::exp_sum(args);
    case Isa::Neon: return neon::exp_sum(args);
    case Isa::Scalar: break;
  }
  scalar::exp_sum(args);
}

void poly_eval(const PolyEvalArgs& args) {
  switch (active_isa()) {
    case Isa::Avx2: return avx2::poly_eval(args);
    case Isa::Neon: return neon::poly_eval(args);
    case Isa::Scalar: break;
  }
  scalar::poly_eval(args);
}

}  // namespace chebop::simd
