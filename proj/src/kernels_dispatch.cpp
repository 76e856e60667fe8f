#include "msseg/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace msseg::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend resolve_startup_backend() {
  if (const char* env = std::getenv("MSSEG_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && backend_available(Backend::avx2)) return Backend::avx2;
    // "auto" or anything unknown falls through to detection
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

Backend& current() {
  static Backend b = resolve_startup_backend();
  return b;
}

}  // namespace

bool backend_available(Backend b) {
  if (b == Backend::scalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
  return cpu_has_avx2();
#else
  return false;
#endif
}

Backend active_backend() { return current(); }

void set_backend(Backend b) {
  if (!backend_available(b))
    throw InvalidArgumentError("requested SIMD backend is not available on this CPU");
  current() = b;
}

const KernelTable& table_for(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
  if (b == Backend::avx2) return avx2_table;
#endif
  return scalar_table;
}

const KernelTable& table() { return table_for(current()); }

}  // namespace msseg::kernels
