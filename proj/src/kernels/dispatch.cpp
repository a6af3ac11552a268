#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "epigraph/kernels.hpp"

namespace epigraph::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("EPIGRAPH_KERNELS"); env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

// bit pattern of "argument i is in world w" for 64 consecutive worlds starting at base
std::uint64_t pattern_word(int i, std::size_t base) {
  static const std::uint64_t low[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                       0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  if (i < 6) return low[i];
  return (base >> i) & 1 ? ~0ull : 0ull;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(EPIGRAPH_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw std::runtime_error("kernel variant " + std::string(isa_name(isa)) + " unavailable");
  current().store(isa, std::memory_order_relaxed);
}

std::int64_t masked_sum(const std::int32_t* masses, std::size_t count, const std::uint64_t* mask) {
#if defined(EPIGRAPH_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::masked_sum(masses, count, mask);
#endif
  return scalar::masked_sum(masses, count, mask);
}

std::int64_t dot(const std::int32_t* a, const std::int32_t* b, std::size_t count) {
#if defined(EPIGRAPH_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::dot(a, b, count);
#endif
  return scalar::dot(a, b, count);
}

void marginals(const std::int32_t* masses, int n, std::int64_t* out) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint64_t> mask((count + 63) / 64);
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = pattern_word(i, k * 64);
    out[i] = masked_sum(masses, count, mask.data());
  }
}

}  // namespace epigraph::kernels
