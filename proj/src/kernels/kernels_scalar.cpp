#include "epigraph/kernels.hpp"

namespace epigraph::kernels::scalar {

std::int64_t masked_sum(const std::int32_t* masses, std::size_t count, const std::uint64_t* mask) {
  std::int64_t s = 0;
  for (std::size_t w = 0; w < count; ++w)
    if ((mask[w >> 6] >> (w & 63)) & 1) s += masses[w];
  return s;
}

std::int64_t dot(const std::int32_t* a, const std::int32_t* b, std::size_t count) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < count; ++i) s += std::int64_t{a[i]} * b[i];
  return s;
}

}  // namespace epigraph::kernels::scalar
