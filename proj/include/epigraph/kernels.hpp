#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Hot loops over world-mass vectors. Every routine has a portable scalar
// reference; a vector variant is picked once at runtime when the CPU has it.
// EPIGRAPH_KERNELS=scalar in the environment pins the scalar path.
namespace epigraph::kernels {

enum class Isa { Scalar, Avx2 };

Isa active_isa();
std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
void force_isa(Isa isa);  // throws when unavailable on this machine

// Sum of masses[w] over the w < count whose bit is set in mask (64 worlds per word).
std::int64_t masked_sum(const std::int32_t* masses, std::size_t count, const std::uint64_t* mask);
// Sum of a[i] * b[i].
std::int64_t dot(const std::int32_t* a, const std::int32_t* b, std::size_t count);
// out[i] = total mass of worlds containing argument i, for 2^n masses.
void marginals(const std::int32_t* masses, int n, std::int64_t* out);

namespace scalar {
std::int64_t masked_sum(const std::int32_t* masses, std::size_t count, const std::uint64_t* mask);
std::int64_t dot(const std::int32_t* a, const std::int32_t* b, std::size_t count);
}  // namespace scalar

namespace avx2 {
std::int64_t masked_sum(const std::int32_t* masses, std::size_t count, const std::uint64_t* mask);
std::int64_t dot(const std::int32_t* a, const std::int32_t* b, std::size_t count);
}  // namespace avx2

}  // namespace epigraph::kernels
