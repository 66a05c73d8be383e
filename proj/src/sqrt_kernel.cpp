#include "milnor/sqrt_kernel.hpp"

#include "milnor/error.hpp"

#include <cstdlib>
#include <string>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define MILNOR_HAVE_X86 1
#endif

namespace milnor {

namespace {

void scalar_roots(std::uint32_t c, std::uint32_t m, std::vector<std::uint32_t>& out) {
  for (std::uint64_t z = 0; z < m; ++z)
    if (z * z % m == c) out.push_back(static_cast<std::uint32_t>(z));
}

#ifdef MILNOR_HAVE_X86
// x mod m for 0 <= x < 2m: subtract m where x > m - 1.
__attribute__((target("avx2"))) inline __m256i reduce_once(__m256i x, __m256i vm, __m256i vm1) {
  return _mm256_sub_epi32(x, _mm256_and_si256(_mm256_cmpgt_epi32(x, vm1), vm));
}

// Eight lanes z, z+1, ..., z+7 advance by 8 using (z+8)^2 = z^2 + (16z + 64).
__attribute__((target("avx2"))) void avx2_roots(std::uint32_t c, std::uint32_t m, std::vector<std::uint32_t>& out) {
  if (m < 16) {
    scalar_roots(c, m, out);
    return;
  }
  alignas(32) std::int32_t sq0[8], d0[8];
  for (std::uint32_t i = 0; i < 8; ++i) {
    sq0[i] = static_cast<std::int32_t>(static_cast<std::uint64_t>(i) * i % m);
    d0[i] = static_cast<std::int32_t>((16ull * i + 64) % m);
  }
  const __m256i vm = _mm256_set1_epi32(static_cast<std::int32_t>(m));
  const __m256i vm1 = _mm256_set1_epi32(static_cast<std::int32_t>(m - 1));
  const __m256i vc = _mm256_set1_epi32(static_cast<std::int32_t>(c));
  const __m256i step = _mm256_set1_epi32(static_cast<std::int32_t>(128 % m));
  __m256i sq = _mm256_load_si256(reinterpret_cast<const __m256i*>(sq0));
  __m256i d = _mm256_load_si256(reinterpret_cast<const __m256i*>(d0));
  const std::uint32_t full = m - m % 8;
  for (std::uint32_t base = 0; base < full; base += 8) {
    unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(sq, vc))));
    while (mask) {
      const int lane = __builtin_ctz(mask);
      out.push_back(base + static_cast<std::uint32_t>(lane));
      mask &= mask - 1;
    }
    sq = reduce_once(_mm256_add_epi32(sq, d), vm, vm1);
    d = reduce_once(_mm256_add_epi32(d, step), vm, vm1);
  }
  for (std::uint64_t z = full; z < m; ++z)
    if (z * z % m == c) out.push_back(static_cast<std::uint32_t>(z));
}

bool cpu_has_avx2() {
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
}
#endif

}  // namespace

std::string_view kernel_name(KernelImpl k) noexcept { return k == KernelImpl::Avx2 ? "avx2" : "scalar"; }

std::vector<KernelImpl> available_kernels() {
  std::vector<KernelImpl> v{KernelImpl::Scalar};
#ifdef MILNOR_HAVE_X86
  if (cpu_has_avx2()) v.push_back(KernelImpl::Avx2);
#endif
  return v;
}

KernelImpl default_kernel() {
  static const KernelImpl k = [] {
    const char* env = std::getenv("MILNOR_FORGE_KERNEL");
    if (env && std::string(env) == "scalar") return KernelImpl::Scalar;
    return available_kernels().back();
  }();
  return k;
}

void square_roots_mod(std::uint32_t c, std::uint32_t m, std::vector<std::uint32_t>& out, KernelImpl impl) {
  if (m == 0 || m >= (1u << 26)) fail(ErrorCode::InvalidArgument, "modulus out of kernel range");
  if (c >= m) fail(ErrorCode::InvalidArgument, "residue not reduced");
  switch (impl) {
    case KernelImpl::Scalar:
      scalar_roots(c, m, out);
      return;
    case KernelImpl::Avx2:
#ifdef MILNOR_HAVE_X86
      if (cpu_has_avx2()) {
        avx2_roots(c, m, out);
        return;
      }
#endif
      fail(ErrorCode::InvalidArgument, "avx2 kernel unavailable on this machine");
  }
}

void square_roots_mod(std::uint32_t c, std::uint32_t m, std::vector<std::uint32_t>& out) {
  square_roots_mod(c, m, out, default_kernel());
}

}  // namespace milnor
