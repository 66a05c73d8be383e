#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace milnor {

enum class KernelImpl { Scalar, Avx2 };

std::string_view kernel_name(KernelImpl k) noexcept;

/// Implementations usable on this machine; Scalar is always present.
std::vector<KernelImpl> available_kernels();

/// Fastest available implementation, unless MILNOR_FORGE_KERNEL=scalar.
KernelImpl default_kernel();

/// Appends every z in [0, m) with z^2 = c (mod m), ascending. Requires
/// 1 <= m < 2^26 and c < m.
void square_roots_mod(std::uint32_t c, std::uint32_t m, std::vector<std::uint32_t>& out, KernelImpl impl);
void square_roots_mod(std::uint32_t c, std::uint32_t m, std::vector<std::uint32_t>& out);

}  // namespace milnor
