#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qrr::modp {

/// Kernel selection for the word-sized mod-p loops. Auto picks AVX2 when the
/// CPU supports it and the stride admits the 8-lane layout; Scalar and Avx2
/// force a path (Avx2 throws if the host lacks the instructions).
enum class Kernel { Auto, Scalar, Avx2 };

bool avx2_supported();

/// dp[n] = (dp[n] + dp[n - stride]) mod p for n = stride..size-1 ascending,
/// i.e. one in-place division of the generating series by (1 - q^stride).
/// Requires p < 2^30. Lanes never overlap their own writes: the vector path
/// is used only for stride >= 8.
void stride_accumulate(std::uint32_t* dp, std::size_t size, std::size_t stride,
                       std::uint32_t p, Kernel kernel = Kernel::Auto);

/// m-regular partition counts mod p for n = 0..T.
std::vector<std::uint32_t> regular_counts_mod(int m, long T, std::uint32_t p,
                                              Kernel kernel = Kernel::Auto);

}  // namespace qrr::modp
