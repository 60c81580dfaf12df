#include "modp_internal.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace qrr::modp::detail {

bool avx2_compiled() { return true; }

void stride_accumulate_avx2(std::uint32_t* dp, std::size_t size, std::size_t stride,
                            std::uint32_t p) {
    // Values stay in [0, p) with p < 2^30, so the lazy-reduction sum fits a
    // signed 32-bit lane. Reads trail writes by `stride` >= 8 elements,
    // keeping the 8-lane blocks dependency-free.
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p) - 1);
    std::size_t n = stride;
    for (; n + 8 <= size; n += 8) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dp + n));
        const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dp + n - stride));
        __m256i s = _mm256_add_epi32(x, y);
        const __m256i ge = _mm256_cmpgt_epi32(s, vpm1);
        s = _mm256_sub_epi32(s, _mm256_and_si256(ge, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dp + n), s);
    }
    for (; n < size; ++n) {
        std::uint32_t s = dp[n] + dp[n - stride];
        if (s >= p) s -= p;
        dp[n] = s;
    }
}

}  // namespace qrr::modp::detail

#else

namespace qrr::modp::detail {

bool avx2_compiled() { return false; }

void stride_accumulate_avx2(std::uint32_t* dp, std::size_t size, std::size_t stride,
                            std::uint32_t p) {
    stride_accumulate_scalar(dp, size, stride, p);
}

}  // namespace qrr::modp::detail

#endif
