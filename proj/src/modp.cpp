#include "qrr/modp.hpp"

#include <stdexcept>

#include "modp_internal.hpp"

namespace qrr::modp {

namespace detail {

void stride_accumulate_scalar(std::uint32_t* dp, std::size_t size, std::size_t stride,
                              std::uint32_t p) {
    for (std::size_t n = stride; n < size; ++n) {
        std::uint32_t s = dp[n] + dp[n - stride];
        if (s >= p) s -= p;
        dp[n] = s;
    }
}

}  // namespace detail

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

void stride_accumulate(std::uint32_t* dp, std::size_t size, std::size_t stride,
                       std::uint32_t p, Kernel kernel) {
    if (stride == 0) throw std::invalid_argument("stride_accumulate: stride must be >= 1");
    if (p == 0 || p >= (1u << 30))
        throw std::invalid_argument("stride_accumulate: need 0 < p < 2^30");
    switch (kernel) {
        case Kernel::Scalar:
            detail::stride_accumulate_scalar(dp, size, stride, p);
            return;
        case Kernel::Avx2:
            if (!avx2_supported() || !detail::avx2_compiled())
                throw std::runtime_error("stride_accumulate: AVX2 unavailable on this host");
            if (stride < 8) {  // lanes would overlap their own writes
                detail::stride_accumulate_scalar(dp, size, stride, p);
                return;
            }
            detail::stride_accumulate_avx2(dp, size, stride, p);
            return;
        case Kernel::Auto:
            if (stride >= 8 && avx2_supported() && detail::avx2_compiled())
                detail::stride_accumulate_avx2(dp, size, stride, p);
            else
                detail::stride_accumulate_scalar(dp, size, stride, p);
            return;
    }
}

std::vector<std::uint32_t> regular_counts_mod(int m, long T, std::uint32_t p, Kernel kernel) {
    if (m < 2) throw std::invalid_argument("regular_counts_mod: m must be >= 2");
    if (T < 0) throw std::invalid_argument("regular_counts_mod: T must be >= 0");
    std::vector<std::uint32_t> dp(static_cast<std::size_t>(T) + 1, 0);
    dp[0] = 1 % p;
    for (long t = 1; t <= T; ++t) {
        if (t % m == 0) continue;
        stride_accumulate(dp.data(), dp.size(), static_cast<std::size_t>(t), p, kernel);
    }
    return dp;
}

}  // namespace qrr::modp
