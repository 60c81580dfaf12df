#pragma once

#include <cstddef>
#include <cstdint>

namespace qrr::modp::detail {

void stride_accumulate_scalar(std::uint32_t* dp, std::size_t size, std::size_t stride,
                              std::uint32_t p);

// Compiled in a translation unit built with AVX2 enabled; falls back to the
// scalar loop when the build target lacks AVX2.
void stride_accumulate_avx2(std::uint32_t* dp, std::size_t size, std::size_t stride,
                            std::uint32_t p);

bool avx2_compiled();

}  // namespace qrr::modp::detail
