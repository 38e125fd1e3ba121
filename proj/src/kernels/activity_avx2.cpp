#include <immintrin.h>

#include "scforge/kernels/activity.hpp"

// AVX2 variant: one 8-lane gather per index plane, divisibility tested with
// a reciprocal multiply (exact for |s| < 2^23, guarded by the dispatcher's
// z limit: |s| <= 8z + |bias|).

namespace scforge::kernels {

void eval_avx2(const ConditionBatch& b, const std::int32_t* table, int z, int bias, int first,
               int last, std::uint8_t* out) {
    const __m256 rcp = _mm256_set1_ps(1.0f / static_cast<float>(z));
    const __m256i vz = _mm256_set1_epi32(z);
    const __m256i vbias = _mm256_set1_epi32(bias);
    int i = first;
    for (; i + 8 <= last; i += 8) {
        __m256i s = vbias;
        for (int sl = 0; sl < 4; ++sl) {
            __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.plus[sl].data() + i));
            s = _mm256_add_epi32(s, _mm256_i32gather_epi32(table, idx, 4));
        }
        for (int sl = 0; sl < 4; ++sl) {
            __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.minus[sl].data() + i));
            s = _mm256_sub_epi32(s, _mm256_i32gather_epi32(table, idx, 4));
        }
        __m256 q = _mm256_mul_ps(_mm256_cvtepi32_ps(s), rcp);
        __m256i qi = _mm256_cvtps_epi32(q); // round to nearest
        __m256i rem = _mm256_sub_epi32(s, _mm256_mullo_epi32(qi, vz));
        __m256i eq = _mm256_cmpeq_epi32(rem, _mm256_setzero_si256());
        // low byte of each 32-bit lane is 0x00/0xff
        alignas(32) std::int32_t lanes[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), eq);
        for (int l = 0; l < 8; ++l) out[i + l] = lanes[l] ? 1 : 0;
    }
    if (i < last) scalar_eval()(b, table, z, bias, i, last, out);
}

} // namespace scforge::kernels
