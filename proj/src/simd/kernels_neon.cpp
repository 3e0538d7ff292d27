#include <arm_neon.h>

#include "alba/simd/kernels.hpp"

namespace alba::simd {

namespace {

void and_v(Word* d, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_u64(d + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) d[i] = a[i] & b[i];
}
void or_v(Word* d, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_u64(d + i, vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) d[i] = a[i] | b[i];
}
void andnot_v(Word* d, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_u64(d + i, vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) d[i] = a[i] & ~b[i];
}
void not_v(Word* d, const Word* a, std::size_t n) {
    const uint64x2_t ones = vdupq_n_u64(~Word{0});
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_u64(d + i, veorq_u64(vld1q_u64(a + i), ones));
    for (; i < n; ++i) d[i] = ~a[i];
}
void fill_v(Word* d, Word v, std::size_t n) {
    const uint64x2_t x = vdupq_n_u64(v);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_u64(d + i, x);
    for (; i < n; ++i) d[i] = v;
}
bool all_ones_v(const Word* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        if (vminvq_u32(vreinterpretq_u32_u64(vld1q_u64(a + i))) != 0xffffffffu) return false;
    for (; i < n; ++i)
        if (a[i] != ~Word{0}) return false;
    return true;
}

const Kernels kNeon{"neon", and_v, or_v, andnot_v, not_v, fill_v, all_ones_v};

}  // namespace

const Kernels* neon_kernels() { return &kNeon; }

}  // namespace alba::simd
