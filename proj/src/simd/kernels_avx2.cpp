// Built with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "alba/simd/kernels.hpp"

namespace alba::simd {

namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void and_v(Word* d, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(d + i, _mm256_and_si256(load(a + i), load(b + i)));
    for (; i < n; ++i) d[i] = a[i] & b[i];
}
void or_v(Word* d, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(d + i, _mm256_or_si256(load(a + i), load(b + i)));
    for (; i < n; ++i) d[i] = a[i] | b[i];
}
void andnot_v(Word* d, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(d + i, _mm256_andnot_si256(load(b + i), load(a + i)));
    for (; i < n; ++i) d[i] = a[i] & ~b[i];
}
void not_v(Word* d, const Word* a, std::size_t n) {
    const __m256i ones = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(d + i, _mm256_xor_si256(load(a + i), ones));
    for (; i < n; ++i) d[i] = ~a[i];
}
void fill_v(Word* d, Word v, std::size_t n) {
    const __m256i x = _mm256_set1_epi64x(static_cast<long long>(v));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(d + i, x);
    for (; i < n; ++i) d[i] = v;
}
bool all_ones_v(const Word* a, std::size_t n) {
    const __m256i ones = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        if (!_mm256_testc_si256(load(a + i), ones)) return false;
    for (; i < n; ++i)
        if (a[i] != ~Word{0}) return false;
    return true;
}

const Kernels kAvx2{"avx2", and_v, or_v, andnot_v, not_v, fill_v, all_ones_v};

}  // namespace

const Kernels* avx2_kernels() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok ? &kAvx2 : nullptr;
}

}  // namespace alba::simd
