#include "alba/simd/kernels.hpp"

namespace alba::simd {

namespace {

void and_s(Word* d, const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i] & b[i];
}
void or_s(Word* d, const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i] | b[i];
}
void andnot_s(Word* d, const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i] & ~b[i];
}
void not_s(Word* d, const Word* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) d[i] = ~a[i];
}
void fill_s(Word* d, Word v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) d[i] = v;
}
bool all_ones_s(const Word* a, std::size_t n) {
    Word acc = ~Word{0};
    for (std::size_t i = 0; i < n; ++i) acc &= a[i];
    return acc == ~Word{0};
}

const Kernels kScalar{"scalar", and_s, or_s, andnot_s, not_s, fill_s, all_ones_s};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

}  // namespace alba::simd
