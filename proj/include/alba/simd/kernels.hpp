#pragma once
// Word-array kernels for the bit-sliced evaluator. Every variant computes the
// same function; the scalar one is the reference.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace alba::simd {

using Word = std::uint64_t;

struct Kernels {
    const char* name;
    void (*and_)(Word* d, const Word* a, const Word* b, std::size_t n);
    void (*or_)(Word* d, const Word* a, const Word* b, std::size_t n);
    void (*andnot)(Word* d, const Word* a, const Word* b, std::size_t n);  // a & ~b
    void (*not_)(Word* d, const Word* a, std::size_t n);
    void (*fill)(Word* d, Word value, std::size_t n);
    bool (*all_ones)(const Word* a, std::size_t n);
};

const Kernels& scalar_kernels();
// nullptr when the variant is not built for this target or the CPU lacks it
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

// Best supported variant. ALBA_KERNEL=scalar|avx2|neon overrides the choice; an
// unavailable request falls back to scalar.
const Kernels& active_kernels();
std::vector<const Kernels*> available_kernels();
const Kernels* kernels_by_name(const char* name);

}  // namespace alba::simd
