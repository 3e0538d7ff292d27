#include <cstdlib>
#include <cstring>

#include "alba/simd/kernels.hpp"

namespace alba::simd {

#ifndef ALBA_HAVE_AVX2
const Kernels* avx2_kernels() { return nullptr; }
#endif
#ifndef ALBA_HAVE_NEON
const Kernels* neon_kernels() { return nullptr; }
#endif

std::vector<const Kernels*> available_kernels() {
    std::vector<const Kernels*> out{&scalar_kernels()};
    if (const Kernels* k = avx2_kernels()) out.push_back(k);
    if (const Kernels* k = neon_kernels()) out.push_back(k);
    return out;
}

const Kernels* kernels_by_name(const char* name) {
    for (const Kernels* k : available_kernels())
        if (std::strcmp(k->name, name) == 0) return k;
    return nullptr;
}

const Kernels& active_kernels() {
    static const Kernels* chosen = [] {
        if (const char* env = std::getenv("ALBA_KERNEL"); env && *env) {
            const Kernels* k = kernels_by_name(env);
            return k ? k : &scalar_kernels();
        }
        return available_kernels().back();
    }();
    return *chosen;
}

}  // namespace alba::simd
