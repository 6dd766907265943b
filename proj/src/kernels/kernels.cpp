#include "kohler/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace kohler::kernels {

void pair_run_scalar(const std::uint8_t*, const std::uint8_t*, std::size_t, std::uint64_t*,
                     std::uint64_t*);
#if defined(__x86_64__) || defined(__i386__)
void pair_run_avx2(const std::uint8_t*, const std::uint8_t*, std::size_t, std::uint64_t*,
                   std::uint64_t*);
#endif
#if defined(__aarch64__)
void pair_run_neon(const std::uint8_t*, const std::uint8_t*, std::size_t, std::uint64_t*,
                   std::uint64_t*);
#endif

namespace {

std::vector<PairKernel> detect()
{
    std::vector<PairKernel> list{{"scalar", &pair_run_scalar}};
#if defined(__x86_64__) || defined(__i386__)
    if (__builtin_cpu_supports("avx2"))
        list.push_back({"avx2", &pair_run_avx2});
#endif
#if defined(__aarch64__)
    list.push_back({"neon", &pair_run_neon});
#endif
    return list;
}

} // namespace

std::span<const PairKernel> available()
{
    static const std::vector<PairKernel> kernels = detect();
    return kernels;
}

const PairKernel* find(std::string_view name)
{
    for (const PairKernel& kernel : available())
        if (kernel.name == name)
            return &kernel;
    return nullptr;
}

const PairKernel& active()
{
    static const PairKernel& chosen = []() -> const PairKernel& {
        if (const char* env = std::getenv("KOHLER_KERNEL")) {
            if (const PairKernel* kernel = find(env))
                return *kernel;
            std::fprintf(stderr, "kohler: KOHLER_KERNEL=%s not available, using %s\n", env,
                         std::string(available().back().name).c_str());
        }
        return available().back();
    }();
    return chosen;
}

} // namespace kohler::kernels
