#include "ripsrank/kernels.hpp"

#include "ripsrank/philox.hpp"

namespace ripsrank::kern {

void bernoulli_words_scalar(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t threshold, std::size_t nbits,
                            std::uint32_t* words) {
    const std::array<std::uint32_t, 2> key{static_cast<std::uint32_t>(seed),
                                           static_cast<std::uint32_t>(seed >> 32)};
    const std::uint32_t s_lo = static_cast<std::uint32_t>(stream);
    const std::uint32_t s_hi = static_cast<std::uint32_t>(stream >> 32);

    const std::size_t nwords = (nbits + 31) / 32;
    std::uint64_t block = 0;
    for (std::size_t w = 0; w < nwords; ++w) {
        std::uint32_t bits = 0;
        for (int b = 0; b < 8; ++b, ++block) {
            auto out = Philox4x32::block({static_cast<std::uint32_t>(block),
                                          static_cast<std::uint32_t>(block >> 32),
                                          s_lo, s_hi},
                                         key);
            for (int lane = 0; lane < 4; ++lane)
                if (static_cast<std::uint64_t>(out[lane]) < threshold)
                    bits |= 1u << (4 * b + lane);
        }
        words[w] = bits;
    }
    // Zero any padding past nbits in the last word.
    if (nbits % 32 != 0 && nwords > 0)
        words[nwords - 1] &= (1u << (nbits % 32)) - 1u;
}

#if defined(__x86_64__) || defined(_M_X64)
#if RIPSRANK_HAVE_AVX2_TU
namespace {
bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }
} // namespace

BernoulliWordsFn bernoulli_words() {
    static const BernoulliWordsFn fn =
        cpu_has_avx2() ? &bernoulli_words_avx2 : &bernoulli_words_scalar;
    return fn;
}

const char* active_kernel_name() {
    return bernoulli_words() == &bernoulli_words_scalar ? "scalar" : "avx2";
}
#else
BernoulliWordsFn bernoulli_words() { return &bernoulli_words_scalar; }
const char* active_kernel_name() { return "scalar"; }
#endif
#else
BernoulliWordsFn bernoulli_words() { return &bernoulli_words_scalar; }
const char* active_kernel_name() { return "scalar"; }
#endif

} // namespace ripsrank::kern
