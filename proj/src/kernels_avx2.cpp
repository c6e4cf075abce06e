// AVX2 variant of the Bernoulli mask kernel: eight Philox blocks per
// iteration, stored struct-of-arrays across lanes.  Compiled with -mavx2 in
// its own translation unit; callers reach it through kern::bernoulli_words().

#include "ripsrank/kernels.hpp"
#include "ripsrank/philox.hpp"

#include <immintrin.h>

#include <array>

namespace ripsrank::kern {

namespace {

// spread_bits[m] places bit l of m at position 4*l.
constexpr std::array<std::uint32_t, 256> make_spread() {
    std::array<std::uint32_t, 256> t{};
    for (int m = 0; m < 256; ++m) {
        std::uint32_t s = 0;
        for (int l = 0; l < 8; ++l)
            if (m & (1 << l)) s |= 1u << (4 * l);
        t[m] = s;
    }
    return t;
}
constexpr auto spread_bits = make_spread();

// 64-bit products of each 32-bit lane with a broadcast multiplier, split
// into low/high 32-bit halves kept in lane order.
inline void mul_hilo(__m256i x, __m256i mul, __m256i& lo, __m256i& hi) {
    __m256i even = _mm256_mul_epu32(x, mul);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), mul);
    lo = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0xAA);
    hi = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

} // namespace

void bernoulli_words_avx2(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t threshold, std::size_t nbits,
                          std::uint32_t* words) {
    const std::size_t nwords = (nbits + 31) / 32;
    if (nwords == 0) return;

    if (threshold > 0xFFFFFFFFull) { // beta = 1: every coin comes up heads
        for (std::size_t w = 0; w < nwords; ++w) words[w] = 0xFFFFFFFFu;
        if (nbits % 32 != 0) words[nwords - 1] &= (1u << (nbits % 32)) - 1u;
        return;
    }

    const __m256i mul0 = _mm256_set1_epi32(static_cast<int>(Philox4x32::M0));
    const __m256i mul1 = _mm256_set1_epi32(static_cast<int>(Philox4x32::M1));
    const __m256i w0 = _mm256_set1_epi32(static_cast<int>(Philox4x32::W0));
    const __m256i w1 = _mm256_set1_epi32(static_cast<int>(Philox4x32::W1));
    const __m256i key0_init =
        _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(seed)));
    const __m256i key1_init =
        _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(seed >> 32)));
    const __m256i stream_lo =
        _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(stream)));
    const __m256i stream_hi =
        _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(stream >> 32)));

    // Unsigned x < thr as signed (x ^ 0x80000000) < (thr ^ 0x80000000).
    const __m256i sign = _mm256_set1_epi32(static_cast<int>(0x80000000u));
    const __m256i thr_s = _mm256_xor_si256(
        _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(threshold))), sign);

    std::uint64_t block = 0;
    alignas(32) std::uint32_t blo[8], bhi[8];
    for (std::size_t w = 0; w < nwords; ++w) {
        for (int l = 0; l < 8; ++l) {
            blo[l] = static_cast<std::uint32_t>(block + l);
            bhi[l] = static_cast<std::uint32_t>((block + l) >> 32);
        }
        block += 8;

        __m256i c0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(blo));
        __m256i c1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(bhi));
        __m256i c2 = stream_lo;
        __m256i c3 = stream_hi;
        __m256i k0 = key0_init;
        __m256i k1 = key1_init;

        for (int r = 0; r < 10; ++r) {
            if (r > 0) {
                k0 = _mm256_add_epi32(k0, w0);
                k1 = _mm256_add_epi32(k1, w1);
            }
            __m256i lo0, hi0, lo1, hi1;
            mul_hilo(c0, mul0, lo0, hi0);
            mul_hilo(c2, mul1, lo1, hi1);
            c0 = _mm256_xor_si256(_mm256_xor_si256(hi1, c1), k0);
            c1 = lo1;
            c2 = _mm256_xor_si256(_mm256_xor_si256(hi0, c3), k1);
            c3 = lo0;
        }

        auto lane_mask = [&](__m256i x) -> std::uint32_t {
            __m256i lt = _mm256_cmpgt_epi32(thr_s, _mm256_xor_si256(x, sign));
            return static_cast<std::uint32_t>(
                _mm256_movemask_ps(_mm256_castsi256_ps(lt)));
        };
        words[w] = spread_bits[lane_mask(c0)] | (spread_bits[lane_mask(c1)] << 1) |
                   (spread_bits[lane_mask(c2)] << 2) | (spread_bits[lane_mask(c3)] << 3);
    }
    if (nbits % 32 != 0) words[nwords - 1] &= (1u << (nbits % 32)) - 1u;
}

} // namespace ripsrank::kern
