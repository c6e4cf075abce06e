#pragma once

// Batch Bernoulli mask kernels.  The percolation sampler needs one coin per
// edge per sample; that is the innermost loop of the whole pipeline, so it
// gets a packed-bitmask kernel with an AVX2 variant.  Both variants produce
// bit-identical output: bit j of the mask is lane (j % 4) of Philox block
// (j / 4) under counter (block, stream) and key seed, tested as u32 < thr.

#include <cstddef>
#include <cstdint>

namespace ripsrank::kern {

// Fills words[0 .. (nbits+31)/32) with packed Bernoulli(threshold) bits for
// the given (seed, stream); bits at positions >= nbits are zero.
// threshold is fixed-point in [0, 2^32] (see bernoulli_threshold).
using BernoulliWordsFn = void (*)(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t threshold, std::size_t nbits,
                                  std::uint32_t* words);

void bernoulli_words_scalar(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t threshold, std::size_t nbits,
                            std::uint32_t* words);

#if defined(__x86_64__) || defined(_M_X64)
void bernoulli_words_avx2(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t threshold, std::size_t nbits,
                          std::uint32_t* words);
#endif

// Best kernel the running CPU supports; resolved once.
BernoulliWordsFn bernoulli_words();
const char* active_kernel_name();

} // namespace ripsrank::kern
