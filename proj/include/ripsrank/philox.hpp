#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// Every random decision in the library is a pure function of
// (seed, stream, position), so Monte-Carlo results are reproducible
// bit-for-bit no matter how work is split across threads.

#include <array>
#include <cstdint>

namespace ripsrank {

struct Philox4x32 {
    static constexpr std::uint32_t M0 = 0xD2511F53u;
    static constexpr std::uint32_t M1 = 0xCD9E8D57u;
    static constexpr std::uint32_t W0 = 0x9E3779B9u;
    static constexpr std::uint32_t W1 = 0xBB67AE85u;

    // One 10-round block: 128 counter bits + 64 key bits -> 128 output bits.
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int r = 0; r < 10; ++r) {
            if (r > 0) {
                key[0] += W0;
                key[1] += W1;
            }
            const std::uint64_t p0 = static_cast<std::uint64_t>(M0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(M1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }
};

// Bernoulli(beta) is evaluated as u32 < threshold with a 32-bit fixed-point
// threshold; 2^32 (beta = 1) needs the wider type.
inline std::uint64_t bernoulli_threshold(double beta) {
    if (beta <= 0.0) return 0;
    if (beta >= 1.0) return std::uint64_t(1) << 32;
    return static_cast<std::uint64_t>(beta * 4294967296.0 + 0.5);
}

// Sequential draws from one logical stream.  The counter layout is
//   ctr = (block_lo, block_hi, stream_lo, stream_hi), key = seed,
// which matches the layout the batch kernels use, so a stream and the
// kernel that covers the same (seed, stream) see the same numbers.
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            buf_ = Philox4x32::block({static_cast<std::uint32_t>(block_),
                                      static_cast<std::uint32_t>(block_ >> 32),
                                      stream_lo_, stream_hi_},
                                     key_);
            ++block_;
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    bool bernoulli(std::uint64_t threshold) {
        return static_cast<std::uint64_t>(next_u32()) < threshold;
    }

    // Uniform double in [0, 1) with 32 bits of resolution (enough for the
    // acceptance tolerances used here; widen to 53 bits if ever needed).
    double next_unit() { return next_u32() * 0x1p-32; }

    // Uniform integer in [0, n): unbiased via rejection.
    std::uint32_t next_below(std::uint32_t n) {
        const std::uint32_t lim = n * (UINT32_MAX / n);
        std::uint32_t v;
        do {
            v = next_u32();
        } while (v >= lim);
        return v % n;
    }

private:
    std::array<std::uint32_t, 2> key_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
};

} // namespace ripsrank
