#pragma once

#include <array>
#include <cstdint>

namespace skewbox {

// Threefry-2x64, 20 rounds: a counter-based block cipher from Salmon et al.'s
// Random123 family. 128-bit key, 128-bit counter, stateless block function,
// which makes substreams trivial: every (key, counter) pair is an independent
// random block, so any subset of cells/replications can be recomputed in any
// order with identical results.
std::array<std::uint64_t, 2> threefry2x64(std::array<std::uint64_t, 2> key,
                                          std::array<std::uint64_t, 2> counter);

// A forward-only stream of random values drawn from successive Threefry
// blocks. The triple (seed, stream, block) fully determines the output
// sequence; identical construction gives an identical stream on any platform
// or thread.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t block_hi = 0)
        : key_{seed, stream_id}, counter_{0, block_hi} {}

    // Substream for one replication of one grid cell.
    static RandomStream for_cell_rep(std::uint64_t seed, std::uint64_t alpha_index,
                                     std::uint64_t p_index, std::uint64_t rep_index) {
        return RandomStream(seed, (alpha_index << 32) | (p_index & 0xffffffffu), rep_index);
    }

    std::uint64_t next_u64();

    // Uniform double strictly inside (0, 1): (k + 0.5) / 2^52.
    double uniform01();

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased integer in [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n);

private:
    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 2> counter_;
    std::array<std::uint64_t, 2> buffer_{};
    int available_ = 0;
};

}  // namespace skewbox
