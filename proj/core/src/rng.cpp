#include "skewbox/rng.hpp"

#include <bit>

namespace skewbox {

namespace {

// Skein key-schedule parity constant.
constexpr std::uint64_t parity = 0x1BD11BDAA9FC1A22ULL;
constexpr int rotations[8] = {16, 42, 12, 31, 16, 32, 24, 21};

}  // namespace

std::array<std::uint64_t, 2> threefry2x64(std::array<std::uint64_t, 2> key,
                                          std::array<std::uint64_t, 2> counter) {
    const std::uint64_t ks[3] = {key[0], key[1], key[0] ^ key[1] ^ parity};
    std::uint64_t x0 = counter[0] + ks[0];
    std::uint64_t x1 = counter[1] + ks[1];
    for (int r = 0; r < 20; ++r) {
        x0 += x1;
        x1 = std::rotl(x1, rotations[r % 8]);
        x1 ^= x0;
        if (r % 4 == 3) {
            const int s = r / 4 + 1;
            x0 += ks[s % 3];
            x1 += ks[(s + 1) % 3] + static_cast<std::uint64_t>(s);
        }
    }
    return {x0, x1};
}

std::uint64_t RandomStream::next_u64() {
    if (available_ == 0) {
        buffer_ = threefry2x64(key_, counter_);
        ++counter_[0];
        available_ = 2;
    }
    --available_;
    return buffer_[1 - available_];
}

double RandomStream::uniform01() {
    // 52 random bits; result is (k + 0.5) * 2^-52, strictly inside (0, 1).
    const std::uint64_t k = next_u64() >> 12;
    return (static_cast<double>(k) + 0.5) * 0x1.0p-52;
}

std::uint64_t RandomStream::below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t zone = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = next_u64();
    while (x >= zone) x = next_u64();
    return x % n;
}

}  // namespace skewbox
