#include <doctest.h>

#include <array>
#include <bit>
#include <cmath>
#include <set>
#include <vector>

#include "skewbox/rng.hpp"

using namespace skewbox;

TEST_SUITE("rng") {

TEST_CASE("threefry block: stateless and key/counter sensitive") {
    const auto a = threefry2x64({1, 2}, {3, 4});
    const auto b = threefry2x64({1, 2}, {3, 4});
    CHECK(a == b);
    CHECK(threefry2x64({1, 2}, {3, 5}) != a);
    CHECK(threefry2x64({1, 3}, {3, 4}) != a);
    // single-bit key flip flips roughly half the output bits
    const auto c = threefry2x64({1ULL << 63 | 1, 2}, {3, 4});
    int flipped = 0;
    for (int w = 0; w < 2; ++w) flipped += std::popcount(a[w] ^ c[w]);
    CHECK(flipped > 32);
    CHECK(flipped < 96);
}

TEST_CASE("streams: reproducible and distinct") {
    RandomStream s1(99, 5), s2(99, 5), s3(99, 6);
    std::vector<std::uint64_t> a, b, c;
    for (int i = 0; i < 100; ++i) {
        a.push_back(s1.next_u64());
        b.push_back(s2.next_u64());
        c.push_back(s3.next_u64());
    }
    CHECK(a == b);
    CHECK(a != c);

    // cell/rep substreams never collide on a small lattice
    std::set<std::uint64_t> first_words;
    for (std::uint64_t ai = 0; ai < 4; ++ai) {
        for (std::uint64_t pi = 0; pi < 4; ++pi) {
            for (std::uint64_t rep = 0; rep < 4; ++rep) {
                first_words.insert(RandomStream::for_cell_rep(1, ai, pi, rep).next_u64());
            }
        }
    }
    CHECK(first_words.size() == 64);
}

TEST_CASE("uniform01: open interval and sane mean") {
    RandomStream s(2024, 0);
    double sum = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = s.uniform01();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(std::fabs(sum / n - 0.5) < 0.005);
}

TEST_CASE("below: range and rough uniformity") {
    RandomStream s(5, 1);
    std::array<int, 7> counts{};
    const int n = 70000;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t v = s.below(7);
        REQUIRE(v < 7);
        ++counts[v];
    }
    for (int c : counts) {
        CHECK(c > n / 7 - 600);
        CHECK(c < n / 7 + 600);
    }
    CHECK(s.below(1) == 0);
}

}  // TEST_SUITE
