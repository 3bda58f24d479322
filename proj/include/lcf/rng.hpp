#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace lcf {

// mt19937_64 with our own reductions, so streams do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, bound), bound > 0
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t lim = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = eng_();
        while (x >= lim) {
            x = eng_();
        }
        return x % bound;
    }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform w-subset of {0..n-1} as a mask (Floyd), n <= 64
    std::uint64_t subset_mask(std::size_t n, std::size_t w) {
        std::uint64_t m = 0;
        for (std::size_t j = n - w; j < n; ++j) {
            const auto t = below(j + 1);
            if ((m >> t) & 1ULL) {
                m |= 1ULL << j;
            } else {
                m |= 1ULL << t;
            }
        }
        return m;
    }

    // uniform w-subset as sorted indices, any n
    std::vector<std::size_t> subset(std::size_t n, std::size_t w);

private:
    std::mt19937_64 eng_;
};

inline std::vector<std::size_t> Rng::subset(std::size_t n, std::size_t w) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
        idx[i] = i;
    }
    for (std::size_t i = 0; i < w; ++i) {
        std::swap(idx[i], idx[i + below(n - i)]);
    }
    idx.resize(w);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace lcf
