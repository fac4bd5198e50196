#pragma once

#include <cassert>
#include <cstdint>

namespace achlioptas {

/// SplitMix64 (Steele, Lea, Flood). 64-bit state, period 2^64, passes
/// BigCrush. One seed fully determines a run; independent streams for
/// parallel trials come from derive_seed below.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound), unbiased (rejection below 2^64 mod bound).
    std::uint64_t uniform_below(std::uint64_t bound) {
        assert(bound > 0);
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    std::uint64_t state() const { return state_; }

  private:
    std::uint64_t state_;
};

/// Seed of the k-th independent stream: the (k+1)-th output of
/// SplitMix64(base), in closed form.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace achlioptas
