#pragma once

#include <cstdint>

namespace focal {

/// Stateless counter-based generator: every word is a pure function of
/// (seed, stream, counter, index), so any trial can be regenerated in
/// isolation and work can be split across threads in any way.
/// The mixer is the SplitMix64 finalizer applied in a keyed cascade.
class CounterRng {
  public:
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    constexpr CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept
        : seed_(seed), stream_(stream), counter_(counter),
          key_(mix(mix(mix(seed) ^ stream) ^ (counter * 0xd1b54a32d192ed03ull))) {}

    constexpr std::uint64_t seed() const noexcept { return seed_; }
    constexpr std::uint64_t stream() const noexcept { return stream_; }
    constexpr std::uint64_t counter() const noexcept { return counter_; }

    /// Word number `index` of this (seed, stream, counter) cell.
    constexpr std::uint64_t word(std::uint64_t index) const noexcept { return mix(key_ ^ mix(index)); }

    /// Next word of the cell's sequence.
    constexpr std::uint64_t next() noexcept { return word(drawn_++); }

    /// Uniform integer in [0, bound) by rejection (no modulo bias).
    constexpr std::uint64_t uniform(std::uint64_t bound) noexcept {
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_;
    std::uint64_t key_;
    std::uint64_t drawn_ = 0;
};

}  // namespace focal
