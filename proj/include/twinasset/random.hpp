#pragma once

#include <cstdint>
#include <limits>

namespace twinasset {

/// SplitMix64 finaliser; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based bit generator. Each (master seed, stream index) pair owns an
/// independent sequence; the n-th output is a pure function of
/// (seed, stream, n), so replications can run in any order on any thread.
///
/// Satisfies UniformRandomBitGenerator, so it plugs into the standard
/// distributions.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t master_seed, std::uint64_t stream) noexcept
        : key_(mix64(master_seed ^ mix64(stream ^ 0xD1B54A32D192ED03ULL))) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        return mix64(key_ + 0x9E3779B97F4A7C15ULL * ++counter_);
    }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace twinasset
