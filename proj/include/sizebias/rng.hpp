#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace sizebias {

/// Every random stream in the library is an mt19937_64, whose output
/// sequence is fixed by the standard for a given seed.
using Rng = std::mt19937_64;

/// Independent stream families derived from one master seed.
enum class StreamDomain : std::uint64_t {
    replicate = 1,
    sizes = 2,
    citations = 3,
    fresh_null = 4,
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for stream `index` of `domain`, a pure function of its arguments.
std::uint64_t stream_seed(std::uint64_t master_seed, StreamDomain domain,
                          std::uint64_t index) noexcept;

inline Rng make_stream(std::uint64_t master_seed, StreamDomain domain, std::uint64_t index) {
    return Rng(stream_seed(master_seed, domain, index));
}

/// Uniform integer in [0, bound), bound >= 1. Lemire's multiply-shift with
/// rejection, so the result is unbiased and platform-independent.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform double strictly inside (0, 1), 53-bit resolution.
double uniform_open01(Rng& rng);

/// In-place Fisher-Yates shuffle; every permutation equally likely.
template <class T>
void fisher_yates(std::span<T> values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = uniform_below(rng, i);
        using std::swap;
        swap(values[i - 1], values[j]);
    }
}

}  // namespace sizebias
