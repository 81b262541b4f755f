#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Balls-in-baskets model: a pool of black and white balls and a basket that
// draws k of them without replacement.

namespace sizebias::combinatorics {

/// Pool of `black` + `white` balls, total >= 1.
class PoolSpec {
  public:
    PoolSpec(std::uint64_t black, std::uint64_t white);

    std::uint64_t black() const noexcept { return black_; }
    std::uint64_t white() const noexcept { return white_; }
    std::uint64_t total() const noexcept { return black_ + white_; }

  private:
    std::uint64_t black_;
    std::uint64_t white_;
};

struct BasketSpec {
    std::uint64_t size = 0;
};

/// ln C(n, r) through lgamma. Throws DomainError when r > n.
double log_binomial(std::uint64_t n, std::uint64_t r);

/// Exact C(n, r) for n <= 60 (always fits in 64 bits); nullopt above.
std::optional<std::uint64_t> exact_binomial(std::uint64_t n, std::uint64_t r);

struct CombinationCount {
    double log_count = 0.0;               // natural log
    std::optional<std::uint64_t> exact;   // when both factors are exact and the product fits
};

/// Number of baskets holding exactly k1 black and k2 white balls,
/// C(K1, k1) * C(K2, k2).
CombinationCount count_combinations(const PoolSpec& pool, std::uint64_t k1, std::uint64_t k2);

/// Natural log of the probability of drawing exactly k1 black balls.
/// -infinity for structurally impossible k1 in [0, k].
double log_hypergeom_pmf(const PoolSpec& pool, BasketSpec basket, std::uint64_t k1);

/// Probability of drawing exactly k1 black balls with a basket of size k.
/// Throws DomainError when k > K or k1 > k.
double hypergeom_pmf(const PoolSpec& pool, BasketSpec basket, std::uint64_t k1);

struct CountPoint {
    std::uint64_t k1 = 0;
    double probability = 0.0;
};

struct SharePoint {
    double share = 0.0;  // k1 / k
    double probability = 0.0;
};

/// Full PMF over k1 = 0..k. Entries below 1e-300 are emitted as 0.
std::vector<CountPoint> count_distribution(const PoolSpec& pool, std::uint64_t k);

/// count_distribution on the share axis k1/k. Throws DomainError for k = 0.
std::vector<SharePoint> share_distribution(const PoolSpec& pool, std::uint64_t k);

/// Smallest k1 attaining the maximum probability.
std::uint64_t distribution_mode(std::span<const CountPoint> distribution);

inline constexpr double kTruncationFloor = 1e-300;

}  // namespace sizebias::combinatorics
