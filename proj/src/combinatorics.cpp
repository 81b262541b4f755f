#include "sizebias/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sizebias/error.hpp"

namespace sizebias::combinatorics {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// stirlerr(n) = ln(n!) - ln(sqrt(2*pi*n) * (n/e)^n), Loader (2000).
// Only integer arguments occur here; the table covers n <= 15.
double stirlerr(double n) {
    static constexpr double kTable[16] = {
        0.0,  // placeholder, never used
        0.0810614667953272582196702,
        0.0413406959554092940938221,
        0.02767792568499833914878929,
        0.02079067210376509311152277,
        0.01664469118982119216319487,
        0.01387612882307074799874573,
        0.01189670994589177009505572,
        0.010411265261972096497478567,
        0.009255462182712732917728637,
        0.008330563433362871256469318,
        0.007573675487951840794972024,
        0.006942840107209529865664152,
        0.006408994188004207068439631,
        0.005951370112758847735624416,
        0.005554733551962801371038690,
    };
    constexpr double s0 = 1.0 / 12.0;
    constexpr double s1 = 1.0 / 360.0;
    constexpr double s2 = 1.0 / 1260.0;
    constexpr double s3 = 1.0 / 1680.0;
    constexpr double s4 = 1.0 / 1188.0;

    if (n <= 15.0) return kTable[static_cast<int>(n)];
    const double nn = n * n;
    if (n > 500) return (s0 - s1 / nn) / n;
    if (n > 80) return (s0 - (s1 - s2 / nn) / nn) / n;
    if (n > 35) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
    return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// Deviance term x*ln(x/np) + np - x, evaluated without cancellation.
double bd0(double x, double np) {
    if (std::fabs(x - np) < 0.1 * (x + np)) {
        double v = (x - np) / (x + np);
        double s = (x - np) * v;
        if (std::fabs(s) < std::numeric_limits<double>::min()) return s;
        double ej = 2 * x * v;
        v = v * v;
        for (int j = 1; j < 1000; ++j) {
            ej *= v;
            const double s1 = s + ej / ((j << 1) + 1);
            if (s1 == s) return s1;
            s = s1;
        }
    }
    return x * std::log(x / np) + np - x;
}

// ln of the binomial probability of x successes in n trials.
double log_binom_raw(double x, double n, double p, double q) {
    if (p == 0) return x == 0 ? 0.0 : kNegInf;
    if (q == 0) return x == n ? 0.0 : kNegInf;
    if (x == 0) {
        if (n == 0) return 0.0;
        return p < 0.1 ? -bd0(n, n * q) - n * p : n * std::log(q);
    }
    if (x == n) {
        return q < 0.1 ? -bd0(n, n * p) - n * q : n * std::log(p);
    }
    if (x < 0 || x > n) return kNegInf;

    const double lc =
        stirlerr(n) - stirlerr(x) - stirlerr(n - x) - bd0(x, n * p) - bd0(n - x, n * q);
    const double lf = std::log(2 * std::numbers::pi) + std::log(x) + std::log1p(-x / n);
    return lc - 0.5 * lf;
}

void check_basket(const PoolSpec& pool, BasketSpec basket) {
    if (basket.size > pool.total()) {
        throw DomainError("basket size " + std::to_string(basket.size) + " exceeds pool size " +
                          std::to_string(pool.total()));
    }
}

}  // namespace

PoolSpec::PoolSpec(std::uint64_t black, std::uint64_t white) : black_(black), white_(white) {
    if (black + white == 0) throw DomainError("pool must contain at least one ball");
}

double log_binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) {
        throw DomainError("log_binomial: r=" + std::to_string(r) + " exceeds n=" + std::to_string(n));
    }
    if (r == 0 || r == n) return 0.0;
    const auto dn = static_cast<double>(n);
    const auto dr = static_cast<double>(r);
    return std::lgamma(dn + 1) - std::lgamma(dr + 1) - std::lgamma(dn - dr + 1);
}

std::optional<std::uint64_t> exact_binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) throw DomainError("exact_binomial: r exceeds n");
    if (n > 60) return std::nullopt;
    r = std::min(r, n - r);
    // c * (n - i) peaks near 3.5e18 for n = 60, inside the 64-bit range.
    std::uint64_t c = 1;
    for (std::uint64_t i = 0; i < r; ++i) {
        c = c * (n - i) / (i + 1);
    }
    return c;
}

CombinationCount count_combinations(const PoolSpec& pool, std::uint64_t k1, std::uint64_t k2) {
    if (k1 > pool.black() || k2 > pool.white()) {
        throw DomainError("count_combinations: (k1, k2) = (" + std::to_string(k1) + ", " +
                          std::to_string(k2) + ") outside pool (" + std::to_string(pool.black()) +
                          ", " + std::to_string(pool.white()) + ")");
    }
    CombinationCount out;
    out.log_count = log_binomial(pool.black(), k1) + log_binomial(pool.white(), k2);

    const auto a = exact_binomial(pool.black(), k1);
    const auto b = exact_binomial(pool.white(), k2);
    std::uint64_t product = 0;
    if (a && b && !__builtin_mul_overflow(*a, *b, &product)) out.exact = product;
    return out;
}

double log_hypergeom_pmf(const PoolSpec& pool, BasketSpec basket, std::uint64_t k1) {
    check_basket(pool, basket);
    const std::uint64_t k = basket.size;
    if (k1 > k) throw DomainError("k1 exceeds basket size");
    if (k1 > pool.black() || k - k1 > pool.white()) return kNegInf;
    if (k == 0) return 0.0;

    const auto black = static_cast<double>(pool.black());
    const auto white = static_cast<double>(pool.white());
    const auto total = static_cast<double>(pool.total());
    const auto dk = static_cast<double>(k);
    const auto x = static_cast<double>(k1);

    const double p = dk / total;
    const double q = (total - dk) / total;
    return log_binom_raw(x, black, p, q) + log_binom_raw(dk - x, white, p, q) -
           log_binom_raw(dk, total, p, q);
}

double hypergeom_pmf(const PoolSpec& pool, BasketSpec basket, std::uint64_t k1) {
    return std::exp(log_hypergeom_pmf(pool, basket, k1));
}

std::vector<CountPoint> count_distribution(const PoolSpec& pool, std::uint64_t k) {
    check_basket(pool, BasketSpec{k});
    std::vector<CountPoint> out;
    out.reserve(k + 1);
    for (std::uint64_t k1 = 0; k1 <= k; ++k1) {
        double p = hypergeom_pmf(pool, BasketSpec{k}, k1);
        if (p < kTruncationFloor) p = 0.0;
        out.push_back({k1, p});
    }
    return out;
}

std::vector<SharePoint> share_distribution(const PoolSpec& pool, std::uint64_t k) {
    if (k == 0) throw DomainError("share distribution undefined for an empty basket");
    const auto counts = count_distribution(pool, k);
    std::vector<SharePoint> out;
    out.reserve(counts.size());
    for (const auto& c : counts) {
        out.push_back({static_cast<double>(c.k1) / static_cast<double>(k), c.probability});
    }
    return out;
}

std::uint64_t distribution_mode(std::span<const CountPoint> distribution) {
    if (distribution.empty()) throw DomainError("mode of an empty distribution");
    const auto it = std::max_element(
        distribution.begin(), distribution.end(),
        [](const CountPoint& a, const CountPoint& b) { return a.probability < b.probability; });
    return it->k1;
}

}  // namespace sizebias::combinatorics
