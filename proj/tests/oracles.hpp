#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

inline std::uint64_t h_index(std::vector<std::uint64_t> c) {
    std::sort(c.begin(), c.end(), std::greater<>());
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= i + 1) h = i + 1;
    }
    return h;
}

// Pascal's triangle up to row n, as doubles (exact below 2^53) and uint64.
inline std::vector<std::vector<std::uint64_t>> pascal(std::size_t n) {
    std::vector<std::vector<std::uint64_t>> t(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        t[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
}

// Walks every k-subset of a pool of `black` + `white` balls (black first) and
// tallies the number of black balls drawn.
inline std::vector<double> enumerate_baskets(unsigned black, unsigned white, unsigned k) {
    const unsigned total = black + white;
    std::vector<std::uint64_t> tally(k + 1, 0);
    std::uint64_t baskets = 0;
    const std::uint32_t black_mask = (1u << black) - 1u;
    for (std::uint32_t m = 0; m < (1u << total); ++m) {
        if (static_cast<unsigned>(__builtin_popcount(m)) != k) continue;
        ++tally[__builtin_popcount(m & black_mask)];
        ++baskets;
    }
    std::vector<double> p(k + 1);
    for (unsigned i = 0; i <= k; ++i) p[i] = static_cast<double>(tally[i]) / static_cast<double>(baskets);
    return p;
}

struct Line {
    double slope;
    double intercept;
};

// Raw-sum normal equations, no centering.
inline Line ols(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += static_cast<long double>(x[i]) * x[i];
        sxy += static_cast<long double>(x[i]) * y[i];
    }
    const long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const long double intercept = (sy - slope * sx) / n;
    return {static_cast<double>(slope), static_cast<double>(intercept)};
}

// Average ranks by counting: rank = #{less} + (#{equal} + 1) / 2.
inline std::vector<double> ranks(const std::vector<double>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double less = 0, equal = 0;
        for (double w : v) {
            if (w < v[i]) ++less;
            if (w == v[i]) ++equal;
        }
        r[i] = less + (equal + 1) / 2;
    }
    return r;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(ranks(x), ranks(y));
}

// Expected block h-index under a uniformly random permutation of `pool`,
// by walking all |pool|! orderings.
inline std::vector<double> exhaustive_null_mean(std::vector<std::uint64_t> pool,
                                                const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> idx(pool.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> sum(sizes.size(), 0.0);
    double perms = 0;
    do {
        std::size_t at = 0;
        for (std::size_t u = 0; u < sizes.size(); ++u) {
            std::vector<std::uint64_t> block;
            for (std::size_t j = 0; j < sizes[u]; ++j) block.push_back(pool[idx[at++]]);
            sum[u] += static_cast<double>(h_index(block));
        }
        ++perms;
    } while (std::next_permutation(idx.begin(), idx.end()));
    for (auto& s : sum) s /= perms;
    return sum;
}

}  // namespace oracle
