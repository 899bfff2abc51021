#pragma once

// Deliberately naive reference implementations used only by the tests.
// Nothing here shares code with the library's fast paths.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qcrank/series.hpp"

namespace oracle {

using qcrank::BigInt;
using Coeffs = std::vector<BigInt>;

inline Coeffs multiply(const Coeffs& a, const Coeffs& b, std::size_t n) {
    Coeffs out(n, 0);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// prod_{k>=1} (1 - q^{mk}) multiplied out factor by factor.
inline Coeffs eta_product(std::int64_t m, std::size_t n) {
    Coeffs out(n, 0);
    out[0] = 1;
    for (std::size_t step = static_cast<std::size_t>(m); step < n; step += m) {
        Coeffs factor(n, 0);
        factor[0] = 1;
        factor[step] = -1;
        out = multiply(out, factor, n);
    }
    return out;
}

/// Power series inverse by the schoolbook recurrence; a[0] must be 1.
inline Coeffs inverse(const Coeffs& a, std::size_t n) {
    Coeffs out(n, 0);
    out[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        BigInt s = 0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) {
            s += a[j] * out[k - j];
        }
        out[k] = -s;
    }
    return out;
}

inline Coeffs power(const Coeffs& a, int k, std::size_t n) {
    Coeffs base = k < 0 ? inverse(a, n) : a;
    Coeffs out(n, 0);
    out[0] = 1;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
        out = multiply(out, base, n);
    }
    return out;
}

/// Partitions of n into parts of size at most `cap`, by plain recursion.
inline std::int64_t count_partitions(std::int64_t n, std::int64_t cap) {
    if (n == 0) return 1;
    std::int64_t total = 0;
    for (std::int64_t part = std::min(n, cap); part >= 1; --part) {
        total += count_partitions(n - part, part);
    }
    return total;
}

inline std::int64_t count_partitions(std::int64_t n) { return count_partitions(n, n); }

/// Visits each partition of n as a non-increasing list.
inline void partitions(std::int64_t n, const std::function<void(const std::vector<std::int64_t>&)>& f) {
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t left, std::int64_t cap) {
        if (left == 0) {
            f(cur);
            return;
        }
        for (std::int64_t part = std::min(left, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
}

/// Coefficients of s at exponents [0, n).
inline Coeffs head(const qcrank::Series& s, std::size_t n) {
    Coeffs out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(s.coeff(static_cast<std::int64_t>(i)));
    }
    return out;
}

/// Random series with small coefficients, valuation in [vmin, vmax].
inline qcrank::Series random_series(std::mt19937_64& rng, std::int64_t order, std::int64_t vmin,
                                    std::int64_t vmax, bool unit_lead = false) {
    std::uniform_int_distribution<std::int64_t> val(vmin, vmax);
    std::uniform_int_distribution<int> c(-9, 9);
    const std::int64_t v = val(rng);
    std::vector<BigInt> coeffs;
    for (std::int64_t e = v; e < order; ++e) {
        coeffs.push_back(c(rng));
    }
    if (!coeffs.empty()) {
        coeffs[0] = unit_lead ? BigInt((rng() & 1) ? 1 : -1) : BigInt(c(rng) | 1);
    }
    return qcrank::Series::from_coefficients(v, std::move(coeffs), order);
}

}  // namespace oracle
