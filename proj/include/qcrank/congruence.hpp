#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "qcrank/check_report.hpp"
#include "qcrank/etaq.hpp"
#include "qcrank/series.hpp"

namespace qcrank {

/// Inner sum attached to a congruence family. With inner scale s the value
/// at n is sum_k w(k) * seq(a n + b - s * e(k)), where (w, e) come from the
/// matching theta kind; NONE is the single term seq(a n + b).
enum class SumWeight { NONE, TRIANGULAR_SUM, SQUARES_SUM, PENT_6K1_SUM, CUBIC_3K1_SUM };

std::string_view to_string(SumWeight w);

struct CongruenceFamily {
    SeriesName sequence = SeriesName::P_PARTITION;
    std::int64_t modulus = 2;
    std::int64_t stride = 1;
    std::int64_t offset = 0;
    SumWeight weight = SumWeight::NONE;
    std::int64_t inner_scale = 1;
    /// Applied exactly before reduction; a remainder is an InexactDivision.
    std::int64_t pre_divisor = 1;

    void validate() const;

    /// Largest sequence index touched at n (the k = 0 term).
    std::int64_t max_argument(std::int64_t n) const { return stride * n + offset; }

    /// Series order needed to cover 0 <= n <= n_max, with no slack.
    std::int64_t required_order(std::int64_t n_max) const { return max_argument(n_max) + 1; }

    Json describe() const;
};

/// The exact value of the family at n. Negative arguments contribute 0.
/// Throws InexactDivision (index n) if the pre-divisor leaves a remainder and
/// OrderExceeded if `seq` is too short.
BigInt weighted_sum(const CongruenceFamily& family, std::int64_t n, const Series& seq);
BigInt weighted_sum(const CongruenceFamily& family, std::int64_t n);

/// weighted_sum(n) == 0 (mod modulus) for 0 <= n <= n_max. The required
/// order is reported in params. An inexact pre-division fails the report.
CheckReport check_progression(const CongruenceFamily& family, std::int64_t n_max,
                              const Series& seq);
CheckReport check_progression(const CongruenceFamily& family, std::int64_t n_max);

struct ResidueClass {
    std::int64_t residue = 0;
    std::int64_t modulus = 1;
};

/// The class of n with 24 n == 1 (mod 5^(2 alpha + 1)).
ResidueClass solve_24n_condition(std::int64_t alpha);

bool is_prime(std::int64_t p);

/// Multiplicative relations of Cooper, Hirschhorn and Lewis:
///   D_CH, p = 7:  d(7n + 16) = 49 d(n/7), plus d(2) = d(9) = 0
///   H_CH, p = 13, 17, 19, 23 (mod 24):  h(pn + 5(p^2-1)/24) = +-p h(n/p)
/// where x(n/p) = 0 unless p | n. For H_CH the sign is inferred at the first
/// index where both sides are nonzero and then enforced; the corollary
/// h(p^2 n + p r + 5(p^2-1)/24) = 0 for 1 <= r < p is checked for
/// n <= corollary_n_max (default: every n covered by the same series).
CheckReport cooper_hirschhorn_check(SeriesName sequence, std::int64_t p, std::int64_t n_max,
                                    std::optional<std::int64_t> corollary_n_max = std::nullopt);

}  // namespace qcrank
