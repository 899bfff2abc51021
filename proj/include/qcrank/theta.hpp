#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "qcrank/check_report.hpp"
#include "qcrank/etaq.hpp"
#include "qcrank/series.hpp"

namespace qcrank {

/// The four theta-type sums and their product forms:
///   TRIANGULAR  sum_{k>=0} q^{k(k+1)/2}              = f2^2/f1
///   SQUARES     sum_k (-1)^k q^{k^2}                  = f1^2/f2
///   PENT_6K1    sum_k (6k+1) q^{k(3k+1)/2}            = f1^5/f2^2
///   CUBIC_3K1   sum_k (-1)^k (3k+1) q^{k(3k+2)}       = f2^5/f1^2
enum class ThetaKind { TRIANGULAR, SQUARES, PENT_6K1, CUBIC_3K1 };

inline constexpr std::array<ThetaKind, 4> kAllThetaKinds = {
    ThetaKind::TRIANGULAR, ThetaKind::SQUARES, ThetaKind::PENT_6K1, ThetaKind::CUBIC_3K1};

std::string_view to_string(ThetaKind kind);
std::optional<ThetaKind> parse_theta_kind(std::string_view text);

/// Whether the sum runs over all integers k or only k >= 0.
bool is_bilateral(ThetaKind kind);

/// Exponent of q contributed by index k.
std::int64_t theta_exponent(ThetaKind kind, std::int64_t k);

/// Weight multiplying q^{exponent(k)}.
std::int64_t theta_weight(ThetaKind kind, std::int64_t k);

Series theta_sum(ThetaKind kind, std::int64_t order);

EtaQuotientSpec theta_product_form(ThetaKind kind);

CheckReport verify_theta_identity(ThetaKind kind, std::int64_t order);

/// Coefficients of the nine-term bracket in the 5-dissection of 1/f1,
/// attached to R5^-4, q R5^-3, ..., q^8 R5^4.
using DissectionBracket = std::array<std::int64_t, 9>;
inline constexpr DissectionBracket kInverseF1Bracket = {1, 1, 2, 3, 5, -3, 2, -1, 1};

/// f25 (1/R5 - q - q^2 R5), written in q^m for m = 1 by default;
/// `m` stretches the whole expression (q -> q^m).
Series f1_dissection(std::int64_t order, std::int64_t m = 1);

/// f25^5/f5^6 times the bracket, stretched by `m`.
Series inverse_f1_dissection(std::int64_t order, std::int64_t m = 1,
                             const DissectionBracket& bracket = kInverseF1Bracket);

/// Both 5-dissection identities for f1 and 1/f1, plus their product being 1.
CheckReport verify_5dissections(std::int64_t order,
                                const DissectionBracket& bracket = kInverseF1Bracket);

/// K + 1 and K - 4 as eta quotients. `k_override` replaces the K series.
CheckReport verify_K_identities(std::int64_t order,
                                const std::optional<Series>& k_override = std::nullopt);

}  // namespace qcrank
