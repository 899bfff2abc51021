#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qcrank/series.hpp"

namespace qcrank {

/// A partition: non-increasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and non-increasing.
    explicit Partition(std::vector<std::int64_t> parts);

    std::span<const std::int64_t> parts() const noexcept { return parts_; }
    std::int64_t size() const noexcept;
    /// omega: number of parts equal to 1.
    std::int64_t ones() const noexcept;
    /// l: largest part, 0 for the empty partition.
    std::int64_t largest() const noexcept;
    /// mu when called with ones(): number of parts strictly greater than t.
    std::int64_t parts_above(std::int64_t t) const noexcept;

private:
    std::vector<std::int64_t> parts_;
};

/// Andrews-Garvan crank: the largest part when there are no 1's, otherwise
/// (parts larger than the number of 1's) minus (number of 1's). The empty
/// partition has crank 0.
std::int64_t crank(const Partition& p);

/// Calls `visit` with the parts of every partition of n, largest parts first.
void for_each_partition(std::int64_t n,
                        const std::function<void(std::span<const std::int64_t>)>& visit);

inline constexpr std::int64_t kCrankOracleCap = 45;
inline constexpr std::int64_t kColoredOracleCap = 40;

/// (# partitions of n with even crank) - (# with odd crank), by enumeration.
/// Throws EnumerationCapExceeded when n > cap.
std::int64_t crank_parity_oracle(std::int64_t n, std::int64_t cap = kCrankOracleCap);

/// Partitions of n whose odd parts each carry one of three colors.
/// Throws EnumerationCapExceeded when n > cap.
BigInt colored_partition_oracle(std::int64_t n, std::int64_t cap = kColoredOracleCap);

}  // namespace qcrank
