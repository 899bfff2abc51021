#include "qcrank/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qcrank/errors.hpp"

namespace qcrank {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
    }
}

std::int64_t Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::int64_t Partition::ones() const noexcept {
    return std::count(parts_.begin(), parts_.end(), std::int64_t{1});
}

std::int64_t Partition::largest() const noexcept {
    return parts_.empty() ? 0 : parts_.front();
}

std::int64_t Partition::parts_above(std::int64_t t) const noexcept {
    return std::count_if(parts_.begin(), parts_.end(), [t](std::int64_t x) { return x > t; });
}

std::int64_t crank(const Partition& p) {
    const std::int64_t omega = p.ones();
    if (omega == 0) {
        return p.largest();
    }
    return p.parts_above(omega) - omega;
}

namespace {

void enumerate(std::int64_t remaining, std::int64_t max_part, std::vector<std::int64_t>& buf,
               const std::function<void(std::span<const std::int64_t>)>& visit) {
    if (remaining == 0) {
        visit(buf);
        return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
        buf.push_back(part);
        enumerate(remaining - part, part, buf, visit);
        buf.pop_back();
    }
}

void check_cap(std::int64_t n, std::int64_t cap) {
    if (n < 0) {
        throw std::invalid_argument("oracle needs n >= 0");
    }
    if (n > cap) {
        throw EnumerationCapExceeded("enumeration of partitions of " + std::to_string(n) +
                                     " exceeds the cap " + std::to_string(cap));
    }
}

}  // namespace

void for_each_partition(std::int64_t n,
                        const std::function<void(std::span<const std::int64_t>)>& visit) {
    std::vector<std::int64_t> buf;
    enumerate(n, n, buf, visit);
}

std::int64_t crank_parity_oracle(std::int64_t n, std::int64_t cap) {
    check_cap(n, cap);
    std::int64_t total = 0;
    for_each_partition(n, [&](std::span<const std::int64_t> parts) {
        const Partition p({parts.begin(), parts.end()});
        total += (crank(p) % 2 == 0) ? 1 : -1;
    });
    return total;
}

BigInt colored_partition_oracle(std::int64_t n, std::int64_t cap) {
    check_cap(n, cap);
    BigInt total = 0;
    for_each_partition(n, [&](std::span<const std::int64_t> parts) {
        // An odd part repeated j times can be colored as a multiset of size j
        // over 3 colors: C(j + 2, 2) ways.
        BigInt ways = 1;
        std::size_t i = 0;
        while (i < parts.size()) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) {
                ++j;
            }
            if (parts[i] % 2 == 1) {
                const auto mult = static_cast<long>(j - i);
                ways *= (mult + 2) * (mult + 1) / 2;
            }
            i = j;
        }
        total += ways;
    });
    return total;
}

}  // namespace qcrank
