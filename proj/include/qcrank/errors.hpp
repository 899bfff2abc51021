#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcrank {

/// Inversion over the integers needs a leading coefficient of +1 or -1.
class NonUnitLeadingCoefficient : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A coefficient at or beyond the truncation order was requested.
/// Recompute the series at a higher order.
class OrderExceeded : public std::out_of_range {
public:
    OrderExceeded(const std::string& what, std::int64_t requested, std::int64_t available)
        : std::out_of_range(what), requested_(requested), available_(available) {}

    std::int64_t requested() const noexcept { return requested_; }
    std::int64_t available() const noexcept { return available_; }

private:
    std::int64_t requested_;
    std::int64_t available_;
};

/// An exact division by an integer left a remainder.
class InexactDivision : public std::domain_error {
public:
    InexactDivision(const std::string& what, std::int64_t index)
        : std::domain_error(what), index_(index) {}

    std::int64_t index() const noexcept { return index_; }

private:
    std::int64_t index_;
};

class EnumerationCapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace qcrank
