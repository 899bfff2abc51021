#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcrank/series.hpp"

namespace qcrank {

using Json = nlohmann::ordered_json;

struct Witness {
    std::int64_t n = 0;
    std::optional<std::int64_t> k;
    /// Offending value: a coefficient difference, or a residue.
    BigInt residue;
    /// Which sub-identity of the task failed.
    std::string at;
};

/// Outcome of one verification task. A failed report always has a witness.
struct CheckReport {
    std::string task;
    Json params = Json::object();
    std::int64_t order = 0;
    bool passed = true;
    std::optional<Witness> witness;
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;

    void fail(Witness w);

    /// Folds a sub-check in: the first failure wins, notes accumulate.
    void absorb(const CheckReport& sub);

    /// Stable key order: task, params, order, outcome, witness?, notes?,
    /// elapsed_ms. With `with_timing` false elapsed_ms is written as 0 so
    /// repeated runs are byte-identical.
    Json to_json(bool with_timing = false) const;

    /// One line: `PASS task {params} order=N` plus the witness on failure.
    std::string to_text(bool with_timing = false) const;
};

/// Compares two series on exponents below `order`, exactly or modulo
/// `modulus` when it is nonzero. Both sides must be known to `order`.
CheckReport compare_series(std::string task, Json params, std::int64_t order,
                           const Series& lhs, const Series& rhs, const BigInt& modulus = 0,
                           std::string label = {});

}  // namespace qcrank
