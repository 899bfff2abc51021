#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcrank/check_report.hpp"

namespace qcrank {

/// One verification task. `order` is the series order used by congruence
/// scans, or the comparison order for identity checks. When `n_max` is
/// absent, progression tasks scan every n the order covers.
struct TaskSpec {
    std::string id;
    std::int64_t order = 300;
    std::optional<std::int64_t> n_max;
    std::optional<std::int64_t> alpha;  // thm11
    std::optional<std::int64_t> p;      // thm16, cr2, ch-h
    std::optional<std::int64_t> m;      // binom
    std::optional<std::int64_t> k;      // binom
};

struct TaskInfo {
    std::string_view id;
    std::string_view summary;
};

/// Every recognized task id with a one-line description.
std::span<const TaskInfo> known_tasks();
bool is_known_task(std::string_view id);

/// Runs a task. Throws std::invalid_argument on an unknown id or bad
/// parameters and OrderExceeded when `order` cannot cover `n_max`.
CheckReport check_theorem(const TaskSpec& spec);

/// The full verification table with its pinned orders and ranges.
std::vector<TaskSpec> report_tasks();

/// Runs tasks on up to `jobs` threads. Results come back in input order;
/// a task that throws yields a failed report carrying the error as a note.
std::vector<CheckReport> run_tasks(std::span<const TaskSpec> tasks, unsigned jobs = 1,
                                   bool timing = false);

}  // namespace qcrank
