// Acceptance gate: runs the pinned task table and prints one PASS/FAIL line
// per criterion. A criterion passes only if every task it groups passes and
// each task actually covered the required range.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "qcrank/etaq.hpp"
#include "qcrank/partition.hpp"
#include "qcrank/tasks.hpp"

namespace {

using qcrank::CheckReport;
using qcrank::Json;

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> tasks;
    // Extra coverage checks on the task reports; return an empty string when met.
    std::function<std::string(const std::multimap<std::string, CheckReport>&)> coverage;
};

std::int64_t param(const CheckReport& r, const char* key) {
    return r.params.contains(key) ? r.params[key].get<std::int64_t>() : -1;
}

const CheckReport* find_with(const std::multimap<std::string, CheckReport>& by_id,
                             const std::string& id, const char* key, std::int64_t value) {
    auto [lo, hi] = by_id.equal_range(id);
    for (auto it = lo; it != hi; ++it) {
        if (param(it->second, key) == value) {
            return &it->second;
        }
    }
    return nullptr;
}

std::string need(bool ok, const std::string& what) { return ok ? "" : what; }

std::string min_param(const std::multimap<std::string, CheckReport>& by_id, const std::string& id,
                      const char* key, std::int64_t at_least) {
    auto [lo, hi] = by_id.equal_range(id);
    if (lo == hi) {
        return id + " missing";
    }
    for (auto it = lo; it != hi; ++it) {
        if (param(it->second, key) < at_least) {
            return id + " " + key + " below " + std::to_string(at_least);
        }
    }
    return "";
}

std::vector<Criterion> criteria() {
    using Map = std::multimap<std::string, CheckReport>;
    return {
        {1, "exact identity sum C(5n+4) q^n = 5 f1^2 f5 f10^2/f2^4 to order 300", {"thm12"},
         [](const Map& m) {
             return need(m.find("thm12")->second.order >= 300, "thm12 order below 300");
         }},
        {2, "C(n) = 0 mod 5^(alpha+1) on 24n = 1 mod 5^(2alpha+1), alpha = 0 and 1", {"thm11"},
         [](const Map& m) {
             const auto* a0 = find_with(m, "thm11", "alpha", 0);
             const auto* a1 = find_with(m, "thm11", "alpha", 1);
             if (!a0 || !a1) return std::string("thm11 needs alpha 0 and 1");
             if (param(*a0, "n_max") < 200) return std::string("alpha=0 n_max below 200");
             // Last index 125 n_max + 99 must be the final one not above 1100.
             if (125 * param(*a1, "n_max") + 99 + 125 <= 1100)
                 return std::string("alpha=1 does not reach 1100");
             return std::string();
         }},
        {3, "pentagonal-weighted C sum = 0 mod 5 for n <= 10, exact pre-division", {"thm13"},
         [](const Map& m) { return min_param(m, "thm13", "n_max", 10); }},
        {4, "a(7n+2) = 0 mod 7 and d(7n+16) = 49 d(n/7) for n <= 100", {"thm14", "ch-d"},
         [](const Map& m) {
             return min_param(m, "thm14", "n_max", 100) + min_param(m, "ch-d", "n_max", 100);
         }},
        {5, "triangular sums: a mod 5 for n <= 20, C mod 25 for n <= 7", {"thm15a", "thm15b"},
         [](const Map& m) {
             return min_param(m, "thm15a", "n_max", 20) + min_param(m, "thm15b", "n_max", 7);
         }},
        {6, "p = 13 alternating-square sums and the h(13n+35) relation", {"thm16", "ch-h"},
         [](const Map& m) {
             std::string out = min_param(m, "thm16", "shift", 176) +
                               min_param(m, "ch-h", "n_max", 100) +
                               min_param(m, "ch-h", "corollary_n_max", 5);
             if (param(m.find("thm16")->second, "p") != 13) out += "thm16 not at p=13";
             if (param(m.find("ch-h")->second, "shift") != 35) out += "ch-h shift not 35";
             if (param(m.find("ch-h")->second, "sign") == 0) out += "ch-h sign not inferred";
             return out;
         }},
        {7, "closing congruences: pentagonal a-sum (n <= 20), cubic a-sum at p = 7",
         {"cr1", "cr2"},
         [](const Map& m) {
             std::string out = min_param(m, "cr1", "n_max", 20) + min_param(m, "cr2", "n_max", 1);
             if (param(m.find("cr2")->second, "shift") != 131) out += "cr2 shift not 131";
             return out;
         }},
        {8, "5-dissections, K identities, theta identities, binomial lemma",
         {"dis31", "dis32", "k33", "k34", "theta-triangular", "theta-squares", "theta-pent6k1",
          "theta-cubic3k1", "binom"},
         [](const Map& m) {
             std::string out;
             for (auto [mm, kk] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
                 bool found = false;
                 auto [lo, hi] = m.equal_range("binom");
                 for (auto it = lo; it != hi; ++it) {
                     found |= param(it->second, "m") == mm && param(it->second, "k") == kk;
                 }
                 if (!found) out += "binom (" + std::to_string(mm) + "," + std::to_string(kk) + ") missing ";
             }
             return out;
         }},
        {9, "P(m,n) recurrences, series evaluation, combination and micro-identities",
         {"rec35", "rec36", "pmn-series", "combo456"},
         [](const Map& m) {
             std::string out;
             for (const char* id : {"rec35", "rec36", "pmn-series"}) {
                 const auto& r = m.find(id)->second;
                 if (param(r, "m_max") < 4 || param(r, "n_lo") > -3 || param(r, "n_hi") < 3)
                     out += std::string(id) + " grid too small ";
             }
             if (m.find("pmn-series")->second.order < 100) out += "pmn-series order below 100";
             if (m.find("combo456")->second.order < 100) out += "combo456 order below 100";
             return out;
         }},
        {10, "reduced generating functions for A(n), a(5n+1) and f(n)",
         {"pi-A5n4", "pi-A10n9", "pi-a5n1", "pi-f5n2", "pi-f25n22", "pi-Asum", "pi-fconv"},
         [](const Map& m) {
             return min_param(m, "pi-A10n9", "n_max", 100) +
                    min_param(m, "pi-f25n22", "n_max", 10);
         }},
        {11, "brute-force oracles: crank parity n <= 40 (n != 1), colored partitions n <= 35",
         {"oracle-crank", "oracle-colored"},
         [](const Map& m) {
             return min_param(m, "oracle-crank", "n_max", 40) +
                    min_param(m, "oracle-colored", "n_max", 35);
         }},
        {12, "p(5n+4), p(7n+5), p(11n+6) vanish mod 5, 7, 11 for n <= 100",
         {"smoke-p5", "smoke-p7", "smoke-p11"},
         [](const Map& m) {
             return min_param(m, "smoke-p5", "n_max", 100) +
                    min_param(m, "smoke-p7", "n_max", 100) +
                    min_param(m, "smoke-p11", "n_max", 100);
         }},
    };
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const auto specs = qcrank::report_tasks();
    const auto reports =
        qcrank::run_tasks(specs, std::max(1u, std::thread::hardware_concurrency()));

    std::multimap<std::string, CheckReport> by_id;
    for (const auto& r : reports) {
        by_id.emplace(r.task, r);
    }

    int failed = 0;
    for (const auto& c : criteria()) {
        std::vector<std::string> problems;
        for (const auto& id : c.tasks) {
            auto [lo, hi] = by_id.equal_range(id);
            if (lo == hi) {
                problems.push_back(id + " did not run");
            }
            for (auto it = lo; it != hi; ++it) {
                if (!it->second.passed) {
                    problems.push_back(it->second.to_text());
                }
            }
        }
        if (problems.empty()) {
            if (auto gap = c.coverage(by_id); !gap.empty()) {
                problems.push_back("coverage: " + gap);
            }
        }
        const bool ok = problems.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title
                  << "\n";
        for (const auto& p : problems) {
            std::cout << "    " << p << "\n";
        }
        for (const auto& id : c.tasks) {
            auto [lo, hi] = by_id.equal_range(id);
            for (auto it = lo; it != hi; ++it) {
                for (const auto& note : it->second.notes) {
                    std::cout << "    note (" << id << "): " << note << "\n";
                }
            }
        }
    }

    // The one known oracle/series disagreement, reported with its values.
    const auto c = qcrank::named_series(qcrank::SeriesName::C_CRANK, 2);
    std::cout << "reported: n=1 crank enumeration " << qcrank::crank_parity_oracle(1)
              << ", generating function " << c.coeff(1) << "\n";

    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (12 - failed) << "/12 criteria passed in " << static_cast<std::int64_t>(ms)
              << " ms\n";
    return failed == 0 ? 0 : 1;
}
