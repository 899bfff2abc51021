#include "qcrank/check_report.hpp"

#include <sstream>
#include <utility>

#include "qcrank/errors.hpp"

namespace qcrank {

void CheckReport::fail(Witness w) {
    if (passed) {
        passed = false;
        witness = std::move(w);
    }
}

void CheckReport::absorb(const CheckReport& sub) {
    if (!sub.passed && sub.witness) {
        fail(*sub.witness);
    }
    notes.insert(notes.end(), sub.notes.begin(), sub.notes.end());
}

Json CheckReport::to_json(bool with_timing) const {
    Json j;
    j["task"] = task;
    j["params"] = params;
    j["order"] = order;
    j["outcome"] = passed ? "pass" : "fail";
    if (witness) {
        Json w;
        w["n"] = witness->n;
        if (witness->k) {
            w["k"] = *witness->k;
        }
        w["residue"] = witness->residue.get_str();
        if (!witness->at.empty()) {
            w["at"] = witness->at;
        }
        j["witness"] = std::move(w);
    }
    if (!notes.empty()) {
        j["notes"] = notes;
    }
    j["elapsed_ms"] = with_timing ? elapsed_ms : 0.0;
    return j;
}

std::string CheckReport::to_text(bool with_timing) const {
    std::ostringstream os;
    os << (passed ? "PASS " : "FAIL ") << task;
    if (!params.empty()) {
        os << " " << params.dump();
    }
    os << " order=" << order;
    if (witness) {
        os << " witness: n=" << witness->n;
        if (witness->k) {
            os << " k=" << *witness->k;
        }
        os << " value=" << witness->residue.get_str();
        if (!witness->at.empty()) {
            os << " at " << witness->at;
        }
    }
    if (with_timing) {
        os << " (" << static_cast<std::int64_t>(elapsed_ms) << " ms)";
    }
    for (const auto& note : notes) {
        os << "\n  note: " << note;
    }
    return os.str();
}

CheckReport compare_series(std::string task, Json params, std::int64_t order,
                           const Series& lhs, const Series& rhs, const BigInt& modulus,
                           std::string label) {
    for (const Series* s : {&lhs, &rhs}) {
        if (s->order() < order) {
            throw OrderExceeded(task + ": operand known only to order " +
                                    std::to_string(s->order()) + ", need " +
                                    std::to_string(order),
                                order, s->order());
        }
    }
    CheckReport report;
    report.task = std::move(task);
    report.params = std::move(params);
    report.order = order;
    const Series a = lhs.truncated(order);
    const Series b = rhs.truncated(order);
    if (auto at = first_mismatch(a, b, modulus)) {
        BigInt diff = a.coeff(*at) - b.coeff(*at);
        if (modulus != 0) {
            mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), modulus.get_mpz_t());
        }
        report.fail(Witness{*at, std::nullopt, diff, std::move(label)});
    }
    return report;
}

}  // namespace qcrank
