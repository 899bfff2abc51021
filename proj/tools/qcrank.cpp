// qcrank: expand, dissect and verify q-series identities for the crank
// parity function C(n) and its reciprocal sequence a(n).
//
// Exit status: 0 when every check passes, 1 when any check fails,
// 2 on a usage or parse error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qcrank/congruence.hpp"
#include "qcrank/errors.hpp"
#include "qcrank/etaq.hpp"
#include "qcrank/kalgebra.hpp"
#include "qcrank/partition.hpp"
#include "qcrank/tasks.hpp"

namespace {

using qcrank::Json;
using qcrank::Series;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::int64_t order = 300;
    std::string format = "text";
    std::string series_name;
    std::string eta_text;
    std::int64_t modulus = 0;
    std::int64_t m = 0;
    std::int64_t r = 0;
    std::string theorem;
    bool all = false;
    std::optional<std::int64_t> n_max;
    std::optional<std::int64_t> alpha;
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> bin_m;
    std::optional<std::int64_t> bin_k;
    bool timing = false;
    unsigned jobs = 1;
    std::string oracle_kind = "crank";
    std::optional<std::int64_t> oracle_n;
    std::int64_t up_to = 20;
    std::int64_t pmn_m = 0;
    std::int64_t pmn_n = 0;
    bool pmn_check = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Series source_series(const Options& opt, std::int64_t order, std::string& label) {
    if (!opt.series_name.empty()) {
        auto name = qcrank::parse_series_name(opt.series_name);
        if (!name) {
            throw UsageError("unknown series \"" + opt.series_name + "\"");
        }
        label = std::string(qcrank::to_string(*name));
        return qcrank::named_series(*name, order);
    }
    if (!opt.eta_text.empty()) {
        const auto spec = qcrank::parse_eta_quotient(opt.eta_text);
        label = qcrank::to_string(spec);
        if (order <= spec.shift) {
            throw UsageError("--order must exceed the q shift " + std::to_string(spec.shift));
        }
        return qcrank::eta_quotient(spec, order);
    }
    throw UsageError("one of --series or --eta is required");
}

void print_series(const Options& opt, const std::string& label, const Series& s) {
    const std::int64_t start = std::min<std::int64_t>(0, s.valuation());
    std::vector<std::string> coeffs;
    for (std::int64_t e = start; e < s.order(); ++e) {
        coeffs.push_back(s.coeff(e).get_str());
    }
    if (opt.format == "json") {
        Json j;
        j["source"] = label;
        j["order"] = s.order();
        j["start"] = start;
        if (opt.modulus != 0) {
            j["modulus"] = opt.modulus;
        }
        j["coefficients"] = coeffs;
        std::cout << j.dump() << "\n";
        return;
    }
    if (start != 0) {
        std::cout << "q^" << start << ": ";
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::cout << (i ? ", " : "") << coeffs[i];
    }
    std::cout << "\n";
}

int run_expand(const Options& opt) {
    std::string label;
    Series s = source_series(opt, opt.order, label);
    if (opt.modulus != 0) {
        s = qcrank::reduce_mod(s, opt.modulus);
    }
    print_series(opt, label, s);
    return 0;
}

int run_dissect(const Options& opt) {
    if (opt.m < 1 || opt.r < 0 || opt.r >= opt.m) {
        throw UsageError("dissect needs --m >= 1 and 0 <= --r < m");
    }
    // Enough input for `order` output coefficients.
    std::string label;
    const Series s = source_series(opt, opt.m * opt.order + opt.r, label);
    Series part = qcrank::extract(s, opt.m, opt.r).truncated(opt.order);
    if (opt.modulus != 0) {
        part = qcrank::reduce_mod(part, opt.modulus);
    }
    print_series(opt, label + " [" + std::to_string(opt.m) + "n+" + std::to_string(opt.r) + "]",
                 part);
    return 0;
}

int emit_reports(const Options& opt, const std::vector<qcrank::CheckReport>& reports,
                 bool summary) {
    const auto failed = std::count_if(reports.begin(), reports.end(),
                                      [](const auto& r) { return !r.passed; });
    if (opt.format == "json") {
        Json tasks = Json::array();
        for (const auto& r : reports) {
            tasks.push_back(r.to_json(opt.timing));
        }
        if (summary) {
            Json j;
            j["tasks"] = std::move(tasks);
            j["passed"] = static_cast<std::int64_t>(reports.size()) - failed;
            j["failed"] = failed;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& t : tasks) {
                std::cout << t.dump() << "\n";
            }
        }
    } else {
        for (const auto& r : reports) {
            std::cout << r.to_text(opt.timing) << "\n";
        }
        if (summary) {
            std::cout << (reports.size() - failed) << "/" << reports.size() << " checks passed\n";
        }
    }
    return failed == 0 ? 0 : kExitFail;
}

int run_verify(const Options& opt) {
    std::vector<qcrank::TaskSpec> tasks;
    if (opt.all) {
        tasks = qcrank::report_tasks();
    } else {
        if (opt.theorem.empty()) {
            throw UsageError("verify needs --theorem ID or --all");
        }
        if (!qcrank::is_known_task(opt.theorem)) {
            throw UsageError("unknown theorem id \"" + opt.theorem + "\"; see `qcrank list`");
        }
        qcrank::TaskSpec spec;
        spec.id = opt.theorem;
        spec.order = opt.order;
        spec.n_max = opt.n_max;
        spec.alpha = opt.alpha;
        spec.p = opt.p;
        spec.m = opt.bin_m;
        spec.k = opt.bin_k;
        // Parameter errors are usage errors; everything else is a check outcome.
        try {
            auto start = std::chrono::steady_clock::now();
            auto report = qcrank::check_theorem(spec);
            if (opt.timing) {
                report.elapsed_ms = std::chrono::duration<double, std::milli>(
                                        std::chrono::steady_clock::now() - start)
                                        .count();
            }
            return emit_reports(opt, {report}, false);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return emit_reports(opt, qcrank::run_tasks(tasks, opt.jobs, opt.timing), false);
}

int run_report(const Options& opt) {
    const auto tasks = qcrank::report_tasks();
    return emit_reports(opt, qcrank::run_tasks(tasks, opt.jobs, opt.timing), true);
}

int run_oracle(const Options& opt) {
    const bool crank = opt.oracle_kind == "crank";
    if (!crank && opt.oracle_kind != "colored") {
        throw UsageError("--kind must be crank or colored");
    }
    const std::int64_t lo = opt.oracle_n.value_or(0);
    const std::int64_t hi = opt.oracle_n.value_or(opt.up_to);
    if (lo < 0 || hi < lo) {
        throw UsageError("oracle range must be non-negative");
    }
    if (hi >= opt.order) {
        throw UsageError("--order " + std::to_string(opt.order) + " does not cover n=" +
                         std::to_string(hi));
    }
    const auto name = crank ? qcrank::SeriesName::C_CRANK : qcrank::SeriesName::A_RECIP;
    const Series s = qcrank::named_series(name, hi + 1);
    bool ok = true;
    Json rows = Json::array();
    for (std::int64_t n = lo; n <= hi; ++n) {
        const qcrank::BigInt oracle = crank ? qcrank::BigInt(qcrank::crank_parity_oracle(n))
                                            : qcrank::colored_partition_oracle(n);
        const qcrank::BigInt series = s.coeff(n);
        const bool excluded = crank && n == 1;
        const bool match = oracle == series;
        if (!match && !excluded) {
            ok = false;
        }
        const std::string status = match ? "match" : (excluded ? "excluded" : "MISMATCH");
        if (opt.format == "json") {
            rows.push_back(Json{{"n", n}, {"oracle", oracle.get_str()},
                                {"series", series.get_str()}, {"status", status}});
        } else {
            std::cout << "n=" << n << " oracle=" << oracle << " series=" << series << " "
                      << status << "\n";
        }
    }
    if (opt.format == "json") {
        std::cout << Json{{"kind", opt.oracle_kind}, {"rows", rows}}.dump() << "\n";
    }
    return ok ? 0 : kExitFail;
}

int run_pmn(const Options& opt) {
    if (opt.pmn_m < 0) {
        throw UsageError("--m must be non-negative");
    }
    const qcrank::KPolynomial p = qcrank::pmn({opt.pmn_m, opt.pmn_n});
    if (!opt.pmn_check) {
        std::cout << qcrank::to_string(p) << "\n";
        return 0;
    }
    const auto report = qcrank::compare_series(
        "pmn", Json{{"m", opt.pmn_m}, {"n", opt.pmn_n}}, opt.order,
        qcrank::pmn_series({opt.pmn_m, opt.pmn_n}, opt.order), qcrank::eval_at_K(p, opt.order));
    std::cout << qcrank::to_string(p) << "\n" << report.to_text() << "\n";
    return report.passed ? 0 : kExitFail;
}

int run_list() {
    for (const auto& t : qcrank::known_tasks()) {
        std::cout << t.id << "  " << t.summary << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcrank: exact q-series checks for the crank parity function"};
    app.require_subcommand(1);
    Options opt;
    opt.jobs = std::max(1u, std::thread::hardware_concurrency());

    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", opt.order, "truncation order (default 300)")
            ->check(CLI::PositiveNumber);
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_source = [&](CLI::App* sub) {
        auto* s = sub->add_option("--series", opt.series_name,
                                  "named series: p C a d h K A f (or P_PARTITION, ...)");
        auto* e = sub->add_option("--eta", opt.eta_text, "eta quotient, e.g. 'q^-1 * f2 * f5^5'");
        s->excludes(e);
        sub->add_option("--mod", opt.modulus, "reduce coefficients modulo M")
            ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 62));
    };

    auto* expand = app.add_subcommand("expand", "print coefficients of a series");
    add_source(expand);
    add_order(expand);
    add_format(expand);

    auto* dissect = app.add_subcommand("dissect", "print the component sum c(mn+r) q^n");
    add_source(dissect);
    add_order(dissect);
    add_format(dissect);
    dissect->add_option("--m", opt.m, "dissection modulus")->required();
    dissect->add_option("--r", opt.r, "residue")->required();

    auto* verify = app.add_subcommand("verify", "run one verification task, or all of them");
    verify->add_option("--theorem", opt.theorem, "task id (see `qcrank list`)");
    verify->add_flag("--all", opt.all, "run the full pinned task table");
    add_order(verify);
    add_format(verify);
    verify->add_option("--nmax", opt.n_max, "last progression index to scan");
    verify->add_option("--alpha", opt.alpha, "alpha for thm11");
    verify->add_option("--p", opt.p, "prime for thm16, cr2, ch-h");
    verify->add_option("--bm", opt.bin_m, "m for binom");
    verify->add_option("--bk", opt.bin_k, "k for binom");
    verify->add_flag("--timing", opt.timing, "record elapsed_ms");
    verify->add_option("--jobs", opt.jobs, "worker threads for --all");

    auto* oracle = app.add_subcommand("oracle", "compare a brute-force oracle with its series");
    oracle->add_option("--kind", opt.oracle_kind, "crank or colored");
    oracle->add_option("--n", opt.oracle_n, "single n");
    oracle->add_option("--up-to", opt.up_to, "check 0..N (default 20)");
    add_order(oracle);
    add_format(oracle);

    auto* pmn = app.add_subcommand("pmn", "print P(m,n) as a Laurent polynomial in K");
    pmn->add_option("--m", opt.pmn_m)->required();
    pmn->add_option("--n", opt.pmn_n)->required();
    pmn->add_flag("--check", opt.pmn_check, "also compare against the R(q) definition");
    add_order(pmn);

    auto* report = app.add_subcommand("report", "run every verification task and summarize");
    add_format(report);
    report->add_flag("--timing", opt.timing, "record elapsed_ms");
    report->add_option("--jobs", opt.jobs, "worker threads");

    auto* list = app.add_subcommand("list", "list task ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*expand) return run_expand(opt);
        if (*dissect) return run_dissect(opt);
        if (*verify) return run_verify(opt);
        if (*oracle) return run_oracle(opt);
        if (*pmn) return run_pmn(opt);
        if (*report) return run_report(opt);
        if (*list) return run_list();
    } catch (const UsageError& e) {
        std::cerr << "qcrank: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qcrank: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qcrank::OrderExceeded& e) {
        std::cerr << "qcrank: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qcrank::EnumerationCapExceeded& e) {
        std::cerr << "qcrank: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "qcrank: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
