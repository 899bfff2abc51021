#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcrank/check_report.hpp"
#include "qcrank/series.hpp"

namespace qcrank {

/// q^shift * prod_m f_m^{e_m}, where f_m = prod_{n>=1} (1 - q^{mn}).
struct EtaQuotientSpec {
    std::int64_t shift = 0;
    std::map<std::int64_t, std::int64_t> factors;

    /// Throws std::invalid_argument on a non-positive key or zero exponent.
    void validate() const;

    friend bool operator==(const EtaQuotientSpec&, const EtaQuotientSpec&) = default;
};

/// Parses `q^<s> * f<m>^<e> * ...`. Whitespace is ignored, `^1` may be
/// omitted, repeated factors combine, and `1` denotes the empty product.
/// Throws std::invalid_argument with the offending position.
EtaQuotientSpec parse_eta_quotient(std::string_view text);

/// Canonical text: shift first (if any), then factors by increasing m.
std::string to_string(const EtaQuotientSpec& spec);

/// prod_{n>=1, n = r (mod modulus)} (1 - q^n)^e over the listed (r, e).
struct ResidueProductSpec {
    std::int64_t modulus = 2;
    std::vector<std::pair<std::int64_t, std::int64_t>> terms;

    void validate() const;
};

/// f_m to the given order, from the pentagonal number theorem.
Series eta_factor(std::int64_t m, std::int64_t order);

Series eta_quotient(const EtaQuotientSpec& spec, std::int64_t order);

Series residue_product(const ResidueProductSpec& spec, std::int64_t order);

/// The Rogers-Ramanujan continued fraction without its q^{1/5} factor,
/// prod (1-q^{5n-4})(1-q^{5n-1}) / ((1-q^{5n-3})(1-q^{5n-2})).
/// Memoized per order; safe to call from several threads.
Series rogers_ramanujan(std::int64_t order);

/// R(q^m), known to at least `order`.
Series rogers_ramanujan_stretched(std::int64_t m, std::int64_t order);

enum class SeriesName {
    P_PARTITION,  // 1/f1
    C_CRANK,      // f1^3/f2^2
    A_RECIP,      // f2^2/f1^3
    D_CH,         // f1^4 f2^2
    H_CH,         // f1^3 f2
    K_PARAM,      // f2 f5^5 / (q f1 f10^5)
    A_CAP,        // f1^2 f5^6 / f2^4
    F_CONV,       // (f2^2/f1) * (1/5) sum C(5j+4) q^j
};

std::string_view to_string(SeriesName name);

/// Accepts the enum spelling (`C_CRANK`) or the short symbol (`C`, `a`, `p`, ...).
std::optional<SeriesName> parse_series_name(std::string_view text);

/// The eta quotient behind a name; F_CONV has none.
std::optional<EtaQuotientSpec> defining_quotient(SeriesName name);

Series named_series(SeriesName name, std::int64_t order);

/// f_m^{5^k} == f_{5m}^{5^{k-1}} (mod 5^k), coefficient-wise below `order`.
CheckReport binomial_congruence_check(std::int64_t m, std::int64_t k, std::int64_t order);

/// The two sides of the binomial congruence, for callers that inspect them.
std::pair<Series, Series> binomial_congruence_sides(std::int64_t m, std::int64_t k,
                                                    std::int64_t order);

}  // namespace qcrank
