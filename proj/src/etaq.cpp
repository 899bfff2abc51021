#include "qcrank/etaq.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qcrank/errors.hpp"
#include "qcrank/theta.hpp"

namespace qcrank {

void EtaQuotientSpec::validate() const {
    for (const auto& [m, e] : factors) {
        if (m < 1) {
            throw std::invalid_argument("eta factor f" + std::to_string(m) +
                                        " must have a positive index");
        }
        if (e == 0) {
            throw std::invalid_argument("eta factor f" + std::to_string(m) +
                                        " has exponent 0");
        }
    }
}

namespace {

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, const std::string& why) {
    throw std::invalid_argument("eta quotient \"" + std::string(text) + "\": " + why +
                                " at position " + std::to_string(pos));
}

std::int64_t parse_int(std::string_view text, std::string_view token, std::size_t pos) {
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        parse_error(text, pos, "expected an integer, got \"" + std::string(token) + "\"");
    }
    return value;
}

}  // namespace

EtaQuotientSpec parse_eta_quotient(std::string_view text) {
    // Keep original positions for diagnostics while skipping whitespace.
    std::string compact;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            compact.push_back(text[i]);
            origin.push_back(i);
        }
    }
    if (compact.empty()) {
        parse_error(text, 0, "empty expression");
    }

    EtaQuotientSpec spec;
    std::map<std::int64_t, std::int64_t> exps;
    std::size_t start = 0;
    while (start <= compact.size()) {
        std::size_t stop = compact.find('*', start);
        if (stop == std::string::npos) {
            stop = compact.size();
        }
        const std::string_view tok(compact.data() + start, stop - start);
        const std::size_t pos = start < origin.size() ? origin[start] : text.size();
        if (tok.empty()) {
            parse_error(text, pos, "empty factor");
        }

        const std::size_t caret = tok.find('^');
        const std::string_view base = tok.substr(0, caret);
        std::int64_t e = 1;
        if (caret != std::string_view::npos) {
            e = parse_int(text, tok.substr(caret + 1), pos + caret + 1);
        }

        if (base == "1" && caret == std::string_view::npos) {
            // empty product
        } else if (base == "q") {
            spec.shift += e;
        } else if (base.size() >= 2 && base.front() == 'f') {
            const std::int64_t m = parse_int(text, base.substr(1), pos + 1);
            if (m < 1) {
                parse_error(text, pos, "eta index must be positive");
            }
            exps[m] += e;
        } else {
            parse_error(text, pos, "unrecognized factor \"" + std::string(tok) + "\"");
        }
        start = stop + 1;
    }
    for (const auto& [m, e] : exps) {
        if (e != 0) {
            spec.factors[m] = e;
        }
    }
    return spec;
}

std::string to_string(const EtaQuotientSpec& spec) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) {
            os << " * ";
        }
        first = false;
    };
    if (spec.shift != 0) {
        sep();
        os << "q^" << spec.shift;
    }
    for (const auto& [m, e] : spec.factors) {
        sep();
        os << "f" << m << "^" << e;
    }
    if (first) {
        os << "1";
    }
    return os.str();
}

void ResidueProductSpec::validate() const {
    if (modulus < 2) {
        throw std::invalid_argument("residue product modulus must be at least 2");
    }
    for (const auto& [r, e] : terms) {
        if (r < 1 || r > modulus) {
            throw std::invalid_argument("residue " + std::to_string(r) + " outside 1.." +
                                        std::to_string(modulus));
        }
    }
}

Series eta_factor(std::int64_t m, std::int64_t order) {
    if (m < 1) {
        throw std::invalid_argument("eta factor index must be positive");
    }
    if (order <= 0) {
        return Series::zero(order);
    }
    std::vector<BigInt> c(static_cast<std::size_t>(order));
    c[0] = 1;
    // f_m = sum_k (-1)^k q^{m k(3k-1)/2}, k over all integers.
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t lo = m * (k * (3 * k - 1) / 2);
        const std::int64_t hi = m * (k * (3 * k + 1) / 2);
        if (lo >= order) {
            break;
        }
        const int sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(lo)] += sign;
        if (hi < order) {
            c[static_cast<std::size_t>(hi)] += sign;
        }
    }
    return Series::from_coefficients(0, std::move(c), order);
}

Series eta_quotient(const EtaQuotientSpec& spec, std::int64_t order) {
    spec.validate();
    if (order <= spec.shift) {
        throw std::invalid_argument("eta quotient order must exceed the q shift");
    }
    const std::int64_t inner = order - spec.shift;

    // Multiply the sparse positive powers first, then fold in inverses.
    std::vector<std::pair<std::int64_t, std::int64_t>> ordered(spec.factors.begin(),
                                                               spec.factors.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& x, const auto& y) { return x.second > 0 && y.second < 0; });

    Series acc = Series::one(inner);
    for (const auto& [m, e] : ordered) {
        acc = mul(acc, pow(eta_factor(m, inner), e));
    }
    return acc.shifted(spec.shift);
}

Series residue_product(const ResidueProductSpec& spec, std::int64_t order) {
    spec.validate();
    if (order < 1) {
        throw std::invalid_argument("residue product order must be positive");
    }
    const auto len = static_cast<std::size_t>(order);
    std::vector<BigInt> num(len);
    std::vector<BigInt> den(len);
    num[0] = 1;
    den[0] = 1;
    for (const auto& [r, e] : spec.terms) {
        auto& target = e > 0 ? num : den;
        const std::int64_t times = e > 0 ? e : -e;
        for (std::int64_t n = r; n < order; n += spec.modulus) {
            const auto step = static_cast<std::size_t>(n);
            for (std::int64_t t = 0; t < times; ++t) {
                for (std::size_t i = len - 1; i >= step; --i) {
                    target[i] -= target[i - step];
                }
            }
        }
    }
    Series top = Series::from_coefficients(0, std::move(num), order);
    Series bottom = Series::from_coefficients(0, std::move(den), order);
    return mul(top, invert(bottom));
}

Series rogers_ramanujan(std::int64_t order) {
    static std::mutex mutex;
    static std::map<std::int64_t, Series> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.lower_bound(order);
        if (it != cache.end()) {
            return it->second.truncated(order);
        }
    }
    const ResidueProductSpec spec{5, {{1, 1}, {4, 1}, {2, -1}, {3, -1}}};
    Series r = residue_product(spec, order);
    std::lock_guard lock(mutex);
    cache.emplace(order, r);
    return r;
}

Series rogers_ramanujan_stretched(std::int64_t m, std::int64_t order) {
    return stretch(rogers_ramanujan(std::max<std::int64_t>(1, ceil_div(order, m))), m)
        .truncated(order);
}

std::string_view to_string(SeriesName name) {
    switch (name) {
        case SeriesName::P_PARTITION: return "P_PARTITION";
        case SeriesName::C_CRANK: return "C_CRANK";
        case SeriesName::A_RECIP: return "A_RECIP";
        case SeriesName::D_CH: return "D_CH";
        case SeriesName::H_CH: return "H_CH";
        case SeriesName::K_PARAM: return "K_PARAM";
        case SeriesName::A_CAP: return "A_CAP";
        case SeriesName::F_CONV: return "F_CONV";
    }
    return "?";
}

std::optional<SeriesName> parse_series_name(std::string_view text) {
    static const std::map<std::string_view, SeriesName> names = {
        {"P_PARTITION", SeriesName::P_PARTITION}, {"p", SeriesName::P_PARTITION},
        {"P", SeriesName::P_PARTITION},           {"C_CRANK", SeriesName::C_CRANK},
        {"C", SeriesName::C_CRANK},               {"A_RECIP", SeriesName::A_RECIP},
        {"a", SeriesName::A_RECIP},               {"D_CH", SeriesName::D_CH},
        {"d", SeriesName::D_CH},                  {"H_CH", SeriesName::H_CH},
        {"h", SeriesName::H_CH},                  {"K_PARAM", SeriesName::K_PARAM},
        {"K", SeriesName::K_PARAM},               {"A_CAP", SeriesName::A_CAP},
        {"A", SeriesName::A_CAP},                 {"F_CONV", SeriesName::F_CONV},
        {"f", SeriesName::F_CONV},
    };
    auto it = names.find(text);
    if (it == names.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<EtaQuotientSpec> defining_quotient(SeriesName name) {
    switch (name) {
        case SeriesName::P_PARTITION: return EtaQuotientSpec{0, {{1, -1}}};
        case SeriesName::C_CRANK: return EtaQuotientSpec{0, {{1, 3}, {2, -2}}};
        case SeriesName::A_RECIP: return EtaQuotientSpec{0, {{1, -3}, {2, 2}}};
        case SeriesName::D_CH: return EtaQuotientSpec{0, {{1, 4}, {2, 2}}};
        case SeriesName::H_CH: return EtaQuotientSpec{0, {{1, 3}, {2, 1}}};
        case SeriesName::K_PARAM:
            return EtaQuotientSpec{-1, {{1, -1}, {2, 1}, {5, 5}, {10, -5}}};
        case SeriesName::A_CAP: return EtaQuotientSpec{0, {{1, 2}, {2, -4}, {5, 6}}};
        case SeriesName::F_CONV: return std::nullopt;
    }
    return std::nullopt;
}

Series named_series(SeriesName name, std::int64_t order) {
    if (order < 1) {
        throw std::invalid_argument("named series order must be at least 1");
    }
    if (auto spec = defining_quotient(name)) {
        return eta_quotient(*spec, order);
    }
    // F_CONV: f(n) = (1/5) sum_{k>=0} C(5n + 4 - 5k(k+1)/2), as a product with
    // the triangular theta series.
    const Series crank = named_series(SeriesName::C_CRANK, 5 * order + 4);
    const Series fifth = divide_exact(extract(crank, 5, 4), 5);
    return mul(theta_sum(ThetaKind::TRIANGULAR, order), fifth).truncated(order);
}

std::pair<Series, Series> binomial_congruence_sides(std::int64_t m, std::int64_t k,
                                                    std::int64_t order) {
    if (m < 1 || k < 1) {
        throw std::invalid_argument("binomial congruence needs m >= 1 and k >= 1");
    }
    std::int64_t power = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        power *= 5;
    }
    return {pow(eta_factor(m, order), power), pow(eta_factor(5 * m, order), power / 5)};
}

CheckReport binomial_congruence_check(std::int64_t m, std::int64_t k, std::int64_t order) {
    const auto [lhs, rhs] = binomial_congruence_sides(m, k, order);
    BigInt modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), 5, static_cast<unsigned long>(k));
    return compare_series("binom", Json{{"m", m}, {"k", k}}, order, lhs, rhs, modulus,
                          "f" + std::to_string(m) + "^(5^" + std::to_string(k) + ")");
}

}  // namespace qcrank
