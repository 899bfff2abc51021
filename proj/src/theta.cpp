#include "qcrank/theta.hpp"

#include <stdexcept>
#include <string>

namespace qcrank {

std::string_view to_string(ThetaKind kind) {
    switch (kind) {
        case ThetaKind::TRIANGULAR: return "TRIANGULAR";
        case ThetaKind::SQUARES: return "SQUARES";
        case ThetaKind::PENT_6K1: return "PENT_6K1";
        case ThetaKind::CUBIC_3K1: return "CUBIC_3K1";
    }
    return "?";
}

std::optional<ThetaKind> parse_theta_kind(std::string_view text) {
    for (ThetaKind kind : kAllThetaKinds) {
        if (text == to_string(kind)) {
            return kind;
        }
    }
    if (text == "triangular") return ThetaKind::TRIANGULAR;
    if (text == "squares") return ThetaKind::SQUARES;
    if (text == "pent6k1") return ThetaKind::PENT_6K1;
    if (text == "cubic3k1") return ThetaKind::CUBIC_3K1;
    return std::nullopt;
}

bool is_bilateral(ThetaKind kind) {
    return kind != ThetaKind::TRIANGULAR;
}

std::int64_t theta_exponent(ThetaKind kind, std::int64_t k) {
    switch (kind) {
        case ThetaKind::TRIANGULAR: return k * (k + 1) / 2;
        case ThetaKind::SQUARES: return k * k;
        case ThetaKind::PENT_6K1: return k * (3 * k + 1) / 2;
        case ThetaKind::CUBIC_3K1: return k * (3 * k + 2);
    }
    return 0;
}

std::int64_t theta_weight(ThetaKind kind, std::int64_t k) {
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    switch (kind) {
        case ThetaKind::TRIANGULAR: return 1;
        case ThetaKind::SQUARES: return sign;
        case ThetaKind::PENT_6K1: return 6 * k + 1;
        case ThetaKind::CUBIC_3K1: return sign * (3 * k + 1);
    }
    return 0;
}

Series theta_sum(ThetaKind kind, std::int64_t order) {
    if (order < 1) {
        throw std::invalid_argument("theta sum order must be at least 1");
    }
    std::vector<BigInt> c(static_cast<std::size_t>(order));
    c[0] += theta_weight(kind, 0);
    // Walk k outward; both branches have increasing exponents for k >= 1.
    for (std::int64_t k = 1;; ++k) {
        bool any = false;
        for (std::int64_t idx : {k, -k}) {
            if (idx < 0 && !is_bilateral(kind)) {
                continue;
            }
            const std::int64_t e = theta_exponent(kind, idx);
            if (e < order) {
                c[static_cast<std::size_t>(e)] += theta_weight(kind, idx);
                any = true;
            }
        }
        if (!any) {
            break;
        }
    }
    return Series::from_coefficients(0, std::move(c), order);
}

EtaQuotientSpec theta_product_form(ThetaKind kind) {
    switch (kind) {
        case ThetaKind::TRIANGULAR: return {0, {{1, -1}, {2, 2}}};
        case ThetaKind::SQUARES: return {0, {{1, 2}, {2, -1}}};
        case ThetaKind::PENT_6K1: return {0, {{1, 5}, {2, -2}}};
        case ThetaKind::CUBIC_3K1: return {0, {{1, -2}, {2, 5}}};
    }
    return {};
}

CheckReport verify_theta_identity(ThetaKind kind, std::int64_t order) {
    const std::string task = "theta-" + std::string(to_string(kind));
    return compare_series(task, Json::object(), order, theta_sum(kind, order),
                          eta_quotient(theta_product_form(kind), order), 0,
                          to_string(theta_product_form(kind)));
}

Series f1_dissection(std::int64_t order, std::int64_t m) {
    if (m > 1) {
        return stretch(f1_dissection(ceil_div(order, m), 1), m).truncated(order);
    }
    const Series r5 = rogers_ramanujan_stretched(5, order);
    const Series bracket = invert(r5) - Series::monomial(1, 1, order) -
                           r5.shifted(2);
    return mul(eta_factor(25, order), bracket).truncated(order);
}

Series inverse_f1_dissection(std::int64_t order, std::int64_t m,
                             const DissectionBracket& bracket) {
    if (m > 1) {
        return stretch(inverse_f1_dissection(ceil_div(order, m), 1, bracket), m)
            .truncated(order);
    }
    const Series r5 = rogers_ramanujan_stretched(5, order);
    Series sum = Series::zero(order);
    for (std::size_t i = 0; i < bracket.size(); ++i) {
        if (bracket[i] == 0) {
            continue;
        }
        const auto e = static_cast<std::int64_t>(i);
        sum = sum + pow(r5, e - 4).shifted(e).scaled(bracket[i]);
    }
    const Series prefactor = eta_quotient({0, {{5, -6}, {25, 5}}}, order);
    return mul(prefactor, sum).truncated(order);
}

CheckReport verify_5dissections(std::int64_t order, const DissectionBracket& bracket) {
    if (order < 25) {
        throw std::invalid_argument("5-dissection check needs order >= 25");
    }
    CheckReport report;
    report.task = "dis";
    report.order = order;

    const Series f1 = eta_factor(1, order);
    const Series lhs31 = f1_dissection(order);
    const Series lhs32 = inverse_f1_dissection(order, 1, bracket);
    report.absorb(compare_series("dis31", {}, order, f1, lhs31, 0, "f1 dissection"));
    report.absorb(compare_series("dis32", {}, order, invert(f1), lhs32, 0, "1/f1 dissection"));
    report.absorb(compare_series("dis", {}, order, mul(lhs31, lhs32), Series::one(order), 0,
                                 "product of dissections"));
    return report;
}

CheckReport verify_K_identities(std::int64_t order, const std::optional<Series>& k_override) {
    if (order < 10) {
        throw std::invalid_argument("K identity check needs order >= 10");
    }
    const Series k = k_override ? *k_override : named_series(SeriesName::K_PARAM, order);
    CheckReport report;
    report.task = "k";
    report.order = order;
    const Series plus1 = eta_quotient({-1, {{1, -2}, {2, 4}, {5, 2}, {10, -4}}}, order);
    const Series minus4 = eta_quotient({-1, {{1, 3}, {2, -1}, {5, 1}, {10, -3}}}, order);
    report.absorb(compare_series("k33", {}, order, k + Series::one(order), plus1, 0, "K+1"));
    report.absorb(compare_series("k34", {}, order, k - Series::monomial(4, 0, order), minus4,
                                 0, "K-4"));
    return report;
}

}  // namespace qcrank
