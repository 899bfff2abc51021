#include "qcrank/congruence.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcrank/errors.hpp"
#include "qcrank/theta.hpp"

namespace qcrank {

std::string_view to_string(SumWeight w) {
    switch (w) {
        case SumWeight::NONE: return "NONE";
        case SumWeight::TRIANGULAR_SUM: return "TRIANGULAR_SUM";
        case SumWeight::SQUARES_SUM: return "SQUARES_SUM";
        case SumWeight::PENT_6K1_SUM: return "PENT_6K1_SUM";
        case SumWeight::CUBIC_3K1_SUM: return "CUBIC_3K1_SUM";
    }
    return "?";
}

namespace {

std::optional<ThetaKind> theta_of(SumWeight w) {
    switch (w) {
        case SumWeight::NONE: return std::nullopt;
        case SumWeight::TRIANGULAR_SUM: return ThetaKind::TRIANGULAR;
        case SumWeight::SQUARES_SUM: return ThetaKind::SQUARES;
        case SumWeight::PENT_6K1_SUM: return ThetaKind::PENT_6K1;
        case SumWeight::CUBIC_3K1_SUM: return ThetaKind::CUBIC_3K1;
    }
    return std::nullopt;
}

}  // namespace

void CongruenceFamily::validate() const {
    if (modulus < 2) {
        throw std::invalid_argument("congruence modulus must be at least 2");
    }
    if (stride < 1) {
        throw std::invalid_argument("progression stride must be positive");
    }
    if (offset < 0) {
        throw std::invalid_argument("progression offset must be non-negative");
    }
    if (inner_scale < 1) {
        throw std::invalid_argument("inner scale must be positive");
    }
    if (pre_divisor < 1) {
        throw std::invalid_argument("pre-divisor must be positive");
    }
}

Json CongruenceFamily::describe() const {
    Json j;
    j["sequence"] = std::string(to_string(sequence));
    j["modulus"] = modulus;
    j["stride"] = stride;
    j["offset"] = offset;
    if (weight != SumWeight::NONE) {
        j["weight"] = std::string(to_string(weight));
        j["inner_scale"] = inner_scale;
    }
    if (pre_divisor != 1) {
        j["pre_divisor"] = pre_divisor;
    }
    return j;
}

BigInt weighted_sum(const CongruenceFamily& family, std::int64_t n, const Series& seq) {
    family.validate();
    if (n < 0) {
        throw std::invalid_argument("weighted sum needs n >= 0");
    }
    const std::int64_t top = family.max_argument(n);
    BigInt total = 0;
    if (auto kind = theta_of(family.weight)) {
        total += seq.coeff(top) * theta_weight(*kind, 0);
        for (std::int64_t k = 1;; ++k) {
            bool any = false;
            for (std::int64_t idx : {k, -k}) {
                if (idx < 0 && !is_bilateral(*kind)) {
                    continue;
                }
                const std::int64_t arg =
                    top - family.inner_scale * theta_exponent(*kind, idx);
                if (arg >= 0) {
                    total += seq.coeff(arg) * theta_weight(*kind, idx);
                    any = true;
                }
            }
            if (!any) {
                break;
            }
        }
    } else {
        total = seq.coeff(top);
    }
    if (family.pre_divisor != 1) {
        const BigInt d = family.pre_divisor;
        if (!mpz_divisible_p(total.get_mpz_t(), d.get_mpz_t())) {
            throw InexactDivision("weighted sum at n=" + std::to_string(n) + " (" +
                                      total.get_str() + ") is not divisible by " +
                                      d.get_str(),
                                  n);
        }
        mpz_divexact(total.get_mpz_t(), total.get_mpz_t(), d.get_mpz_t());
    }
    return total;
}

BigInt weighted_sum(const CongruenceFamily& family, std::int64_t n) {
    return weighted_sum(family, n,
                        named_series(family.sequence, family.required_order(n)));
}

CheckReport check_progression(const CongruenceFamily& family, std::int64_t n_max,
                              const Series& seq) {
    family.validate();
    if (n_max < 0) {
        throw std::invalid_argument("n_max must be non-negative");
    }
    const std::int64_t required = family.required_order(n_max);
    if (seq.order() < required) {
        throw OrderExceeded("series known to order " + std::to_string(seq.order()) +
                                " cannot cover n_max=" + std::to_string(n_max) +
                                " (needs order " + std::to_string(required) + ")",
                            required, seq.order());
    }
    CheckReport report;
    report.task = "progression";
    report.params = family.describe();
    report.params["n_max"] = n_max;
    report.params["required_order"] = required;
    report.order = seq.order();

    const BigInt modulus = family.modulus;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        BigInt value;
        try {
            value = weighted_sum(family, n, seq);
        } catch (const InexactDivision& e) {
            report.fail(Witness{n, std::nullopt, 0, "pre-division inexact: " +
                                                        std::string(e.what())});
            break;
        }
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
        if (sgn(r) != 0) {
            report.fail(Witness{n, std::nullopt, r, "residue mod " + modulus.get_str()});
            break;
        }
    }
    return report;
}

CheckReport check_progression(const CongruenceFamily& family, std::int64_t n_max) {
    family.validate();
    return check_progression(family, n_max,
                             named_series(family.sequence, family.required_order(n_max)));
}

ResidueClass solve_24n_condition(std::int64_t alpha) {
    if (alpha < 0) {
        throw std::invalid_argument("alpha must be non-negative");
    }
    const std::int64_t exponent = 2 * alpha + 1;
    std::int64_t modulus = 1;
    for (std::int64_t i = 0; i < exponent; ++i) {
        if (modulus > std::numeric_limits<std::int64_t>::max() / 5) {
            throw std::out_of_range("5^(2 alpha + 1) does not fit in 64 bits");
        }
        modulus *= 5;
    }
    // Extended Euclid for 24^{-1} mod 5^(2 alpha + 1).
    std::int64_t r0 = modulus, r1 = 24;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    const std::int64_t inv = t0 < 0 ? t0 + modulus : t0;
    return {inv, modulus};
}

bool is_prime(std::int64_t p) {
    if (p < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

namespace {

CheckReport check_d_relation(std::int64_t n_max) {
    CheckReport report;
    report.task = "ch-d";
    const std::int64_t order = 7 * n_max + 17;
    report.order = order;
    report.params = Json{{"sequence", "D_CH"}, {"p", 7}, {"shift", 16}, {"factor", 49},
                         {"n_max", n_max}, {"required_order", order}};
    const Series d = named_series(SeriesName::D_CH, order);
    for (std::int64_t idx : {2, 9}) {
        if (sgn(d.coeff(idx)) != 0) {
            report.fail(Witness{idx, std::nullopt, d.coeff(idx), "d(" + std::to_string(idx) +
                                                                     ") should vanish"});
        }
    }
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const BigInt lhs = d.coeff(7 * n + 16);
        const BigInt rhs = (n % 7 == 0) ? BigInt(49 * d.coeff(n / 7)) : BigInt(0);
        if (lhs != rhs) {
            report.fail(Witness{n, std::nullopt, lhs - rhs, "d(7n+16) = 49 d(n/7)"});
            break;
        }
    }
    return report;
}

CheckReport check_h_relation(std::int64_t p, std::int64_t n_max,
                             std::optional<std::int64_t> corollary_n_max) {
    const std::int64_t residue = p % 24;
    if (!is_prime(p) || (residue != 13 && residue != 17 && residue != 19 && residue != 23)) {
        throw std::invalid_argument("h relation needs a prime p = 13, 17, 19, 23 (mod 24); got " +
                                    std::to_string(p));
    }
    const std::int64_t shift = 5 * (p * p - 1) / 24;
    std::int64_t order = p * n_max + shift + 1;
    const std::int64_t covered = floor_div(order - 1 - p * (p - 1) - shift, p * p);
    const std::int64_t cor_max = corollary_n_max.value_or(covered);
    if (cor_max >= 0) {
        order = std::max(order, p * p * cor_max + p * (p - 1) + shift + 1);
    }

    CheckReport report;
    report.task = "ch-h";
    report.order = order;
    report.params = Json{{"sequence", "H_CH"}, {"p", p},       {"shift", shift},
                         {"n_max", n_max},     {"corollary_n_max", cor_max}};
    const Series h = named_series(SeriesName::H_CH, order);
    const BigInt pp = p;

    std::optional<int> sign;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const BigInt lhs = h.coeff(p * n + shift);
        const BigInt base = (n % p == 0) ? h.coeff(n / p) : BigInt(0);
        if (!sign && sgn(base) != 0) {
            if (lhs == pp * base) {
                sign = 1;
            } else if (lhs == -pp * base) {
                sign = -1;
            } else {
                report.fail(Witness{n, std::nullopt, lhs, "h(pn+shift) is not +-p h(n/p)"});
                break;
            }
            report.notes.push_back("sign " + std::string(*sign > 0 ? "+1" : "-1") +
                                   " inferred at n=" + std::to_string(n));
            continue;
        }
        const BigInt rhs = base * pp * (sign ? *sign : 1);
        if (lhs != rhs) {
            report.fail(Witness{n, std::nullopt, lhs - rhs, "h(pn+shift) = sign*p h(n/p)"});
            break;
        }
    }
    report.params["sign"] = sign ? *sign : 0;

    for (std::int64_t n = 0; n <= cor_max && report.passed; ++n) {
        for (std::int64_t r = 1; r < p; ++r) {
            const BigInt v = h.coeff(p * p * n + p * r + shift);
            if (sgn(v) != 0) {
                report.fail(Witness{n, r, v, "h(p^2 n + p r + shift) = 0"});
                break;
            }
        }
    }
    return report;
}

}  // namespace

CheckReport cooper_hirschhorn_check(SeriesName sequence, std::int64_t p, std::int64_t n_max,
                                    std::optional<std::int64_t> corollary_n_max) {
    if (n_max < 0) {
        throw std::invalid_argument("n_max must be non-negative");
    }
    switch (sequence) {
        case SeriesName::D_CH:
            if (p != 7) {
                throw std::invalid_argument("the d relation is checked at p = 7 only");
            }
            return check_d_relation(n_max);
        case SeriesName::H_CH:
            return check_h_relation(p, n_max, corollary_n_max);
        default:
            throw std::invalid_argument("Cooper-Hirschhorn check applies to D_CH and H_CH only");
    }
}

}  // namespace qcrank
