#include "qcrank/kalgebra.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcrank/etaq.hpp"

namespace qcrank {

KPolynomial::KPolynomial(std::initializer_list<std::pair<const std::int64_t, BigInt>> terms) {
    for (const auto& [d, c] : terms) {
        add_term(d, c);
    }
}

KPolynomial KPolynomial::constant(const BigInt& c) {
    return monomial(c, 0);
}

KPolynomial KPolynomial::monomial(const BigInt& c, std::int64_t degree) {
    KPolynomial p;
    p.add_term(degree, c);
    return p;
}

void KPolynomial::add_term(std::int64_t degree, const BigInt& c) {
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

BigInt KPolynomial::coeff(std::int64_t degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::int64_t KPolynomial::min_degree() const {
    if (terms_.empty()) {
        throw std::logic_error("zero K-polynomial has no degree");
    }
    return terms_.begin()->first;
}

std::int64_t KPolynomial::max_degree() const {
    if (terms_.empty()) {
        throw std::logic_error("zero K-polynomial has no degree");
    }
    return terms_.rbegin()->first;
}

KPolynomial KPolynomial::scaled(const BigInt& c) const {
    KPolynomial out;
    for (const auto& [d, x] : terms_) {
        out.add_term(d, x * c);
    }
    return out;
}

KPolynomial KPolynomial::reduced_mod(const BigInt& m) const {
    KPolynomial out;
    for (const auto& [d, x] : terms_) {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        out.add_term(d, r);
    }
    return out;
}

KPolynomial& KPolynomial::operator+=(const KPolynomial& o) {
    for (const auto& [d, c] : o.terms_) {
        add_term(d, c);
    }
    return *this;
}

KPolynomial& KPolynomial::operator-=(const KPolynomial& o) {
    for (const auto& [d, c] : o.terms_) {
        add_term(d, -c);
    }
    return *this;
}

KPolynomial operator*(const KPolynomial& a, const KPolynomial& b) {
    KPolynomial out;
    for (const auto& [da, ca] : a.terms_) {
        for (const auto& [db, cb] : b.terms_) {
            out.add_term(da + db, ca * cb);
        }
    }
    return out;
}

KPolynomial pow(const KPolynomial& p, std::int64_t k) {
    if (k < 0) {
        if (p.terms().size() != 1) {
            throw std::invalid_argument("only monomials have inverses among K-polynomials");
        }
        const auto& [d, c] = *p.terms().begin();
        if (c != 1 && c != -1) {
            throw std::invalid_argument("monomial coefficient is not a unit");
        }
        return pow(KPolynomial::monomial(c, -d), -k);
    }
    KPolynomial out = KPolynomial::constant(1);
    for (std::int64_t i = 0; i < k; ++i) {
        out = out * p;
    }
    return out;
}

std::string to_string(const KPolynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [d, c] = *it;
        const BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (d == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag << "*";
        }
        os << "K";
        if (d != 1) {
            os << "^" << d;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const KPolynomial& p) {
    return os << to_string(p);
}

namespace {

const KPolynomial& four_over_k() {
    static const KPolynomial v = KPolynomial::monomial(4, -1);
    return v;
}

/// Walks the n-recurrence from the consecutive pair (P(n0), P(n0 + 1)).
KPolynomial walk_n(KPolynomial at, KPolynomial next, std::int64_t n0, std::int64_t target) {
    std::int64_t n = n0;
    while (n < target) {
        KPolynomial after = four_over_k() * next + at;
        at = std::move(next);
        next = std::move(after);
        ++n;
    }
    while (n > target) {
        KPolynomial before = next - four_over_k() * at;
        next = std::move(at);
        at = std::move(before);
        --n;
    }
    return at;
}

KPolynomial seed_family(std::int64_t m, std::int64_t n) {
    if (m == 0) {
        return walk_n(KPolynomial::constant(2), four_over_k(), 0, n);
    }
    const KPolynomial p1m1 = four_over_k() + KPolynomial::constant(-2) + KPolynomial::k();
    return walk_n(p1m1, KPolynomial::k(), -1, n);
}

std::optional<std::int64_t> first_mismatch(const KPolynomial& a, const KPolynomial& b) {
    const KPolynomial diff = a - b;
    if (diff.is_zero()) {
        return std::nullopt;
    }
    return diff.min_degree();
}

void compare_symbolic(CheckReport& report, const KPolynomial& lhs, const KPolynomial& rhs,
                      const std::string& label) {
    if (auto d = first_mismatch(lhs, rhs)) {
        report.fail(Witness{*d, std::nullopt, lhs.coeff(*d) - rhs.coeff(*d), label});
    }
}

}  // namespace

KPolynomial pmn(PmnIndex idx) {
    if (idx.m < 0) {
        throw std::invalid_argument("P(m,n) needs m >= 0");
    }
    KPolynomial prev = seed_family(0, idx.n);
    if (idx.m == 0) {
        return prev;
    }
    KPolynomial cur = seed_family(1, idx.n);
    for (std::int64_t m = 2; m <= idx.m; ++m) {
        KPolynomial next = KPolynomial::k() * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Series pmn_series(PmnIndex idx, std::int64_t order) {
    if (idx.m < 0) {
        throw std::invalid_argument("P(m,n) needs m >= 0");
    }
    if (order < 1) {
        throw std::invalid_argument("P(m,n) series order must be positive");
    }
    const std::int64_t m = idx.m;
    const std::int64_t inner_order = order + m;
    const Series r1 = rogers_ramanujan(inner_order);
    const Series r2 = rogers_ramanujan_stretched(2, inner_order);
    const Series x = mul(pow(r1, m + 2 * idx.n), pow(r2, 2 * m - idx.n)).shifted(m);
    const Series second = ((m + idx.n) % 2 == 0) ? x : -x;
    return (invert(x) + second).truncated(order);
}

Series eval_at_K(const KPolynomial& p, std::int64_t order) {
    if (p.is_zero()) {
        return Series::zero(order);
    }
    const std::int64_t top = std::max<std::int64_t>(p.max_degree(), 0);
    const std::int64_t bottom = std::min<std::int64_t>(p.min_degree(), 0);
    const Series k = named_series(SeriesName::K_PARAM, order + top);
    const Series k_inv = invert(k);

    Series acc = Series::zero(order + top);
    Series up = Series::one(order + top);
    for (std::int64_t d = 0; d <= top; ++d) {
        if (d > 0) {
            up = mul(up, k);
        }
        const BigInt c = p.coeff(d);
        if (sgn(c) != 0) {
            acc = acc + up.scaled(c);
        }
    }
    Series down = Series::one(order + top);
    for (std::int64_t d = -1; d >= bottom; --d) {
        down = mul(down, k_inv);
        const BigInt c = p.coeff(d);
        if (sgn(c) != 0) {
            acc = acc + down.scaled(c);
        }
    }
    if (acc.order() < order) {
        throw std::logic_error("eval_at_K lost precision below the requested order");
    }
    return acc.truncated(order);
}

namespace {

constexpr std::array<PmnIndex, 5> kComboTerms = {
    PmnIndex{3, -2}, PmnIndex{3, -1}, PmnIndex{2, -1}, PmnIndex{1, -1}, PmnIndex{1, 0}};

}  // namespace

KPolynomial combo_lhs(const ComboCoefficients& coeffs) {
    KPolynomial sum = KPolynomial::constant(coeffs[5]);
    for (std::size_t i = 0; i < kComboTerms.size(); ++i) {
        sum += pmn(kComboTerms[i]).scaled(coeffs[i]);
    }
    return sum;
}

KPolynomial combo_rhs_cleared() {
    const KPolynomial k = KPolynomial::k();
    const KPolynomial km4 = k - KPolynomial::constant(4);
    const KPolynomial kp1 = k + KPolynomial::constant(1);
    const KPolynomial quad = k * k - k.scaled(3) + KPolynomial::constant(1);
    return km4 * km4 * kp1 * quad;
}

CheckReport verify_combo_identity(std::int64_t order, const ComboCoefficients& coeffs) {
    if (order < 50) {
        throw std::invalid_argument("combo identity check needs order >= 50");
    }
    CheckReport report;
    report.task = "combo456";
    report.order = order;

    const KPolynomial k = KPolynomial::k();
    const KPolynomial k_sq = KPolynomial::monomial(1, 2);
    const KPolynomial lhs = combo_lhs(coeffs);
    compare_symbolic(report, k_sq * lhs, combo_rhs_cleared(), "symbolic, cleared by K^2");

    // Numeric route: the P-combination straight from R(q), R(q^2).
    Series numeric = Series::monomial(coeffs[5], 0, order);
    for (std::size_t i = 0; i < kComboTerms.size(); ++i) {
        numeric = numeric + pmn_series(kComboTerms[i], order).scaled(coeffs[i]);
    }
    const Series rhs_series = eval_at_K(KPolynomial::monomial(1, -2) * combo_rhs_cleared(), order);
    report.absorb(compare_series("combo456", {}, order, numeric, rhs_series, 0,
                                 "numeric, P(m,n) from R(q)"));

    const KPolynomial p0m1 = pmn({0, -1});
    const KPolynomial p10 = pmn({1, 0});
    const KPolynomial one = KPolynomial::constant(1);
    compare_symbolic(report, k * (one + p0m1), k - KPolynomial::constant(4),
                     "K(1 + P(0,-1)) = K - 4");
    const KPolynomial a5n1 = one - p0m1.scaled(2) - p10.scaled(2);
    compare_symbolic(report, a5n1, one + KPolynomial::monomial(8, -1) - k.scaled(2),
                     "1 - 2P(0,-1) - 2P(1,0) = 1 + 8/K - 2K");
    const KPolynomial kp1 = k + one;
    compare_symbolic(report, (k * a5n1).reduced_mod(5), (kp1 * kp1).scaled(3).reduced_mod(5),
                     "K(1 - 2P(0,-1) - 2P(1,0)) = 3(K+1)^2 mod 5");
    return report;
}

CheckReport verify_pmn_recurrences(std::int64_t m_max, std::int64_t n_lo, std::int64_t n_hi,
                                   Recurrence which) {
    CheckReport report;
    report.task = "rec";
    report.params = Json{{"m_max", m_max}, {"n_lo", n_lo}, {"n_hi", n_hi}};
    for (std::int64_t m = 0; m <= m_max; ++m) {
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            const std::string at = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            if (which != Recurrence::M_STEP) {
                compare_symbolic(report, pmn({m, n + 1}),
                                 four_over_k() * pmn({m, n}) + pmn({m, n - 1}),
                                 "n-step at P" + at);
            }
            if (which != Recurrence::N_STEP) {
                compare_symbolic(report, pmn({m + 2, n}),
                                 KPolynomial::k() * pmn({m + 1, n}) + pmn({m, n}),
                                 "m-step at P" + at);
            }
        }
    }
    return report;
}

CheckReport verify_pmn_series(std::int64_t m_max, std::int64_t n_lo, std::int64_t n_hi,
                              std::int64_t order) {
    CheckReport report;
    report.task = "pmn-series";
    report.params = Json{{"m_max", m_max}, {"n_lo", n_lo}, {"n_hi", n_hi}};
    report.order = order;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            const std::string at = "P(" + std::to_string(m) + "," + std::to_string(n) + ")";
            report.absorb(compare_series(report.task, {}, order, pmn_series({m, n}, order),
                                         eval_at_K(pmn({m, n}), order), 0, at));
        }
    }
    return report;
}

}  // namespace qcrank
