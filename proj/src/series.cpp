#include "qcrank/series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcrank/errors.hpp"

namespace qcrank {

namespace {

std::vector<std::size_t> nonzero_positions(const std::vector<BigInt>& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) != 0) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0)) {
        --q;
    }
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

Series::Series(std::int64_t valuation, std::int64_t order, std::vector<BigInt> coeffs)
    : valuation_(valuation), order_(order), coeffs_(std::move(coeffs)) {
    canonicalize();
}

void Series::canonicalize() {
    if (order_ <= valuation_) {
        coeffs_.clear();
        valuation_ = order_;
        return;
    }
    coeffs_.resize(static_cast<std::size_t>(order_ - valuation_));
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                              [](const BigInt& c) { return sgn(c) != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        valuation_ = order_;
        return;
    }
    const auto skip = first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    valuation_ += skip;
}

Series Series::zero(std::int64_t order) {
    return Series(order, order, {});
}

Series Series::one(std::int64_t order) {
    return monomial(1, 0, order);
}

Series Series::monomial(BigInt coefficient, std::int64_t exponent, std::int64_t order) {
    std::vector<BigInt> c;
    c.push_back(std::move(coefficient));
    return Series(exponent, order, std::move(c));
}

Series Series::from_coefficients(std::int64_t valuation, std::vector<BigInt> coeffs,
                                 std::int64_t order) {
    return Series(valuation, order, std::move(coeffs));
}

BigInt Series::coeff(std::int64_t n) const {
    if (n >= order_) {
        throw OrderExceeded("coefficient of q^" + std::to_string(n) +
                                " requested from a series known to order " +
                                std::to_string(order_),
                            n, order_);
    }
    if (n < valuation_) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

Series Series::truncated(std::int64_t new_order) const {
    if (new_order >= order_) {
        return *this;
    }
    return Series(valuation_, new_order, coeffs_);
}

Series Series::shifted(std::int64_t s) const {
    return Series(valuation_ + s, order_ + s, coeffs_);
}

Series Series::scaled(const BigInt& factor) const {
    std::vector<BigInt> c(coeffs_);
    for (auto& x : c) {
        x *= factor;
    }
    return Series(valuation_, order_, std::move(c));
}

BigInt coeff(const Series& a, std::int64_t n) {
    return a.coeff(n);
}

Series add(const Series& a, const Series& b) {
    const std::int64_t order = std::min(a.order_, b.order_);
    const std::int64_t val = std::min(a.valuation_, b.valuation_);
    if (order <= val) {
        return Series::zero(order);
    }
    std::vector<BigInt> c(static_cast<std::size_t>(order - val));
    for (const Series* s : {&a, &b}) {
        const std::int64_t off = s->valuation_ - val;
        for (std::size_t i = 0; i < s->coeffs_.size(); ++i) {
            const std::int64_t pos = off + static_cast<std::int64_t>(i);
            if (pos >= order - val) {
                break;
            }
            c[static_cast<std::size_t>(pos)] += s->coeffs_[i];
        }
    }
    return Series(val, order, std::move(c));
}

Series operator-(const Series& a) {
    std::vector<BigInt> c(a.coeffs_);
    for (auto& x : c) {
        x = -x;
    }
    return Series(a.valuation_, a.order_, std::move(c));
}

Series mul(const Series& a, const Series& b) {
    const std::int64_t order =
        std::min(a.valuation_ + b.order_, b.valuation_ + a.order_);
    const std::int64_t val = a.valuation_ + b.valuation_;
    if (a.is_zero() || b.is_zero() || order <= val) {
        return Series::zero(order);
    }
    const auto len = static_cast<std::size_t>(order - val);
    std::vector<BigInt> c(len);

    // Eta products are sparse, so walk the nonzero entries only.
    const auto nza = nonzero_positions(a.coeffs_);
    const auto nzb = nonzero_positions(b.coeffs_);
    const auto& outer = nza.size() <= nzb.size() ? nza : nzb;
    const auto& inner = nza.size() <= nzb.size() ? nzb : nza;
    const auto& xs = nza.size() <= nzb.size() ? a.coeffs_ : b.coeffs_;
    const auto& ys = nza.size() <= nzb.size() ? b.coeffs_ : a.coeffs_;
    for (std::size_t i : outer) {
        for (std::size_t j : inner) {
            if (i + j >= len) {
                break;
            }
            mpz_addmul(c[i + j].get_mpz_t(), xs[i].get_mpz_t(), ys[j].get_mpz_t());
        }
    }
    return Series(val, order, std::move(c));
}

Series invert(const Series& a) {
    if (a.is_zero()) {
        throw NonUnitLeadingCoefficient("cannot invert a series that is zero to its order");
    }
    const BigInt& lead = a.coeffs_.front();
    if (lead != 1 && lead != -1) {
        throw NonUnitLeadingCoefficient("leading coefficient " + lead.get_str() +
                                        " is not a unit");
    }
    const std::int64_t rel = a.order_ - a.valuation_;
    const auto len = static_cast<std::size_t>(rel);
    // c0 * b_n = delta_{n0} - sum_{k>=1} c_k b_{n-k}, with 1/c0 == c0.
    std::vector<BigInt> b(len);
    b[0] = lead;
    std::vector<std::size_t> nz;
    for (std::size_t k = 1; k < a.coeffs_.size(); ++k) {
        if (sgn(a.coeffs_[k]) != 0) {
            nz.push_back(k);
        }
    }
    BigInt acc;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        for (std::size_t k : nz) {
            if (k > n) {
                break;
            }
            mpz_addmul(acc.get_mpz_t(), a.coeffs_[k].get_mpz_t(), b[n - k].get_mpz_t());
        }
        b[n] = lead > 0 ? BigInt(-acc) : acc;
    }
    return Series(-a.valuation_, -a.valuation_ + rel, std::move(b));
}

Series pow(const Series& a, std::int64_t k) {
    if (k == 0) {
        return Series::one(a.is_zero() ? a.order() : a.order() - a.valuation());
    }
    if (k < 0) {
        return pow(invert(a), -k);
    }
    Series base = a;
    std::optional<Series> acc;
    while (true) {
        if (k & 1) {
            acc = acc ? mul(*acc, base) : base;
        }
        k >>= 1;
        if (k == 0) {
            break;
        }
        base = mul(base, base);
    }
    return *acc;
}

Series stretch(const Series& a, std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("stretch factor must be positive");
    }
    if (m == 1) {
        return a;
    }
    const std::int64_t val = a.valuation_ * m;
    const std::int64_t order = a.order_ * m;
    std::vector<BigInt> c(static_cast<std::size_t>(order - val));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        c[i * static_cast<std::size_t>(m)] = a.coeffs_[i];
    }
    return Series(val, order, std::move(c));
}

Series extract(const Series& a, std::int64_t m, std::int64_t r) {
    if (m < 1 || r < 0 || r >= m) {
        throw std::invalid_argument("extract needs m >= 1 and 0 <= r < m");
    }
    const std::int64_t order = ceil_div(a.order_ - r, m);
    const std::int64_t val = std::min(ceil_div(a.valuation_ - r, m), order);
    std::vector<BigInt> c(static_cast<std::size_t>(order - val));
    for (std::int64_t n = val; n < order; ++n) {
        const std::int64_t e = m * n + r;
        if (e >= a.valuation_) {
            c[static_cast<std::size_t>(n - val)] =
                a.coeffs_[static_cast<std::size_t>(e - a.valuation_)];
        }
    }
    return Series(val, order, std::move(c));
}

Series reduce_mod(const Series& a, const BigInt& m) {
    if (m < 2) {
        throw std::invalid_argument("reduction modulus must be at least 2");
    }
    std::vector<BigInt> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        mpz_fdiv_r(c[i].get_mpz_t(), a.coeffs_[i].get_mpz_t(), m.get_mpz_t());
    }
    return Series(a.valuation_, a.order_, std::move(c));
}

Series divide_exact(const Series& a, const BigInt& d) {
    if (d == 0) {
        throw std::invalid_argument("division by zero");
    }
    std::vector<BigInt> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!mpz_divisible_p(a.coeffs_[i].get_mpz_t(), d.get_mpz_t())) {
            const std::int64_t e = a.valuation_ + static_cast<std::int64_t>(i);
            throw InexactDivision("coefficient of q^" + std::to_string(e) + " (" +
                                      a.coeffs_[i].get_str() + ") is not divisible by " +
                                      d.get_str(),
                                  e);
        }
        mpz_divexact(c[i].get_mpz_t(), a.coeffs_[i].get_mpz_t(), d.get_mpz_t());
    }
    return Series(a.valuation_, a.order_, std::move(c));
}

std::optional<std::int64_t> first_mismatch(const Series& a, const Series& b,
                                           const BigInt& modulus) {
    Series diff = a - b;
    if (modulus != 0) {
        diff = reduce_mod(diff, abs(modulus));
    }
    if (diff.is_zero()) {
        return std::nullopt;
    }
    return diff.valuation();
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
    bool first = true;
    for (std::size_t i = 0; i < s.coefficients().size(); ++i) {
        const BigInt& c = s.coefficients()[i];
        if (sgn(c) == 0) {
            continue;
        }
        const std::int64_t e = s.valuation() + static_cast<std::int64_t>(i);
        const BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag << "*";
        }
        os << "q";
        if (e != 1) {
            os << "^" << e;
        }
    }
    if (!first) {
        os << " + ";
    }
    return os << "O(q^" << s.order() << ")";
}

}  // namespace qcrank
