#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace qcrank {

using BigInt = mpz_class;

/// Truncated Laurent series in q with exact integer coefficients.
///
/// A series stores the coefficients of q^valuation .. q^(order-1). Every
/// exponent below `order` is exact; nothing is known at or above it.
/// Values are kept canonical: the first stored coefficient is nonzero, or
/// the series is the canonical zero (no coefficients, valuation == order).
///
/// Order propagation, stated once:
///   add     min(a.order, b.order)
///   mul     min(a.valuation + b.order, b.valuation + a.order)
///   invert  a.order - 2 * a.valuation
///   stretch m * a.order
///   extract ceil((a.order - r) / m)
/// The valuations in these rules are the true (canonical) valuations, so
/// multiplying by a series of positive valuation raises the order.
class Series {
public:
    /// Canonical zero known to order 0.
    Series() = default;

    static Series zero(std::int64_t order);
    static Series one(std::int64_t order);
    static Series monomial(BigInt coefficient, std::int64_t exponent, std::int64_t order);

    /// coeffs[i] is the coefficient of q^(valuation + i). Missing entries up to
    /// `order` are zero; entries at or past `order` are dropped.
    static Series from_coefficients(std::int64_t valuation, std::vector<BigInt> coeffs,
                                    std::int64_t order);

    std::int64_t valuation() const noexcept { return valuation_; }
    std::int64_t order() const noexcept { return order_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Stored coefficients, starting at q^valuation().
    std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

    /// Coefficient of q^n. Throws OrderExceeded when n >= order().
    BigInt coeff(std::int64_t n) const;

    /// Lowers the order to min(order(), new_order).
    Series truncated(std::int64_t new_order) const;

    /// Multiplies by q^s; the order moves with it.
    Series shifted(std::int64_t s) const;

    Series scaled(const BigInt& factor) const;

    /// Structural equality: same valuation, order and coefficients.
    friend bool operator==(const Series&, const Series&) = default;

private:
    Series(std::int64_t valuation, std::int64_t order, std::vector<BigInt> coeffs);
    void canonicalize();

    std::int64_t valuation_ = 0;
    std::int64_t order_ = 0;
    std::vector<BigInt> coeffs_;

    friend Series add(const Series&, const Series&);
    friend Series mul(const Series&, const Series&);
    friend Series invert(const Series&);
    friend Series stretch(const Series&, std::int64_t);
    friend Series extract(const Series&, std::int64_t, std::int64_t);
    friend Series reduce_mod(const Series&, const BigInt&);
    friend Series divide_exact(const Series&, const BigInt&);
    friend Series operator-(const Series&);
};

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);

/// Multiplicative inverse. The leading coefficient must be +1 or -1;
/// otherwise NonUnitLeadingCoefficient is thrown.
Series invert(const Series& a);

/// a^k by repeated squaring; negative k inverts first.
Series pow(const Series& a, std::int64_t k);

/// Substitutes q -> q^m.
Series stretch(const Series& a, std::int64_t m);

/// The m-dissection component sum_n c(m n + r) q^n.
Series extract(const Series& a, std::int64_t m, std::int64_t r);

/// Least non-negative residues modulo m (m >= 2).
Series reduce_mod(const Series& a, const BigInt& m);

/// Divides every coefficient by d, throwing InexactDivision (carrying the
/// exponent) if any coefficient is not a multiple of d.
Series divide_exact(const Series& a, const BigInt& d);

BigInt coeff(const Series& a, std::int64_t n);

Series operator-(const Series& a);
inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return add(a, -b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

/// First exponent below min(a.order, b.order) where a and b differ, or
/// differ modulo `modulus` when it is nonzero.
std::optional<std::int64_t> first_mismatch(const Series& a, const Series& b,
                                           const BigInt& modulus = 0);

/// Equality on the common range of validity.
inline bool equal_up_to_order(const Series& a, const Series& b) {
    return !first_mismatch(a, b).has_value();
}

std::ostream& operator<<(std::ostream& os, const Series& s);

/// floor(a / b) and ceil(a / b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace qcrank
