#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "qcrank/check_report.hpp"
#include "qcrank/series.hpp"

namespace qcrank {

/// Laurent polynomial sum_d c_d K^d with exact integer coefficients.
/// Zero coefficients are never stored.
class KPolynomial {
public:
    KPolynomial() = default;
    KPolynomial(std::initializer_list<std::pair<const std::int64_t, BigInt>> terms);

    static KPolynomial constant(const BigInt& c);
    static KPolynomial monomial(const BigInt& c, std::int64_t degree);
    /// The parameter K itself.
    static KPolynomial k() { return monomial(1, 1); }

    const std::map<std::int64_t, BigInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coeff(std::int64_t degree) const;
    std::int64_t min_degree() const;
    std::int64_t max_degree() const;

    KPolynomial scaled(const BigInt& c) const;
    /// Coefficients reduced to least non-negative residues modulo m.
    KPolynomial reduced_mod(const BigInt& m) const;

    KPolynomial& operator+=(const KPolynomial& o);
    KPolynomial& operator-=(const KPolynomial& o);

    friend KPolynomial operator+(KPolynomial a, const KPolynomial& b) { return a += b; }
    friend KPolynomial operator-(KPolynomial a, const KPolynomial& b) { return a -= b; }
    friend KPolynomial operator-(const KPolynomial& a) { return a.scaled(-1); }
    friend KPolynomial operator*(const KPolynomial& a, const KPolynomial& b);
    friend bool operator==(const KPolynomial&, const KPolynomial&) = default;

private:
    void add_term(std::int64_t degree, const BigInt& c);

    std::map<std::int64_t, BigInt> terms_;
};

KPolynomial pow(const KPolynomial& p, std::int64_t k);

/// Terms by decreasing degree, e.g. `K^2 + 2`, `K - 2 + 4*K^-1`.
std::string to_string(const KPolynomial& p);
std::ostream& operator<<(std::ostream& os, const KPolynomial& p);

/// Index of P(m, n); m >= 0.
struct PmnIndex {
    std::int64_t m = 0;
    std::int64_t n = 0;
};

/// P(m, n) as a Laurent polynomial in K, from the seeds
///   P(0,0) = 2, P(0,1) = 4/K, P(1,0) = K, P(1,-1) = 4/K - 2 + K,
/// the n-recurrence P(m,n+1) = (4/K) P(m,n) + P(m,n-1) run both ways, and
/// the m-recurrence P(m+2,n) = K P(m+1,n) + P(m,n).
KPolynomial pmn(PmnIndex idx);

/// P(m, n) evaluated directly from its definition,
///   1/(q^m R1^{m+2n} R2^{2m-n}) + (-1)^{m+n} q^m R1^{m+2n} R2^{2m-n},
/// with R1 = R(q) and R2 = R(q^2).
Series pmn_series(PmnIndex idx, std::int64_t order);

/// Substitutes the K series into p, exact below `order`.
Series eval_at_K(const KPolynomial& p, std::int64_t order);

/// Coefficients of P(3,-2), P(3,-1), P(2,-1), P(1,-1), P(1,0) and the
/// constant in the combination arising from the q^{5n+2} component of f(n).
using ComboCoefficients = std::array<std::int64_t, 6>;
inline constexpr ComboCoefficients kComboCoefficients = {-1, 2, -10, -16, 27, -15};

KPolynomial combo_lhs(const ComboCoefficients& coeffs = kComboCoefficients);

/// (K-4)^2 (K+1) (K^2-3K+1), i.e. the combination times K^2.
KPolynomial combo_rhs_cleared();

/// The P-combination against (K-4)^2(K+1)(K^2-3K+1)/K^2, both as
/// K-polynomials (after clearing K^2) and as q-series, together with
///   K (1 + P(0,-1)) = K - 4
///   1 - 2 P(0,-1) - 2 P(1,0) = 1 + 8/K - 2K = 3 (K+1)^2 / K (mod 5).
CheckReport verify_combo_identity(std::int64_t order,
                                  const ComboCoefficients& coeffs = kComboCoefficients);

enum class Recurrence { N_STEP, M_STEP, BOTH };

/// The n-step and/or m-step recurrence on the grid 0 <= m <= m_max,
/// n_lo <= n <= n_hi, as exact K-polynomial identities.
CheckReport verify_pmn_recurrences(std::int64_t m_max, std::int64_t n_lo, std::int64_t n_hi,
                                   Recurrence which = Recurrence::BOTH);

/// eval_at_K(pmn) against pmn_series on the same grid.
CheckReport verify_pmn_series(std::int64_t m_max, std::int64_t n_lo, std::int64_t n_hi,
                              std::int64_t order);

}  // namespace qcrank
