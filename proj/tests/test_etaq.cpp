#include <doctest.h>

#include "oracles.hpp"
#include "qcrank/errors.hpp"
#include "qcrank/etaq.hpp"
#include "qcrank/partition.hpp"

using namespace qcrank;

TEST_SUITE("etaq") {

TEST_CASE("parsing eta quotients") {
    const auto k = parse_eta_quotient("q^-1 * f2^1 * f5^5 * f1^-1 * f10^-5");
    CHECK(k.shift == -1);
    CHECK(k.factors == std::map<std::int64_t, std::int64_t>{{1, -1}, {2, 1}, {5, 5}, {10, -5}});
    CHECK(k == *defining_quotient(SeriesName::K_PARAM));

    CHECK(parse_eta_quotient(" f1 ^3*f2^ -2 ") == *defining_quotient(SeriesName::C_CRANK));
    CHECK(parse_eta_quotient("1") == EtaQuotientSpec{});
    CHECK(parse_eta_quotient("f1 * f1 * f2^0") == EtaQuotientSpec{0, {{1, 2}}});
    CHECK(parse_eta_quotient("f3 * f3^-1").factors.empty());
    CHECK(parse_eta_quotient(to_string(k)) == k);

    for (const char* bad : {"", "f0", "f-1^2", "g1", "f1^", "q^x", "f1 ** f2", "f1 f2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_eta_quotient(bad), std::invalid_argument);
    }
}

TEST_CASE("f1 by pentagonal numbers matches the naive product") {
    const Series f1 = eta_factor(1, 13);
    CHECK(oracle::head(f1, 13) ==
          oracle::Coeffs{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1});
    for (std::int64_t m : {1, 2, 5, 7}) {
        CHECK(oracle::head(eta_factor(m, 120), 120) == oracle::eta_product(m, 120));
    }
}

TEST_CASE("eta quotients") {
    CHECK(eta_quotient(EtaQuotientSpec{}, 20) == Series::one(20));

    const Series k = eta_quotient(*defining_quotient(SeriesName::K_PARAM), 100);
    CHECK(k.valuation() == -1);
    CHECK(k.order() == 100);
    const Series k_plus_1 = k + Series::one(200);
    const Series rhs = eta_quotient(parse_eta_quotient("q^-1 * f2^4 * f5^2 * f1^-2 * f10^-4"), 100);
    CHECK(k_plus_1 == rhs);

    // Against products multiplied out naively.
    const auto spec = parse_eta_quotient("f1^2 * f5^6 * f2^-4");
    const std::size_t n = 60;
    const auto expected = oracle::multiply(
        oracle::multiply(oracle::power(oracle::eta_product(1, n), 2, n),
                         oracle::power(oracle::eta_product(5, n), 6, n), n),
        oracle::power(oracle::eta_product(2, n), -4, n), n);
    CHECK(oracle::head(eta_quotient(spec, 60), n) == expected);
}

TEST_CASE("residue products") {
    CHECK(residue_product(ResidueProductSpec{2, {}}, 30) == Series::one(30));
    CHECK(residue_product(ResidueProductSpec{2, {{1, 1}, {2, 1}}}, 80) == eta_factor(1, 80));
    CHECK(residue_product(ResidueProductSpec{5, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}}, 80) ==
          eta_factor(1, 80));
    CHECK_THROWS_AS(residue_product(ResidueProductSpec{1, {{1, 1}}}, 10), std::invalid_argument);
    CHECK_THROWS_AS(residue_product(ResidueProductSpec{5, {{7, 1}}}, 10), std::invalid_argument);

    // R(q) * prod(1-q^{5n-3})(1-q^{5n-2}) = prod(1-q^{5n-4})(1-q^{5n-1}).
    const Series r = rogers_ramanujan(60);
    CHECK(r.coeff(0) == 1);
    CHECK(r.coeff(1) == -1);
    CHECK(r * residue_product({5, {{2, 1}, {3, 1}}}, 60) == residue_product({5, {{1, 1}, {4, 1}}}, 60));
    CHECK(rogers_ramanujan_stretched(2, 60) == stretch(rogers_ramanujan(30), 2));
}

TEST_CASE("named series") {
    const Series c = named_series(SeriesName::C_CRANK, 6);
    CHECK(oracle::head(c, 6) == oracle::Coeffs{1, -3, 2, -1, 5, -5});
    CHECK(c.coeff(4) == crank_parity_oracle(4));

    const Series a = named_series(SeriesName::A_RECIP, 3);
    CHECK(oracle::head(a, 3) == oracle::Coeffs{1, 3, 7});

    const Series d = named_series(SeriesName::D_CH, 10);
    CHECK(d.coeff(2) == 0);
    CHECK(d.coeff(9) == 0);

    CHECK(named_series(SeriesName::P_PARTITION, 10).coeff(9) == 30);
    CHECK(!defining_quotient(SeriesName::F_CONV).has_value());
    CHECK_THROWS_AS(named_series(SeriesName::C_CRANK, 0), std::invalid_argument);

    for (const char* name : {"P_PARTITION", "C_CRANK", "A_RECIP", "D_CH", "H_CH", "K_PARAM",
                             "A_CAP", "F_CONV"}) {
        const auto parsed = parse_series_name(name);
        REQUIRE(parsed.has_value());
        CHECK(to_string(*parsed) == name);
    }
    CHECK(parse_series_name("C") == SeriesName::C_CRANK);
    CHECK(!parse_series_name("crank").has_value());
}

TEST_CASE("convolved sequence f(n) matches its per-coefficient definition") {
    const std::int64_t n = 30;
    const Series f = named_series(SeriesName::F_CONV, n);
    const Series c = named_series(SeriesName::C_CRANK, 5 * n + 5);
    for (std::int64_t i = 0; i < n; ++i) {
        BigInt sum = 0;
        for (std::int64_t k = 0; 5 * i + 4 - 5 * k * (k + 1) / 2 >= 0; ++k) {
            sum += c.coeff(5 * i + 4 - 5 * k * (k + 1) / 2);
        }
        CHECK(sum % 5 == 0);
        CHECK(f.coeff(i) == sum / 5);
    }
}

TEST_CASE("binomial congruence") {
    CHECK(binomial_congruence_check(1, 1, 200).passed);
    CHECK(binomial_congruence_check(2, 2, 150).passed);
    CHECK_THROWS_AS(binomial_congruence_check(0, 1, 10), std::invalid_argument);

    auto [lhs, rhs] = binomial_congruence_sides(1, 1, 200);
    const Series corrupted = lhs + Series::monomial(1, 37, 200);
    const auto report = compare_series("binom", {}, 200, corrupted, rhs, 5);
    CHECK(!report.passed);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->n == 37);
}

}  // TEST_SUITE
