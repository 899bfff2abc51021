#include <doctest.h>

#include "oracles.hpp"
#include "qcrank/congruence.hpp"
#include "qcrank/errors.hpp"
#include "qcrank/etaq.hpp"
#include "qcrank/partition.hpp"

using namespace qcrank;

namespace {

// Crank straight from the definition, on a plain part list.
std::int64_t naive_crank(const std::vector<std::int64_t>& parts) {
    std::int64_t ones = 0;
    for (auto p : parts) ones += (p == 1);
    if (ones == 0) return parts.empty() ? 0 : parts.front();
    std::int64_t above = 0;
    for (auto p : parts) above += (p > ones);
    return above - ones;
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("crank of single partitions") {
    CHECK(crank(Partition({4})) == 4);
    CHECK(crank(Partition({1, 1, 1})) == -3);
    CHECK(crank(Partition({3, 1})) == 0);
    CHECK(crank(Partition()) == 0);
    CHECK(crank(Partition({1})) == -1);
    CHECK(Partition({5, 3, 1, 1}).parts_above(2) == 2);
    CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("all five partitions of 4 have even crank") {
    std::vector<std::int64_t> cranks;
    for_each_partition(4, [&](std::span<const std::int64_t> parts) {
        cranks.push_back(crank(Partition(std::vector<std::int64_t>(parts.begin(), parts.end()))));
    });
    // 4, 3+1, 2+2, 2+1+1, 1+1+1+1
    CHECK(cranks == std::vector<std::int64_t>{4, 0, 2, -2, -4});
    CHECK(crank_parity_oracle(4) == 5);
}

TEST_CASE("enumeration agrees with naive recursion") {
    for (std::int64_t n = 0; n <= 18; ++n) {
        std::int64_t count = 0;
        for_each_partition(n, [&](std::span<const std::int64_t>) { ++count; });
        CHECK(count == oracle::count_partitions(n));

        std::int64_t parity = 0;
        oracle::partitions(n, [&](const std::vector<std::int64_t>& parts) {
            parity += (naive_crank(parts) % 2 == 0) ? 1 : -1;
        });
        CHECK(crank_parity_oracle(n) == parity);
    }
}

TEST_CASE("crank parity oracle against the series") {
    CHECK(crank_parity_oracle(0) == 1);
    CHECK(crank_parity_oracle(1) == -1);
    const Series c = named_series(SeriesName::C_CRANK, 31);
    // n = 1 is the single known disagreement: the series coefficient is -3.
    CHECK(c.coeff(1) == -3);
    for (std::int64_t n = 0; n <= 30; ++n) {
        if (n != 1) {
            CAPTURE(n);
            CHECK(crank_parity_oracle(n) == c.coeff(n));
        }
    }
    CHECK_THROWS_AS(crank_parity_oracle(46), EnumerationCapExceeded);
}

TEST_CASE("colored partition oracle against the series") {
    CHECK(colored_partition_oracle(0) == 1);
    CHECK(colored_partition_oracle(1) == 3);
    CHECK(colored_partition_oracle(2) == 7);
    const Series a = named_series(SeriesName::A_RECIP, 26);
    for (std::int64_t n = 0; n <= 25; ++n) {
        CHECK(colored_partition_oracle(n) == a.coeff(n));
    }
    CHECK_THROWS_AS(colored_partition_oracle(41), EnumerationCapExceeded);
}

}  // TEST_SUITE

TEST_SUITE("congruence") {

TEST_CASE("weighted sums") {
    const Series c = named_series(SeriesName::C_CRANK, 600);
    // Only k = 0 and k = -1 reach non-negative arguments at n = 0.
    const CongruenceFamily thm13{SeriesName::C_CRANK, 5, 50, 49, SumWeight::PENT_6K1_SUM, 25, 5};
    const BigInt raw = c.coeff(49) - 5 * c.coeff(24);
    CHECK(raw % 5 == 0);
    CHECK(weighted_sum(thm13, 0, c) == raw / 5);
    CHECK(weighted_sum(thm13, 0, c) % 5 == 0);

    const Series a = named_series(SeriesName::A_RECIP, 30);
    const CongruenceFamily tri{SeriesName::A_RECIP, 5, 25, 16, SumWeight::TRIANGULAR_SUM, 5};
    const BigInt sum = a.coeff(16) + a.coeff(11) + a.coeff(1);
    CHECK(weighted_sum(tri, 0, a) == sum);
    CHECK(sum % 5 == 0);

    const CongruenceFamily plain{SeriesName::A_RECIP, 7, 3, 2};
    CHECK(weighted_sum(plain, 4, a) == a.coeff(14));

    const CongruenceFamily thm15b{SeriesName::C_CRANK, 25, 125, 114, SumWeight::TRIANGULAR_SUM, 5, 5};
    BigInt s = 0;
    for (std::int64_t k = 0; k <= 6; ++k) s += c.coeff(114 - 5 * k * (k + 1) / 2);
    CHECK(weighted_sum(thm15b, 0, c) == s / 5);
    CHECK((s / 5) % 25 == 0);
}

TEST_CASE("progression scans") {
    CHECK(check_progression({SeriesName::A_RECIP, 7, 7, 2}, 100).passed);
    CHECK(check_progression({SeriesName::P_PARTITION, 5, 5, 4}, 200).passed);

    const auto bad = check_progression({SeriesName::A_RECIP, 7, 7, 3}, 50);
    CHECK(!bad.passed);
    REQUIRE(bad.witness.has_value());
    const Series a = named_series(SeriesName::A_RECIP, 400);
    CHECK(bad.witness->n == *first_mismatch(reduce_mod(extract(a, 7, 3), 7), Series::zero(50)));

    // Too short a series is refused rather than read past its order.
    CHECK_THROWS_AS(check_progression({SeriesName::P_PARTITION, 5, 5, 4}, 10,
                                      named_series(SeriesName::P_PARTITION, 54)),
                    OrderExceeded);

    // A pre-divisor that does not divide is reported as a failure.
    const auto inexact = check_progression({SeriesName::P_PARTITION, 2, 1, 3, SumWeight::NONE, 1, 2}, 3);
    CHECK(!inexact.passed);
    CHECK(inexact.witness->at.find("inexact") != std::string::npos);
}

TEST_CASE("24n = 1 classes") {
    const auto a0 = solve_24n_condition(0);
    CHECK(a0.residue == 4);
    CHECK(a0.modulus == 5);
    const auto a1 = solve_24n_condition(1);
    CHECK(a1.residue == 99);
    CHECK(a1.modulus == 125);
    for (std::int64_t alpha = 0; alpha <= 5; ++alpha) {
        const auto r = solve_24n_condition(alpha);
        CHECK((24 * r.residue) % r.modulus == 1);
    }
    CHECK_THROWS_AS(solve_24n_condition(-1), std::invalid_argument);
}

TEST_CASE("C(n) on the alpha = 1 class is divisible by 25") {
    const Series c = named_series(SeriesName::C_CRANK, 1101);
    for (std::int64_t n = 99; n <= 1100; n += 125) {
        CAPTURE(n);
        CHECK(c.coeff(n) % 25 == 0);
    }
}

TEST_CASE("Cooper-Hirschhorn relations") {
    const auto d = cooper_hirschhorn_check(SeriesName::D_CH, 7, 100);
    CHECK(d.passed);
    const Series ds = named_series(SeriesName::D_CH, 17);
    CHECK(ds.coeff(16) == 49 * ds.coeff(0));
    CHECK(ds.coeff(16) == 49);

    const auto h = cooper_hirschhorn_check(SeriesName::H_CH, 13, 100);
    CHECK(h.passed);
    CHECK(h.params["shift"] == 35);
    CHECK(h.params["sign"] != 0);
    CHECK(h.params["corollary_n_max"].get<std::int64_t>() >= 5);

    CHECK_THROWS_AS(cooper_hirschhorn_check(SeriesName::H_CH, 5, 10), std::invalid_argument);
    CHECK_THROWS_AS(cooper_hirschhorn_check(SeriesName::H_CH, 25, 10), std::invalid_argument);
    CHECK_THROWS_AS(cooper_hirschhorn_check(SeriesName::D_CH, 11, 10), std::invalid_argument);
    CHECK_THROWS_AS(cooper_hirschhorn_check(SeriesName::C_CRANK, 7, 10), std::invalid_argument);
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(CongruenceFamily({SeriesName::C_CRANK, 1, 5, 4}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CongruenceFamily({SeriesName::C_CRANK, 5, 0, 4}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CongruenceFamily({SeriesName::C_CRANK, 5, 5, -1}).validate(), std::invalid_argument);
    CHECK(is_prime(13));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
}

}  // TEST_SUITE
