#include "doctest.h"

#include "delpezzo/curve_counting.hpp"
#include "delpezzo/errors.hpp"
#include "delpezzo/neg_one.hpp"

using namespace delpezzo;

namespace {

mpz_class choose(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class out = 1;
    for (long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

// Straight transcription of the recursion with its own binomials.
std::vector<mpz_class> oracle(long max) {
    std::vector<mpz_class> n(max + 1, 0);
    n[1] = 1;
    for (long d = 2; d <= max; ++d) {
        mpz_class s = 0;
        for (long d1 = 1; d1 < d; ++d1) {
            const long d2 = d - d1;
            s += n[d1] * n[d2] * d1 * d1 * d2 * (d2 * choose(3 * d - 4, 3 * d1 - 2) - d1 * choose(3 * d - 4, 3 * d1 - 1));
        }
        n[d] = s;
    }
    return n;
}

}  // namespace

TEST_CASE("first values") {
    CHECK(kontsevich_count(1) == 1);
    CHECK(kontsevich_count(2) == 1);
    CHECK(kontsevich_count(3) == 12);
    CHECK(kontsevich_count(4) == 620);
    CHECK(kontsevich_count(5) == 87304);
}

TEST_CASE("memoised, bottom-up and oracle agree") {
    const auto expected = oracle(14);
    const auto table = kontsevich_table(14);
    RationalCurveCounter counter;
    for (long d = 14; d >= 1; --d) {
        CHECK(counter.count(d) == expected[d]);
        CHECK(table.at(d) == expected[d]);
    }
    CHECK(table.size() == 14);
}

TEST_CASE("counts grow") {
    const auto table = kontsevich_table(20);
    for (long d = 3; d <= 20; ++d) CHECK(table.at(d) > table.at(d - 1));
    CHECK(table.at(20) > mpz_class("1000000000000000000000000000000"));
}

TEST_CASE("bad degrees") {
    RationalCurveCounter counter;
    CHECK_THROWS_AS(counter.count(0), DomainError);
    CHECK_THROWS_AS(counter.count(-3), DomainError);
    CHECK_THROWS_AS(kontsevich_count(0), DomainError);
}

TEST_CASE("generalized point conditions") {
    for (int d = 1; d <= 8; ++d)
        for (const auto& c : enumerate_neg_one(DelPezzoContext(d))) CHECK(generalized_point_condition(c.cls) == 0);
    CHECK(generalized_point_condition(DivisorClass(3, {0, 0, 0, 0, 0, 0})) == 8);
    CHECK(generalized_point_condition(DivisorClass(0, {0, 0})) == -1);
    const DelPezzoContext ctx(4);
    for (Coeff a = 0; a < 5; ++a) {
        const DivisorClass x(a, {1, 0, 2, 1, 0});
        CHECK(generalized_point_condition(x) == anticanonical_half_degree(x) - 1);
    }
}
