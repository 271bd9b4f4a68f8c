#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcert/oracle.hpp"
#include "qcert/special.hpp"

using namespace qcert;
using namespace qcert::oracle;

TEST_CASE("small counts") {
    CHECK(enumerate_c(0) == 0);  // the empty partition has no smallest part
    CHECK(enumerate_c(1) == 1);  // the single blue 1
    CHECK(enumerate_c(2) == 2);  // blue 1 + red 1, blue 1 + blue 1
    for (unsigned long k = 1; k <= 4; ++k) CHECK(enumerate_c_k(k, 0) == 0);
    CHECK_THROWS_AS(enumerate_c_k(0, 5), std::invalid_argument);
}

TEST_CASE("admissibility predicate") {
    using P = TwoColorPartition;
    CHECK_FALSE(admissible(P{}));
    CHECK(admissible(P{{{1, Color::blue}}}));
    CHECK_FALSE(admissible(P{{{1, Color::red}}}));            // smallest never blue
    CHECK_FALSE(admissible(P{{{2, Color::blue}}}));           // smallest even
    CHECK_FALSE(admissible(P{{{1, Color::blue}, {4, Color::blue}}}));  // blue even, limit
    CHECK(admissible(P{{{1, Color::blue}, {4, Color::red}}}));
    // red even parts must be distinct
    CHECK_FALSE(admissible(P{{{1, Color::blue}, {4, Color::red}, {4, Color::red}}}));
    // odd parts repeat freely
    CHECK(admissible(P{{{1, Color::blue}, {3, Color::red}, {3, Color::red}}}));

    // finite k: blue even parts allowed from smallest + 2k-1 up
    CHECK(admissible(P{{{1, Color::blue}, {2, Color::blue}}}, 1));      // 2 >= 1+1
    CHECK_FALSE(admissible(P{{{1, Color::blue}, {2, Color::blue}}}, 2));  // 2 < 1+3
    CHECK(admissible(P{{{1, Color::blue}, {4, Color::blue}}}, 2));
}

TEST_CASE("fast count equals fully explicit enumeration for tiny n") {
    for (unsigned long n = 0; n <= 12; ++n) {
        CHECK(enumerate_c(n) == enumerate_c_explicit(n, std::nullopt));
        for (unsigned long k = 1; k <= 3; ++k)
            CHECK(enumerate_c_k(k, n) == enumerate_c_explicit(n, k));
    }
}

TEST_CASE("oracle agrees with the generating function") {
    Series C = special::series_C_sum(41);
    for (unsigned long n = 0; n <= 40; ++n)
        CHECK(C.coeff(n) == enumerate_c(n));
}

TEST_CASE("finite-k oracle agrees with series_C_k") {
    for (unsigned long k = 1; k <= 3; ++k) {
        Series Ck = special::series_C_k(k, 31);
        for (unsigned long n = 0; n <= 30; ++n)
            CHECK(Ck.coeff(n) == enumerate_c_k(k, n));
    }
}

TEST_CASE("enumerate_c_k stabilizes to enumerate_c once 2k > n") {
    for (unsigned long n = 1; n <= 20; ++n) {
        const long limit = enumerate_c(n);
        for (unsigned long k = n / 2 + 1; k <= n / 2 + 3; ++k)
            CHECK(enumerate_c_k(k, n) == limit);
        // monotone stabilization: eventually constant in k
        long prev = enumerate_c_k(1, n);
        bool settled = false;
        for (unsigned long k = 2; k <= n + 2; ++k) {
            const long cur = enumerate_c_k(k, n);
            if (cur == limit && prev == limit) settled = true;
            prev = cur;
        }
        CHECK(settled);
    }
}

TEST_CASE("convolution check") {
    auto r = oracle::convolution_check(250);
    CHECK(r.passed);
    CHECK(r.prec == 250);
    // coefficient of q^0 is 0 on both sides, q^1 is a(0) s(0) = 1
    Series C = special::series_C_sum(3);
    CHECK(C.coeff(0) == 0);
    CHECK(C.coeff(1) == 1);
}
