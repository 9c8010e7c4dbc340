#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rowland/arithmetic.hpp"

using namespace rowland;

namespace {

// trial-division reference, independent of the library's Miller-Rabin
bool prime_by_trial(Nat n) {
    if (n < 2) return false;
    for (Nat d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

TEST_CASE("gcd_nat basics and zero conventions") {
    CHECK(gcd_nat(12, 18) == 6);
    CHECK(gcd_nat(0, 2) == 2);
    CHECK(gcd_nat(2, 0) == 2);
    CHECK(gcd_nat(7, 7) == 7);
    CHECK(gcd_nat(0, 0) == 0);
    CHECK(gcd_nat(1, 999983) == 1);
}

TEST_CASE("gcd_nat divides both arguments and dominates common divisors") {
    std::mt19937_64 rng(0x9e3779b9);
    std::uniform_int_distribution<Nat> dist(0, 1000000);
    for (int i = 0; i < 2000; ++i) {
        Nat a = dist(rng), b = dist(rng);
        Nat g = gcd_nat(a, b);
        if (a == 0 && b == 0) {
            CHECK(g == 0);
            continue;
        }
        CHECK(a % g == 0);
        CHECK(b % g == 0);
        // any common divisor divides g
        for (Nat d = 1; d <= 50; ++d)
            if (a % d == 0 && b % d == 0) CHECK(g % d == 0);
    }
}

TEST_CASE("is_prime small values") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(4));
    CHECK(is_prime(22039)); // greater twin listed among the record values
    CHECK(is_prime(22037));
}

TEST_CASE("is_prime agrees with trial division below 1e5") {
    for (Nat n = 0; n < 100000; ++n) CHECK(is_prime(n) == prime_by_trial(n));
}

TEST_CASE("is_prime handles adversarial composites and large primes") {
    CHECK_FALSE(is_prime(341));        // 11*31, Fermat pseudoprime base 2
    CHECK_FALSE(is_prime(561));        // Carmichael
    CHECK_FALSE(is_prime(3215031751)); // strong pseudoprime to 2,3,5,7
    CHECK(is_prime((Nat(1) << 61) - 1));
    CHECK_FALSE(is_prime((Nat(1) << 61) + 1)); // 3*715827883*2147483647
    CHECK(is_prime(18446744073709551557ull));  // largest prime below 2^64
    CHECK_FALSE(is_prime(18446744073709551615ull));
}

TEST_CASE("factorize") {
    using F = std::vector<std::pair<Nat, int>>;
    CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(2) == F{{2, 1}});
    CHECK(factorize(9973) == F{{9973, 1}});
    CHECK(factorize(1000003ull * 1000033) == F{{1000003, 1}, {1000033, 1}});
    CHECK_THROWS_AS(factorize(1), Error);
    CHECK_THROWS_AS(factorize(0), Error);
}

TEST_CASE("smallest_prime_factor") {
    CHECK(smallest_prime_factor(15) == 3);
    CHECK(smallest_prime_factor(13) == 13);
    CHECK(smallest_prime_factor(7) == 7); // 2*4 - 1, the leap modulus at n1=4
    CHECK(smallest_prime_factor(4) == 2);
    CHECK(smallest_prime_factor(1000003ull * 1000033) == 1000003);
    CHECK_THROWS_AS(smallest_prime_factor(1), Error);
    try {
        smallest_prime_factor(0);
        FAIL("expected a domain error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::domain_error);
    }
}

TEST_CASE("largest_prime_factor") {
    CHECK(largest_prime_factor(6) == 3);
    CHECK(largest_prime_factor(8) == 2);
    CHECK(largest_prime_factor(12) == 3);
    CHECK(largest_prime_factor(5419) == 5419);
    CHECK(largest_prime_factor(1000003ull * 1000033) == 1000033);
    CHECK_THROWS_AS(largest_prime_factor(1), Error);
}

TEST_CASE("prime factor extraction is consistent on [2, 1e5]") {
    for (Nat n = 2; n <= 100000; ++n) {
        Nat lo = smallest_prime_factor(n);
        Nat hi = largest_prime_factor(n);
        CHECK(lo <= hi);
        CHECK(n % lo == 0);
        CHECK(n % hi == 0);
        CHECK(is_prime(lo));
        CHECK(is_prime(hi));
    }
}

TEST_CASE("s_value") {
    CHECK(s_value(5, 7).value == 1);
    CHECK(s_value(12, 18).value == 3);
    CHECK(s_value(2, 2).value == 2);
    SUBCASE("zero conventions") {
        CHECK(s_value(0, 2).value == 2);
        CHECK(s_value(0, 12).value == 3);
        CHECK(s_value(0, 1).value == 1);
        CHECK(s_value(0, 0).value == 1);
    }
}

TEST_CASE("s_value is symmetric and lands in P ∪ {1}") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<Nat> dist(1, 2000000);
    for (int i = 0; i < 2000; ++i) {
        Nat m = dist(rng), n = dist(rng);
        Nat s = s_value(m, n).value;
        CHECK(s == s_value(n, m).value);
        CHECK((s == 1 || is_prime(s)));
        if (s > 1) {
            CHECK(gcd_nat(m, n) % s == 0);
        }
    }
}

TEST_CASE("PrimeOrOne::checked") {
    CHECK(PrimeOrOne::checked(1).value == 1);
    CHECK(PrimeOrOne::checked(13).value == 13);
    try {
        PrimeOrOne::checked(21);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_prime);
    }
}

TEST_CASE("is_twin_upper") {
    CHECK(is_twin_upper(7));
    CHECK(is_twin_upper(13));
    CHECK_FALSE(is_twin_upper(23)); // 21 = 3*7
    CHECK(is_twin_upper(5));
    CHECK_FALSE(is_twin_upper(3)); // 1 is not prime
    CHECK_FALSE(is_twin_upper(2));
    CHECK_FALSE(is_twin_upper(9));
    CHECK(is_twin_upper(5419));
    CHECK_FALSE(is_twin_upper(5459)); // 53*103
}

TEST_CASE("checked arithmetic signals overflow instead of wrapping") {
    Nat big = ~Nat(0);
    CHECK(checked_add(big - 1, 1) == big);
    CHECK(checked_mul(Nat(1) << 32, (Nat(1) << 32) - 1) == ((Nat(1) << 32) - 1) << 32);
    try {
        checked_add(big, 1);
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::overflow);
    }
    CHECK_THROWS_AS(checked_mul(Nat(1) << 32, Nat(1) << 32), Error);
}
