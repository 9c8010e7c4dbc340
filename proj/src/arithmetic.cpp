#include "rowland/arithmetic.hpp"

#include <algorithm>
#include <numeric>

namespace rowland {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::domain_error:        return "DOMAIN_ERROR";
        case Errc::overflow:            return "OVERFLOW";
        case Errc::not_prime:           return "NOT_PRIME";
        case Errc::not_prime_gcd:       return "NOT_PRIME_GCD";
        case Errc::seed_mismatch:       return "SEED_MISMATCH";
        case Errc::m_too_small:         return "M_TOO_SMALL";
        case Errc::invalid_anchor:      return "INVALID_ANCHOR";
        case Errc::no_leap:             return "NO_LEAP";
        case Errc::search_exhausted:    return "SEARCH_EXHAUSTED";
        case Errc::insufficient_range:  return "INSUFFICIENT_RANGE";
        case Errc::checkpoint_mismatch: return "CHECKPOINT_MISMATCH";
        case Errc::unsupported_family:  return "UNSUPPORTED_FAMILY";
        case Errc::io_error:            return "IO_ERROR";
    }
    return "UNKNOWN";
}

Nat gcd_nat(Nat a, Nat b) noexcept {
    return std::gcd(a, b);
}

namespace {

using u128 = __uint128_t;

inline Nat mulmod(Nat a, Nat b, Nat m) noexcept {
    return static_cast<Nat>(u128(a) * b % m);
}

Nat powmod(Nat base, Nat exp, Nat mod) noexcept {
    Nat r = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

// One Miller-Rabin round; n odd, n > 2, d*2^s = n-1 with d odd.
bool mr_witness(Nat n, Nat d, int s, Nat a) noexcept {
    Nat x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(Nat n) noexcept {
    if (n < 2) return false;
    for (Nat p : {Nat(2), Nat(3), Nat(5), Nat(7), Nat(11), Nat(13), Nat(17),
                  Nat(19), Nat(23), Nat(29), Nat(31), Nat(37)}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    Nat d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sinclair's base set: deterministic for every n < 2^64.
    for (Nat a : {Nat(2), Nat(325), Nat(9375), Nat(28178), Nat(450775),
                  Nat(9780504), Nat(1795265022)}) {
        if (a % n == 0) continue;
        if (!mr_witness(n, d, s, a)) return false;
    }
    return true;
}

namespace {

constexpr Nat kTrialCutoff = 1u << 16;

// Brent's cycle variant of Pollard rho; n composite, odd, not a prime power
// of anything below the trial cutoff. Deterministic parameter schedule:
// c = 1, 2, 3, ... until a proper factor appears.
Nat rho_factor(Nat n) {
    for (Nat c = 1;; ++c) {
        Nat x = 2, d = 1;
        Nat saved_x = x;
        int power = 1, lam = 1;
        while (d == 1) {
            if (lam == power) {
                saved_x = x;
                power *= 2;
                lam = 0;
            }
            x = static_cast<Nat>((u128(x) * x + c) % n);
            ++lam;
            Nat diff = x > saved_x ? x - saved_x : saved_x - x;
            if (diff == 0) break; // cycle closed without factor; retry with next c
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(Nat n, std::vector<Nat>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    Nat d = rho_factor(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

} // namespace

std::vector<std::pair<Nat, int>> factorize(Nat n) {
    if (n < 2) raise(Errc::domain_error, "factorize requires n >= 2");
    std::vector<std::pair<Nat, int>> out;
    auto strip = [&](Nat p) {
        if (n % p != 0) return;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    strip(5);
    if (n == 1) return out;
    if (!is_prime(n)) {
        // wheel mod 30 over the remaining odd candidates
        static constexpr int inc[8] = {4, 2, 4, 2, 4, 6, 2, 6};
        Nat d = 7;
        int i = 0;
        while (d < kTrialCutoff && u128(d) * d <= n) {
            strip(d);
            d += inc[i];
            i = (i + 1) & 7;
            if (n == 1) return out;
            if (is_prime(n)) break;
        }
    }
    if (n > 1) {
        if (is_prime(n)) {
            out.emplace_back(n, 1);
        } else {
            std::vector<Nat> rest;
            factor_rec(n, rest);
            std::sort(rest.begin(), rest.end());
            for (size_t i = 0; i < rest.size();) {
                size_t j = i;
                while (j < rest.size() && rest[j] == rest[i]) ++j;
                out.emplace_back(rest[i], static_cast<int>(j - i));
                i = j;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Nat smallest_prime_factor(Nat n) {
    if (n < 2) raise(Errc::domain_error, "smallest_prime_factor requires n >= 2");
    if (n % 2 == 0) return 2;
    if (n % 3 == 0) return 3;
    if (n % 5 == 0) return 5;
    static constexpr int inc[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    Nat d = 7;
    int i = 0;
    while (d < kTrialCutoff && u128(d) * d <= n) {
        if (n % d == 0) return d;
        d += inc[i];
        i = (i + 1) & 7;
    }
    if (u128(kTrialCutoff) * kTrialCutoff > n || is_prime(n)) return n;
    return factorize(n).front().first;
}

Nat largest_prime_factor(Nat n) {
    if (n < 2) raise(Errc::domain_error, "largest_prime_factor requires n >= 2");
    return factorize(n).back().first;
}

PrimeOrOne PrimeOrOne::checked(Nat v) {
    if (v != 1 && !is_prime(v))
        raise(Errc::not_prime, "value " + std::to_string(v) + " is neither 1 nor prime");
    return PrimeOrOne{v};
}

PrimeOrOne s_value(Nat m, Nat n) {
    Nat g = gcd_nat(m, n);
    if (g <= 1) return PrimeOrOne{1}; // g==0 only for m==n==0
    return PrimeOrOne{largest_prime_factor(g)};
}

bool is_twin_upper(Nat p) noexcept {
    return p >= 4 && is_prime(p) && is_prime(p - 2);
}

} // namespace rowland
