#pragma once

// Exact integer number theory on 64-bit naturals: gcd, deterministic
// primality, prime-factor extraction, the s(m,n) map into P ∪ {1}, and
// twin-prime predicates. Everything is a pure function; arithmetic either
// returns an exact result or throws Errc::overflow — never wraps.

#include <cstdint>
#include <vector>

#include "rowland/errors.hpp"

namespace rowland {

using Nat = std::uint64_t;

// -------- checked arithmetic (the 64-bit engine's overflow policy) --------

inline Nat checked_add(Nat a, Nat b) {
    Nat r;
    if (__builtin_add_overflow(a, b, &r))
        raise(Errc::overflow, "add overflows 64-bit engine");
    return r;
}

inline Nat checked_mul(Nat a, Nat b) {
    Nat r;
    if (__builtin_mul_overflow(a, b, &r))
        raise(Errc::overflow, "mul overflows 64-bit engine");
    return r;
}

// -------- core operations --------

// gcd with the 0 conventions: gcd(0,b)=b, gcd(a,0)=a, gcd(0,0)=0.
Nat gcd_nat(Nat a, Nat b) noexcept;

// Deterministic for the full u64 range (no probabilistic error).
bool is_prime(Nat n) noexcept;

// (prime, exponent) pairs in ascending prime order; n >= 2.
std::vector<std::pair<Nat, int>> factorize(Nat n);

Nat smallest_prime_factor(Nat n); // n >= 2, else Errc::domain_error
Nat largest_prime_factor(Nat n);  // n >= 2, else Errc::domain_error

// Value known to lie in P ∪ {1}; s_value constructs these.
struct PrimeOrOne {
    Nat value;

    // Validating factory for values of unknown provenance.
    static PrimeOrOne checked(Nat v);
};

// s(m,n) = 1 if gcd(m,n)=1, else the largest prime dividing gcd(m,n).
// Zero convention: gcd(0,n)=n, so s(0,n) = lpf(n) for n >= 2 and
// s(0,n) = 1 for n in {0,1}.
PrimeOrOne s_value(Nat m, Nat n);

// p and p-2 both prime (p is the greater member of a twin pair).
bool is_twin_upper(Nat p) noexcept;

} // namespace rowland
