#pragma once

// Accelerated evaluation for the theorem families. From an anchor state
// c(n1) = 3*n1 the sequence grows by exactly 1 per step until the next
// index sharing a factor with 2*n1 - 1, because during the run
// c(n-1) = 2*n1 + n - 1 ≡ 2*n1 - 1 (mod n). The whole run is skipped in
// one move. The TWO_N analogue uses c(n1) = 2*n1 and n1 - 1.

#include <vector>

#include "rowland/families.hpp"

namespace rowland {

struct Anchor {
    Nat n1;
    Nat value;
};

// Validating constructors: value must equal 3*n1 (resp. 2*n1), n1 >= 2.
Anchor make_anchor_3n(Nat n1, Nat value);
Anchor make_anchor_2n(Nat n1, Nat value);

struct LeapStep {
    Anchor from;
    Anchor to;
    Nat h;            // the nontrivial delta at to.n1; prime
    Nat ones_skipped; // count of delta-1 steps between the anchors
};

// n2 = min{n > n1 : gcd(n, 2*n1 - 1) > 1} via the prime divisors of
// 2*n1 - 1; h = gcd(n2, 2*n1 - 1). The landing value is computed from the
// run algebra and re-validated as an anchor.
LeapStep leap_step_3n(const Anchor& anchor);

// Same with modulus n1 - 1 and landing value 2*n2. Raises Errc::no_leap
// when n1 - 1 = 1 (every later difference is 1; no nontrivial step exists).
LeapStep leap_step_2n(const Anchor& anchor);

struct NontrivialStep {
    Nat n;
    Nat h;

    bool operator==(const NontrivialStep&) const = default;
};

struct FastRunResult {
    std::vector<NontrivialStep> steps; // exactly the naive delta>1 subsequence
    SequenceState final_state;
    Nat leap_count = 0;   // leap moves taken
    Nat naive_steps = 0;  // bootstrap / fallback single steps taken
};

// Leap-capable: rowland_classic, three_n (3n anchors), two_n (2n anchors).
bool leap_capable(FamilyKind kind) noexcept;

// Steps naively until the first exact anchor (and after any NO_LEAP), then
// leaps run-to-run. Nontrivial steps and the final value match the naive
// evaluator exactly.
FastRunResult generate_fast(const FamilySpec& family, Nat n_max);

} // namespace rowland
