#pragma once

// The recurrence families as uniform, deterministic, resumable generators.
// A FamilySpec is a closed value (kind + seed numbers, no callbacks), so a
// run is serializable and a resumed run equals an uninterrupted one.

#include <cstdint>
#include <string>
#include <vector>

#include "rowland/arithmetic.hpp"

namespace rowland {

enum class FamilyKind {
    rowland_classic, // a(1)=7,  a(n) = a(n-1) + gcd(n, a(n-1))
    three_n,         // seed c(m-1)=t with gcd(m,t)=p prime, t+p=3m
    two_n,           // seed c(m-1)=t with gcd(m,t)=p prime, t+p=2m, m>=4
    parity_gcd_c,    // c(1)=2, even n: gcd(n, .), odd n: gcd(n-2, .)
    parity_gcd_l,    // l(1)=2, odd n:  gcd(n, .), even n: gcd(n-2, .)
    parity_s_c,      // c(1)=2, even n: s(n, .),   odd n:  s(n-2, .)
    parity_s_l,      // l(1)=2, odd n:  s(n, .),   even n: s(n-2, .)
};

const char* family_name(FamilyKind kind) noexcept; // CLI spelling, e.g. "parity-gcd-c"
bool family_from_name(const std::string& name, FamilyKind& out) noexcept;

// Returns p = gcd(m,t) after checking p prime and t + p = 3m (m >= 2).
Nat validate_seed_3n(Nat m, Nat t);
// Same with t + p = 2m and m >= 4.
Nat validate_seed_2n(Nat m, Nat t);

struct FamilySpec {
    FamilyKind kind;
    Nat start_index;
    Nat start_value;
    Nat m = 0; // three_n / two_n only
    Nat t = 0;

    static FamilySpec rowland_classic();        // start a(1) = 7
    static FamilySpec three_n(Nat m, Nat t);    // validates the Theorem-2 seed
    static FamilySpec two_n(Nat m, Nat t);      // validates the Theorem-4 seed
    static FamilySpec parity(FamilyKind kind);  // the four parity kinds, start 2

    bool operator==(const FamilySpec&) const = default;
};

// THREE_N instance with m = P, t = 2P for prime P: c_P(P-1) = 2P and the
// first difference is P itself.
FamilySpec cp_family(Nat P);

struct SequenceState {
    Nat n;
    Nat value;

    bool operator==(const SequenceState&) const = default;
};

struct StepOutput {
    Nat n;       // index just produced
    Nat value;   // c(n)
    Nat delta;   // c(n) - c(n-1), always >= 1
    Nat gcd_arg; // first argument fed to gcd or s at this step (n or n-2)
};

// One step of the family's recurrence from an arbitrary reachable state.
StepOutput step(const SequenceState& state, const FamilySpec& family);

class Generator {
public:
    explicit Generator(const FamilySpec& family)
        : family_(family), state_{family.start_index, family.start_value} {}

    Generator(const FamilySpec& family, const SequenceState& resume_from)
        : family_(family), state_(resume_from) {}

    const FamilySpec& family() const noexcept { return family_; }
    const SequenceState& state() const noexcept { return state_; }

    StepOutput next() {
        StepOutput out = step(state_, family_);
        state_ = {out.n, out.value};
        return out;
    }

private:
    FamilySpec family_;
    SequenceState state_;
};

// Streams every step with index in (family.start_index, n_max], in order.
template <typename Fn>
SequenceState for_each_step(const FamilySpec& family, Nat n_max, Fn&& fn) {
    Generator gen(family);
    while (gen.state().n < n_max) fn(gen.next());
    return gen.state();
}

// Batch form of the stream; prefer for_each_step for long runs.
std::vector<StepOutput> generate(const FamilySpec& family, Nat n_max);

} // namespace rowland
