#include "rowland/leap.hpp"

#include <limits>

namespace rowland {

namespace {

Anchor make_anchor(Nat n1, Nat value, Nat multiple) {
    if (n1 < 2)
        raise(Errc::invalid_anchor, "anchor index must be >= 2");
    if (value != checked_mul(multiple, n1))
        raise(Errc::invalid_anchor, "value " + std::to_string(value) + " != " +
                                        std::to_string(multiple) + "*" + std::to_string(n1));
    return {n1, value};
}

// Smallest multiple of q strictly greater than n1.
Nat next_multiple(Nat q, Nat n1) {
    return checked_mul(q, n1 / q + 1);
}

// modulus = 2*n1-1 (THREE_N) or n1-1 (TWO_N); landing value from the run
// algebra: c(n2-1) = base + n2 - 1 with base = value - n1.
LeapStep leap_from(const Anchor& anchor, Nat modulus, Nat multiple) {
    Nat n2 = std::numeric_limits<Nat>::max();
    for (const auto& [q, _] : factorize(modulus)) {
        Nat cand = next_multiple(q, anchor.n1);
        if (cand < n2) n2 = cand;
    }
    Nat h = gcd_nat(n2, modulus);
    Nat base = anchor.value - anchor.n1;
    Nat landing = checked_add(checked_add(base, n2 - 1), h);
    LeapStep leap;
    leap.from = anchor;
    leap.to = make_anchor(n2, landing, multiple); // Lemma-1 restoration, checked
    leap.h = h;
    leap.ones_skipped = n2 - anchor.n1 - 1;
    return leap;
}

} // namespace

Anchor make_anchor_3n(Nat n1, Nat value) { return make_anchor(n1, value, 3); }
Anchor make_anchor_2n(Nat n1, Nat value) { return make_anchor(n1, value, 2); }

LeapStep leap_step_3n(const Anchor& anchor) {
    make_anchor_3n(anchor.n1, anchor.value);
    return leap_from(anchor, checked_mul(2, anchor.n1) - 1, 3);
}

LeapStep leap_step_2n(const Anchor& anchor) {
    make_anchor_2n(anchor.n1, anchor.value);
    if (anchor.n1 - 1 == 1)
        raise(Errc::no_leap, "n1 - 1 = 1: all further differences are 1");
    return leap_from(anchor, anchor.n1 - 1, 2);
}

bool leap_capable(FamilyKind kind) noexcept {
    return kind == FamilyKind::rowland_classic || kind == FamilyKind::three_n ||
           kind == FamilyKind::two_n;
}

FastRunResult generate_fast(const FamilySpec& family, Nat n_max) {
    if (!leap_capable(family.kind))
        raise(Errc::unsupported_family,
              std::string(family_name(family.kind)) + " has no proven run structure to leap");
    if (n_max <= family.start_index)
        raise(Errc::domain_error, "n_max must exceed the family's start index");

    const Nat multiple = (family.kind == FamilyKind::two_n) ? 2 : 3;
    FastRunResult result;
    SequenceState state{family.start_index, family.start_value};

    auto at_anchor = [&](const SequenceState& s) {
        return s.n >= 2 && s.value == checked_mul(multiple, s.n);
    };
    // TWO_N with n1 = 2 never produces another nontrivial step; leaping is
    // impossible and unnecessary.
    auto leapable_here = [&](const SequenceState& s) {
        return at_anchor(s) && !(multiple == 2 && s.n == 2);
    };

    while (state.n < n_max) {
        if (leapable_here(state)) {
            Anchor here{state.n, state.value};
            LeapStep leap = (multiple == 3) ? leap_step_3n(here) : leap_step_2n(here);
            if (leap.to.n1 > n_max) {
                // the run of 1's extends past n_max
                state = {n_max, checked_add(state.value, n_max - state.n)};
                break;
            }
            result.steps.push_back({leap.to.n1, leap.h});
            state = {leap.to.n1, leap.to.value};
            ++result.leap_count;
        } else {
            StepOutput out = step(state, family);
            if (out.delta > 1) result.steps.push_back({out.n, out.delta});
            state = {out.n, out.value};
            ++result.naive_steps;
        }
    }
    result.final_state = state;
    return result;
}

} // namespace rowland
