#include "rowland/families.hpp"

namespace rowland {

const char* family_name(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::rowland_classic: return "rowland";
        case FamilyKind::three_n:         return "three-n";
        case FamilyKind::two_n:           return "two-n";
        case FamilyKind::parity_gcd_c:    return "parity-gcd-c";
        case FamilyKind::parity_gcd_l:    return "parity-gcd-l";
        case FamilyKind::parity_s_c:      return "parity-s-c";
        case FamilyKind::parity_s_l:      return "parity-s-l";
    }
    return "?";
}

bool family_from_name(const std::string& name, FamilyKind& out) noexcept {
    for (FamilyKind k : {FamilyKind::rowland_classic, FamilyKind::three_n,
                         FamilyKind::two_n, FamilyKind::parity_gcd_c,
                         FamilyKind::parity_gcd_l, FamilyKind::parity_s_c,
                         FamilyKind::parity_s_l}) {
        if (name == family_name(k)) {
            out = k;
            return true;
        }
    }
    return false;
}

namespace {

Nat validate_seed(Nat m, Nat t, Nat multiple, Nat m_min) {
    if (m < m_min)
        raise(Errc::m_too_small, "m = " + std::to_string(m) + " is below the bound m >= " +
                                     std::to_string(m_min));
    if (t < 1) raise(Errc::domain_error, "t must be >= 1");
    Nat p = gcd_nat(m, t);
    if (p == 1 || !is_prime(p))
        raise(Errc::not_prime_gcd, "gcd(" + std::to_string(m) + ", " + std::to_string(t) +
                                       ") = " + std::to_string(p) + " is not prime");
    if (checked_add(t, p) != checked_mul(multiple, m))
        raise(Errc::seed_mismatch, "t + p = " + std::to_string(t + p) + " != " +
                                       std::to_string(multiple) + "m = " +
                                       std::to_string(multiple * m));
    return p;
}

} // namespace

Nat validate_seed_3n(Nat m, Nat t) { return validate_seed(m, t, 3, 2); }
Nat validate_seed_2n(Nat m, Nat t) { return validate_seed(m, t, 2, 4); }

FamilySpec FamilySpec::rowland_classic() {
    return {FamilyKind::rowland_classic, 1, 7};
}

FamilySpec FamilySpec::three_n(Nat m, Nat t) {
    validate_seed_3n(m, t);
    return {FamilyKind::three_n, m - 1, t, m, t};
}

FamilySpec FamilySpec::two_n(Nat m, Nat t) {
    validate_seed_2n(m, t);
    return {FamilyKind::two_n, m - 1, t, m, t};
}

FamilySpec FamilySpec::parity(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::parity_gcd_c:
        case FamilyKind::parity_gcd_l:
        case FamilyKind::parity_s_c:
        case FamilyKind::parity_s_l:
            return {kind, 1, 2};
        default:
            raise(Errc::unsupported_family, "not a parity family");
    }
}

FamilySpec cp_family(Nat P) {
    if (!is_prime(P))
        raise(Errc::not_prime, "cp_family requires a prime, got " + std::to_string(P));
    return FamilySpec::three_n(P, checked_mul(2, P));
}

StepOutput step(const SequenceState& state, const FamilySpec& family) {
    Nat n = checked_add(state.n, 1);
    bool even = (n % 2 == 0);
    Nat arg;
    Nat delta;
    switch (family.kind) {
        case FamilyKind::rowland_classic:
        case FamilyKind::three_n:
        case FamilyKind::two_n:
            arg = n;
            delta = gcd_nat(arg, state.value);
            break;
        case FamilyKind::parity_gcd_c:
            arg = even ? n : n - 2;
            delta = gcd_nat(arg, state.value);
            break;
        case FamilyKind::parity_gcd_l:
            arg = even ? n - 2 : n;
            delta = gcd_nat(arg, state.value);
            break;
        case FamilyKind::parity_s_c:
            arg = even ? n : n - 2;
            delta = s_value(arg, state.value).value;
            break;
        case FamilyKind::parity_s_l:
            arg = even ? n - 2 : n;
            delta = s_value(arg, state.value).value;
            break;
        default:
            raise(Errc::unsupported_family, "unknown family kind");
    }
    try {
        return {n, checked_add(state.value, delta), delta, arg};
    } catch (const Error&) {
        raise(Errc::overflow, "value overflows the 64-bit engine at n = " + std::to_string(n));
    }
}

std::vector<StepOutput> generate(const FamilySpec& family, Nat n_max) {
    if (n_max <= family.start_index)
        raise(Errc::domain_error, "n_max must exceed the family's start index");
    std::vector<StepOutput> out;
    out.reserve(n_max - family.start_index);
    for_each_step(family, n_max, [&](const StepOutput& s) { out.push_back(s); });
    return out;
}

} // namespace rowland
