#include "rowland/analysis.hpp"

#include <sstream>

namespace rowland {

Rational Rational::of(Nat num, Nat den) {
    if (den == 0) raise(Errc::domain_error, "zero denominator");
    Nat g = gcd_nat(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
    using u128 = __uint128_t;
    return u128(a.num) * b.den < u128(b.num) * a.den;
}

ClaimKind one_or_prime_claim(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::rowland_classic:
        case FamilyKind::three_n:
        case FamilyKind::two_n:
        case FamilyKind::parity_s_c: // deltas are s-values, in P ∪ {1} by codomain
        case FamilyKind::parity_s_l:
            return ClaimKind::theorem;
        case FamilyKind::parity_gcd_l:
            return ClaimKind::conjecture;
        case FamilyKind::parity_gcd_c:
            return ClaimKind::none;
    }
    return ClaimKind::none;
}

std::string VerificationReport::status() const {
    if (first_violation) return kViolationFound;
    switch (claim) {
        case ClaimKind::theorem:    return kTheoremVerified;
        case ClaimKind::conjecture: return kConjectureConsistent;
        case ClaimKind::none:       return kNoClaim;
    }
    return kNoClaim;
}

namespace {

RecordEvent tag_record(Nat n, Nat delta) {
    bool prime = is_prime(delta);
    return {n, delta, prime, prime && delta >= 4 && is_prime(delta - 2)};
}

} // namespace

VerificationReport verify_one_or_prime(const FamilySpec& family, Nat n_max) {
    VerificationReport report;
    report.family = family;
    report.claim = one_or_prime_claim(family.kind);
    Nat record_max = 0;
    report.final_state = for_each_step(family, n_max, [&](const StepOutput& s) {
        if (s.delta == 1) {
            ++report.ones_count;
        } else if (is_prime(s.delta)) {
            ++report.prime_steps_count;
        } else if (!report.first_violation) {
            report.first_violation = {s.n, s.delta};
        }
        if (s.delta > record_max) {
            record_max = s.delta;
            if (s.delta > 3) report.records.push_back(tag_record(s.n, s.delta));
        }
    });
    report.n_scanned = n_max;
    return report;
}

std::vector<RecordEvent> records(const FamilySpec& family, Nat n_max, Nat threshold) {
    std::vector<RecordEvent> out;
    Nat record_max = 0;
    for_each_step(family, n_max, [&](const StepOutput& s) {
        if (s.delta > record_max) {
            record_max = s.delta;
            if (s.delta > threshold) out.push_back(tag_record(s.n, s.delta));
        }
    });
    return out;
}

std::pair<std::vector<RecordEvent>, Nat> records_at_least(
    const FamilySpec& family, std::size_t min_count, Nat n_cap, Nat threshold,
    Nat n_start) {
    for (Nat n_max = n_start;; n_max = checked_mul(n_max, 2)) {
        if (n_max > n_cap) n_max = n_cap;
        auto recs = records(family, n_max, threshold);
        if (recs.size() >= min_count) return {std::move(recs), n_max};
        if (n_max == n_cap)
            raise(Errc::insufficient_range,
                  "only " + std::to_string(recs.size()) + " records of " +
                      std::to_string(min_count) + " found by n_max = " + std::to_string(n_cap));
    }
}

Rational average_delta(const FamilySpec& family, Nat n_max) {
    if (n_max <= family.start_index)
        raise(Errc::domain_error, "n_max must exceed the family's start index");
    Generator gen(family);
    while (gen.state().n < n_max) gen.next();
    return Rational::of(gen.state().value - family.start_value, n_max);
}

std::vector<Nat> distinct_generator_primes(Nat count, Nat n_probe) {
    if (count < 1) raise(Errc::domain_error, "count must be >= 1");
    std::vector<Nat> accepted{2};
    // One live generator per accepted family; candidates ascend, so each
    // generator only ever moves forward (incremental, no recomputation).
    std::vector<Generator> gens;
    gens.emplace_back(cp_family(2));
    for (Nat p = 3; accepted.size() < count; p += 2) {
        if (p > n_probe)
            raise(Errc::search_exhausted,
                  "no qualifying prime below n_probe = " + std::to_string(n_probe));
        if (!is_prime(p)) continue;
        bool fresh = true;
        for (auto& gen : gens) {
            while (gen.state().n < p - 1) gen.next();
            if (gen.state().value == checked_mul(2, p)) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            accepted.push_back(p);
            gens.emplace_back(cp_family(p));
        }
    }
    return accepted;
}

CoincidenceReport coincidence_check(Nat n_max) {
    constexpr Nat kAlignValue = 313;
    auto recs_gcd = records(FamilySpec::parity(FamilyKind::parity_gcd_c), n_max, 3);
    auto recs_s = records(FamilySpec::parity(FamilyKind::parity_s_c), n_max, 3);
    auto tail_from = [&](const std::vector<RecordEvent>& recs) {
        std::vector<Nat> tail;
        bool found = false;
        for (const auto& r : recs) {
            if (r.value == kAlignValue) found = true;
            if (found) tail.push_back(r.value);
        }
        if (!found)
            raise(Errc::insufficient_range,
                  "record 313 not reached by n_max = " + std::to_string(n_max));
        return tail;
    };
    CoincidenceReport report;
    report.n_max = n_max;
    report.tail_gcd = tail_from(recs_gcd);
    report.tail_s = tail_from(recs_s);
    report.compared = std::min(report.tail_gcd.size(), report.tail_s.size());
    report.tails_equal = true;
    for (std::size_t i = 0; i < report.compared; ++i) {
        if (report.tail_gcd[i] != report.tail_s[i]) {
            report.tails_equal = false;
            report.first_divergence = {i, {report.tail_gcd[i], report.tail_s[i]}};
            break;
        }
    }
    return report;
}

TwinConjectureReport twin_conjecture_report(const FamilySpec& family, Nat n_max) {
    switch (family.kind) {
        case FamilyKind::parity_gcd_c:
        case FamilyKind::parity_gcd_l:
        case FamilyKind::parity_s_c:
        case FamilyKind::parity_s_l:
            break;
        default:
            raise(Errc::unsupported_family,
                  "twin_conjecture_report covers the parity families only");
    }
    TwinConjectureReport report{family, n_max, records(family, n_max, 3), true};
    for (const auto& r : report.records)
        if (!r.is_twin_upper) report.all_twin_uppers = false;
    return report;
}

std::string render(const VerificationReport& r) {
    std::ostringstream os;
    os << "family: " << family_name(r.family.kind) << "\n";
    if (r.family.kind == FamilyKind::three_n || r.family.kind == FamilyKind::two_n)
        os << "seed: m=" << r.family.m << " t=" << r.family.t << "\n";
    os << "n-scanned: " << r.n_scanned << "\n"
       << "ones: " << r.ones_count << "\n"
       << "prime-steps: " << r.prime_steps_count << "\n";
    if (r.first_violation) {
        os << "first-violation: n=" << r.first_violation->first
           << " delta=" << r.first_violation->second << "\n";
    } else {
        os << "first-violation: none\n";
    }
    os << "records>3:";
    for (const auto& rec : r.records) os << " " << rec.value;
    os << "\n"
       << "final: n=" << r.final_state.n << " value=" << r.final_state.value << "\n"
       << "status: " << r.status() << "\n";
    return os.str();
}

std::string render(const TwinConjectureReport& r) {
    std::ostringstream os;
    os << "family: " << family_name(r.family.kind) << "\n"
       << "n-scanned: " << r.n_scanned << "\n";
    for (const auto& rec : r.records) {
        os << "record: n=" << rec.n << " value=" << rec.value
           << " prime=" << (rec.is_prime_value ? "true" : "false")
           << " twin-upper=" << (rec.is_twin_upper ? "true" : "false") << "\n";
    }
    os << "all-twin-uppers: " << (r.all_twin_uppers ? "true" : "false") << "\n"
       << "status: " << r.status() << "\n";
    return os.str();
}

std::string render(const CoincidenceReport& r) {
    std::ostringstream os;
    os << "n-max: " << r.n_max << "\n";
    os << "tail-gcd:";
    for (Nat v : r.tail_gcd) os << " " << v;
    os << "\ntail-s:";
    for (Nat v : r.tail_s) os << " " << v;
    os << "\ncompared: " << r.compared << "\n"
       << "tails-equal: " << (r.tails_equal ? "true" : "false") << "\n";
    if (r.first_divergence) {
        os << "first-divergence: offset=" << r.first_divergence->first
           << " gcd-list=" << r.first_divergence->second.first
           << " s-list=" << r.first_divergence->second.second << "\n";
    }
    return os.str();
}

} // namespace rowland
