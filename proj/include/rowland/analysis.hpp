#pragma once

// Consumers of generator streams: one-or-prime verification, difference
// records with twin-prime tagging, exact average step value, the
// distinct-generator prime search, and the records-coincidence check.

#include <optional>
#include <string>
#include <vector>

#include "rowland/families.hpp"

namespace rowland {

// Exact nonnegative rational; comparisons never go through floating point.
struct Rational {
    Nat num = 0;
    Nat den = 1;

    static Rational of(Nat num, Nat den); // reduces; den must be nonzero

    bool operator==(const Rational&) const = default;
    std::string str() const; // "8/5"
    double approx() const { return double(num) / double(den); }
};

bool operator<(const Rational& a, const Rational& b);

struct RecordEvent {
    Nat n;          // index where the record delta occurred
    Nat value;      // the record delta
    bool is_prime_value;
    bool is_twin_upper; // value and value-2 both prime
};

// What the source theorem/conjecture claims about this family's deltas.
enum class ClaimKind {
    theorem,    // rowland_classic, three_n, two_n (proven); parity_s_* (by
                // construction: s maps into P ∪ {1})
    conjecture, // parity_gcd_l (claimed, unproven)
    none,       // parity_gcd_c (no one-or-prime claim)
};

ClaimKind one_or_prime_claim(FamilyKind kind) noexcept;

// Fixed report wording; downstream tooling matches these strings.
inline constexpr const char* kTheoremVerified     = "theorem verified on range";
inline constexpr const char* kConjectureConsistent = "conjecture consistent with range";
inline constexpr const char* kNoClaim              = "no one-or-prime claim (informational)";
inline constexpr const char* kViolationFound       = "violation found";

struct VerificationReport {
    FamilySpec family;
    Nat n_scanned = 0;
    Nat ones_count = 0;
    Nat prime_steps_count = 0;
    std::optional<std::pair<Nat, Nat>> first_violation; // (n, delta)
    std::vector<RecordEvent> records;                   // threshold 3
    SequenceState final_state{};
    ClaimKind claim = ClaimKind::none;

    std::string status() const; // one of the fixed wordings above
};

// Scans every step up to n_max; exact counts, first non-(1 or prime) delta.
VerificationReport verify_one_or_prime(const FamilySpec& family, Nat n_max);

// Deltas strictly exceeding every earlier delta of the run, filtered to
// value > threshold, tagged with primality and twin status.
std::vector<RecordEvent> records(const FamilySpec& family, Nat n_max, Nat threshold = 3);

// Doubles n_max from n_start until min_count records (> threshold) exist;
// Errc::insufficient_range if n_cap is reached first. Returns the records
// and the n_max that sufficed.
std::pair<std::vector<RecordEvent>, Nat> records_at_least(
    const FamilySpec& family, std::size_t min_count, Nat n_cap,
    Nat threshold = 3, Nat n_start = 100000);

// (final value - start value) / n_max, exactly.
Rational average_delta(const FamilySpec& family, Nat n_max);

// P1=2; P_{k+1} = least prime P > P_k with c_{Pi}(P-1) != 2P for every
// accepted Pi. Candidates are probed up to n_probe; running out raises
// Errc::search_exhausted.
std::vector<Nat> distinct_generator_primes(Nat count, Nat n_probe);

// Alignment of the parity_gcd_c and parity_s_c record lists at the first
// occurrence of 313, per the coincidence remark.
struct CoincidenceReport {
    Nat n_max;
    std::vector<Nat> tail_gcd; // records of parity_gcd_c from 313 on
    std::vector<Nat> tail_s;   // records of parity_s_c from 313 on
    std::size_t compared;      // min of the two tail lengths
    bool tails_equal;          // over the compared prefix
    // 0-based offset of the first differing slot, with both values.
    std::optional<std::pair<std::size_t, std::pair<Nat, Nat>>> first_divergence;
};

CoincidenceReport coincidence_check(Nat n_max);

struct TwinConjectureReport {
    FamilySpec family;
    Nat n_scanned;
    std::vector<RecordEvent> records; // threshold 3
    bool all_twin_uppers;

    // "conjecture consistent with range" or "violation found"; never a
    // claim of proof.
    std::string status() const {
        return all_twin_uppers ? kConjectureConsistent : kViolationFound;
    }
};

// Twin-upper status of every record > 3 of one of the four parity families.
TwinConjectureReport twin_conjecture_report(const FamilySpec& family, Nat n_max);

// Structured-text rendering used by the CLI (stable key: value lines).
std::string render(const VerificationReport& report);
std::string render(const TwinConjectureReport& report);
std::string render(const CoincidenceReport& report);

} // namespace rowland
