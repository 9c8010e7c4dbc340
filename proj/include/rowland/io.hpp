#pragma once

// Deterministic text formats: CSV, JSONL, and the OEIS b-file convention
// ("n value", one term per line, ascending n). All numbers are plain
// decimal, C locale, no separators.

#include <iosfwd>
#include <string>
#include <vector>

#include "rowland/analysis.hpp"
#include "rowland/families.hpp"

namespace rowland {

enum class OutputFormat { csv, jsonl, bfile };

bool format_from_name(const std::string& name, OutputFormat& out) noexcept;

inline constexpr const char* kStepCsvHeader = "n,value,delta,gcd_arg";
inline constexpr const char* kRecordCsvHeader = "n,value,is_prime_value,is_twin_upper";

std::string step_line(const StepOutput& step, OutputFormat format);
// rank is the 1-based position used by the b-file form.
std::string record_line(const RecordEvent& record, OutputFormat format, Nat rank);

// Resume tuple (kind, params, n, value) as a single JSONL record.
struct Checkpoint {
    FamilySpec family;
    SequenceState state;

    bool operator==(const Checkpoint&) const = default;
};

std::string checkpoint_to_jsonl(const Checkpoint& checkpoint);
Checkpoint checkpoint_from_jsonl(const std::string& line); // Errc::io_error on bad input

// (n, value) pairs from b-file text; blank lines and '#' comments skipped.
std::vector<std::pair<Nat, Nat>> parse_bfile(std::istream& in);

} // namespace rowland
