#include "rowland/io.hpp"

#include <istream>
#include <sstream>

#include <json.hpp>

namespace rowland {

bool format_from_name(const std::string& name, OutputFormat& out) noexcept {
    if (name == "csv") {
        out = OutputFormat::csv;
    } else if (name == "jsonl") {
        out = OutputFormat::jsonl;
    } else if (name == "bfile") {
        out = OutputFormat::bfile;
    } else {
        return false;
    }
    return true;
}

std::string step_line(const StepOutput& s, OutputFormat format) {
    std::string out;
    switch (format) {
        case OutputFormat::csv:
            out = std::to_string(s.n) + "," + std::to_string(s.value) + "," +
                  std::to_string(s.delta) + "," + std::to_string(s.gcd_arg);
            break;
        case OutputFormat::jsonl:
            out = "{\"n\":" + std::to_string(s.n) + ",\"value\":" + std::to_string(s.value) +
                  ",\"delta\":" + std::to_string(s.delta) +
                  ",\"gcd_arg\":" + std::to_string(s.gcd_arg) + "}";
            break;
        case OutputFormat::bfile:
            out = std::to_string(s.n) + " " + std::to_string(s.value);
            break;
    }
    return out;
}

std::string record_line(const RecordEvent& r, OutputFormat format, Nat rank) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string out;
    switch (format) {
        case OutputFormat::csv:
            out = std::to_string(r.n) + "," + std::to_string(r.value) + "," +
                  b(r.is_prime_value) + "," + b(r.is_twin_upper);
            break;
        case OutputFormat::jsonl:
            out = "{\"n\":" + std::to_string(r.n) + ",\"value\":" + std::to_string(r.value) +
                  ",\"is_prime_value\":" + b(r.is_prime_value) +
                  ",\"is_twin_upper\":" + b(r.is_twin_upper) + "}";
            break;
        case OutputFormat::bfile:
            out = std::to_string(rank) + " " + std::to_string(r.value);
            break;
    }
    return out;
}

std::string checkpoint_to_jsonl(const Checkpoint& c) {
    std::string out = "{\"kind\":\"" + std::string(family_name(c.family.kind)) + "\"";
    if (c.family.kind == FamilyKind::three_n || c.family.kind == FamilyKind::two_n)
        out += ",\"m\":" + std::to_string(c.family.m) + ",\"t\":" + std::to_string(c.family.t);
    out += ",\"n\":" + std::to_string(c.state.n) +
           ",\"value\":" + std::to_string(c.state.value) + "}";
    return out;
}

Checkpoint checkpoint_from_jsonl(const std::string& line) {
    nlohmann::json doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("kind") ||
        !doc.contains("n") || !doc.contains("value"))
        raise(Errc::io_error, "malformed checkpoint record");
    FamilyKind kind;
    if (!family_from_name(doc["kind"].get<std::string>(), kind))
        raise(Errc::io_error, "unknown family kind in checkpoint");
    FamilySpec family;
    switch (kind) {
        case FamilyKind::rowland_classic:
            family = FamilySpec::rowland_classic();
            break;
        case FamilyKind::three_n:
        case FamilyKind::two_n:
            if (!doc.contains("m") || !doc.contains("t"))
                raise(Errc::io_error, "checkpoint missing seed params");
            family = (kind == FamilyKind::three_n)
                         ? FamilySpec::three_n(doc["m"].get<Nat>(), doc["t"].get<Nat>())
                         : FamilySpec::two_n(doc["m"].get<Nat>(), doc["t"].get<Nat>());
            break;
        default:
            family = FamilySpec::parity(kind);
            break;
    }
    SequenceState state{doc["n"].get<Nat>(), doc["value"].get<Nat>()};
    if (state.n < family.start_index)
        raise(Errc::io_error, "checkpoint index precedes the family's start");
    return {family, state};
}

std::vector<std::pair<Nat, Nat>> parse_bfile(std::istream& in) {
    std::vector<std::pair<Nat, Nat>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Nat n, value;
        if (!(ls >> n >> value))
            raise(Errc::io_error, "malformed b-file line: " + line);
        out.emplace_back(n, value);
    }
    return out;
}

} // namespace rowland
