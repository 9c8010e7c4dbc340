#pragma once

#include <stdexcept>
#include <string>

namespace rowland {

// Every failure mode the library can signal. The CLI maps these onto its
// documented exit codes; tests match on the code, not the message text.
enum class Errc {
    domain_error,       // argument outside an operation's domain (e.g. spf(1))
    overflow,           // 64-bit engine cannot represent the exact result
    not_prime,          // a value required to be prime is not
    not_prime_gcd,      // seed validation: gcd(m,t) is 1 or composite
    seed_mismatch,      // seed validation: t + p != 3m (or 2m)
    m_too_small,        // seed validation: m below the theorem's bound
    invalid_anchor,     // leap: state does not satisfy value == 3*n (or 2*n)
    no_leap,            // leap: degenerate anchor, no nontrivial step exists
    search_exhausted,   // distinct-generator search ran past its probe bound
    insufficient_range, // analysis needs a longer run to answer
    checkpoint_mismatch,// resume tuple does not match the requested family
    unsupported_family, // operation not defined for this family kind
    io_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace rowland
