// Command-line surface: gen / verify / records / distinct / leap-bench.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid seed or config,
// 3 overflow, 4 verification violation, 5 search exhausted,
// 6 leap/naive equivalence mismatch.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "rowland/analysis.hpp"
#include "rowland/io.hpp"
#include "rowland/leap.hpp"

namespace {

using namespace rowland;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitViolation = 4;
constexpr int kExitExhausted = 5;
constexpr int kExitMismatch = 6;

int exit_code_for(const Error& err) {
    switch (err.code()) {
        case Errc::overflow:         return kExitOverflow;
        case Errc::search_exhausted: return kExitExhausted;
        case Errc::io_error:         return kExitIo;
        default:                     return kExitConfig;
    }
}

struct FamilyOptions {
    std::string name;
    Nat m = 0;
    Nat t = 0;
    Nat p = 0; // c_P shorthand for three-n

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", name, "family: rowland, three-n, two-n, parity-gcd-c, "
                                          "parity-gcd-l, parity-s-c, parity-s-l")
            ->required();
        cmd->add_option("--m", m, "seed m (three-n / two-n)");
        cmd->add_option("--t", t, "seed t (three-n / two-n)");
        cmd->add_option("--p", p, "prime P: three-n with m=P, t=2P");
    }

    FamilySpec build() const {
        FamilyKind kind;
        if (!family_from_name(name, kind))
            raise(Errc::unsupported_family, "unknown family '" + name + "'");
        switch (kind) {
            case FamilyKind::rowland_classic:
                return FamilySpec::rowland_classic();
            case FamilyKind::three_n:
                if (p != 0) return cp_family(p);
                return FamilySpec::three_n(m, t);
            case FamilyKind::two_n:
                return FamilySpec::two_n(m, t);
            default:
                return FamilySpec::parity(kind);
        }
    }
};

// stdout by default, file when --output was given
struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) raise(Errc::io_error, "cannot open output file " + path);
        stream = &file;
    }

    bool flush_ok() {
        stream->flush();
        return static_cast<bool>(*stream);
    }
};

int cmd_gen(const FamilyOptions& fam, Nat n_max, const std::string& format_name,
            const std::string& output_path, const std::string& checkpoint_path) {
    OutputFormat format;
    if (!format_from_name(format_name, format))
        raise(Errc::unsupported_family, "unknown format '" + format_name + "'");
    FamilySpec family = fam.build();

    SequenceState from{family.start_index, family.start_value};
    if (!checkpoint_path.empty()) {
        std::ifstream ck(checkpoint_path);
        if (ck) {
            std::string line;
            std::getline(ck, line);
            Checkpoint saved = checkpoint_from_jsonl(line);
            if (!(saved.family == family))
                raise(Errc::checkpoint_mismatch,
                      "checkpoint belongs to a different family/seed");
            from = saved.state;
        }
    }

    OutputTarget out;
    out.open(output_path);
    if (format == OutputFormat::csv) *out.stream << kStepCsvHeader << "\n";
    Generator gen(family, from);
    while (gen.state().n < n_max) *out.stream << step_line(gen.next(), format) << "\n";
    if (!out.flush_ok()) raise(Errc::io_error, "write failure");

    if (!checkpoint_path.empty()) {
        std::ofstream ck(checkpoint_path, std::ios::trunc);
        if (!ck) raise(Errc::io_error, "cannot write checkpoint " + checkpoint_path);
        ck << checkpoint_to_jsonl({family, gen.state()}) << "\n";
        if (!ck.flush()) raise(Errc::io_error, "checkpoint write failure");
    }
    return kExitOk;
}

int cmd_verify(const FamilyOptions& fam, Nat n_max) {
    VerificationReport report = verify_one_or_prime(fam.build(), n_max);
    std::cout << render(report);
    return report.first_violation ? kExitViolation : kExitOk;
}

int cmd_records(const FamilyOptions& fam, Nat n_max, Nat threshold,
                const std::string& format_name, const std::string& output_path) {
    OutputFormat format;
    if (!format_from_name(format_name, format))
        raise(Errc::unsupported_family, "unknown format '" + format_name + "'");
    auto recs = records(fam.build(), n_max, threshold);
    OutputTarget out;
    out.open(output_path);
    if (format == OutputFormat::csv) *out.stream << kRecordCsvHeader << "\n";
    Nat rank = 1;
    for (const auto& r : recs) *out.stream << record_line(r, format, rank++) << "\n";
    if (!out.flush_ok()) raise(Errc::io_error, "write failure");
    return kExitOk;
}

int cmd_distinct(Nat count, Nat n_probe) {
    auto primes = distinct_generator_primes(count, n_probe);
    for (std::size_t i = 0; i < primes.size(); ++i)
        std::cout << (i ? " " : "") << primes[i];
    std::cout << "\n";
    return kExitOk;
}

int cmd_leap_bench(const FamilyOptions& fam, Nat n_max) {
    FamilySpec family = fam.build();
    if (!leap_capable(family.kind))
        raise(Errc::unsupported_family,
              std::string(family_name(family.kind)) + " is not leap-capable");

    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    std::vector<NontrivialStep> naive_nontrivial;
    Nat naive_iterations = 0;
    SequenceState naive_final = for_each_step(family, n_max, [&](const StepOutput& s) {
        ++naive_iterations;
        if (s.delta > 1) naive_nontrivial.push_back({s.n, s.delta});
    });
    auto t1 = clock::now();
    FastRunResult fast = generate_fast(family, n_max);
    auto t2 = clock::now();

    Nat fast_iterations = fast.leap_count + fast.naive_steps;
    auto ms = [](auto d) {
        return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(d).count();
    };
    bool equal = naive_nontrivial == fast.steps && naive_final == fast.final_state;
    std::cout << "family: " << family_name(family.kind) << "\n"
              << "n-max: " << n_max << "\n"
              << "nontrivial-steps: " << fast.steps.size() << "\n"
              << "naive-iterations: " << naive_iterations << "\n"
              << "leap-iterations: " << fast_iterations << "\n"
              << "iteration-ratio: " << double(naive_iterations) / double(fast_iterations)
              << "\n"
              << "naive-ms: " << ms(t1 - t0) << "\n"
              << "leap-ms: " << ms(t2 - t1) << "\n"
              << "equivalence: " << (equal ? "OK" : "MISMATCH") << "\n";
    return equal ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime-generating recurrence toolkit"};
    app.require_subcommand(1);

    FamilyOptions gen_fam, verify_fam, records_fam, bench_fam;
    Nat gen_n_max = 0, verify_n_max = 0, records_n_max = 0, bench_n_max = 0;
    Nat threshold = 3, count = 7, n_probe = 100000;
    std::string gen_format = "csv", records_format = "csv";
    std::string gen_output, records_output, checkpoint_path;

    CLI::App* gen = app.add_subcommand("gen", "stream sequence terms");
    gen_fam.attach(gen);
    gen->add_option("--n-max", gen_n_max, "last index to emit")->required();
    gen->add_option("--format", gen_format, "csv, jsonl, or bfile");
    gen->add_option("--output", gen_output, "output file (default stdout)");
    gen->add_option("--checkpoint", checkpoint_path,
                    "resume tuple file; read if present, written on completion");

    CLI::App* verify = app.add_subcommand("verify", "scan differences for 1-or-prime");
    verify_fam.attach(verify);
    verify->add_option("--n-max", verify_n_max, "last index to scan")->required();

    CLI::App* records_cmd = app.add_subcommand("records", "difference records with twin tags");
    records_fam.attach(records_cmd);
    records_cmd->add_option("--n-max", records_n_max, "last index to scan")->required();
    records_cmd->add_option("--threshold", threshold, "report records strictly above this");
    records_cmd->add_option("--format", records_format, "csv, jsonl, or bfile");
    records_cmd->add_option("--output", records_output, "output file (default stdout)");

    CLI::App* distinct = app.add_subcommand("distinct", "distinct-generator prime search");
    distinct->add_option("--count", count, "how many primes to produce")->required();
    distinct->add_option("--n-probe", n_probe, "candidate bound before giving up");

    CLI::App* bench = app.add_subcommand("leap-bench", "naive vs leap evaluator");
    bench_fam.attach(bench);
    bench->add_option("--n-max", bench_n_max, "last index to evaluate")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_fam, gen_n_max, gen_format, gen_output, checkpoint_path);
        if (verify->parsed()) return cmd_verify(verify_fam, verify_n_max);
        if (records_cmd->parsed())
            return cmd_records(records_fam, records_n_max, threshold, records_format,
                               records_output);
        if (distinct->parsed()) return cmd_distinct(count, n_probe);
        if (bench->parsed()) return cmd_leap_bench(bench_fam, bench_n_max);
    } catch (const Error& err) {
        std::cerr << "error [" << errc_name(err.code()) << "]: " << err.what() << "\n";
        return exit_code_for(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}
