#pragma once

#include <filesystem>
#include <iosfwd>

#include "setopt/af.hpp"

namespace setopt {

enum class RunStatus { Success, Timeout, Crash, Memout };

const char* to_string(RunStatus s);

struct BenchRecord {
    std::string system;
    std::string instance;
    RunStatus status = RunStatus::Crash;
    double seconds = 0.0;  // wallclock, parsing included
    size_t solution_count = 0;
    std::string note;  // crash reason, verification failure detail
};

/// One named solver configuration entered into the comparison.
struct SystemConfig {
    std::string name;
    std::optional<size_t> batch_limit;
    uint64_t seed = 0;
};

struct SuiteOptions {
    double cutoff_sec = 900.0;
    int jobs = 1;
    /// Cross-check outputs against the exhaustive oracle on instances with
    /// at most `verify_cap` arguments; larger instances get the per-output
    /// admissibility check only (always on).
    bool verify = false;
    int verify_cap = 12;
};

/// Runs every system on every *.apx file under `dir` (sorted by filename).
/// Unreadable or malformed instances become crash records; the run continues.
std::vector<BenchRecord> run_suite(const std::filesystem::path& dir,
                                   const std::vector<SystemConfig>& systems,
                                   const SuiteOptions& opts);

struct SystemScore {
    std::string system;
    double ipc = 0.0;
    double par10 = 0.0;
    double success_pct = 0.0;
};

struct ScoreReport {
    std::vector<SystemScore> systems;
    std::map<std::string, double> best_time;  // T* per valid instance
    size_t valid_instances = 0;
    size_t total_instances = 0;
};

/// Per instance: T* is the best successful raw time across systems; a system
/// scores 1/(1 + log10(T/T*)), clamped to 1 for sub-second runs, 0 on
/// failure. Instances where every system fails are skipped. Throws
/// std::invalid_argument if systems cover different instance sets.
ScoreReport ipc_score(const std::vector<BenchRecord>& records, double cutoff_sec);

/// Mean runtime over one system's records with failures counted as ten times
/// the cutoff. Throws std::invalid_argument on an empty record set.
double par10(const std::vector<BenchRecord>& records, double cutoff_sec);

void print_score_table(const ScoreReport& report, std::ostream& out);
void write_records_jsonl(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace setopt
