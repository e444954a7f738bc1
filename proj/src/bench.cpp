#include "setopt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <new>
#include <ostream>
#include <thread>

#include "json.hpp"

namespace setopt {

const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::Success: return "success";
        case RunStatus::Timeout: return "timeout";
        case RunStatus::Crash: return "crash";
        case RunStatus::Memout: return "memout";
    }
    return "unknown";
}

namespace {

BenchRecord run_one(const std::filesystem::path& path, const SystemConfig& system,
                    const SuiteOptions& opts) {
    BenchRecord rec;
    rec.system = system.name;
    rec.instance = path.filename().string();

    auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    try {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open instance");
        ArgumentationFramework af = parse_apx(in);

        EnumerationConfig cfg;
        cfg.batch_limit = system.batch_limit;
        cfg.seed = system.seed;
        cfg.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(opts.cutoff_sec));
        PreferredResult res = enumerate_preferred(af, cfg);

        if (opts.verify && af.size() <= opts.verify_cap) {
            auto expected = brute_force_preferred(af, opts.verify_cap);
            std::set<std::set<int>> got;
            for (const auto& e : res.extensions) {
                std::set<int> members;
                for (const auto& name : e)
                    members.insert(af.index.at(name));
                got.insert(std::move(members));
            }
            if (got != expected) {
                rec.status = RunStatus::Crash;
                rec.seconds = elapsed();
                rec.note = "verification failed against exhaustive oracle";
                return rec;
            }
        }
        rec.status = RunStatus::Success;
        rec.seconds = std::min(elapsed(), opts.cutoff_sec);
        rec.solution_count = res.extensions.size();
    } catch (const TimeoutError&) {
        rec.status = RunStatus::Timeout;
        rec.seconds = opts.cutoff_sec;
    } catch (const std::bad_alloc&) {
        rec.status = RunStatus::Memout;
        rec.seconds = elapsed();
    } catch (const std::exception& e) {
        rec.status = RunStatus::Crash;
        rec.seconds = elapsed();
        rec.note = e.what();
    }
    return rec;
}

}  // namespace

std::vector<BenchRecord> run_suite(const std::filesystem::path& dir,
                                   const std::vector<SystemConfig>& systems,
                                   const SuiteOptions& opts) {
    std::vector<std::filesystem::path> instances;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".apx")
            instances.push_back(entry.path());
    std::sort(instances.begin(), instances.end());

    struct Task {
        const std::filesystem::path* path;
        const SystemConfig* system;
    };
    std::vector<Task> tasks;
    for (const auto& sys : systems)
        for (const auto& path : instances)
            tasks.push_back({&path, &sys});

    std::vector<BenchRecord> records(tasks.size());
    std::atomic<size_t> next{0};
    int jobs = std::max(1, opts.jobs);
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            records[i] = run_one(*tasks[i].path, *tasks[i].system, opts);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return records;
}

ScoreReport ipc_score(const std::vector<BenchRecord>& records, double cutoff_sec) {
    std::map<std::string, std::map<std::string, const BenchRecord*>> by_system;
    std::set<std::string> instances;
    for (const auto& rec : records) {
        by_system[rec.system][rec.instance] = &rec;
        instances.insert(rec.instance);
    }
    for (const auto& [sys, runs] : by_system)
        if (runs.size() != instances.size())
            throw std::invalid_argument("system '" + sys +
                                        "' does not cover the full instance set");

    ScoreReport report;
    report.total_instances = instances.size();

    for (const auto& inst : instances) {
        double best = -1.0;
        for (const auto& [sys, runs] : by_system) {
            const BenchRecord* r = runs.at(inst);
            if (r->status == RunStatus::Success && (best < 0 || r->seconds < best))
                best = r->seconds;
        }
        if (best >= 0) {
            report.best_time[inst] = best;  // raw best time, no clamping
            ++report.valid_instances;
        }
    }

    for (const auto& [sys, runs] : by_system) {
        SystemScore score;
        score.system = sys;
        size_t successes = 0;
        for (const auto& inst : instances) {
            const BenchRecord* r = runs.at(inst);
            if (r->status == RunStatus::Success)
                ++successes;
            auto it = report.best_time.find(inst);
            if (it == report.best_time.end())
                continue;  // no system solved it: not a valid test case
            if (r->status != RunStatus::Success)
                continue;  // failure scores 0
            if (r->seconds < 1.0)
                score.ipc += 1.0;
            else
                score.ipc += 1.0 / (1.0 + std::log10(r->seconds / it->second));
        }
        std::vector<BenchRecord> own;
        for (const auto& [inst, r] : runs)
            own.push_back(*r);
        score.par10 = par10(own, cutoff_sec);
        score.success_pct =
            instances.empty() ? 0.0 : 100.0 * static_cast<double>(successes) / instances.size();
        report.systems.push_back(std::move(score));
    }
    return report;
}

double par10(const std::vector<BenchRecord>& records, double cutoff_sec) {
    if (records.empty())
        throw std::invalid_argument("par10 requires a non-empty record set");
    double total = 0.0;
    for (const auto& r : records)
        total += r.status == RunStatus::Success ? r.seconds : 10.0 * cutoff_sec;
    return total / static_cast<double>(records.size());
}

void print_score_table(const ScoreReport& report, std::ostream& out) {
    out << "valid instances: " << report.valid_instances << " / " << report.total_instances
        << "\n";
    out << std::left << std::setw(20) << "system" << std::right << std::setw(12) << "IPC"
        << std::setw(12) << "% Success" << std::setw(12) << "PAR10" << "\n";
    for (const auto& s : report.systems) {
        out << std::left << std::setw(20) << s.system << std::right << std::fixed
            << std::setprecision(1) << std::setw(12) << s.ipc << std::setw(12) << s.success_pct
            << std::setw(12) << s.par10 << "\n";
    }
    out.unsetf(std::ios::fixed);
}

void write_records_jsonl(const std::vector<BenchRecord>& records, std::ostream& out) {
    for (const auto& r : records) {
        nlohmann::json j{{"system", r.system},
                         {"instance", r.instance},
                         {"status", to_string(r.status)},
                         {"seconds", r.seconds},
                         {"solution_count", r.solution_count}};
        if (!r.note.empty())
            j["note"] = r.note;
        out << j.dump() << '\n';
    }
}

}  // namespace setopt
