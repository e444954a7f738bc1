#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "setopt/bench.hpp"
#include "setopt/dimacs.hpp"

namespace {

constexpr const char* kVersion = "setopt 1.0.0";

void print_trace(const setopt::EnumerationTrace& trace) {
    for (const auto& it : trace.iterations) {
        std::cerr << "c iteration " << it.iteration << " optimum " << it.optimum << " batch "
                  << it.batch_size << " cumulative " << it.cumulative << " elapsed "
                  << it.elapsed_sec << "s\n";
    }
    std::cerr << "c oracle calls " << trace.oracle_calls << "\n";
}

int run_solve(const std::string& problem, const std::string& file, bool trace, uint64_t seed,
              std::optional<size_t> max_solutions) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open " << file << "\n";
        return 1;
    }
    setopt::ArgumentationFramework af = setopt::parse_apx(in);

    if (problem == "SE-GR") {
        std::cout << setopt::format_extension(setopt::grounded_extension(af)) << "\n";
        return 0;
    }

    setopt::EnumerationConfig cfg;
    cfg.seed = seed;
    cfg.max_solutions = max_solutions;
    setopt::PreferredResult res = setopt::enumerate_preferred(af, cfg);
    if (trace)
        print_trace(res.trace);
    if (problem == "EE-PR") {
        std::cout << setopt::format_extension_list(res.extensions) << "\n";
    } else {  // SE-PR: the first extension the enumeration emits
        if (res.extensions.empty())
            std::cout << "NO\n";
        else
            std::cout << setopt::format_extension(res.extensions.front()) << "\n";
    }
    return 0;
}

int run_optimize(const std::string& mode, const std::string& cnf_path,
                 const std::string& relevant_path, bool trace, uint64_t seed,
                 std::optional<size_t> max_solutions) {
    std::ifstream cnf_in(cnf_path);
    if (!cnf_in) {
        std::cerr << "error: cannot open " << cnf_path << "\n";
        return 1;
    }
    setopt::ClauseSet k = setopt::read_dimacs(cnf_in);
    std::ifstream rel_in(relevant_path);
    if (!rel_in) {
        std::cerr << "error: cannot open " << relevant_path << "\n";
        return 1;
    }
    setopt::RelevantSet r = setopt::read_relevant_set(rel_in, k.universe());

    if (mode == "setmax" || mode == "setmin") {
        setopt::EnumerationConfig cfg;
        cfg.direction =
            mode == "setmax" ? setopt::Direction::Maximize : setopt::Direction::Minimize;
        cfg.seed = seed;
        cfg.max_solutions = max_solutions;
        auto res = setopt::enumerate_setopt(k, r, cfg);
        if (trace)
            print_trace(res.trace);
        for (const auto& p : res.restrictions)
            std::cout << setopt::format_restriction(p, k.universe()) << "\n";
        return 0;
    }

    setopt::Solver s(seed);
    setopt::load_clause_set(s, k);
    auto batch = mode == "cardmax" ? setopt::cardmax(s, r) : setopt::cardmin(s, r);
    if (!batch)
        return 0;  // UNSAT: nothing to print
    auto restrictions = batch->restrictions;
    std::sort(restrictions.begin(), restrictions.end());
    if (trace)
        std::cerr << "c optimum " << batch->optimum << " batch " << restrictions.size() << "\n";
    for (const auto& p : restrictions)
        std::cout << setopt::format_restriction(p, k.universe()) << "\n";
    return 0;
}

int run_bench(const std::string& dir, double cutoff, int jobs, const std::string& report_path,
              bool verify, std::optional<size_t> batch_limit, uint64_t seed) {
    setopt::SuiteOptions opts;
    opts.cutoff_sec = cutoff;
    opts.jobs = jobs;
    opts.verify = verify;
    std::vector<setopt::SystemConfig> systems{{"setopt", batch_limit, seed}};
    auto records = setopt::run_suite(dir, systems, opts);
    auto report = setopt::ipc_score(records, cutoff);
    setopt::print_score_table(report, std::cout);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write " << report_path << "\n";
            return 1;
        }
        setopt::write_records_jsonl(records, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subset-optimal solution enumeration via iterated cardinality optimization"};
    app.set_version_flag("--version", kVersion);
    bool list_problems = false;
    app.add_flag("--problems", list_problems, "List supported problems and exit");

    uint64_t seed = 0;
    bool trace = false;
    std::optional<size_t> max_solutions;

    auto* solve = app.add_subcommand("solve", "Solve an argumentation problem on an apx file");
    std::string problem, apx_file, fo = "apx";
    solve->add_option("--p", problem, "Problem: EE-PR, SE-PR or SE-GR")->required();
    solve->add_option("--f", apx_file, "Input file")->required();
    solve->add_option("--fo", fo, "Input format (apx)");
    solve->add_flag("--trace", trace, "Dump the enumeration trace to stderr");
    solve->add_option("--seed", seed, "Random seed");
    solve->add_option("--max-solutions", max_solutions, "Abort after this many solutions");

    auto* optimize = app.add_subcommand("optimize", "Set/cardinality optimization on DIMACS CNF");
    std::string mode, cnf_path, relevant_path;
    optimize->add_option("--mode", mode, "setmax, setmin, cardmax or cardmin")->required();
    optimize->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
    optimize->add_option("--relevant", relevant_path, "Relevant-set file")->required();
    optimize->add_flag("--trace", trace, "Dump the enumeration trace to stderr");
    optimize->add_option("--seed", seed, "Random seed");
    optimize->add_option("--max-solutions", max_solutions, "Abort after this many solutions");

    auto* bench = app.add_subcommand("bench", "Run the benchmark harness on a directory");
    std::string dir, report_path;
    double cutoff = 900.0;
    int jobs = 1;
    bool verify = false;
    std::optional<size_t> batch_limit;
    bench->add_option("--dir", dir, "Directory of .apx instances")->required();
    bench->add_option("--cutoff", cutoff, "Wallclock cutoff in seconds (default 900)");
    bench->add_option("--jobs", jobs, "Parallel workers");
    bench->add_option("--report", report_path, "Write line-delimited JSON records here");
    bench->add_flag("--verify", verify, "Cross-check outputs against the exhaustive oracle");
    bench->add_option("--batch-limit", batch_limit, "Restrictions taken per oracle call");
    bench->add_option("--seed", seed, "Random seed");

    app.require_subcommand(0, 1);
    CLI11_PARSE(app, argc, argv);

    if (list_problems) {
        std::cout << "[EE-PR,SE-PR,SE-GR]\n";
        return 0;
    }
    try {
        if (solve->parsed()) {
            if (problem != "EE-PR" && problem != "SE-PR" && problem != "SE-GR") {
                std::cerr << "error: unsupported problem " << problem << "\n";
                return 1;
            }
            return run_solve(problem, apx_file, trace, seed, max_solutions);
        }
        if (optimize->parsed()) {
            if (mode != "setmax" && mode != "setmin" && mode != "cardmax" && mode != "cardmin") {
                std::cerr << "error: unsupported mode " << mode << "\n";
                return 1;
            }
            return run_optimize(mode, cnf_path, relevant_path, trace, seed, max_solutions);
        }
        if (bench->parsed())
            return run_bench(dir, cutoff, jobs, report_path, verify, batch_limit, seed);
        std::cout << app.help();
        return 1;
    } catch (const setopt::SolutionCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const setopt::TimeoutError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
