// Acceptance suite: runs every criterion and prints one pass/fail line each.
// argv[1] is the path to the CLI binary.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "setopt/af.hpp"
#include "setopt/bench.hpp"
#include "setopt/brute.hpp"
#include "setopt/dimacs.hpp"

using namespace setopt;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << "\n";
    if (!ok)
        ++failures;
}

std::string run_cli(const std::string& cmd) {
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return "<popen failed>";
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

ClauseSet random_clause_set(std::mt19937& rng) {
    int n = std::uniform_int_distribution<int>(2, 12)(rng);
    int m = std::uniform_int_distribution<int>(1, 40)(rng);
    ClauseSet k(VariableUniverse::numbered(n));
    for (int i = 0; i < m; ++i) {
        int len = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<int> lits;
        for (int j = 0; j < len; ++j) {
            int v = std::uniform_int_distribution<int>(1, n)(rng);
            lits.push_back(rng() % 2 ? v : -v);
        }
        k.add(std::move(lits));
    }
    return k;
}

RelevantSet random_relevant(std::mt19937& rng, int n) {
    RelevantSet r;
    for (int i = 1; i <= n; ++i)
        if (rng() % 2)
            r.atoms.insert(i);
    return r;
}

ArgumentationFramework random_af(std::mt19937& rng, int n, double p) {
    ArgumentationFramework af;
    for (int i = 0; i < n; ++i)
        af.add_argument("a" + std::to_string(i));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (coin(rng) < p)
                af.add_attack(i, j);
    return af;
}

std::set<std::set<int>> to_index_sets(const ArgumentationFramework& af,
                                      const std::vector<Extension>& es) {
    std::set<std::set<int>> out;
    for (const auto& e : es) {
        std::set<int> members;
        for (const auto& name : e)
            members.insert(af.index.at(name));
        out.insert(std::move(members));
    }
    return out;
}

bool trace_monotone(const EnumerationTrace& trace, bool maximize) {
    for (size_t i = 1; i < trace.iterations.size(); ++i) {
        int prev = trace.iterations[i - 1].optimum;
        int cur = trace.iterations[i].optimum;
        if (maximize ? cur >= prev : cur <= prev)
            return false;
    }
    return true;
}

uint64_t binomial(int n, int k) {
    uint64_t r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    std::string cli = argv[1];
    fs::path work = fs::temp_directory_path() / "setopt_acceptance";
    fs::create_directories(work);

    // fixture files shared by several criteria
    fs::path cnf1 = work / "example1.cnf";
    fs::path rel1 = work / "example1.rel";
    fs::path afm = work / "afm.apx";
    std::ofstream(cnf1) << "c var 1 a\nc var 2 b\nc var 3 c\n"
                           "p cnf 3 4\n2 3 0\n-1 2 0\n-2 -3 0\n-1 -3 0\n";
    std::ofstream(rel1) << "1 2 3\n";
    std::ofstream(afm) << "arg(a). arg(b). arg(c). att(c,b). att(b,a). att(a,b).\n";

    std::string setmax_cmd =
        cli + " optimize --mode setmax --cnf " + cnf1.string() + " --relevant " + rel1.string();
    std::string cardmax_cmd =
        cli + " optimize --mode cardmax --cnf " + cnf1.string() + " --relevant " + rel1.string();
    std::string eepr_cmd = cli + " solve --p EE-PR --f " + afm.string();
    std::string segr_cmd = cli + " solve --p SE-GR --f " + afm.string();

    // 1. exactness on the three-solution example
    {
        auto start = std::chrono::steady_clock::now();
        std::string setmax_out = run_cli(setmax_cmd);
        std::string cardmax_out = run_cli(cardmax_cmd);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = setmax_out == "a b\nc\n" && cardmax_out == "a b\n" && secs < 1.0;
        report(1, ok, "setmax {a b, c} and cardmax {a b} on the three-solution example");
    }

    // 2. exactness on the three-argument framework
    {
        auto start = std::chrono::steady_clock::now();
        std::string ee = run_cli(eepr_cmd);
        std::string gr = run_cli(segr_cmd);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = ee == "[[a,c]]\n" && gr == "[a,c]\n" && secs < 1.0;
        report(2, ok, "EE-PR [[a,c]] and SE-GR [a,c] on the three-argument framework");
    }

    // 3/4/5/6: random-instance oracle equivalence plus the properties
    // collected along the way
    auto suite_start = std::chrono::steady_clock::now();
    bool af_equal = true, cnf_equal = true, card_subset = true, traces_ok = true;
    bool batch_robust = true;

    std::vector<ArgumentationFramework> af_suite;
    {
        std::mt19937 rng(20160923);
        for (double p : {0.1, 0.3, 0.5})
            for (int t = 0; t < 170; ++t) {
                int n = std::uniform_int_distribution<int>(4, 12)(rng);
                af_suite.push_back(random_af(rng, n, p));
            }
    }
    for (const auto& af : af_suite) {
        auto res = enumerate_preferred(af);
        if (to_index_sets(af, res.extensions) != brute_force_preferred(af))
            af_equal = false;
        if (!trace_monotone(res.trace, true) ||
            res.trace.oracle_calls > res.extensions.size() + 1)
            traces_ok = false;

        std::set<std::set<int>> unlimited = to_index_sets(af, res.extensions);
        for (size_t limit : {size_t{1}, size_t{2}}) {
            EnumerationConfig cfg;
            cfg.batch_limit = limit;
            auto limited = enumerate_preferred(af, cfg);
            if (to_index_sets(af, limited.extensions) != unlimited)
                batch_robust = false;
        }
    }

    {
        std::mt19937 rng(1995);
        for (int t = 0; t < 500; ++t) {
            auto k = random_clause_set(rng);
            auto r = random_relevant(rng, k.universe().size());

            auto maxres = enumerate_setopt(k, r);
            std::set<AtomSet> setmax(maxres.restrictions.begin(), maxres.restrictions.end());
            if (setmax != brute_force_setopt(k, r, Criterion::SetMax))
                cnf_equal = false;
            if (!trace_monotone(maxres.trace, true) ||
                maxres.trace.oracle_calls > maxres.restrictions.size() + 1)
                traces_ok = false;

            EnumerationConfig min_cfg;
            min_cfg.direction = Direction::Minimize;
            auto minres = enumerate_setopt(k, r, min_cfg);
            std::set<AtomSet> setmin(minres.restrictions.begin(), minres.restrictions.end());
            if (setmin != brute_force_setopt(k, r, Criterion::SetMin))
                cnf_equal = false;
            if (!trace_monotone(minres.trace, false) ||
                minres.trace.oracle_calls > minres.restrictions.size() + 1)
                traces_ok = false;

            for (const auto& p : brute_force_setopt(k, r, Criterion::CardMax))
                if (!setmax.count(p))
                    card_subset = false;
            for (const auto& p : brute_force_setopt(k, r, Criterion::CardMin))
                if (!setmin.count(p))
                    card_subset = false;
        }
    }
    double suite_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();

    report(3, af_equal && cnf_equal && suite_secs < 300.0,
           "oracle equivalence on " + std::to_string(af_suite.size()) +
               " random frameworks and 500 random formulas (" + std::to_string(suite_secs) +
               "s)");
    report(4, card_subset, "cardinality optima contained in subset optima, zero violations");
    report(5, traces_ok, "strictly monotone per-iteration optima, oracle calls <= |result|+1");
    report(6, batch_robust, "batch limits 1 and 2 reproduce the unlimited extension sets");

    // 7. cardinality-encoding model counts
    {
        bool ok = true;
        for (int n = 3; n <= 10 && ok; ++n) {
            for (int k = 0; k <= n && ok; ++k) {
                Solver s;
                std::vector<int> inputs;
                for (int i = 0; i < n; ++i)
                    inputs.push_back(s.new_var());
                auto enc = encode_at_least(s, inputs, k);
                AtomSet proj(inputs.begin(), inputs.end());
                size_t got = s.enumerate_models(proj, {enc.activation}).size();
                uint64_t expected = 0;
                for (int i = k; i <= n; ++i)
                    expected += binomial(n, i);
                if (got != expected)
                    ok = false;
            }
        }
        report(7, ok, "at-least-k projected model counts match binomial tails, n in 3..10");
    }

    // 8. scoring formulas
    {
        auto mk = [](const std::string& sys, const std::string& inst, RunStatus st, double sec) {
            BenchRecord r;
            r.system = sys;
            r.instance = inst;
            r.status = st;
            r.seconds = sec;
            return r;
        };
        bool ok = true;
        auto half = ipc_score({mk("A", "i", RunStatus::Success, 3.0),
                               mk("B", "i", RunStatus::Success, 30.0)},
                              900.0);
        auto fail = ipc_score({mk("A", "i", RunStatus::Success, 3.0),
                               mk("B", "i", RunStatus::Crash, 1.0)},
                              900.0);
        auto sub = ipc_score({mk("A", "i", RunStatus::Success, 0.4),
                              mk("B", "i", RunStatus::Success, 0.01)},
                             900.0);
        for (const auto& s : half.systems)
            if (std::abs(s.ipc - (s.system == "A" ? 1.0 : 0.5)) > 1e-9)
                ok = false;
        for (const auto& s : fail.systems)
            if (std::abs(s.ipc - (s.system == "A" ? 1.0 : 0.0)) > 1e-9)
                ok = false;
        for (const auto& s : sub.systems)
            if (std::abs(s.ipc - 1.0) > 1e-9)
                ok = false;
        double p = par10({mk("A", "i1", RunStatus::Success, 10.0),
                          mk("A", "i2", RunStatus::Timeout, 900.0)},
                         900.0);
        if (std::abs(p - 4505.0) > 1e-9)
            ok = false;
        report(8, ok, "IPC and PAR10 closed forms exact to 1e-9");
    }

    // 9. scale smoke bound: 200 arguments, 2000 attacks
    {
        std::mt19937 rng(424242);
        ArgumentationFramework af;
        for (int i = 0; i < 200; ++i)
            af.add_argument("a" + std::to_string(i));
        std::uniform_int_distribution<int> pick(0, 199);
        while (af.attacks.size() < 2000)
            af.add_attack(pick(rng), pick(rng));

        fs::path big = work / "big.apx";
        {
            std::ofstream out(big);
            for (const auto& name : af.arguments)
                out << "arg(" << name << ").\n";
            for (const auto& [from, to] : af.attacks)
                out << "att(" << af.arguments[from] << "," << af.arguments[to] << ").\n";
        }
        auto start = std::chrono::steady_clock::now();
        std::string out = run_cli(cli + " solve --p EE-PR --f " + big.string());
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = !out.empty() && out.front() == '[' && secs < 900.0;
        report(9, ok, "EE-PR on 200 arguments / 2000 attacks in " + std::to_string(secs) + "s");
    }

    // 10. byte-identical reruns with a fixed seed
    {
        bool ok = true;
        std::ofstream(work / "rand.cnf") << [] {
            std::mt19937 rng(777);
            std::ostringstream cnf;
            cnf << "p cnf 10 30\n";
            for (int i = 0; i < 30; ++i) {
                for (int j = 0; j < 3; ++j) {
                    int v = std::uniform_int_distribution<int>(1, 10)(rng);
                    cnf << (rng() % 2 ? v : -v) << ' ';
                }
                cnf << "0\n";
            }
            return cnf.str();
        }();
        std::ofstream(work / "rand.rel") << "1 2 3 4 5 6 7\n";
        std::vector<std::string> cmds{
            setmax_cmd + " --seed 7", cardmax_cmd + " --seed 7", eepr_cmd + " --seed 7",
            segr_cmd,
            cli + " optimize --mode setmin --cnf " + (work / "rand.cnf").string() +
                " --relevant " + (work / "rand.rel").string() + " --seed 11"};
        for (const auto& cmd : cmds)
            if (run_cli(cmd) != run_cli(cmd))
                ok = false;
        report(10, ok, "identical invocations with identical seeds are byte-identical");
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
