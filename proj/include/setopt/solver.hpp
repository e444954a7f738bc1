#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "setopt/core.hpp"

namespace setopt {

/// Thrown when a solve call runs past its wallclock deadline.
class TimeoutError : public std::runtime_error {
public:
    explicit TimeoutError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Status { Sat, Unsat };

struct SolveOutcome {
    Status status;
    /// All variables assigned true in the model (including auxiliaries);
    /// present iff status == Sat.
    AtomSet model;
};

struct ProjectedModel {
    AtomSet projection;  // model restricted to the projection set
    AtomSet model;       // full set of true variables
};

/// CDCL SAT solver: two-watched-literal propagation, activity-based branching
/// with phase saving, Luby restarts, incremental clause addition, assumptions
/// and activation-literal clause groups.
///
/// Variables are 1-based; literals are signed variable indices (DIMACS style).
/// The clause database only grows between solve calls; a SolverInstance is
/// single-threaded but may be moved between threads whole.
class Solver {
public:
    explicit Solver(uint64_t seed = 0);

    int new_var();
    void ensure_vars(int n);
    int num_vars() const { return static_cast<int>(assigns_.size()); }

    /// Adds a permanent clause. The empty clause makes the instance UNSAT.
    void add_clause(std::vector<int> literals);

    /// Allocates a fresh activation variable g for a retractable clause group:
    /// add clauses containing -g, activate by assuming g, retract with
    /// deactivate(g).
    int new_activation();
    void deactivate(int g) { add_clause({-g}); }

    SolveOutcome solve(const std::vector<int>& assumptions = {});

    /// All distinct projections of models onto `projection`, each blocked by a
    /// clause negating its full projection pattern. Blocking clauses carry a
    /// dedicated activation literal and are retracted before returning.
    std::vector<ProjectedModel> enumerate_models(const AtomSet& projection,
                                                 const std::vector<int>& assumptions = {},
                                                 std::optional<size_t> limit = {});

    void set_deadline(std::optional<std::chrono::steady_clock::time_point> d) { deadline_ = d; }
    void set_trace(bool on) { trace_ = on; }

    uint64_t conflicts() const { return conflicts_; }
    uint64_t propagations() const { return propagations_; }

private:
    struct ClauseRec {
        std::vector<int> lits;  // internal literal codes
        double act = 0.0;
        bool learned = false;
        bool deleted = false;
    };
    struct Watcher {
        int cref;
        int blocker;
    };
    static constexpr int kNoReason = -1;

    // internal literal code: var v (0-based) -> 2v positive, 2v+1 negative
    static int enc(int ext) { return 2 * (std::abs(ext) - 1) + (ext < 0 ? 1 : 0); }
    static int neg(int code) { return code ^ 1; }
    static int var_of(int code) { return code >> 1; }

    int8_t value(int code) const {
        int8_t v = assigns_[var_of(code)];
        return (code & 1) ? static_cast<int8_t>(-v) : v;
    }

    int decision_level() const { return static_cast<int>(trail_lim_.size()); }
    void new_decision_level() { trail_lim_.push_back(static_cast<int>(trail_.size())); }

    void enqueue(int code, int reason);
    int propagate();  // returns conflicting cref or kNoReason
    void analyze(int confl, std::vector<int>& learnt, int& bt_level);
    void cancel_until(int level);
    int pick_branch();  // returns lit code or -1 when all assigned

    int attach_clause(std::vector<int> lits, bool learned);
    void detach_clause(int cref);
    bool locked(int cref) const;
    void reduce_db();

    void bump_var(int var);
    void bump_clause(int cref);
    void decay_activities();

    // heap keyed by activity, ties by lowest variable index
    bool heap_less(int a, int b) const;
    void heap_insert(int var);
    void heap_update(int var);
    void heap_percolate_up(int i);
    void heap_percolate_down(int i);
    int heap_pop();

    void check_deadline();

    // -1 = continue search (restart budget exhausted), 0 = unsat, 1 = sat
    int search(uint64_t conflict_budget, const std::vector<int>& assumptions);

    std::vector<ClauseRec> clauses_;
    std::vector<int> learnts_;  // crefs of learned clauses
    std::vector<std::vector<Watcher>> watches_;
    std::vector<int8_t> assigns_;   // per var: 1 true, -1 false, 0 undef
    std::vector<int8_t> polarity_;  // saved phase (1 = last true)
    std::vector<double> activity_;
    std::vector<int> reason_;
    std::vector<int> level_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    std::vector<int8_t> seen_;
    std::vector<int> heap_;
    std::vector<int> heap_index_;
    size_t qhead_ = 0;
    bool ok_ = true;
    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;
    uint64_t conflicts_ = 0;
    uint64_t propagations_ = 0;
    uint64_t restarts_ = 0;
    uint64_t seed_state_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    bool trace_ = false;

    static constexpr double kVarDecay = 0.95;
    static constexpr double kClaDecay = 0.999;
    static constexpr uint64_t kRestartBase = 64;
    static constexpr size_t kMaxLearnts = 100000;
};

/// Loads every clause of `k` into a solver over at least universe-size vars.
void load_clause_set(Solver& s, const ClauseSet& k);

}  // namespace setopt
