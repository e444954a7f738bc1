#include "setopt/enumerate.hpp"

#include <algorithm>

namespace setopt {

std::vector<Clause> no_subset_clauses(const RelevantSet& r, const std::vector<AtomSet>& batch) {
    std::vector<Clause> out;
    out.reserve(batch.size());
    for (const auto& p : batch) {
        std::vector<int> lits;
        for (int a : r.atoms)
            if (!p.count(a))
                lits.push_back(a);
        out.push_back(*Clause::make(std::move(lits)));
    }
    return out;
}

std::vector<Clause> no_supset_clauses(const RelevantSet& r, const std::vector<AtomSet>& batch) {
    (void)r;
    std::vector<Clause> out;
    out.reserve(batch.size());
    for (const auto& p : batch) {
        std::vector<int> lits;
        for (int a : p)
            lits.push_back(-a);
        out.push_back(*Clause::make(std::move(lits)));
    }
    return out;
}

EnumerationResult enumerate_setopt(const ClauseSet& k, const RelevantSet& r,
                                   const EnumerationConfig& cfg) {
    if (cfg.batch_limit && *cfg.batch_limit < 1)
        throw std::invalid_argument("batch_limit must be >= 1");

    Solver solver(cfg.seed);
    solver.set_deadline(cfg.deadline);
    solver.set_trace(cfg.trace_to_stderr);
    load_clause_set(solver, k);

    const bool maximize = cfg.direction == Direction::Maximize;
    const int n_user = k.universe().size();

    EnumerationResult result;
    auto start = std::chrono::steady_clock::now();
    size_t iteration = 0;
    for (;;) {
        auto batch = maximize ? cardmax(solver, r, cfg.batch_limit)
                              : cardmin(solver, r, cfg.batch_limit);
        ++result.trace.oracle_calls;
        if (!batch)
            break;  // K_i exhausted

        // sort the batch lexicographically by atom index, witnesses alongside
        std::vector<size_t> order(batch->restrictions.size());
        for (size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return batch->restrictions[a] < batch->restrictions[b];
        });

        for (size_t i : order) {
            if (cfg.max_solutions && result.restrictions.size() >= *cfg.max_solutions)
                throw SolutionCapError("enumeration aborted: solution cap of " +
                                       std::to_string(*cfg.max_solutions) + " exceeded");
            AtomSet witness;
            for (int a : batch->witnesses[i])
                if (a <= n_user)
                    witness.insert(a);
            if (cfg.on_restriction)
                cfg.on_restriction(batch->restrictions[i]);
            result.restrictions.push_back(batch->restrictions[i]);
            result.witnesses.push_back(std::move(witness));
        }

        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        result.trace.iterations.push_back({iteration, batch->optimum, batch->restrictions.size(),
                                           result.restrictions.size(), elapsed});
        ++iteration;

        // blocking clauses are permanent, mirroring K_i := K_i ∘ NoSubset(...)
        auto blockers = maximize ? no_subset_clauses(r, batch->restrictions)
                                 : no_supset_clauses(r, batch->restrictions);
        for (const auto& c : blockers)
            solver.add_clause(c.literals());
    }
    return result;
}

}  // namespace setopt
