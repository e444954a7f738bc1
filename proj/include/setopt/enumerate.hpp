#pragma once

#include <functional>

#include "setopt/cardinality.hpp"

namespace setopt {

enum class Direction { Maximize, Minimize };

struct EnumerationConfig {
    Direction direction = Direction::Maximize;
    /// Take at most this many restrictions per oracle call (>= 1).
    std::optional<size_t> batch_limit;
    /// Hard cap on total emitted restrictions; exceeding it throws
    /// SolutionCapError.
    std::optional<size_t> max_solutions;
    /// Streaming sink, called for each restriction as it is found.
    std::function<void(const AtomSet&)> on_restriction;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    uint64_t seed = 0;
    bool trace_to_stderr = false;
};

struct IterationRecord {
    size_t iteration;
    int optimum;
    size_t batch_size;
    size_t cumulative;
    double elapsed_sec;
};

struct EnumerationTrace {
    std::vector<IterationRecord> iterations;
    size_t oracle_calls = 0;
};

struct EnumerationResult {
    std::vector<AtomSet> restrictions;  // emission order
    std::vector<AtomSet> witnesses;     // full solutions, one per restriction
    EnumerationTrace trace;
};

/// One clause per restriction p: the disjunction of R \ p. Excludes p and
/// every subset of it (restricted to R) from the model set. p = R yields the
/// empty clause.
std::vector<Clause> no_subset_clauses(const RelevantSet& r, const std::vector<AtomSet>& batch);

/// One clause per restriction p: the disjunction of negated members of p.
/// Excludes p and every superset. p = empty yields the empty clause.
std::vector<Clause> no_supset_clauses(const RelevantSet& r, const std::vector<AtomSet>& batch);

/// Iterated cardinality optimization: repeatedly take all cardinality-optimal
/// restrictions, emit them, and permanently block them together with their
/// subsets (maximize) or supersets (minimize) until the instance is
/// exhausted. Returns exactly the subset-optimal restrictions.
EnumerationResult enumerate_setopt(const ClauseSet& k, const RelevantSet& r,
                                   const EnumerationConfig& cfg = {});

}  // namespace setopt
