#pragma once

#include "setopt/core.hpp"

namespace setopt {

/// Which optimization criterion a restricted solution must satisfy.
enum class Criterion { SetMax, SetMin, CardMax, CardMin };

/// Exhaustive enumeration of sol(K) as sets of true atoms.
/// Test-only reference oracle; refuses universes larger than `cap`.
std::set<AtomSet> brute_force_solutions(const ClauseSet& k, int cap = 20);

/// The optimal restrictions {s|R : s in sol(K)} under `criterion`,
/// computed by exhaustive enumeration.
std::set<AtomSet> brute_force_setopt(const ClauseSet& k, const RelevantSet& r,
                                     Criterion criterion, int cap = 20);

/// Selects the optimal restrictions from an explicit solution-set family.
/// Exposed so tests can run the selection step on hand-built sol(K).
std::set<AtomSet> select_optimal_restrictions(const std::set<AtomSet>& solutions,
                                              const RelevantSet& r, Criterion criterion);

bool satisfies(const Clause& c, const AtomSet& true_atoms);
bool satisfies_all(const ClauseSet& k, const AtomSet& true_atoms);

}  // namespace setopt
