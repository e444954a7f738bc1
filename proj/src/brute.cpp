#include "setopt/brute.hpp"

#include <algorithm>
#include <cstdlib>

namespace setopt {

bool satisfies(const Clause& c, const AtomSet& true_atoms) {
    for (int lit : c.literals()) {
        bool is_true = true_atoms.count(std::abs(lit)) > 0;
        if (lit > 0 ? is_true : !is_true)
            return true;
    }
    return false;
}

bool satisfies_all(const ClauseSet& k, const AtomSet& true_atoms) {
    for (const auto& c : k.clauses())
        if (!satisfies(c, true_atoms))
            return false;
    return true;
}

std::set<AtomSet> brute_force_solutions(const ClauseSet& k, int cap) {
    int n = k.universe().size();
    if (n > cap)
        throw CapExceededError("brute-force oracle refused: " + std::to_string(n) +
                               " variables exceeds cap " + std::to_string(cap));
    std::set<AtomSet> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        AtomSet atoms;
        for (int i = 0; i < n; ++i)
            if (mask & (uint64_t{1} << i))
                atoms.insert(i + 1);
        if (satisfies_all(k, atoms))
            out.insert(std::move(atoms));
    }
    return out;
}

std::set<AtomSet> select_optimal_restrictions(const std::set<AtomSet>& solutions,
                                              const RelevantSet& r, Criterion criterion) {
    std::set<AtomSet> restrictions;
    for (const auto& s : solutions)
        restrictions.insert(restrict_to(s, r));

    std::set<AtomSet> out;
    for (const auto& p : restrictions) {
        bool optimal = true;
        for (const auto& q : restrictions) {
            if (&q == &p)
                continue;
            switch (criterion) {
                case Criterion::SetMax:
                    if (q != p && std::includes(q.begin(), q.end(), p.begin(), p.end()))
                        optimal = false;
                    break;
                case Criterion::SetMin:
                    if (q != p && std::includes(p.begin(), p.end(), q.begin(), q.end()))
                        optimal = false;
                    break;
                case Criterion::CardMax:
                    if (q.size() > p.size())
                        optimal = false;
                    break;
                case Criterion::CardMin:
                    if (q.size() < p.size())
                        optimal = false;
                    break;
            }
            if (!optimal)
                break;
        }
        if (optimal)
            out.insert(p);
    }
    return out;
}

std::set<AtomSet> brute_force_setopt(const ClauseSet& k, const RelevantSet& r,
                                     Criterion criterion, int cap) {
    return select_optimal_restrictions(brute_force_solutions(k, cap), r, criterion);
}

}  // namespace setopt
