#include "setopt/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace setopt {

int VariableUniverse::add(const std::string& name) {
    if (index_.count(name))
        throw std::invalid_argument("duplicate atom name: " + name);
    names_.push_back(name);
    int idx = static_cast<int>(names_.size());
    index_.emplace(name, idx);
    return idx;
}

VariableUniverse VariableUniverse::numbered(int n) {
    VariableUniverse u;
    for (int i = 1; i <= n; ++i)
        u.add(std::to_string(i));
    return u;
}

const std::string& VariableUniverse::name(int index) const {
    if (!contains(index))
        throw std::out_of_range("atom index out of range: " + std::to_string(index));
    return names_[static_cast<size_t>(index) - 1];
}

std::optional<int> VariableUniverse::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool VariableUniverse::is_prefix_of(const VariableUniverse& other) const {
    if (size() > other.size())
        return false;
    return std::equal(names_.begin(), names_.end(), other.names_.begin());
}

std::optional<Clause> Clause::make(std::vector<int> literals) {
    for (int lit : literals)
        if (lit == 0)
            throw std::invalid_argument("literal 0 is not allowed");
    std::sort(literals.begin(), literals.end(), [](int a, int b) {
        int aa = std::abs(a), ab = std::abs(b);
        return aa != ab ? aa < ab : a < b;
    });
    literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
    for (size_t i = 0; i + 1 < literals.size(); ++i)
        if (literals[i] == -literals[i + 1])
            return std::nullopt;  // tautology
    return Clause(std::move(literals));
}

int Clause::max_atom() const {
    int m = 0;
    for (int lit : lits_)
        m = std::max(m, std::abs(lit));
    return m;
}

void ClauseSet::add(std::vector<int> literals) {
    auto c = Clause::make(std::move(literals));
    if (!c)
        return;  // tautologies never constrain the solution set
    add(*c);
}

void ClauseSet::add(const Clause& clause) {
    if (clause.max_atom() > universe_.size())
        throw std::out_of_range("clause literal outside universe");
    clauses_.insert(clause);
}

AtomSet restrict_to(const Solution& s, const RelevantSet& r) {
    return restrict_to(s.true_atoms, r);
}

AtomSet restrict_to(const AtomSet& atoms, const RelevantSet& r) {
    AtomSet out;
    std::set_intersection(atoms.begin(), atoms.end(), r.atoms.begin(), r.atoms.end(),
                          std::inserter(out, out.begin()));
    return out;
}

ClauseSet compose(const ClauseSet& k1, const ClauseSet& k2) {
    const ClauseSet* big = &k1;
    const ClauseSet* small = &k2;
    if (big->universe().size() < small->universe().size())
        std::swap(big, small);
    if (!small->universe().is_prefix_of(big->universe()))
        throw UniverseMismatchError("incompatible knowledge bases: universes differ");
    ClauseSet out(big->universe());
    for (const auto& c : big->clauses())
        out.add(c);
    for (const auto& c : small->clauses())
        out.add(c);
    return out;
}

std::string format_restriction(const AtomSet& s, const VariableUniverse& universe) {
    std::string out;
    for (int a : s) {
        if (!out.empty())
            out += ' ';
        out += universe.name(a);
    }
    return out;
}

}  // namespace setopt
