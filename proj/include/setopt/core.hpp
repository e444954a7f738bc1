#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace setopt {

/// A set of atom indices (1-based), ordered.
using AtomSet = std::set<int>;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class UniverseMismatchError : public std::runtime_error {
public:
    explicit UniverseMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a brute-force oracle is asked for more than its variable cap.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when an enumeration exceeds its configured solution cap.
class SolutionCapError : public std::runtime_error {
public:
    explicit SolutionCapError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The atom vocabulary: unique names mapped to dense indices 1..n.
class VariableUniverse {
public:
    VariableUniverse() = default;

    /// Adds a fresh atom; returns its index. Throws on duplicate names.
    int add(const std::string& name);

    /// A universe of n atoms named "1".."n".
    static VariableUniverse numbered(int n);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int index) const;
    std::optional<int> index_of(const std::string& name) const;
    bool contains(int index) const { return index >= 1 && index <= size(); }

    bool operator==(const VariableUniverse& other) const { return names_ == other.names_; }

    /// True if this universe's atoms 1..size() agree with a prefix of `other`.
    bool is_prefix_of(const VariableUniverse& other) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

/// A disjunction of literals, canonicalized: sorted by |atom|, duplicates removed.
/// The empty clause is representable and denotes unsatisfiability.
class Clause {
public:
    /// Canonicalizes `literals`; returns nullopt if the clause is a tautology.
    static std::optional<Clause> make(std::vector<int> literals);

    static Clause empty() { return Clause({}); }

    const std::vector<int>& literals() const { return lits_; }
    bool is_empty() const { return lits_.empty(); }
    int max_atom() const;

    bool operator<(const Clause& other) const { return lits_ < other.lits_; }
    bool operator==(const Clause& other) const { return lits_ == other.lits_; }

private:
    explicit Clause(std::vector<int> lits) : lits_(std::move(lits)) {}
    std::vector<int> lits_;
};

struct Solution {
    AtomSet true_atoms;
};

struct RelevantSet {
    AtomSet atoms;
};

/// A knowledge base: a set of clauses over a variable universe.
/// Tautological clauses are dropped at insertion, duplicates are merged.
class ClauseSet {
public:
    explicit ClauseSet(VariableUniverse universe) : universe_(std::move(universe)) {}

    /// Adds a clause given as signed literals. Drops tautologies silently.
    /// Throws std::out_of_range if a literal's atom is outside the universe.
    void add(std::vector<int> literals);
    void add(const Clause& clause);

    const VariableUniverse& universe() const { return universe_; }
    const std::set<Clause>& clauses() const { return clauses_; }

private:
    VariableUniverse universe_;
    std::set<Clause> clauses_;
};

/// s|R = s.true_atoms ∩ r.atoms
AtomSet restrict_to(const Solution& s, const RelevantSet& r);
AtomSet restrict_to(const AtomSet& atoms, const RelevantSet& r);

/// Union of two clause sets over compatible universes (one universe must be a
/// prefix of the other). Throws UniverseMismatchError otherwise.
ClauseSet compose(const ClauseSet& k1, const ClauseSet& k2);

/// Prints atoms of `s` as space-separated names, sorted by index.
std::string format_restriction(const AtomSet& s, const VariableUniverse& universe);

}  // namespace setopt
