#pragma once

#include <map>
#include <utility>

#include "setopt/enumerate.hpp"

namespace setopt {

/// A finite directed attack graph over named arguments. Argument indices are
/// 0-based in declaration order.
struct ArgumentationFramework {
    std::vector<std::string> arguments;
    std::map<std::string, int> index;
    std::set<std::pair<int, int>> attacks;  // (attacker, target)

    int add_argument(const std::string& name);  // throws on duplicate
    void add_attack(int attacker, int target);
    std::vector<int> attackers_of(int arg) const;
    bool has_attack(int attacker, int target) const {
        return attacks.count({attacker, target}) > 0;
    }
    int size() const { return static_cast<int>(arguments.size()); }
};

/// Parses apx: facts `arg(<name>).` and `att(<name>,<name>).`, names matching
/// [A-Za-z0-9][A-Za-z0-9_]*, whitespace and blank lines tolerated. Duplicate
/// attacks are deduplicated; duplicate arg declarations and attacks on
/// undeclared arguments are errors (reported with a line number).
ArgumentationFramework parse_apx(std::istream& in);
ArgumentationFramework parse_apx(const std::string& text);

using Extension = std::set<std::string>;

/// CNF whose models, projected onto the in-atoms, are exactly the admissible
/// sets. Atom i+1 corresponds to argument index i; in_atoms is R = I(A).
struct AdmissibilityEncoding {
    ClauseSet clauses;
    RelevantSet in_atoms;
};

AdmissibilityEncoding encode_admissible(const ArgumentationFramework& af);

/// Least fixpoint of the characteristic function, iterated from the empty set.
Extension grounded_extension(const ArgumentationFramework& af);

/// Direct evaluation of conflict-freeness plus acceptability of every member.
bool is_admissible(const ArgumentationFramework& af, const std::set<int>& members);

/// All admissible sets by exhaustive subset enumeration (argument indices).
/// Reference oracle; refuses frameworks larger than `cap` arguments.
std::set<std::set<int>> brute_force_admissible(const ArgumentationFramework& af, int cap = 20);

std::set<std::set<int>> brute_force_preferred(const ArgumentationFramework& af, int cap = 20);

struct PreferredResult {
    std::vector<Extension> extensions;  // discovery order
    EnumerationTrace trace;
};

/// Preferred extensions: subset-maximal enumeration over the admissibility
/// encoding with R = in-atoms. Every emitted extension is re-verified
/// admissible by direct evaluation before it is returned.
PreferredResult enumerate_preferred(const ArgumentationFramework& af,
                                    const EnumerationConfig& cfg = {});

/// ICCMA-style bracket lists: "[a,c]" and "[[a,c],[b]]".
std::string format_extension(const Extension& e);
std::string format_extension_list(const std::vector<Extension>& es);

}  // namespace setopt
