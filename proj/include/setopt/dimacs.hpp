#pragma once

#include <istream>
#include <ostream>

#include "setopt/core.hpp"

namespace setopt {

/// Reads DIMACS CNF: header `p cnf <n_vars> <n_clauses>`, clauses terminated
/// by 0, comment lines starting with `c`. A comment of the form
/// `c var <index> <name>` names an atom; unnamed atoms default to their index.
ClauseSet read_dimacs(std::istream& in);

/// Writes canonical DIMACS; non-default atom names go out as `c var i name`.
void write_dimacs(const ClauseSet& k, std::ostream& out);

/// Relevant-set file: whitespace-separated positive atom indices, `c` comments.
RelevantSet read_relevant_set(std::istream& in, const VariableUniverse& universe);

void write_relevant_set(const RelevantSet& r, std::ostream& out);

}  // namespace setopt
