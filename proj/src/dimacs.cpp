#include "setopt/dimacs.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

namespace setopt {

namespace {

bool parse_int(const std::string& tok, long& out) {
    if (tok.empty())
        return false;
    char* end = nullptr;
    out = std::strtol(tok.c_str(), &end, 10);
    return end && *end == '\0';
}

}  // namespace

ClauseSet read_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n_vars = -1, n_clauses = -1;
    std::map<int, std::string> names;
    std::vector<std::vector<int>> raw_clauses;
    std::vector<int> current;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;  // blank line
        if (tok == "c") {
            std::string kw;
            if (ls >> kw && kw == "var") {
                long idx;
                std::string name, idx_tok;
                if (ls >> idx_tok >> name && parse_int(idx_tok, idx) && idx >= 1)
                    names[static_cast<int>(idx)] = name;
            }
            continue;
        }
        if (!tok.empty() && tok[0] == 'c')
            continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n_vars >> n_clauses) || fmt != "cnf" || n_vars < 0 || n_clauses < 0)
                throw ParseError("malformed problem line", lineno);
            continue;
        }
        if (n_vars < 0)
            throw ParseError("clause before problem line", lineno);
        // clause tokens; may span lines
        do {
            long lit;
            if (!parse_int(tok, lit))
                throw ParseError("bad literal '" + tok + "'", lineno);
            if (lit == 0) {
                raw_clauses.push_back(current);
                current.clear();
            } else {
                if (std::labs(lit) > n_vars)
                    throw ParseError("literal out of range: " + tok, lineno);
                current.push_back(static_cast<int>(lit));
            }
        } while (ls >> tok);
    }
    if (n_vars < 0)
        throw ParseError("missing problem line", lineno == 0 ? 1 : lineno);
    if (!current.empty())
        throw ParseError("unterminated clause at end of input", lineno);

    VariableUniverse universe;
    for (int i = 1; i <= n_vars; ++i) {
        auto it = names.find(i);
        universe.add(it != names.end() ? it->second : std::to_string(i));
    }
    ClauseSet k(universe);
    for (auto& c : raw_clauses)
        k.add(std::move(c));
    return k;
}

void write_dimacs(const ClauseSet& k, std::ostream& out) {
    const auto& u = k.universe();
    for (int i = 1; i <= u.size(); ++i)
        if (u.name(i) != std::to_string(i))
            out << "c var " << i << ' ' << u.name(i) << '\n';
    out << "p cnf " << u.size() << ' ' << k.clauses().size() << '\n';
    for (const auto& c : k.clauses()) {
        for (int lit : c.literals())
            out << lit << ' ';
        out << "0\n";
    }
}

RelevantSet read_relevant_set(std::istream& in, const VariableUniverse& universe) {
    RelevantSet r;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "c" || tok[0] == 'c') {
                break;  // rest of line is a comment
            }
            long idx;
            if (!parse_int(tok, idx) || idx < 1)
                throw ParseError("bad atom index '" + tok + "'", lineno);
            if (!universe.contains(static_cast<int>(idx)))
                throw ParseError("atom index outside universe: " + tok, lineno);
            r.atoms.insert(static_cast<int>(idx));
        }
    }
    return r;
}

void write_relevant_set(const RelevantSet& r, std::ostream& out) {
    bool first = true;
    for (int a : r.atoms) {
        if (!first)
            out << ' ';
        out << a;
        first = false;
    }
    out << '\n';
}

}  // namespace setopt
