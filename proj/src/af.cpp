#include "setopt/af.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace setopt {

int ArgumentationFramework::add_argument(const std::string& name) {
    if (index.count(name))
        throw std::invalid_argument("duplicate argument: " + name);
    arguments.push_back(name);
    int idx = size() - 1;
    index.emplace(name, idx);
    return idx;
}

void ArgumentationFramework::add_attack(int attacker, int target) {
    attacks.insert({attacker, target});
}

std::vector<int> ArgumentationFramework::attackers_of(int arg) const {
    std::vector<int> out;
    for (const auto& [from, to] : attacks)
        if (to == arg)
            out.push_back(from);
    return out;
}

namespace {

struct ApxScanner {
    std::istream& in;
    int line = 1;
    int ch = ' ';

    explicit ApxScanner(std::istream& s) : in(s) { advance(); }

    void advance() {
        ch = in.get();
        if (ch == '\n')
            ++line;
    }
    void skip_ws() {
        while (ch != EOF && std::isspace(ch))
            advance();
    }
    bool at_end() {
        skip_ws();
        return ch == EOF;
    }
    void expect(char c) {
        skip_ws();
        if (ch != c)
            throw ParseError(std::string("expected '") + c + "'", line);
        advance();
    }
    std::string name() {
        skip_ws();
        if (ch == EOF || !std::isalnum(ch))
            throw ParseError("expected argument name", line);
        std::string out;
        out.push_back(static_cast<char>(ch));
        advance();
        while (ch != EOF && (std::isalnum(ch) || ch == '_')) {
            out.push_back(static_cast<char>(ch));
            advance();
        }
        return out;
    }
};

}  // namespace

ArgumentationFramework parse_apx(std::istream& in) {
    ArgumentationFramework af;
    std::vector<std::tuple<std::string, std::string, int>> pending_attacks;
    ApxScanner sc(in);

    while (!sc.at_end()) {
        int fact_line = sc.line;
        std::string kw = sc.name();
        if (kw == "arg") {
            sc.expect('(');
            std::string a = sc.name();
            sc.expect(')');
            sc.expect('.');
            if (af.index.count(a))
                throw ParseError("duplicate arg declaration: " + a, fact_line);
            af.add_argument(a);
        } else if (kw == "att") {
            sc.expect('(');
            std::string a = sc.name();
            sc.expect(',');
            std::string b = sc.name();
            sc.expect(')');
            sc.expect('.');
            pending_attacks.emplace_back(a, b, fact_line);
        } else {
            throw ParseError("unknown fact '" + kw + "'", fact_line);
        }
    }
    for (const auto& [a, b, ln] : pending_attacks) {
        auto ia = af.index.find(a);
        auto ib = af.index.find(b);
        if (ia == af.index.end())
            throw ParseError("attack references undeclared argument: " + a, ln);
        if (ib == af.index.end())
            throw ParseError("attack references undeclared argument: " + b, ln);
        af.add_attack(ia->second, ib->second);
    }
    return af;
}

ArgumentationFramework parse_apx(const std::string& text) {
    std::istringstream in(text);
    return parse_apx(in);
}

AdmissibilityEncoding encode_admissible(const ArgumentationFramework& af) {
    VariableUniverse universe;
    for (const auto& name : af.arguments)
        universe.add(name);
    ClauseSet clauses(std::move(universe));
    RelevantSet in_atoms;
    for (int i = 1; i <= af.size(); ++i)
        in_atoms.atoms.insert(i);

    // conflict-freeness: no attack inside the set (self-attack collapses to
    // a unit; a <-> b defense clauses collapse to tautologies and vanish)
    for (const auto& [from, to] : af.attacks)
        clauses.add({-(from + 1), -(to + 1)});

    // defense: a member must have each of its attackers counter-attacked
    for (int a = 0; a < af.size(); ++a) {
        for (int b : af.attackers_of(a)) {
            std::vector<int> c{-(a + 1)};
            for (int d : af.attackers_of(b))
                c.push_back(d + 1);
            clauses.add(std::move(c));
        }
    }
    return {std::move(clauses), std::move(in_atoms)};
}

Extension grounded_extension(const ArgumentationFramework& af) {
    std::set<int> current;
    for (;;) {
        std::set<int> next;
        for (int a = 0; a < af.size(); ++a) {
            bool acceptable = true;
            for (int b : af.attackers_of(a)) {
                bool countered = false;
                for (int c : current) {
                    if (af.has_attack(c, b)) {
                        countered = true;
                        break;
                    }
                }
                if (!countered) {
                    acceptable = false;
                    break;
                }
            }
            if (acceptable)
                next.insert(a);
        }
        if (next == current)
            break;
        current = std::move(next);
    }
    Extension out;
    for (int a : current)
        out.insert(af.arguments[a]);
    return out;
}

bool is_admissible(const ArgumentationFramework& af, const std::set<int>& members) {
    for (int a : members)
        for (int b : members)
            if (af.has_attack(a, b))
                return false;
    for (int a : members) {
        for (int b : af.attackers_of(a)) {
            bool countered = false;
            for (int c : members) {
                if (af.has_attack(c, b)) {
                    countered = true;
                    break;
                }
            }
            if (!countered)
                return false;
        }
    }
    return true;
}

std::set<std::set<int>> brute_force_admissible(const ArgumentationFramework& af, int cap) {
    int n = af.size();
    if (n > cap)
        throw CapExceededError("admissibility oracle refused: " + std::to_string(n) +
                               " arguments exceeds cap " + std::to_string(cap));
    std::set<std::set<int>> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        std::set<int> members;
        for (int i = 0; i < n; ++i)
            if (mask & (uint64_t{1} << i))
                members.insert(i);
        if (is_admissible(af, members))
            out.insert(std::move(members));
    }
    return out;
}

std::set<std::set<int>> brute_force_preferred(const ArgumentationFramework& af, int cap) {
    auto admissible = brute_force_admissible(af, cap);
    std::set<std::set<int>> out;
    for (const auto& s : admissible) {
        bool maximal = true;
        for (const auto& t : admissible) {
            if (s != t && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.insert(s);
    }
    return out;
}

PreferredResult enumerate_preferred(const ArgumentationFramework& af,
                                    const EnumerationConfig& cfg) {
    AdmissibilityEncoding enc = encode_admissible(af);
    EnumerationConfig inner = cfg;
    inner.direction = Direction::Maximize;
    inner.on_restriction = nullptr;

    PreferredResult out;
    auto handle = [&](const AtomSet& restriction) {
        std::set<int> members;
        for (int atom : restriction)
            members.insert(atom - 1);
        if (!is_admissible(af, members))
            throw std::logic_error("internal error: emitted extension is not admissible");
        Extension e;
        for (int m : members)
            e.insert(af.arguments[m]);
        if (cfg.on_restriction)
            cfg.on_restriction(restriction);
        out.extensions.push_back(std::move(e));
    };
    inner.on_restriction = handle;

    EnumerationResult res = enumerate_setopt(enc.clauses, enc.in_atoms, inner);
    out.trace = std::move(res.trace);
    return out;
}

std::string format_extension(const Extension& e) {
    std::string out = "[";
    bool first = true;
    for (const auto& name : e) {
        if (!first)
            out += ',';
        out += name;
        first = false;
    }
    out += ']';
    return out;
}

std::string format_extension_list(const std::vector<Extension>& es) {
    std::string out = "[";
    for (size_t i = 0; i < es.size(); ++i) {
        if (i)
            out += ',';
        out += format_extension(es[i]);
    }
    out += ']';
    return out;
}

}  // namespace setopt
