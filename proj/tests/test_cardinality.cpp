#include <random>

#include "doctest.h"
#include "setopt/brute.hpp"
#include "setopt/cardinality.hpp"

using namespace setopt;

namespace {

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    uint64_t r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

size_t count_at_least(int n, int k) {
    Solver s;
    std::vector<int> inputs;
    for (int i = 1; i <= n; ++i)
        inputs.push_back(s.new_var());
    auto enc = encode_at_least(s, inputs, k);
    AtomSet proj(inputs.begin(), inputs.end());
    return s.enumerate_models(proj, {enc.activation}).size();
}

ClauseSet random_clause_set(std::mt19937& rng, int max_vars, int max_clauses) {
    int n = std::uniform_int_distribution<int>(2, max_vars)(rng);
    int m = std::uniform_int_distribution<int>(1, max_clauses)(rng);
    ClauseSet k(VariableUniverse::numbered(n));
    for (int i = 0; i < m; ++i) {
        int len = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<int> lits;
        for (int j = 0; j < len; ++j) {
            int v = std::uniform_int_distribution<int>(1, n)(rng);
            lits.push_back(rng() % 2 ? v : -v);
        }
        k.add(std::move(lits));
    }
    return k;
}

}  // namespace

TEST_CASE("at-least-k admits exactly the binomial tail") {
    CHECK(count_at_least(3, 2) == 4);  // C(3,2)+C(3,3)
    CHECK(count_at_least(3, 0) == 8);  // vacuous
    CHECK(count_at_least(3, 3) == 1);  // all true
    for (int n = 3; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            uint64_t expected = 0;
            for (int i = k; i <= n; ++i)
                expected += binomial(n, i);
            CHECK(count_at_least(n, k) == expected);
        }
    }
}

TEST_CASE("at-least above the input count is unsatisfiable under activation") {
    Solver s;
    std::vector<int> inputs{s.new_var(), s.new_var()};
    auto enc = encode_at_least(s, inputs, 3);
    CHECK(s.solve({enc.activation}).status == Status::Unsat);
    CHECK(s.solve().status == Status::Sat);
}

TEST_CASE("at-most-k is the dual bound") {
    Solver s;
    std::vector<int> inputs;
    for (int i = 0; i < 4; ++i)
        inputs.push_back(s.new_var());
    auto enc = encode_at_most(s, inputs, 1);
    AtomSet proj(inputs.begin(), inputs.end());
    CHECK(s.enumerate_models(proj, {enc.activation}).size() == 5);  // C(4,0)+C(4,1)
}

TEST_CASE("cardmax on the running example") {
    // sol = {{a,b},{b},{c}}
    Solver s;
    for (auto c : std::vector<std::vector<int>>{{2, 3}, {-1, 2}, {-2, -3}, {-1, -3}})
        s.add_clause(std::move(c));
    auto batch = cardmax(s, RelevantSet{{1, 2, 3}});
    REQUIRE(batch.has_value());
    CHECK(batch->optimum == 2);
    REQUIRE(batch->restrictions.size() == 1);
    CHECK(batch->restrictions[0] == AtomSet{1, 2});

    auto mins = cardmin(s, RelevantSet{{1, 2, 3}});
    REQUIRE(mins.has_value());
    CHECK(mins->optimum == 1);
    std::set<AtomSet> got(mins->restrictions.begin(), mins->restrictions.end());
    CHECK(got == std::set<AtomSet>{{2}, {3}});
}

TEST_CASE("cardmin of an unconstrained atom is the empty restriction") {
    Solver s;
    s.ensure_vars(1);
    auto batch = cardmin(s, RelevantSet{{1}});
    REQUIRE(batch.has_value());
    CHECK(batch->optimum == 0);
    REQUIRE(batch->restrictions.size() == 1);
    CHECK(batch->restrictions[0].empty());
}

TEST_CASE("unsat instance yields no optimum") {
    Solver s;
    s.add_clause({1});
    s.add_clause({-1});
    CHECK_FALSE(cardmax(s, RelevantSet{{1}}).has_value());
    CHECK_FALSE(cardmin(s, RelevantSet{{1}}).has_value());
}

TEST_CASE("every witness attains the optimum") {
    std::mt19937 rng(41);
    for (int t = 0; t < 40; ++t) {
        auto k = random_clause_set(rng, 10, 25);
        RelevantSet r;
        for (int i = 1; i <= k.universe().size(); ++i)
            if (rng() % 2)
                r.atoms.insert(i);
        Solver s;
        load_clause_set(s, k);
        auto batch = cardmax(s, r);
        if (!batch)
            continue;
        for (size_t i = 0; i < batch->restrictions.size(); ++i) {
            CHECK(static_cast<int>(batch->restrictions[i].size()) == batch->optimum);
            CHECK(restrict_to(batch->witnesses[i], r) == batch->restrictions[i]);
        }
    }
}

TEST_CASE("oracle agrees with brute force") {
    std::mt19937 rng(43);
    for (int t = 0; t < 80; ++t) {
        auto k = random_clause_set(rng, 12, 30);
        RelevantSet r;
        for (int i = 1; i <= k.universe().size(); ++i)
            if (rng() % 2)
                r.atoms.insert(i);

        Solver s;
        load_clause_set(s, k);
        auto maxes = cardmax(s, r);
        auto expected_max = brute_force_setopt(k, r, Criterion::CardMax);
        if (!maxes) {
            CHECK(expected_max.empty());
            continue;
        }
        std::set<AtomSet> got(maxes->restrictions.begin(), maxes->restrictions.end());
        CHECK(got == expected_max);

        auto mins = cardmin(s, r);
        REQUIRE(mins.has_value());
        std::set<AtomSet> got_min(mins->restrictions.begin(), mins->restrictions.end());
        CHECK(got_min == brute_force_setopt(k, r, Criterion::CardMin));
    }
}

TEST_CASE("the oracle leaves the instance unchanged") {
    std::mt19937 rng(47);
    for (int t = 0; t < 20; ++t) {
        auto k = random_clause_set(rng, 8, 20);
        RelevantSet r;
        for (int i = 1; i <= k.universe().size(); ++i)
            if (rng() % 2)
                r.atoms.insert(i);
        AtomSet all;
        for (int i = 1; i <= k.universe().size(); ++i)
            all.insert(i);

        Solver s;
        load_clause_set(s, k);
        std::set<AtomSet> before;
        for (const auto& m : s.enumerate_models(all))
            before.insert(m.projection);
        cardmax(s, r);
        cardmin(s, r);
        std::set<AtomSet> after;
        for (const auto& m : s.enumerate_models(all))
            after.insert(m.projection);
        CHECK(before == after);
    }
}

TEST_CASE("cardmax restrictions are subset-maximal") {
    std::mt19937 rng(53);
    for (int t = 0; t < 40; ++t) {
        auto k = random_clause_set(rng, 10, 25);
        RelevantSet r;
        for (int i = 1; i <= k.universe().size(); ++i)
            if (rng() % 2)
                r.atoms.insert(i);
        Solver s;
        load_clause_set(s, k);
        auto batch = cardmax(s, r);
        if (!batch)
            continue;
        auto setmax = brute_force_setopt(k, r, Criterion::SetMax);
        for (const auto& p : batch->restrictions)
            CHECK(setmax.count(p) == 1);
    }
}
