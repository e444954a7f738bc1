#include "setopt/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <iostream>

namespace setopt {

Solver::Solver(uint64_t seed) : seed_state_(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}

int Solver::new_var() {
    assigns_.push_back(0);
    polarity_.push_back(0);
    // seed-dependent jitter breaks initial activity ties differently per seed
    seed_state_ = seed_state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    activity_.push_back(static_cast<double>(seed_state_ >> 40) * 1e-13);
    reason_.push_back(kNoReason);
    level_.push_back(0);
    seen_.push_back(0);
    heap_index_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    int v = num_vars() - 1;
    heap_insert(v);
    return v + 1;
}

void Solver::ensure_vars(int n) {
    while (num_vars() < n)
        new_var();
}

int Solver::new_activation() {
    return new_var();
}

void Solver::add_clause(std::vector<int> literals) {
    cancel_until(0);
    for (int lit : literals)
        ensure_vars(std::abs(lit));
    auto canonical = Clause::make(std::move(literals));
    if (!canonical)
        return;  // tautology
    if (!ok_)
        return;
    std::vector<int> lits;
    for (int ext : canonical->literals()) {
        int code = enc(ext);
        int8_t v = value(code);
        if (v > 0 && level_[var_of(code)] == 0)
            return;  // satisfied at root
        if (v < 0 && level_[var_of(code)] == 0)
            continue;  // falsified at root, drop literal
        lits.push_back(code);
    }
    if (lits.empty()) {
        ok_ = false;
        return;
    }
    if (lits.size() == 1) {
        if (value(lits[0]) > 0)
            return;
        enqueue(lits[0], kNoReason);
        if (propagate() != kNoReason)
            ok_ = false;
        return;
    }
    attach_clause(std::move(lits), false);
}

int Solver::attach_clause(std::vector<int> lits, bool learned) {
    int cref = static_cast<int>(clauses_.size());
    ClauseRec rec;
    rec.lits = std::move(lits);
    rec.learned = learned;
    clauses_.push_back(std::move(rec));
    const auto& c = clauses_[cref].lits;
    watches_[neg(c[0])].push_back({cref, c[1]});
    watches_[neg(c[1])].push_back({cref, c[0]});
    if (learned)
        learnts_.push_back(cref);
    return cref;
}

void Solver::detach_clause(int cref) {
    auto& c = clauses_[cref];
    for (int i = 0; i < 2; ++i) {
        auto& ws = watches_[neg(c.lits[i])];
        for (size_t j = 0; j < ws.size(); ++j) {
            if (ws[j].cref == cref) {
                ws[j] = ws.back();
                ws.pop_back();
                break;
            }
        }
    }
    c.deleted = true;
    c.lits.clear();
    c.lits.shrink_to_fit();
}

bool Solver::locked(int cref) const {
    const auto& c = clauses_[cref];
    return value(c.lits[0]) > 0 && reason_[var_of(c.lits[0])] == cref;
}

void Solver::enqueue(int code, int reason) {
    int v = var_of(code);
    assert(assigns_[v] == 0);
    assigns_[v] = (code & 1) ? int8_t{-1} : int8_t{1};
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(code);
}

int Solver::propagate() {
    while (qhead_ < trail_.size()) {
        int p = trail_[qhead_++];
        ++propagations_;
        auto& ws = watches_[p];
        size_t keep = 0;
        for (size_t i = 0; i < ws.size(); ++i) {
            Watcher w = ws[i];
            if (value(w.blocker) > 0) {
                ws[keep++] = w;
                continue;
            }
            ClauseRec& c = clauses_[w.cref];
            if (c.deleted)
                continue;
            int false_lit = neg(p);
            if (c.lits[0] == false_lit)
                std::swap(c.lits[0], c.lits[1]);
            int first = c.lits[0];
            if (value(first) > 0) {
                ws[keep++] = {w.cref, first};
                continue;
            }
            bool moved = false;
            for (size_t k = 2; k < c.lits.size(); ++k) {
                if (value(c.lits[k]) >= 0) {
                    std::swap(c.lits[1], c.lits[k]);
                    watches_[neg(c.lits[1])].push_back({w.cref, first});
                    moved = true;
                    break;
                }
            }
            if (moved)
                continue;
            // unit or conflict
            ws[keep++] = {w.cref, first};
            if (value(first) < 0) {
                // conflict: keep the remaining watchers, flush queue
                for (size_t j = i + 1; j < ws.size(); ++j)
                    ws[keep++] = ws[j];
                ws.resize(keep);
                qhead_ = trail_.size();
                return w.cref;
            }
            enqueue(first, w.cref);
        }
        ws.resize(keep);
    }
    return kNoReason;
}

void Solver::analyze(int confl, std::vector<int>& learnt, int& bt_level) {
    learnt.clear();
    learnt.push_back(0);  // placeholder for the asserting literal
    int path_count = 0;
    int p = -1;
    int index = static_cast<int>(trail_.size()) - 1;

    do {
        assert(confl != kNoReason);
        ClauseRec& c = clauses_[confl];
        if (c.learned)
            bump_clause(confl);
        for (size_t j = (p == -1 ? 0 : 1); j < c.lits.size(); ++j) {
            int q = c.lits[j];
            int v = var_of(q);
            if (!seen_[v] && level_[v] > 0) {
                bump_var(v);
                seen_[v] = 1;
                if (level_[v] >= decision_level())
                    ++path_count;
                else
                    learnt.push_back(q);
            }
        }
        while (!seen_[var_of(trail_[index])])
            --index;
        p = trail_[index];
        confl = reason_[var_of(p)];
        seen_[var_of(p)] = 0;
        --path_count;
        --index;
    } while (path_count > 0);
    learnt[0] = neg(p);

    if (learnt.size() == 1) {
        bt_level = 0;
    } else {
        // move the literal with the second-highest level into position 1
        size_t max_i = 1;
        for (size_t i = 2; i < learnt.size(); ++i)
            if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])])
                max_i = i;
        std::swap(learnt[1], learnt[max_i]);
        bt_level = level_[var_of(learnt[1])];
    }
    for (size_t i = 1; i < learnt.size(); ++i)
        seen_[var_of(learnt[i])] = 0;
}

void Solver::cancel_until(int target) {
    if (decision_level() <= target)
        return;
    int bound = trail_lim_[target];
    for (int i = static_cast<int>(trail_.size()) - 1; i >= bound; --i) {
        int v = var_of(trail_[i]);
        polarity_[v] = static_cast<int8_t>(assigns_[v] > 0 ? 1 : 0);
        assigns_[v] = 0;
        reason_[v] = kNoReason;
        if (heap_index_[v] == -1)
            heap_insert(v);
    }
    trail_.resize(bound);
    trail_lim_.resize(target);
    qhead_ = trail_.size();
}

int Solver::pick_branch() {
    while (!heap_.empty()) {
        int v = heap_pop();
        if (assigns_[v] == 0)
            return 2 * v + (polarity_[v] ? 0 : 1);
    }
    return -1;
}

void Solver::bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (auto& a : activity_)
            a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_index_[v] != -1)
        heap_update(v);
}

void Solver::bump_clause(int cref) {
    auto& c = clauses_[cref];
    c.act += cla_inc_;
    if (c.act > 1e20) {
        for (int cr : learnts_)
            clauses_[cr].act *= 1e-20;
        cla_inc_ *= 1e-20;
    }
}

void Solver::decay_activities() {
    var_inc_ /= kVarDecay;
    cla_inc_ /= kClaDecay;
}

bool Solver::heap_less(int a, int b) const {
    if (activity_[a] != activity_[b])
        return activity_[a] > activity_[b];
    return a < b;  // ties broken by lowest variable index
}

void Solver::heap_insert(int v) {
    heap_index_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_percolate_up(heap_index_[v]);
}

void Solver::heap_update(int v) {
    heap_percolate_up(heap_index_[v]);
}

void Solver::heap_percolate_up(int i) {
    int v = heap_[i];
    while (i > 0) {
        int parent = (i - 1) >> 1;
        if (!heap_less(v, heap_[parent]))
            break;
        heap_[i] = heap_[parent];
        heap_index_[heap_[i]] = i;
        i = parent;
    }
    heap_[i] = v;
    heap_index_[v] = i;
}

void Solver::heap_percolate_down(int i) {
    int v = heap_[i];
    int n = static_cast<int>(heap_.size());
    while (2 * i + 1 < n) {
        int child = 2 * i + 1;
        if (child + 1 < n && heap_less(heap_[child + 1], heap_[child]))
            ++child;
        if (!heap_less(heap_[child], v))
            break;
        heap_[i] = heap_[child];
        heap_index_[heap_[i]] = i;
        i = child;
    }
    heap_[i] = v;
    heap_index_[v] = i;
}

int Solver::heap_pop() {
    int top = heap_[0];
    heap_index_[top] = -1;
    heap_[0] = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_index_[heap_[0]] = 0;
        heap_percolate_down(0);
    }
    return top;
}

void Solver::check_deadline() {
    if (deadline_ && std::chrono::steady_clock::now() >= *deadline_)
        throw TimeoutError("solve exceeded wallclock deadline");
}

void Solver::reduce_db() {
    if (learnts_.size() < kMaxLearnts)
        return;
    std::sort(learnts_.begin(), learnts_.end(), [this](int a, int b) {
        return clauses_[a].act < clauses_[b].act;
    });
    size_t target = learnts_.size() / 2;
    std::vector<int> kept;
    kept.reserve(learnts_.size() - target);
    size_t removed = 0;
    for (int cref : learnts_) {
        if (removed < target && !locked(cref) && clauses_[cref].lits.size() > 2) {
            detach_clause(cref);
            ++removed;
        } else {
            kept.push_back(cref);
        }
    }
    learnts_ = std::move(kept);
}

int Solver::search(uint64_t conflict_budget, const std::vector<int>& assumptions) {
    uint64_t local_conflicts = 0;
    std::vector<int> learnt;

    for (;;) {
        int confl = propagate();
        if (confl != kNoReason) {
            ++conflicts_;
            ++local_conflicts;
            if ((conflicts_ & 255) == 0)
                check_deadline();
            if (decision_level() == 0)
                return 0;
            int bt_level;
            analyze(confl, learnt, bt_level);
            // never undo the assumption prefix wholesale; re-deciding below
            // re-checks assumption consistency
            cancel_until(bt_level);
            if (learnt.size() == 1) {
                enqueue(learnt[0], kNoReason);
            } else {
                int cref = attach_clause(learnt, true);
                enqueue(learnt[0], cref);
            }
            decay_activities();
            if (local_conflicts >= conflict_budget) {
                cancel_until(0);
                return -1;
            }
            reduce_db();
            continue;
        }

        // assumption prefix: one decision level per assumption
        if (decision_level() < static_cast<int>(assumptions.size())) {
            int p = enc(assumptions[decision_level()]);
            int8_t v = value(p);
            if (v < 0)
                return 0;  // assumption contradicted
            new_decision_level();
            if (v == 0)
                enqueue(p, kNoReason);
            continue;
        }

        int next = pick_branch();
        if (next == -1)
            return 1;  // full assignment
        new_decision_level();
        enqueue(next, kNoReason);
    }
}

namespace {
// Luby restart sequence: 1 1 2 1 1 2 4 ...
uint64_t luby(uint64_t x) {
    uint64_t size = 1, seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        --seq;
        x = x % size;
    }
    return uint64_t{1} << seq;
}
}  // namespace

SolveOutcome Solver::solve(const std::vector<int>& assumptions) {
    check_deadline();
    cancel_until(0);
    for (int a : assumptions)
        ensure_vars(std::abs(a));
    if (!ok_)
        return {Status::Unsat, {}};
    if (propagate() != kNoReason) {
        ok_ = false;
        return {Status::Unsat, {}};
    }

    for (uint64_t restart = 0;; ++restart) {
        int res = search(luby(restart) * kRestartBase, assumptions);
        if (res == -1) {
            ++restarts_;
            if (trace_)
                std::cerr << "c restart " << restarts_ << " conflicts " << conflicts_ << '\n';
            check_deadline();
            continue;
        }
        if (res == 0) {
            cancel_until(0);
            return {Status::Unsat, {}};
        }
        AtomSet model;
        for (int v = 0; v < num_vars(); ++v)
            if (assigns_[v] > 0)
                model.insert(v + 1);
        cancel_until(0);
        return {Status::Sat, std::move(model)};
    }
}

std::vector<ProjectedModel> Solver::enumerate_models(const AtomSet& projection,
                                                     const std::vector<int>& assumptions,
                                                     std::optional<size_t> limit) {
    std::vector<ProjectedModel> out;
    if (limit && *limit == 0)
        return out;
    int h = new_activation();
    std::vector<int> assume_lits = assumptions;
    assume_lits.push_back(h);
    for (;;) {
        SolveOutcome res = solve(assume_lits);
        if (res.status == Status::Unsat)
            break;
        AtomSet proj;
        std::set_intersection(res.model.begin(), res.model.end(), projection.begin(),
                              projection.end(), std::inserter(proj, proj.begin()));
        out.push_back({proj, res.model});
        if (limit && out.size() >= *limit)
            break;
        std::vector<int> block;
        block.push_back(-h);
        for (int a : projection)
            block.push_back(proj.count(a) ? -a : a);
        add_clause(std::move(block));
    }
    deactivate(h);
    return out;
}

void load_clause_set(Solver& s, const ClauseSet& k) {
    s.ensure_vars(k.universe().size());
    for (const auto& c : k.clauses())
        s.add_clause(c.literals());
}

}  // namespace setopt
