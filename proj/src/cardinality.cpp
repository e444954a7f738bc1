#include "setopt/cardinality.hpp"

#include <algorithm>

namespace setopt {

namespace {

// Builds the totalizer tree over inputs[lo, hi); returns the node's output
// variables in sorted-unary order. Both implication directions are encoded
// so outputs can serve as at-least and at-most assumptions.
std::vector<int> build_node(Solver& s, const std::vector<int>& inputs, size_t lo, size_t hi,
                            int guard) {
    if (hi - lo == 1)
        return {inputs[lo]};
    size_t mid = lo + (hi - lo) / 2;
    std::vector<int> left = build_node(s, inputs, lo, mid, guard);
    std::vector<int> right = build_node(s, inputs, mid, hi, guard);
    size_t a = left.size(), b = right.size();
    std::vector<int> out(a + b);
    for (auto& v : out)
        v = s.new_var();

    for (size_t i = 0; i <= a; ++i) {
        for (size_t j = 0; j <= b; ++j) {
            if (i + j >= 1) {
                // left>=i and right>=j imply out>=i+j
                std::vector<int> c{-guard, out[i + j - 1]};
                if (i > 0)
                    c.push_back(-left[i - 1]);
                if (j > 0)
                    c.push_back(-right[j - 1]);
                s.add_clause(std::move(c));
            }
            if (i + j < a + b) {
                // out>=i+j+1 implies left>=i+1 or right>=j+1
                std::vector<int> c{-guard, -out[i + j]};
                if (i < a)
                    c.push_back(left[i]);
                if (j < b)
                    c.push_back(right[j]);
                s.add_clause(std::move(c));
            }
        }
    }
    return out;
}

size_t restriction_size(const AtomSet& model, const RelevantSet& r) {
    size_t n = 0;
    for (int a : r.atoms)
        n += model.count(a);
    return n;
}

}  // namespace

CardinalityEncoding encode_totalizer(Solver& s, std::vector<int> inputs) {
    CardinalityEncoding enc;
    enc.kind = CardinalityEncoding::Kind::AtLeast;
    enc.inputs = std::move(inputs);
    enc.activation = s.new_activation();
    if (!enc.inputs.empty())
        enc.outputs = build_node(s, enc.inputs, 0, enc.inputs.size(), enc.activation);
    return enc;
}

CardinalityEncoding encode_at_least(Solver& s, std::vector<int> inputs, int k) {
    CardinalityEncoding enc = encode_totalizer(s, std::move(inputs));
    enc.kind = CardinalityEncoding::Kind::AtLeast;
    enc.threshold = k;
    if (k > static_cast<int>(enc.inputs.size()))
        s.add_clause({-enc.activation});  // unattainable bound
    else if (k > 0)
        s.add_clause({-enc.activation, enc.outputs[k - 1]});
    return enc;
}

CardinalityEncoding encode_at_most(Solver& s, std::vector<int> inputs, int k) {
    CardinalityEncoding enc = encode_totalizer(s, std::move(inputs));
    enc.kind = CardinalityEncoding::Kind::AtMost;
    enc.threshold = k;
    if (k < static_cast<int>(enc.inputs.size()))
        s.add_clause({-enc.activation, -enc.outputs[k]});
    return enc;
}

namespace {

std::optional<OptimumBatch> card_opt(Solver& s, const RelevantSet& r, bool maximize,
                                     std::optional<size_t> batch_limit) {
    SolveOutcome first = s.solve();
    if (first.status == Status::Unsat)
        return std::nullopt;

    OptimumBatch out;
    int n = static_cast<int>(r.atoms.size());
    if (n == 0) {
        out.optimum = 0;
        out.restrictions.push_back({});
        out.witnesses.push_back(first.model);
        return out;
    }

    std::vector<int> inputs(r.atoms.begin(), r.atoms.end());
    CardinalityEncoding enc = encode_totalizer(s, inputs);
    int g = enc.activation;

    // linear search from the first model's cardinality; each step reuses
    // learned clauses and the same totalizer with a tighter assumption
    int k = static_cast<int>(restriction_size(first.model, r));
    for (;;) {
        if (maximize ? k == n : k == 0)
            break;
        int bound = maximize ? enc.outputs[k] : -enc.outputs[k - 1];  // >= k+1 / <= k-1
        SolveOutcome res = s.solve({g, bound});
        if (res.status == Status::Unsat)
            break;
        k = static_cast<int>(restriction_size(res.model, r));
    }

    std::vector<int> assume{g};
    if (maximize) {
        if (k >= 1)
            assume.push_back(enc.outputs[k - 1]);  // >= k; nothing exceeds k
    } else {
        if (k < n)
            assume.push_back(-enc.outputs[k]);  // <= k; nothing is below k
    }
    auto models = s.enumerate_models(r.atoms, assume, batch_limit);
    s.deactivate(g);

    out.optimum = k;
    for (auto& m : models) {
        out.restrictions.push_back(std::move(m.projection));
        out.witnesses.push_back(std::move(m.model));
    }
    return out;
}

}  // namespace

std::optional<OptimumBatch> cardmax(Solver& s, const RelevantSet& r,
                                    std::optional<size_t> batch_limit) {
    return card_opt(s, r, true, batch_limit);
}

std::optional<OptimumBatch> cardmin(Solver& s, const RelevantSet& r,
                                    std::optional<size_t> batch_limit) {
    return card_opt(s, r, false, batch_limit);
}

}  // namespace setopt
