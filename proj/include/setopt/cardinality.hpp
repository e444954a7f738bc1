#pragma once

#include "setopt/solver.hpp"

namespace setopt {

/// A totalizer over a list of input atoms, guarded by an activation literal.
/// Under the activation, outputs[i] is equivalent to "at least i+1 inputs
/// are true"; auxiliary variables live above the user universe.
struct CardinalityEncoding {
    enum class Kind { AtLeast, AtMost };
    Kind kind;
    std::vector<int> inputs;
    int threshold = 0;
    int activation = 0;
    std::vector<int> outputs;  // outputs[i]: count >= i+1 (sorted unary)
};

/// Totalizer clauses under a fresh activation literal, no threshold asserted.
/// Tighten incrementally by assuming outputs[k-1] (>= k) or -outputs[k] (<= k).
CardinalityEncoding encode_totalizer(Solver& s, std::vector<int> inputs);

/// Adds the totalizer plus a guarded unit fixing "at least k". k = 0 is a
/// vacuous encoding; k > |inputs| yields an encoding that is unsatisfiable
/// under its activation literal.
CardinalityEncoding encode_at_least(Solver& s, std::vector<int> inputs, int k);

/// Dual of encode_at_least: "at most k" under the activation literal.
CardinalityEncoding encode_at_most(Solver& s, std::vector<int> inputs, int k);

struct OptimumBatch {
    int optimum = 0;                     // |s ∩ R| at the optimum
    std::vector<AtomSet> restrictions;   // distinct restrictions at the optimum
    std::vector<AtomSet> witnesses;      // full true-var sets, one per restriction
};

/// Cardmax(R, K) over the solver's active clause set: nullopt iff UNSAT,
/// otherwise the maximal |model ∩ R| with all restrictions achieving it
/// (or up to batch_limit of them). All temporary encodings are deactivated
/// before returning; the permanent clause set is unchanged.
std::optional<OptimumBatch> cardmax(Solver& s, const RelevantSet& r,
                                    std::optional<size_t> batch_limit = {});

/// Dual: minimal |model ∩ R|.
std::optional<OptimumBatch> cardmin(Solver& s, const RelevantSet& r,
                                    std::optional<size_t> batch_limit = {});

}  // namespace setopt
