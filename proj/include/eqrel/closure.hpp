#pragma once

#include "eqrel/relation.hpp"

#include <vector>

namespace eqrel {

struct MergeSpec {
    Relation base;
    std::vector<NatPair> extra_pairs;
};

// Least equivalence relation on [0, bound] containing spec.base and every extra pair.
// Incremental union-find; the log lists each merge that joined two classes.
Relation close(const MergeSpec& spec, Nat bound);

// Same contract as close(), computed by fixpoint iteration on the (bound+1)^2
// incidence matrix. Cubic; meant as an independent check for small windows.
Relation close_oracle(const MergeSpec& spec, Nat bound);

} // namespace eqrel
