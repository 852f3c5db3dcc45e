#pragma once

#include "eqrel/oracle_set.hpp"
#include "eqrel/relation.hpp"

#include <optional>
#include <vector>

namespace eqrel {

/*
 * Closure-based relations built over a base relation R with least
 * representatives a_0 < a_1 < ... on the window:
 *
 *   pair_merge             R + {(a_2j, a_2j+1) : j in B}
 *   pair_merge_complement  R + {(a_2j, a_2j+1) : j not in B}
 *   block_merge            R + {(a_2i, a_2j) : i, j in B} + {(a_2i+1, a_2j+1) : i, j in C}
 *
 * Merge families are truncated to the indices realizable on the window and
 * the truncation is noted in the result's log. An explicitly listed member
 * whose merge cannot be realized is a WindowError.
 */
enum class ConstructionVariant { pair_merge, pair_merge_complement, block_merge };

const char* to_string(ConstructionVariant variant);

struct ConstructionSpec {
    Relation base;
    OracleSet oracle_b;
    std::optional<OracleSet> oracle_c; // block_merge only
    ConstructionVariant variant = ConstructionVariant::pair_merge;
};

Relation build_pair_merge(const ConstructionSpec& spec, Nat bound);
Relation build_pair_merge_complement(const ConstructionSpec& spec, Nat bound);
Relation build_block_merge(const ConstructionSpec& spec, Nat bound);

// Dispatches on spec.variant.
Relation build(const ConstructionSpec& spec, Nat bound);

// Index of the base class of each x <= bound in the representative list: x ~ a_{g(x)}.
std::vector<Nat> class_index_map(const Relation& base, Nat bound);

/*
 * Direct membership test for the block_merge relation without building the
 * closure: x ~ y iff g(x) = g(y), or both indices are odd with halves in C,
 * or both are even with halves in B.
 */
bool block_merge_membership(const ConstructionSpec& spec, Nat x, Nat y, Nat bound);

} // namespace eqrel
