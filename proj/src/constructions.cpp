#include "eqrel/constructions.hpp"

#include "eqrel/closure.hpp"

#include <algorithm>
#include <sstream>

namespace eqrel {

const char* to_string(ConstructionVariant variant)
{
    switch (variant) {
    case ConstructionVariant::pair_merge:
        return "thm21-e";
    case ConstructionVariant::pair_merge_complement:
        return "thm21-f";
    case ConstructionVariant::block_merge:
        return "prop31";
    }
    return "?";
}

namespace {

void require_variant(const ConstructionSpec& spec, ConstructionVariant expected)
{
    if (spec.variant != expected)
        throw InvalidArgument(std::string("construction spec has variant ") + to_string(spec.variant) +
                              ", expected " + to_string(expected));
}

// Explicit members of `set` that need an index >= rep_count.
void require_realizable(const OracleSet& set, Nat rep_count, Nat offset, const char* name)
{
    for (const Nat j : set.members())
        if (2 * j + offset >= rep_count)
            throw WindowError(std::string("oracle ") + name + " lists " + std::to_string(j) + ", which needs a_" +
                              std::to_string(2 * j + offset) + " but the window has only " +
                              std::to_string(rep_count) + " representatives");
}

std::string truncation_note(const char* family, Nat index_limit)
{
    std::ostringstream out;
    out << family << " truncated to indices j < " << index_limit;
    return out.str();
}

Relation close_with(const Relation& base, std::vector<NatPair> pairs, Nat bound, std::vector<std::string> notes)
{
    Relation closed = close(MergeSpec{base, std::move(pairs)}, bound);
    ClosureLog log = closed.log();
    log.notes.insert(log.notes.end(), notes.begin(), notes.end());
    return Relation::construction(closed.restrict(bound), std::move(log));
}

Relation pair_merge(const ConstructionSpec& spec, Nat bound, bool complement)
{
    const auto reps = least_representatives(spec.base, bound);
    const Nat pair_count = reps.size() / 2; // j with 2j + 1 < |reps|
    if (!complement)
        require_realizable(spec.oracle_b, reps.size(), 1, "B");
    std::vector<NatPair> pairs;
    for (Nat j = 0; j < pair_count; ++j)
        if (spec.oracle_b.contains(j) != complement)
            pairs.emplace_back(reps[2 * j], reps[2 * j + 1]);
    return close_with(spec.base, std::move(pairs), bound,
                      {truncation_note(complement ? "complement merge family" : "merge family", pair_count)});
}

} // namespace

Relation build_pair_merge(const ConstructionSpec& spec, Nat bound)
{
    require_variant(spec, ConstructionVariant::pair_merge);
    return pair_merge(spec, bound, false);
}

Relation build_pair_merge_complement(const ConstructionSpec& spec, Nat bound)
{
    require_variant(spec, ConstructionVariant::pair_merge_complement);
    return pair_merge(spec, bound, true);
}

Relation build_block_merge(const ConstructionSpec& spec, Nat bound)
{
    require_variant(spec, ConstructionVariant::block_merge);
    if (!spec.oracle_c)
        throw InvalidArgument("block merge needs a second oracle set C");
    const auto reps = least_representatives(spec.base, bound);
    const Nat even_count = (reps.size() + 1) / 2; // i with 2i < |reps|
    const Nat odd_count = reps.size() / 2;        // i with 2i + 1 < |reps|
    require_realizable(spec.oracle_b, reps.size(), 0, "B");
    require_realizable(*spec.oracle_c, reps.size(), 1, "C");

    std::vector<NatPair> pairs;
    auto chain_block = [&](const OracleSet& set, Nat count, Nat offset) {
        std::optional<Nat> anchor;
        for (Nat i = 0; i < count; ++i) {
            if (!set.contains(i))
                continue;
            const Nat a = reps[2 * i + offset];
            if (anchor)
                pairs.emplace_back(*anchor, a);
            else
                anchor = a;
        }
    };
    chain_block(spec.oracle_b, even_count, 0);
    chain_block(*spec.oracle_c, odd_count, 1);
    return close_with(spec.base, std::move(pairs), bound,
                      {truncation_note("B block", even_count), truncation_note("C block", odd_count)});
}

Relation build(const ConstructionSpec& spec, Nat bound)
{
    switch (spec.variant) {
    case ConstructionVariant::pair_merge:
        return build_pair_merge(spec, bound);
    case ConstructionVariant::pair_merge_complement:
        return build_pair_merge_complement(spec, bound);
    case ConstructionVariant::block_merge:
        return build_block_merge(spec, bound);
    }
    throw InvalidArgument("unknown construction variant");
}

std::vector<Nat> class_index_map(const Relation& base, Nat bound)
{
    const Partition p = base.restrict(bound);
    std::vector<Nat> g(bound + 1);
    for (Nat x = 0; x <= bound; ++x)
        g[x] = p.class_index(x);
    return g;
}

bool block_merge_membership(const ConstructionSpec& spec, Nat x, Nat y, Nat bound)
{
    require_variant(spec, ConstructionVariant::block_merge);
    if (!spec.oracle_c)
        throw InvalidArgument("block merge needs a second oracle set C");
    if (x > bound || y > bound)
        throw WindowError("membership query past the bound " + std::to_string(bound));
    const auto g = class_index_map(spec.base, bound);
    const Nat rep_count = g.empty() ? 0 : *std::max_element(g.begin(), g.end()) + 1;
    require_realizable(spec.oracle_b, rep_count, 0, "B");
    require_realizable(*spec.oracle_c, rep_count, 1, "C");

    const Nat gx = g[x];
    const Nat gy = g[y];
    if (gx == gy)
        return true;
    if (gx % 2 == 1 && gy % 2 == 1)
        return spec.oracle_c->contains(gx / 2) && spec.oracle_c->contains(gy / 2);
    if (gx % 2 == 0 && gy % 2 == 0)
        return spec.oracle_b.contains(gx / 2) && spec.oracle_b.contains(gy / 2);
    return false;
}

} // namespace eqrel
