#include "eqrel/closure.hpp"

#include <string>

namespace eqrel {

namespace {

void validate(const MergeSpec& spec, Nat bound)
{
    if (bound > spec.base.window_bound())
        throw WindowError("closure bound " + std::to_string(bound) + " exceeds base window " +
                          std::to_string(spec.base.window_bound()));
    if (bound >= kUnbounded - 1)
        throw WindowError("closure needs a finite bound");
    for (const auto& [x, y] : spec.extra_pairs)
        if (x > bound || y > bound)
            throw WindowError("merge pair (" + std::to_string(x) + "," + std::to_string(y) +
                              ") lies outside the window [0, " + std::to_string(bound) + "]");
}

} // namespace

Relation close(const MergeSpec& spec, Nat bound)
{
    validate(spec, bound);
    UnionFind uf(bound + 1);
    ClosureLog log;
    for (Nat x = 0; x <= bound; ++x) {
        const Nat r = spec.base.representative(x);
        if (uf.unite(r, x))
            log.merges.push_back({r, x, MergeOrigin::base});
    }
    for (const auto& [x, y] : spec.extra_pairs)
        if (uf.unite(x, y))
            log.merges.push_back({x, y, MergeOrigin::extra});
    return Relation::construction(Partition::from_union_find(uf), std::move(log));
}

Relation close_oracle(const MergeSpec& spec, Nat bound)
{
    validate(spec, bound);
    const std::size_t n = bound + 1;
    std::vector<char> m(n * n, 0);
    auto at = [&](std::size_t x, std::size_t y) -> char& { return m[x * n + y]; };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            at(x, y) = spec.base.holds(x, y) ? 1 : 0;
    for (const auto& [x, y] : spec.extra_pairs) {
        at(x, y) = 1;
        at(y, x) = 1;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (!at(x, y))
                    continue;
                for (std::size_t z = 0; z < n; ++z)
                    if (at(y, z) && !at(x, z)) {
                        at(x, z) = 1;
                        at(z, x) = 1;
                        changed = true;
                    }
            }
    }
    std::vector<Nat> rep(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t y = 0;
        while (!at(x, y))
            ++y;
        rep[x] = y;
    }
    ClosureLog log;
    log.notes.push_back("computed by incidence-matrix fixpoint");
    return Relation::construction(Partition::from_representatives(std::move(rep)), std::move(log));
}

} // namespace eqrel
