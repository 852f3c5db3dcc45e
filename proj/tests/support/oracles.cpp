#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace eqrel::oracle {

std::vector<Nat> closure_labels(const Relation& base, const std::vector<NatPair>& pairs, Nat bound)
{
    const std::size_t n = bound + 1;
    std::vector<std::vector<Nat>> adj(n);
    for (Nat x = 0; x < n; ++x)
        for (Nat y = x + 1; y < n; ++y)
            if (base.holds(x, y)) {
                adj[x].push_back(y);
                adj[y].push_back(x);
            }
    for (const auto& [x, y] : pairs) {
        adj.at(x).push_back(y);
        adj.at(y).push_back(x);
    }
    std::vector<Nat> label(n, n);
    for (Nat s = 0; s < n; ++s) {
        if (label[s] != n)
            continue;
        // s is the least unvisited element, hence the least of its component.
        std::deque<Nat> queue{s};
        label[s] = s;
        while (!queue.empty()) {
            const Nat u = queue.front();
            queue.pop_front();
            for (const Nat v : adj[u])
                if (label[v] == n) {
                    label[v] = s;
                    queue.push_back(v);
                }
        }
    }
    return label;
}

std::vector<std::vector<Nat>> classes(const std::vector<Nat>& labels)
{
    std::map<Nat, std::vector<Nat>> by_label;
    for (Nat x = 0; x < labels.size(); ++x)
        by_label[labels[x]].push_back(x);
    std::vector<std::vector<Nat>> out;
    for (auto& [label, members] : by_label)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Nat>> classes(const Relation& r, Nat bound)
{
    std::vector<std::vector<Nat>> out;
    std::vector<bool> seen(bound + 1, false);
    for (Nat x = 0; x <= bound; ++x) {
        if (seen[x])
            continue;
        std::vector<Nat> cls;
        for (Nat y = x; y <= bound; ++y)
            if (r.holds(x, y)) {
                cls.push_back(y);
                seen[y] = true;
            }
        out.push_back(std::move(cls));
    }
    return out;
}

bool is_reduction(const ReductionFn& f, const Relation& r, const Relation& s, Nat bound)
{
    for (Nat x = 0; x <= bound; ++x)
        for (Nat y = x + 1; y <= bound; ++y)
            if (r.holds(x, y) != s.holds(f(x), f(y)))
                return false;
    return true;
}

bool reduction_exists(const Relation& r, const Relation& s, Nat bound, Nat image_bound)
{
    const auto src = classes(r, bound);
    const auto dst = classes(s, image_bound);
    const std::size_t p = src.size();
    const std::size_t q = dst.size();
    std::vector<std::size_t> choice(p, 0);
    while (true) {
        std::vector<Nat> table(bound + 1);
        for (std::size_t i = 0; i < p; ++i)
            for (const Nat x : src[i])
                table[x] = dst[choice[i]].front();
        if (is_reduction(ReductionFn(table, TailIdentity{}), r, s, bound))
            return true;
        std::size_t i = 0;
        while (i < p && ++choice[i] == q)
            choice[i++] = 0;
        if (i == p)
            return false;
    }
}

std::vector<Nat> iterate_chain(const ReductionFn& f, const ReductionFn& g, Nat a, Nat n)
{
    std::vector<Nat> out;
    Nat cur = a;
    for (Nat i = 0; i <= n; ++i) {
        out.push_back(cur);
        cur = g(f(cur));
    }
    return out;
}

} // namespace eqrel::oracle
