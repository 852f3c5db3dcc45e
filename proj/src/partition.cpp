#include "eqrel/partition.hpp"

#include <numeric>
#include <utility>

namespace eqrel {

UnionFind::UnionFind(std::size_t size) : parent_(size)
{
    std::iota(parent_.begin(), parent_.end(), Nat{0});
}

Nat UnionFind::find(Nat x)
{
    Nat root = x;
    while (parent_.at(root) != root)
        root = parent_[root];
    // path compression
    while (parent_[x] != root) {
        const Nat next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

bool UnionFind::unite(Nat a, Nat b)
{
    Nat ra = find(a);
    Nat rb = find(b);
    if (ra == rb)
        return false;
    if (rb < ra)
        std::swap(ra, rb);
    parent_[rb] = ra;
    return true;
}

Partition::Partition(std::vector<Nat> rep) : rep_(std::move(rep)), index_(rep_.size(), 0)
{
    for (Nat x = 0; x < rep_.size(); ++x) {
        if (rep_[x] == x) {
            index_[x] = reps_.size();
            reps_.push_back(x);
            sizes_.push_back(0);
        }
    }
    for (Nat x = 0; x < rep_.size(); ++x)
        ++sizes_[index_[rep_[x]]];
}

Partition Partition::from_union_find(UnionFind& uf)
{
    std::vector<Nat> rep(uf.size());
    for (Nat x = 0; x < rep.size(); ++x)
        rep[x] = uf.find(x);
    return Partition(std::move(rep));
}

Partition Partition::from_representatives(std::vector<Nat> rep)
{
    for (Nat x = 0; x < rep.size(); ++x) {
        if (rep[x] > x || rep[rep[x]] != rep[x])
            throw InvalidArgument("representative array is not a least-element labelling at element " +
                                  std::to_string(x));
    }
    return Partition(std::move(rep));
}

Partition Partition::discrete(std::size_t size)
{
    std::vector<Nat> rep(size);
    std::iota(rep.begin(), rep.end(), Nat{0});
    return Partition(std::move(rep));
}

std::vector<Nat> Partition::members(Nat x) const
{
    const Nat r = rep_.at(x);
    std::vector<Nat> out;
    for (Nat y = r; y < rep_.size(); ++y)
        if (rep_[y] == r)
            out.push_back(y);
    return out;
}

Partition Partition::prefix(Nat bound) const
{
    if (bound >= rep_.size())
        throw WindowError("prefix bound " + std::to_string(bound) + " exceeds partition of size " +
                          std::to_string(rep_.size()));
    return Partition(std::vector<Nat>(rep_.begin(), rep_.begin() + static_cast<std::ptrdiff_t>(bound + 1)));
}

bool Partition::refines(const Partition& other) const
{
    if (other.size() != size())
        return false;
    for (Nat x = 0; x < rep_.size(); ++x)
        if (other.rep_[x] != other.rep_[rep_[x]])
            return false;
    return true;
}

} // namespace eqrel
