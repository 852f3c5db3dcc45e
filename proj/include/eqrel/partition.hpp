#pragma once

#include "eqrel/types.hpp"

#include <cstddef>
#include <vector>

namespace eqrel {

/*
 * Disjoint-set forest on [0, size). The root of every tree is the least
 * element of its class, so find() returns the canonical representative.
 */
class UnionFind {
public:
    explicit UnionFind(std::size_t size);

    std::size_t size() const { return parent_.size(); }

    Nat find(Nat x);

    // Returns false when a and b were already in the same class.
    bool unite(Nat a, Nat b);

private:
    std::vector<Nat> parent_;
};

/*
 * Immutable partition of the initial segment [0, size) with least-element
 * representatives. Safe to query concurrently.
 */
class Partition {
public:
    Partition() = default;

    static Partition from_union_find(UnionFind& uf);

    // rep[x] must be the least member of x's class: rep[x] <= x and rep[rep[x]] == rep[x].
    static Partition from_representatives(std::vector<Nat> rep);

    static Partition discrete(std::size_t size);

    std::size_t size() const { return rep_.size(); }
    std::size_t class_count() const { return reps_.size(); }

    Nat representative(Nat x) const { return rep_.at(x); }
    bool same_class(Nat x, Nat y) const { return rep_.at(x) == rep_.at(y); }

    // Position of x's class in the increasing list of representatives.
    std::size_t class_index(Nat x) const { return index_.at(rep_.at(x)); }
    std::size_t class_size(Nat x) const { return sizes_.at(class_index(x)); }

    const std::vector<Nat>& representatives() const { return reps_; }
    std::vector<Nat> members(Nat x) const;

    // Restriction to [0, bound]; representatives survive because they are least members.
    Partition prefix(Nat bound) const;

    // Every class of *this lies inside a class of other (same size required).
    bool refines(const Partition& other) const;

    bool operator==(const Partition& other) const { return rep_ == other.rep_; }

private:
    explicit Partition(std::vector<Nat> rep);

    std::vector<Nat> rep_;
    std::vector<Nat> reps_;
    std::vector<std::size_t> index_; // indexed by element, meaningful at representatives
    std::vector<std::size_t> sizes_; // indexed by class index
};

} // namespace eqrel
