#pragma once

#include "eqrel/partition.hpp"
#include "eqrel/types.hpp"

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace eqrel {

/*
 * A stage-wise stream of pairs whose equivalence closure defines a ceer.
 *
 * Order matters: an element "occurs" at the flattened position
 * 2 * pair_index + slot of the first pair mentioning it, and that position
 * is what "first enumerated" means throughout the library. Elements that
 * never occur are treated as enumerated after every pair, in increasing
 * order (the reflexive pairs (x, x) trail the list).
 */
class Enumeration {
public:
    Enumeration() = default;

    // stage_marks[i] is the pair count after stage i; non-decreasing, last == pairs.size().
    Enumeration(std::vector<NatPair> pairs, std::vector<std::size_t> stage_marks);

    static Enumeration from_stages(const std::vector<std::vector<NatPair>>& stages);

    const std::vector<NatPair>& pairs() const { return pairs_; }
    const std::vector<std::size_t>& stage_marks() const { return marks_; }
    std::size_t stage_count() const { return marks_.size(); }
    std::vector<std::vector<NatPair>> stages() const;

    // Largest element mentioned by any pair, plus one (0 when empty).
    Nat support_size() const { return support_; }

    // Closure of the first `stage_count` stages on [0, support_size()).
    Partition replay(std::size_t stage_count) const;
    Partition replay() const { return replay(marks_.size()); }

    Nat order_key(Nat x) const;

    bool operator==(const Enumeration& other) const
    {
        return pairs_ == other.pairs_ && marks_ == other.marks_;
    }

private:
    std::vector<NatPair> pairs_;
    std::vector<std::size_t> marks_;
    Nat support_ = 0;
    std::unordered_map<Nat, Nat> first_seen_;
};

} // namespace eqrel
