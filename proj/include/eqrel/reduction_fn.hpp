#pragma once

#include "eqrel/types.hpp"

#include <string>
#include <variant>
#include <vector>

namespace eqrel {

struct TailIdentity {
    bool operator==(const TailIdentity&) const = default;
};
struct TailConstant {
    Nat value = 0;
    bool operator==(const TailConstant&) const = default;
};
// x -> x + offset
struct TailShift {
    Nat offset = 0;
    bool operator==(const TailShift&) const = default;
};
// x -> values[x mod values.size()]
struct TailResidue {
    std::vector<Nat> values;
    bool operator==(const TailResidue&) const = default;
};

using TailRule = std::variant<TailIdentity, TailConstant, TailShift, TailResidue>;

/*
 * A total function on omega: an explicit table on [0, d] followed by a
 * closed-form tail rule for inputs past the table. This is the only shape of
 * reduction the library emits or consumes.
 */
class ReductionFn {
public:
    ReductionFn() = default;
    ReductionFn(std::vector<Nat> table, TailRule tail);

    static ReductionFn identity() { return {}; }
    static ReductionFn constant(Nat c) { return {{}, TailConstant{c}}; }
    static ReductionFn shift(Nat k) { return {{}, TailShift{k}}; }
    static ReductionFn residue(std::vector<Nat> values) { return {{}, TailResidue{std::move(values)}}; }

    Nat operator()(Nat x) const;
    Nat apply_tail(Nat x) const;

    const std::vector<Nat>& table() const { return table_; }
    const TailRule& tail() const { return tail_; }

    // Drops trailing table entries the tail already reproduces; same function.
    ReductionFn normalized() const;

    std::string to_string() const;

    bool operator==(const ReductionFn&) const = default;

private:
    std::vector<Nat> table_;
    TailRule tail_ = TailIdentity{};
};

// x -> g(f(x)).
ReductionFn compose(const ReductionFn& f, const ReductionFn& g);

} // namespace eqrel
