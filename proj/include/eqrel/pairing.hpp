#pragma once

#include "eqrel/types.hpp"

namespace eqrel {

/// Cantor pairing <x, y> = (x + y)(x + y + 1) / 2 + y.
/// Callers keep x + y below 2^32 so the result fits in 64 bits.
constexpr Nat cantor_pair(Nat x, Nat y)
{
    const Nat s = x + y;
    return (s % 2 == 0 ? (s / 2) * (s + 1) : s * ((s + 1) / 2)) + y;
}

NatPair cantor_unpair(Nat z);

} // namespace eqrel
