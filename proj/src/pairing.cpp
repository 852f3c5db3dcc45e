#include "eqrel/pairing.hpp"

#include <cmath>

namespace eqrel {

NatPair cantor_unpair(Nat z)
{
    // w is the largest integer with w(w+1)/2 <= z; the float estimate is off by at most one.
    auto w = static_cast<Nat>((std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
    auto triangle = [](Nat n) { return n % 2 == 0 ? (n / 2) * (n + 1) : n * ((n + 1) / 2); };
    while (triangle(w) > z)
        --w;
    while (triangle(w + 1) <= z)
        ++w;
    const Nat y = z - triangle(w);
    return {w - y, y};
}

} // namespace eqrel
