#include "eqrel/reduction_fn.hpp"

#include <algorithm>
#include <sstream>

namespace eqrel {

ReductionFn::ReductionFn(std::vector<Nat> table, TailRule tail) : table_(std::move(table)), tail_(std::move(tail))
{
    if (const auto* r = std::get_if<TailResidue>(&tail_); r && r->values.empty())
        throw InvalidArgument("residue tail needs at least one value");
}

Nat ReductionFn::apply_tail(Nat x) const
{
    return std::visit(
        [x](const auto& t) -> Nat {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TailIdentity>)
                return x;
            else if constexpr (std::is_same_v<T, TailConstant>)
                return t.value;
            else if constexpr (std::is_same_v<T, TailShift>) {
                if (x > kUnbounded - t.offset)
                    throw InvalidArgument("shift tail overflows at " + std::to_string(x));
                return x + t.offset;
            } else
                return t.values[x % t.values.size()];
        },
        tail_);
}

Nat ReductionFn::operator()(Nat x) const
{
    return x < table_.size() ? table_[x] : apply_tail(x);
}

ReductionFn ReductionFn::normalized() const
{
    std::vector<Nat> table = table_;
    while (!table.empty() && table.back() == apply_tail(table.size() - 1))
        table.pop_back();
    return {std::move(table), tail_};
}

std::string ReductionFn::to_string() const
{
    std::ostringstream out;
    out << "table {";
    for (std::size_t i = 0; i < table_.size(); ++i)
        out << (i ? ", " : "") << i << ":" << table_[i];
    out << "} tail ";
    std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TailIdentity>)
                out << "identity";
            else if constexpr (std::is_same_v<T, TailConstant>)
                out << "const " << t.value;
            else if constexpr (std::is_same_v<T, TailShift>)
                out << "shift " << t.offset;
            else {
                out << "residue mod " << t.values.size() << " [";
                for (std::size_t i = 0; i < t.values.size(); ++i)
                    out << (i ? ", " : "") << t.values[i];
                out << "]";
            }
        },
        tail_);
    return out.str();
}

namespace {

// g's tail precomposed with x -> x + k.
TailRule shifted_tail(const TailRule& g_tail, Nat k)
{
    return std::visit(
        [k](const auto& gt) -> TailRule {
            using G = std::decay_t<decltype(gt)>;
            if constexpr (std::is_same_v<G, TailIdentity>)
                return k == 0 ? TailRule{TailIdentity{}} : TailRule{TailShift{k}};
            else if constexpr (std::is_same_v<G, TailConstant>)
                return gt;
            else if constexpr (std::is_same_v<G, TailShift>)
                return TailShift{gt.offset + k};
            else {
                const std::size_t m = gt.values.size();
                TailResidue out;
                for (std::size_t r = 0; r < m; ++r)
                    out.values.push_back(gt.values[(r + k % m) % m]);
                return out;
            }
        },
        g_tail);
}

// Tail of g∘f for inputs past both tables. There f(x) = f.tail(x); an
// identity or shift tail never lands back inside g's table.
TailRule compose_tails(const ReductionFn& f, const ReductionFn& g)
{
    return std::visit(
        [&](const auto& ft) -> TailRule {
            using F = std::decay_t<decltype(ft)>;
            if constexpr (std::is_same_v<F, TailConstant>) {
                return TailConstant{g(ft.value)};
            } else if constexpr (std::is_same_v<F, TailResidue>) {
                TailResidue out;
                for (const Nat v : ft.values)
                    out.values.push_back(g(v));
                return out;
            } else if constexpr (std::is_same_v<F, TailShift>) {
                return shifted_tail(g.tail(), ft.offset);
            } else {
                return shifted_tail(g.tail(), 0);
            }
        },
        f.tail());
}

} // namespace

ReductionFn compose(const ReductionFn& f, const ReductionFn& g)
{
    const std::size_t span = std::max(f.table().size(), g.table().size());
    std::vector<Nat> table(span);
    for (std::size_t x = 0; x < span; ++x)
        table[x] = g(f(x));
    TailRule tail = compose_tails(f, g);
    return ReductionFn(std::move(table), std::move(tail)).normalized();
}

} // namespace eqrel
