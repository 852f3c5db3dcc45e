#include "eqrel/relation.hpp"

#include <sstream>
#include <utility>

namespace eqrel {

const char* to_string(RelationKind kind)
{
    switch (kind) {
    case RelationKind::rule:
        return "rule";
    case RelationKind::ceer:
        return "ceer";
    case RelationKind::construction:
        return "construction";
    }
    return "?";
}

Relation::Relation(RelationKind kind, Nat window, std::variant<IdentityRule, ModularRule, Tabulated> source)
    : kind_(kind), window_(window), source_(std::move(source))
{
}

Relation Relation::identity()
{
    return Relation(RelationKind::rule, kUnbounded, IdentityRule{});
}

Relation Relation::modular(Nat modulus)
{
    if (modulus == 0)
        throw InvalidArgument("invalid modulus 0: Id_n needs n >= 1");
    return Relation(RelationKind::rule, kUnbounded, ModularRule{modulus});
}

Relation Relation::ceer(Enumeration enumeration)
{
    auto partition = enumeration.replay();
    auto shared = std::make_shared<const Enumeration>(std::move(enumeration));
    return Relation(RelationKind::ceer, kUnbounded,
                    Tabulated{std::move(partition), std::move(shared), std::make_shared<const ClosureLog>()});
}

Relation Relation::construction(Partition partition, ClosureLog log)
{
    if (partition.size() == 0)
        throw InvalidArgument("construction needs a non-empty window");
    const Nat window = partition.size() - 1;
    return Relation(RelationKind::construction, window,
                    Tabulated{std::move(partition), nullptr, std::make_shared<const ClosureLog>(std::move(log))});
}

void Relation::require_decided(Nat x) const
{
    if (x > window_)
        throw WindowError("element " + std::to_string(x) + " is outside the decided window [0, " +
                          std::to_string(window_) + "]");
}

Nat Relation::representative(Nat x) const
{
    require_decided(x);
    return std::visit(
        [x](const auto& src) -> Nat {
            using T = std::decay_t<decltype(src)>;
            if constexpr (std::is_same_v<T, IdentityRule>)
                return x;
            else if constexpr (std::is_same_v<T, ModularRule>)
                return x % src.modulus;
            else
                return x < src.partition.size() ? src.partition.representative(x) : x;
        },
        source_);
}

bool Relation::holds(Nat x, Nat y) const
{
    return representative(x) == representative(y);
}

std::optional<Nat> Relation::global_class_count() const
{
    if (const auto* m = std::get_if<ModularRule>(&source_))
        return m->modulus;
    return std::nullopt;
}

std::optional<Nat> Relation::modulus() const
{
    if (const auto* m = std::get_if<ModularRule>(&source_))
        return m->modulus;
    return std::nullopt;
}

Partition Relation::restrict(Nat bound) const
{
    require_decided(bound);
    if (const auto* t = std::get_if<Tabulated>(&source_); t && bound < t->partition.size())
        return t->partition.prefix(bound);
    if (bound >= kUnbounded - 1)
        throw WindowError("cannot materialize an unbounded window");
    std::vector<Nat> rep(bound + 1);
    for (Nat x = 0; x <= bound; ++x)
        rep[x] = representative(x);
    return Partition::from_representatives(std::move(rep));
}

const Enumeration* Relation::enumeration() const
{
    if (const auto* t = std::get_if<Tabulated>(&source_))
        return t->enumeration.get();
    return nullptr;
}

const ClosureLog& Relation::log() const
{
    static const ClosureLog empty;
    if (const auto* t = std::get_if<Tabulated>(&source_); t && t->log)
        return *t->log;
    return empty;
}

std::string Relation::describe() const
{
    std::ostringstream out;
    std::visit(
        [&](const auto& src) {
            using T = std::decay_t<decltype(src)>;
            if constexpr (std::is_same_v<T, IdentityRule>)
                out << "Id";
            else if constexpr (std::is_same_v<T, ModularRule>)
                out << "Id_" << src.modulus;
            else if (kind_ == RelationKind::ceer)
                out << "ceer(" << src.enumeration->pairs().size() << " pairs, " << src.enumeration->stage_count()
                    << " stages)";
            else
                out << "construction(window " << window_ << ", " << src.partition.class_count() << " classes)";
        },
        source_);
    return out.str();
}

Relation make_id()
{
    return Relation::identity();
}

Relation make_id_n(Nat n)
{
    return Relation::modular(n);
}

std::vector<Nat> least_representatives(const Relation& r, Nat bound)
{
    return r.restrict(bound).representatives();
}

std::vector<Nat> class_of(const Relation& r, Nat x, Nat bound)
{
    if (x > bound)
        throw WindowError("element " + std::to_string(x) + " lies past the query bound " + std::to_string(bound));
    return r.restrict(bound).members(x);
}

} // namespace eqrel
