#pragma once

#include "eqrel/enumeration.hpp"
#include "eqrel/partition.hpp"
#include "eqrel/types.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace eqrel {

enum class RelationKind { rule, ceer, construction };

const char* to_string(RelationKind kind);

enum class MergeOrigin { base, extra };

struct MergeRecord {
    Nat x = 0;
    Nat y = 0;
    MergeOrigin origin = MergeOrigin::extra;

    bool operator==(const MergeRecord&) const = default;
};

// Provenance of a closure: the union-find merges that changed the partition, plus free-form notes.
struct ClosureLog {
    std::vector<MergeRecord> merges;
    std::vector<std::string> notes;
};

/*
 * An equivalence relation on omega, decided on [0, window_bound()].
 *
 * Every relation is represented canonically by its least-element map:
 * holds(x, y) iff representative(x) == representative(y). Rules (Id, Id_n)
 * and finite ceers are decided everywhere; constructions carry an explicit
 * partition of their window.
 */
class Relation {
public:
    static Relation identity();
    static Relation modular(Nat modulus);
    static Relation ceer(Enumeration enumeration);
    static Relation construction(Partition partition, ClosureLog log = {});

    RelationKind kind() const { return kind_; }
    Nat window_bound() const { return window_; }
    bool decided(Nat x) const { return x <= window_; }

    bool holds(Nat x, Nat y) const;
    Nat representative(Nat x) const;

    // Exact number of classes on all of omega, when known (Id_n has n).
    std::optional<Nat> global_class_count() const;

    // Partition of [0, bound]; throws WindowError past the window.
    Partition restrict(Nat bound) const;

    // Non-null for ceers.
    const Enumeration* enumeration() const;
    const ClosureLog& log() const;

    // The rule modulus for Id_n (Id has none).
    std::optional<Nat> modulus() const;

    std::string describe() const;

private:
    struct IdentityRule {};
    struct ModularRule {
        Nat modulus;
    };
    struct Tabulated {
        Partition partition; // for ceers, elements past the support are singletons
        std::shared_ptr<const Enumeration> enumeration;
        std::shared_ptr<const ClosureLog> log;
    };

    Relation(RelationKind kind, Nat window, std::variant<IdentityRule, ModularRule, Tabulated> source);

    void require_decided(Nat x) const;

    RelationKind kind_;
    Nat window_;
    std::variant<IdentityRule, ModularRule, Tabulated> source_;
};

Relation make_id();
Relation make_id_n(Nat n);

// Strictly increasing least representatives of the classes meeting [0, bound]; a_0 = 0.
std::vector<Nat> least_representatives(const Relation& r, Nat bound);

// {y <= bound : x r y}, ascending.
std::vector<Nat> class_of(const Relation& r, Nat x, Nat bound);

} // namespace eqrel
