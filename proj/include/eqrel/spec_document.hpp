#pragma once

#include "eqrel/constructions.hpp"
#include "eqrel/oracle_set.hpp"
#include "eqrel/reduction_fn.hpp"
#include "eqrel/types.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace eqrel::spec {

// Relation expressions, kept syntactic; evaluation happens in the runner.
struct IdExpr {
    bool operator==(const IdExpr&) const = default;
};
struct IdnExpr {
    Nat modulus = 1;
    bool operator==(const IdnExpr&) const = default;
};
struct CeerExpr {
    std::vector<std::vector<NatPair>> stages;
    bool operator==(const CeerExpr&) const = default;
};
struct CloseExpr {
    std::string base;
    std::vector<NatPair> pairs;
    std::optional<Nat> bound;
    bool operator==(const CloseExpr&) const = default;
};
struct ConstructExpr {
    ConstructionVariant variant = ConstructionVariant::pair_merge;
    std::string base;
    std::string oracle_b;
    std::optional<std::string> oracle_c;
    std::optional<Nat> bound;
    bool operator==(const ConstructExpr&) const = default;
};

using RelExpr = std::variant<IdExpr, IdnExpr, CeerExpr, CloseExpr, ConstructExpr>;

enum class DeclKind { rel, set, fn, seq };

const char* to_string(DeclKind kind);

struct Declaration {
    DeclKind kind = DeclKind::rel;
    std::string name;
    // RelExpr for rel, OracleSet for set, ReductionFn for fn, ordered list for seq
    std::variant<RelExpr, OracleSet, ReductionFn, std::vector<Nat>> value;

    bool operator==(const Declaration&) const = default;
};

enum class OutputFormat { csv, dot, text };

const char* to_string(OutputFormat format);
std::optional<OutputFormat> parse_format(const std::string& word);

struct CommandOptions {
    std::optional<Nat> bound;
    std::optional<Nat> image_bound;
    std::optional<Nat> threshold;
    std::optional<OutputFormat> format;

    bool operator==(const CommandOptions&) const = default;
};

enum class CommandKind {
    classes,
    closure,
    construct,
    reduce_check,
    reduce_search,
    reduce_assert,
    audit_minimality,
    audit_darkness,
    audit_incomparability,
    chain,
    collapse_map,
    witness_map,
};

/*
 * One operation invocation. `names` holds the positional references in the
 * order they appear in the canonical syntax:
 *
 *   classes R                         names = {R}
 *   closure R with [(x,y), ...]       names = {R}, pairs
 *   construct thm21-e R B             names = {R, B}       (prop31: {R, B, C})
 *   reduce check f R -> S             names = {f, R, S}
 *   reduce search|assert R -> S       names = {R, S}
 *   audit minimality R W              names = {R, W}
 *   audit darkness R [f, ...]         names = {R, f, ...}
 *   audit incomparability R S         names = {R, S}
 *   chain f g from A steps N          names = {f, g}, start, steps
 *   collapse-map f E / witness-map f E names = {f, E}
 */
struct Command {
    CommandKind kind = CommandKind::classes;
    ConstructionVariant variant = ConstructionVariant::pair_merge;
    std::vector<std::string> names;
    std::vector<NatPair> pairs;
    Nat start = 0;
    Nat steps = 0;
    CommandOptions options;

    bool operator==(const Command&) const = default;
};

struct SpecDocument {
    CommandOptions defaults;
    std::vector<Declaration> declarations;
    std::vector<Command> commands;

    const Declaration* find(const std::string& name) const;

    bool operator==(const SpecDocument&) const = default;
};

} // namespace eqrel::spec
