#pragma once

#include "eqrel/types.hpp"

#include <optional>
#include <set>
#include <vector>

namespace eqrel {

struct ResidueRule {
    Nat modulus = 1;
    std::set<Nat> residues;

    bool operator==(const ResidueRule&) const = default;
};

/*
 * Explicit decidable stand-in for an oracle set: a finite member list,
 * optionally joined with every number whose residue mod m is listed.
 */
class OracleSet {
public:
    OracleSet() = default;
    explicit OracleSet(std::set<Nat> members, std::optional<ResidueRule> rule = std::nullopt);

    static OracleSet residues(Nat modulus, std::set<Nat> residues);

    bool contains(Nat x) const;

    // True when membership is decided by the finite list alone.
    bool finite() const { return !rule_ || rule_->residues.empty(); }

    const std::set<Nat>& members() const { return members_; }
    const std::optional<ResidueRule>& rule() const { return rule_; }

    // Members in [0, limit), ascending.
    std::vector<Nat> members_below(Nat limit) const;

    bool operator==(const OracleSet&) const = default;

private:
    std::set<Nat> members_;
    std::optional<ResidueRule> rule_;
};

} // namespace eqrel
