#include "eqrel/oracle_set.hpp"

#include <string>
#include <utility>

namespace eqrel {

OracleSet::OracleSet(std::set<Nat> members, std::optional<ResidueRule> rule)
    : members_(std::move(members)), rule_(std::move(rule))
{
    if (rule_) {
        if (rule_->modulus == 0)
            throw InvalidArgument("residue rule modulus must be positive");
        for (const Nat r : rule_->residues)
            if (r >= rule_->modulus)
                throw InvalidArgument("residue " + std::to_string(r) + " is not below modulus " +
                                      std::to_string(rule_->modulus));
    }
}

OracleSet OracleSet::residues(Nat modulus, std::set<Nat> residues)
{
    return OracleSet({}, ResidueRule{modulus, std::move(residues)});
}

bool OracleSet::contains(Nat x) const
{
    if (members_.count(x) != 0)
        return true;
    return rule_ && rule_->residues.count(x % rule_->modulus) != 0;
}

std::vector<Nat> OracleSet::members_below(Nat limit) const
{
    std::vector<Nat> out;
    for (Nat x = 0; x < limit; ++x)
        if (contains(x))
            out.push_back(x);
    return out;
}

} // namespace eqrel
