#include "eqrel/enumeration.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace eqrel {

Enumeration::Enumeration(std::vector<NatPair> pairs, std::vector<std::size_t> stage_marks)
    : pairs_(std::move(pairs)), marks_(std::move(stage_marks))
{
    if (marks_.empty() && !pairs_.empty())
        throw InvalidArgument("enumeration has pairs but no stage marks");
    if (!std::is_sorted(marks_.begin(), marks_.end()))
        throw InvalidArgument("enumeration stage marks must be non-decreasing");
    if (!marks_.empty() && marks_.back() != pairs_.size())
        throw InvalidArgument("last stage mark " + std::to_string(marks_.back()) +
                              " does not match pair count " + std::to_string(pairs_.size()));
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const auto [x, y] = pairs_[i];
        if (std::max(x, y) >= kUnbounded - 1)
            throw InvalidArgument("enumerated element too large");
        support_ = std::max(support_, std::max(x, y) + 1);
        first_seen_.try_emplace(x, 2 * i);
        first_seen_.try_emplace(y, 2 * i + 1);
    }
}

Enumeration Enumeration::from_stages(const std::vector<std::vector<NatPair>>& stages)
{
    std::vector<NatPair> pairs;
    std::vector<std::size_t> marks;
    for (const auto& stage : stages) {
        pairs.insert(pairs.end(), stage.begin(), stage.end());
        marks.push_back(pairs.size());
    }
    return Enumeration(std::move(pairs), std::move(marks));
}

std::vector<std::vector<NatPair>> Enumeration::stages() const
{
    std::vector<std::vector<NatPair>> out;
    std::size_t begin = 0;
    for (const std::size_t end : marks_) {
        out.emplace_back(pairs_.begin() + static_cast<std::ptrdiff_t>(begin),
                         pairs_.begin() + static_cast<std::ptrdiff_t>(end));
        begin = end;
    }
    return out;
}

Partition Enumeration::replay(std::size_t stage_count) const
{
    if (stage_count > marks_.size())
        throw InvalidArgument("replay past the last stage");
    UnionFind uf(support_);
    const std::size_t end = stage_count == 0 ? 0 : marks_[stage_count - 1];
    for (std::size_t i = 0; i < end; ++i)
        uf.unite(pairs_[i].first, pairs_[i].second);
    return Partition::from_union_find(uf);
}

Nat Enumeration::order_key(Nat x) const
{
    if (const auto it = first_seen_.find(x); it != first_seen_.end())
        return it->second;
    return 2 * pairs_.size() + x;
}

} // namespace eqrel
