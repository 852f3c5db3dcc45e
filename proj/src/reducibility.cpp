#include "eqrel/reducibility.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace eqrel {

const char* to_string(VerdictStatus status)
{
    switch (status) {
    case VerdictStatus::valid:
        return "valid";
    case VerdictStatus::invalid:
        return "invalid";
    case VerdictStatus::no_witness:
        return "no-witness";
    case VerdictStatus::witness:
        return "witness";
    }
    return "?";
}

namespace {

void require_window(const Relation& r, Nat bound, const char* what)
{
    if (bound > r.window_bound())
        throw WindowError(std::string(what) + " bound " + std::to_string(bound) + " exceeds the decided window [0, " +
                          std::to_string(r.window_bound()) + "]");
}

Nat image_in(const ReductionFn& f, Nat x, const Relation& target)
{
    const Nat v = f(x);
    if (!target.decided(v))
        throw WindowError("image f(" + std::to_string(x) + ") = " + std::to_string(v) +
                          " exceeds the target window [0, " + std::to_string(target.window_bound()) + "]");
    return v;
}

bool pairwise_inequivalent(const std::vector<Nat>& xs, const Relation& r)
{
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (r.holds(xs[i], xs[j]))
                return false;
    return true;
}

} // namespace

bool PigeonholeCertificate::recheck(const Relation& source, const Relation& target) const
{
    if (target.global_class_count() != target_class_count)
        return false;
    if (target_representatives.size() != target_class_count || !pairwise_inequivalent(target_representatives, target))
        return false;
    return source_representatives.size() > target_class_count &&
           pairwise_inequivalent(source_representatives, source);
}

std::string Verdict::summary() const
{
    std::ostringstream out;
    out << to_string(status);
    if (counterexample)
        out << " at (" << counterexample->first << "," << counterexample->second << ")";
    if (witness)
        out << ": " << witness->to_string();
    if (status == VerdictStatus::no_witness) {
        if (conclusive && certificate)
            out << " (conclusive: " << certificate->source_representatives.size()
                << " pairwise inequivalent source elements, target has exactly " << certificate->target_class_count
                << " classes)";
        else
            out << " (bound-relative, window " << bound << ")";
    }
    return out.str();
}

Verdict verify_reduction(const ReductionFn& f, const Relation& r, const Relation& s, Nat bound)
{
    require_window(r, bound, "source");
    std::vector<Nat> src(bound + 1);
    std::vector<Nat> dst(bound + 1);
    for (Nat x = 0; x <= bound; ++x) {
        src[x] = r.representative(x);
        dst[x] = s.representative(image_in(f, x, s));
    }

    // f is a reduction on the window iff r-classes map injectively onto s-classes.
    std::unordered_map<Nat, Nat> forward;
    std::unordered_map<Nat, Nat> backward;
    bool consistent = true;
    for (Nat x = 0; x <= bound && consistent; ++x) {
        const auto [fit, fnew] = forward.try_emplace(src[x], dst[x]);
        const auto [bit, bnew] = backward.try_emplace(dst[x], src[x]);
        consistent = fit->second == dst[x] && bit->second == src[x];
    }

    Verdict v;
    v.bound = bound;
    if (consistent) {
        v.status = VerdictStatus::valid;
        return v;
    }
    v.status = VerdictStatus::invalid;
    for (Nat x = 0; x <= bound; ++x)
        for (Nat y = x + 1; y <= bound; ++y)
            if ((src[x] == src[y]) != (dst[x] == dst[y])) {
                v.counterexample = NatPair{x, y};
                return v;
            }
    return v;
}

Verdict search_reduction(const Relation& r, const Relation& s, Nat bound, Nat image_bound)
{
    const Partition source = r.restrict(bound);
    require_window(s, image_bound, "image");
    const Partition target = s.restrict(image_bound);
    const auto& reps = source.representatives();

    Verdict v;
    v.bound = bound;

    if (reps.size() > target.class_count()) {
        v.status = VerdictStatus::no_witness;
        const auto total = s.global_class_count();
        if (total && *total == target.class_count()) {
            v.conclusive = true;
            v.certificate = PigeonholeCertificate{reps, *total, target.representatives()};
        }
        return v;
    }

    // Depth-first over representatives; candidates ascend, so the first
    // complete assignment is the lexicographic minimum.
    std::vector<Nat> images;
    std::vector<bool> used(target.class_count(), false);
    std::vector<Nat> next_candidate(reps.size() + 1, 0);
    while (images.size() < reps.size()) {
        const std::size_t depth = images.size();
        Nat c = next_candidate[depth];
        while (c <= image_bound && used[target.class_index(c)])
            ++c;
        if (c > image_bound) {
            if (depth == 0)
                break;
            next_candidate[depth] = 0;
            used[target.class_index(images.back())] = false;
            next_candidate[depth - 1] = images.back() + 1;
            images.pop_back();
            continue;
        }
        images.push_back(c);
        used[target.class_index(c)] = true;
        next_candidate[depth] = c + 1;
    }
    if (images.size() < reps.size()) {
        v.status = VerdictStatus::no_witness;
        return v;
    }

    std::vector<Nat> table(bound + 1);
    for (Nat x = 0; x <= bound; ++x)
        table[x] = images[source.class_index(x)];
    TailRule tail = TailIdentity{};
    if (const auto m = r.modulus(); m && bound + 1 >= *m) {
        TailResidue residue;
        for (Nat i = 0; i < *m; ++i)
            residue.values.push_back(table[i]);
        tail = std::move(residue);
    }
    v.status = VerdictStatus::witness;
    v.witness = ReductionFn(std::move(table), std::move(tail)).normalized();
    return v;
}

ReductionFn collapse_map(const ReductionFn& f, const Relation& e, Nat bound)
{
    std::vector<Nat> table(bound + 1);
    for (Nat x = 0; x <= bound; ++x)
        table[x] = e.representative(image_in(f, x, e));
    const Nat fallback = table[0];
    return ReductionFn(std::move(table), TailConstant{fallback}).normalized();
}

ReductionFn witness_map(const ReductionFn& f, const Enumeration& e_enum, const Relation& e, Nat bound)
{
    require_window(e, bound, "witness");
    // class representative -> (enumeration key of the chosen image, least preimage)
    std::map<Nat, std::pair<Nat, Nat>> best;
    for (Nat z = 0; z <= bound; ++z) {
        const Nat v = image_in(f, z, e);
        const std::pair<Nat, Nat> key{e_enum.order_key(v), z};
        auto [it, inserted] = best.try_emplace(e.representative(v), key);
        if (!inserted && key < it->second)
            it->second = key;
    }
    std::vector<Nat> table(bound + 1);
    for (Nat x = 0; x <= bound; ++x) {
        const auto it = best.find(e.representative(x));
        if (it == best.end())
            throw CoverageError("the class of " + std::to_string(x) + " is disjoint from the range of f on [0, " +
                                std::to_string(bound) + "]; use collapse_map instead");
        table[x] = it->second.second;
    }
    return ReductionFn(std::move(table), TailIdentity{}).normalized();
}

std::vector<Nat> build_chain(const ReductionFn& f, const ReductionFn& g, Nat a, Nat n)
{
    std::vector<Nat> chain{a};
    chain.reserve(n + 1);
    for (Nat i = 0; i < n; ++i)
        chain.push_back(g(f(chain.back())));
    return chain;
}

Verdict class_image_check(const ReductionFn& f, const Relation& s, const Relation& t, Nat x0, Nat bound)
{
    require_window(s, bound, "source");
    if (x0 > bound)
        throw WindowError("x0 = " + std::to_string(x0) + " lies past the bound " + std::to_string(bound));
    const Nat target = t.representative(image_in(f, x0, t));
    Verdict v;
    v.bound = bound;
    for (Nat x = 0; x <= bound; ++x) {
        const bool in_source = s.holds(x, x0);
        const bool in_target = t.representative(image_in(f, x, t)) == target;
        if (in_source != in_target) {
            v.status = VerdictStatus::invalid;
            v.counterexample = NatPair{x0, x};
            return v;
        }
    }
    v.status = VerdictStatus::valid;
    return v;
}

} // namespace eqrel
