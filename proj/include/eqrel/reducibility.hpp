#pragma once

#include "eqrel/enumeration.hpp"
#include "eqrel/reduction_fn.hpp"
#include "eqrel/relation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqrel {

enum class VerdictStatus { valid, invalid, no_witness, witness };

const char* to_string(VerdictStatus status);

/*
 * Finite certificate that no reduction exists at all: the source window has
 * pairwise inequivalent elements outnumbering every class of the target.
 * Only issued when the target's global class count is known.
 */
struct PigeonholeCertificate {
    std::vector<Nat> source_representatives; // pairwise inequivalent in the source
    Nat target_class_count = 0;              // exact, on all of omega
    std::vector<Nat> target_representatives; // one per target class

    // Re-checks the certificate by counting, independently of the search.
    bool recheck(const Relation& source, const Relation& target) const;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::valid;
    Nat bound = 0;
    std::optional<NatPair> counterexample;
    std::optional<ReductionFn> witness;
    bool conclusive = false;
    std::optional<PigeonholeCertificate> certificate;

    std::string summary() const;
};

// valid iff x r y <=> f(x) s f(y) for all x, y <= bound; otherwise the
// lexicographically least counterexample (x, y) with x < y.
Verdict verify_reduction(const ReductionFn& f, const Relation& r, const Relation& s, Nat bound);

/*
 * Searches, in lexicographic order of (representative of r, candidate image),
 * for a class-respecting map from the r-classes on [0, bound] into
 * s-elements <= image_bound, and extends it to a ReductionFn. A no-witness
 * verdict is conclusive only with a pigeonhole certificate.
 */
Verdict search_reduction(const Relation& r, const Relation& s, Nat bound, Nat image_bound);

// h(x) = least representative of the e-class of f(x), tabulated on [0, bound]; range(h) is finite.
ReductionFn collapse_map(const ReductionFn& f, const Relation& e, Nat bound);

/*
 * g(x) = least z <= bound such that f(z) is the first-enumerated element of
 * [x]_e met by f on [0, bound]. Throws CoverageError if some class meeting
 * the window is missed by f.
 */
ReductionFn witness_map(const ReductionFn& f, const Enumeration& e_enum, const Relation& e, Nat bound);

// (a_0, ..., a_n) with a_0 = a and a_{i+1} = g(f(a_i)).
std::vector<Nat> build_chain(const ReductionFn& f, const ReductionFn& g, Nat a, Nat n);

// valid iff for all x <= bound: x s x0 <=> f(x) t f(x0); counterexample is (x0, x).
Verdict class_image_check(const ReductionFn& f, const Relation& s, const Relation& t, Nat x0, Nat bound);

} // namespace eqrel
