#pragma once

#include "eqrel/reducibility.hpp"
#include "eqrel/reduction_fn.hpp"
#include "eqrel/relation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqrel {

enum class Conclusiveness { conclusive, bound_relative };

const char* to_string(Conclusiveness c);

struct Finding {
    std::string check;
    std::string outcome;
    std::string witness; // certificate or supporting data, human-readable
    Conclusiveness conclusiveness = Conclusiveness::bound_relative;
    std::vector<Nat> values;                          // machine-readable data behind `witness`
    std::optional<PigeonholeCertificate> certificate; // present on every conclusive finding
};

/*
 * Window-scale evidence about a degree-theoretic hypothesis. Findings marked
 * conclusive carry a finite certificate; everything else only speaks about
 * the window it was computed on.
 */
struct AuditReport {
    std::string relation_id;
    Nat bound = 0;
    std::vector<Finding> findings;

    bool has_violation_evidence() const;
    std::string to_text() const;
    std::string to_csv() const;
};

inline constexpr const char* kViolationEvidence = "violation-evidence";

/*
 * Counts the r-classes on [0, bound] met by the c.e.-set stand-in w.
 * Outcome is violation-evidence when more than `threshold` classes are met
 * but some are missed; threshold defaults to half the window's class count.
 */
AuditReport minimality_criterion(const Relation& r, const std::vector<Nat>& w, Nat bound,
                                 std::optional<Nat> threshold = std::nullopt, std::string relation_id = "R");

/*
 * For each candidate f, checks whether f sends [0, bound] to pairwise
 * r-inequivalent elements (an Id -> r fragment, evidence against darkness),
 * and iterates f from an element whose class f misses, reporting how many
 * distinct classes the chain visits. Never confirms darkness.
 */
AuditReport darkness_evidence(const Relation& r, const std::vector<ReductionFn>& candidates, Nat bound,
                              std::string relation_id = "R");

// search_reduction in both directions.
AuditReport incomparability_refute(const Relation& r, const Relation& s, Nat bound, Nat image_bound,
                                   std::string r_id = "R", std::string s_id = "S");

} // namespace eqrel
