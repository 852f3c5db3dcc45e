#include "eqrel/audit.hpp"

#include "eqrel/reducibility.hpp"

#include <set>
#include <sstream>

namespace eqrel {

const char* to_string(Conclusiveness c)
{
    return c == Conclusiveness::conclusive ? "conclusive" : "bound-relative";
}

namespace {

std::string join(const std::vector<Nat>& xs, const char* sep = " ")
{
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? sep : "") << xs[i];
    return out.str();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (const char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

} // namespace

bool AuditReport::has_violation_evidence() const
{
    for (const auto& f : findings)
        if (f.outcome == kViolationEvidence)
            return true;
    return false;
}

std::string AuditReport::to_text() const
{
    std::ostringstream out;
    out << "audit of " << relation_id << " on window [0, " << bound << "]\n";
    for (const auto& f : findings)
        out << "  " << f.check << ": " << f.outcome << " [" << to_string(f.conclusiveness) << "]"
            << (f.witness.empty() ? "" : " -- " + f.witness) << "\n";
    return out.str();
}

std::string AuditReport::to_csv() const
{
    std::ostringstream out;
    out << "relation,bound,check,outcome,conclusiveness,witness\n";
    for (const auto& f : findings)
        out << csv_field(relation_id) << "," << bound << "," << csv_field(f.check) << "," << csv_field(f.outcome)
            << "," << to_string(f.conclusiveness) << "," << csv_field(f.witness) << "\n";
    return out.str();
}

AuditReport minimality_criterion(const Relation& r, const std::vector<Nat>& w, Nat bound, std::optional<Nat> threshold,
                                 std::string relation_id)
{
    const Partition window = r.restrict(bound);
    std::set<Nat> hit;
    for (const Nat x : w) {
        const Nat rep = r.representative(x);
        if (rep <= bound)
            hit.insert(rep);
    }
    std::vector<Nat> missed;
    for (const Nat a : window.representatives())
        if (hit.count(a) == 0)
            missed.push_back(a);
    const Nat limit = threshold.value_or(window.class_count() / 2);

    AuditReport report{std::move(relation_id), bound, {}};
    report.findings.push_back({"classes-hit", std::to_string(hit.size()) + " of " +
                                                  std::to_string(window.class_count()),
                               "representatives hit: " + join({hit.begin(), hit.end()}),
                               Conclusiveness::bound_relative,
                               {hit.begin(), hit.end()},
                               std::nullopt});
    report.findings.push_back({"classes-missed", std::to_string(missed.size()),
                               missed.empty() ? "none" : "representatives missed: " + join(missed),
                               Conclusiveness::bound_relative,
                               missed,
                               std::nullopt});
    const bool violation = hit.size() > limit && !missed.empty();
    report.findings.push_back({"minimality-criterion", violation ? kViolationEvidence : "consistent",
                               "threshold " + std::to_string(limit) + " classes", Conclusiveness::bound_relative,
                               {static_cast<Nat>(hit.size()), limit}, std::nullopt});
    return report;
}

AuditReport darkness_evidence(const Relation& r, const std::vector<ReductionFn>& candidates, Nat bound,
                              std::string relation_id)
{
    const Partition window = r.restrict(bound);
    const Relation id = make_id();
    AuditReport report{std::move(relation_id), bound, {}};

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const ReductionFn& f = candidates[i];
        const std::string name = "candidate-" + std::to_string(i);

        const Verdict fragment = verify_reduction(f, id, r, bound);
        if (fragment.status == VerdictStatus::valid)
            report.findings.push_back({name + "/id-fragment", "evidence-against-darkness",
                                       "f maps [0," + std::to_string(bound) + "] to pairwise inequivalent elements",
                                       Conclusiveness::bound_relative,
                                       {},
                                       std::nullopt});
        else
            report.findings.push_back({name + "/id-fragment", "fragment-invalid",
                                       "images of " + std::to_string(fragment.counterexample->first) + " and " +
                                           std::to_string(fragment.counterexample->second) + " are equivalent",
                                       Conclusiveness::bound_relative,
                                       {fragment.counterexample->first, fragment.counterexample->second},
                                       std::nullopt});

        // Start the chain in a class f misses, as in the chain argument; fall back to 0.
        std::set<Nat> hit;
        for (Nat x = 0; x <= bound; ++x)
            hit.insert(r.representative(f(x)));
        Nat start = 0;
        for (const Nat a : window.representatives())
            if (hit.count(a) == 0) {
                start = a;
                break;
            }
        auto chain = build_chain(f, ReductionFn::identity(), start, bound);
        std::size_t decided = 0;
        while (decided < chain.size() && r.decided(chain[decided]))
            ++decided;
        chain.resize(decided);

        std::set<Nat> classes;
        std::optional<NatPair> repeat;
        for (std::size_t j = 0; j < chain.size(); ++j) {
            for (std::size_t k = 0; k < j && !repeat; ++k)
                if (r.holds(chain[k], chain[j]))
                    repeat = NatPair{k, j};
            classes.insert(r.representative(chain[j]));
        }
        std::ostringstream detail;
        detail << "heuristic; chain from " << start << " visits " << classes.size() << " distinct classes over "
               << chain.size() << " decided steps";
        if (repeat)
            detail << "; a_" << repeat->first << " ~ a_" << repeat->second;
        report.findings.push_back({name + "/chain", repeat ? "chain-repeats-class" : "chain-pairwise-inequivalent",
                                   detail.str(), Conclusiveness::bound_relative, chain, std::nullopt});
    }
    report.findings.push_back({"darkness", "not-certifiable",
                               "darkness is not finitely certifiable; only refuting evidence is reported",
                               Conclusiveness::bound_relative,
                               {},
                               std::nullopt});
    return report;
}

namespace {

Finding direction_finding(const std::string& check, const Verdict& v)
{
    if (v.status == VerdictStatus::witness)
        return {check, "witnessed", v.witness->to_string(), Conclusiveness::bound_relative, {}, std::nullopt};
    if (v.conclusive && v.certificate) {
        std::ostringstream cert;
        cert << "pigeonhole: source elements {" << join(v.certificate->source_representatives, ",")
             << "} pairwise inequivalent, target has exactly " << v.certificate->target_class_count
             << " classes {" << join(v.certificate->target_representatives, ",") << "}";
        return {check, "refuted", cert.str(), Conclusiveness::conclusive, {}, v.certificate};
    }
    return {check, "no-witness", "no class-respecting map on the windows", Conclusiveness::bound_relative, {},
            std::nullopt};
}

} // namespace

AuditReport incomparability_refute(const Relation& r, const Relation& s, Nat bound, Nat image_bound, std::string r_id,
                                   std::string s_id)
{
    AuditReport report{r_id + " vs " + s_id, bound, {}};
    report.findings.push_back(direction_finding(r_id + "<=" + s_id, search_reduction(r, s, bound, image_bound)));
    report.findings.push_back(direction_finding(s_id + "<=" + r_id, search_reduction(s, r, bound, image_bound)));
    return report;
}

} // namespace eqrel
