#include "eqrel/runner.hpp"

#include "eqrel/audit.hpp"
#include "eqrel/closure.hpp"
#include "eqrel/constructions.hpp"
#include "eqrel/reducibility.hpp"
#include "eqrel/spec_parser.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace eqrel::spec {

namespace {

std::string join_nats(const std::vector<Nat>& xs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

class UsageError : public Error {
public:
    using Error::Error;
};

const char* command_name(CommandKind kind)
{
    switch (kind) {
    case CommandKind::classes:
        return "classes";
    case CommandKind::closure:
        return "closure";
    case CommandKind::construct:
        return "construct";
    case CommandKind::reduce_check:
        return "reduce-check";
    case CommandKind::reduce_search:
        return "reduce-search";
    case CommandKind::reduce_assert:
        return "reduce-assert";
    case CommandKind::audit_minimality:
        return "audit-minimality";
    case CommandKind::audit_darkness:
        return "audit-darkness";
    case CommandKind::audit_incomparability:
        return "audit-incomparability";
    case CommandKind::chain:
        return "chain";
    case CommandKind::collapse_map:
        return "collapse-map";
    case CommandKind::witness_map:
        return "witness-map";
    }
    return "command";
}

Nat require_bound(std::optional<Nat> explicit_bound, const CommandOptions& defaults, const std::string& what,
                  std::optional<Nat> fallback = std::nullopt)
{
    if (explicit_bound)
        return *explicit_bound;
    if (defaults.bound)
        return *defaults.bound;
    if (fallback)
        return *fallback;
    throw UsageError(what + " needs a bound: add `bound N` or `default bound N`");
}

std::optional<Nat> finite_window(const Relation& r)
{
    if (r.window_bound() == kUnbounded)
        return std::nullopt;
    return r.window_bound();
}

class Session {
public:
    explicit Session(const SpecDocument& doc) : doc_(doc) {}

    void evaluate_declarations()
    {
        for (const auto& d : doc_.declarations)
            if (d.kind == DeclKind::rel)
                relations_.emplace(d.name, evaluate(d.name, std::get<RelExpr>(d.value)));
    }

    const std::map<std::string, Relation>& relations() const { return relations_; }

    const Relation& rel(const std::string& name) const { return relations_.at(name); }
    const ReductionFn& fn(const std::string& name) const { return std::get<ReductionFn>(doc_.find(name)->value); }
    const OracleSet& set(const std::string& name) const { return std::get<OracleSet>(doc_.find(name)->value); }

    std::vector<Nat> elements(const std::string& name, Nat bound) const
    {
        const Declaration* d = doc_.find(name);
        if (d->kind == DeclKind::seq)
            return std::get<std::vector<Nat>>(d->value);
        const auto& s = std::get<OracleSet>(d->value);
        auto out = s.members_below(bound + 1);
        for (const Nat x : s.members())
            if (x > bound)
                out.push_back(x);
        return out;
    }

    // Returns a nonzero code for refutations or violation evidence.
    ExitCode execute(const Command& c, std::size_t index, const RunOptions& run_options, std::vector<Artifact>& out)
    {
        std::ostringstream prefix;
        prefix << std::setw(2) << std::setfill('0') << index + 1 << "-" << command_name(c.kind);
        for (const auto& n : c.names)
            prefix << "-" << n;
        const std::string base_name = prefix.str();
        const auto format = run_options.format ? run_options.format : c.options.format;
        const auto& n = c.names;
        const std::string what = "command " + std::to_string(index + 1) + " (" + command_name(c.kind) + ")";

        auto emit_partition = [&](const Relation& r, Nat bound) {
            switch (format.value_or(OutputFormat::csv)) {
            case OutputFormat::csv:
                out.push_back({base_name + ".csv", class_table_csv(r, bound)});
                break;
            case OutputFormat::dot:
                out.push_back({base_name + ".dot", partition_dot(r, bound, n.at(0))});
                break;
            case OutputFormat::text:
                out.push_back({base_name + ".txt", class_table_text(r, bound)});
                break;
            }
        };
        auto image_bound = [&](Nat bound, const Relation& target) {
            if (c.options.image_bound)
                return *c.options.image_bound;
            if (doc_.defaults.image_bound)
                return *doc_.defaults.image_bound;
            return std::min(bound, target.window_bound());
        };

        switch (c.kind) {
        case CommandKind::classes: {
            const Relation& r = rel(n.at(0));
            emit_partition(r, require_bound(c.options.bound, doc_.defaults, what, finite_window(r)));
            return ExitCode::ok;
        }
        case CommandKind::closure: {
            const Relation& base = rel(n.at(0));
            const Nat bound = require_bound(c.options.bound, doc_.defaults, what, finite_window(base));
            const Relation closed = close(MergeSpec{base, c.pairs}, bound);
            emit_partition(closed, bound);
            out.push_back({base_name + ".log.txt", merge_log_text(closed)});
            return ExitCode::ok;
        }
        case CommandKind::construct: {
            const Relation& base = rel(n.at(0));
            ConstructionSpec spec{base, set(n.at(1)), std::nullopt, c.variant};
            if (c.variant == ConstructionVariant::block_merge)
                spec.oracle_c = set(n.at(2));
            const Nat bound = require_bound(c.options.bound, doc_.defaults, what, finite_window(base));
            const Relation built = build(spec, bound);
            emit_partition(built, bound);
            out.push_back({base_name + ".log.txt", merge_log_text(built)});
            return ExitCode::ok;
        }
        case CommandKind::reduce_check: {
            const Relation& r = rel(n.at(1));
            const Nat bound = require_bound(c.options.bound, doc_.defaults, what, finite_window(r));
            const Verdict v = verify_reduction(fn(n.at(0)), r, rel(n.at(2)), bound);
            out.push_back({base_name + ".txt", n.at(0) + ": " + n.at(1) + " -> " + n.at(2) + " on [0," +
                                                   std::to_string(bound) + "]: " + v.summary() + "\n"});
            return ExitCode::ok;
        }
        case CommandKind::reduce_search:
        case CommandKind::reduce_assert: {
            const Relation& r = rel(n.at(0));
            const Relation& s = rel(n.at(1));
            const Nat bound = require_bound(c.options.bound, doc_.defaults, what, finite_window(r));
            const Verdict v = search_reduction(r, s, bound, image_bound(bound, s));
            std::string text = n.at(0) + " -> " + n.at(1) + ": " + v.summary() + "\n";
            if (v.witness)
                text += "fn witness = " + v.witness->to_string() + "\n";
            if (v.certificate) {
                const auto& cert = *v.certificate;
                text += "certificate: source representatives " + join_nats(cert.source_representatives) +
                        "; target classes " + join_nats(cert.target_representatives) + " (exactly " +
                        std::to_string(cert.target_class_count) + ")\n";
            }
            out.push_back({base_name + ".txt", text});
            return c.kind == CommandKind::reduce_assert && v.status != VerdictStatus::witness ? ExitCode::refuted
                                                                                                : ExitCode::ok;
        }
        case CommandKind::audit_minimality:
        case CommandKind::audit_darkness:
        case CommandKind::audit_incomparability: {
            const Relation& r = rel(n.at(0));
            const Nat bound = require_bound(c.options.bound, doc_.defaults, what, finite_window(r));
            AuditReport report;
            if (c.kind == CommandKind::audit_minimality) {
                auto threshold = c.options.threshold ? c.options.threshold : doc_.defaults.threshold;
                report = minimality_criterion(r, elements(n.at(1), bound), bound, threshold, n.at(0));
            } else if (c.kind == CommandKind::audit_darkness) {
                std::vector<ReductionFn> candidates;
                for (std::size_t i = 1; i < n.size(); ++i)
                    candidates.push_back(fn(n[i]));
                report = darkness_evidence(r, candidates, bound, n.at(0));
            } else {
                const Relation& s = rel(n.at(1));
                report = incomparability_refute(r, s, bound, image_bound(bound, s), n.at(0), n.at(1));
            }
            if (format == OutputFormat::csv)
                out.push_back({base_name + ".csv", report.to_csv()});
            else
                out.push_back({base_name + ".txt", report.to_text()});
            return report.has_violation_evidence() ? ExitCode::violation : ExitCode::ok;
        }
        case CommandKind::chain: {
            const auto chain = build_chain(fn(n.at(0)), fn(n.at(1)), c.start, c.steps);
            std::ostringstream csv;
            csv << "index,value\n";
            for (std::size_t i = 0; i < chain.size(); ++i)
                csv << i << "," << chain[i] << "\n";
            out.push_back({base_name + ".csv", csv.str()});
            return ExitCode::ok;
        }
        case CommandKind::collapse_map:
        case CommandKind::witness_map: {
            const ReductionFn& f = fn(n.at(0));
            const Relation& e = rel(n.at(1));
            const Nat bound = require_bound(c.options.bound, doc_.defaults, what, finite_window(e));
            ReductionFn h;
            if (c.kind == CommandKind::collapse_map) {
                h = collapse_map(f, e, bound);
            } else {
                static const Enumeration empty;
                h = witness_map(f, e.enumeration() ? *e.enumeration() : empty, e, bound);
            }
            std::ostringstream csv;
            csv << "x,f(x),value\n";
            for (Nat x = 0; x <= bound; ++x)
                csv << x << "," << f(x) << "," << h(x) << "\n";
            out.push_back({base_name + ".csv", csv.str()});
            out.push_back({base_name + ".fn.txt", "fn " + std::string(c.kind == CommandKind::collapse_map ? "h" : "g") +
                                                      " = " + h.to_string() + "\n"});
            return ExitCode::ok;
        }
        }
        return ExitCode::ok;
    }

private:
    Relation evaluate(const std::string& name, const RelExpr& e) const
    {
        const std::string what = "relation " + name;
        return std::visit(
            [&](const auto& x) -> Relation {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, IdExpr>) {
                    return make_id();
                } else if constexpr (std::is_same_v<T, IdnExpr>) {
                    return make_id_n(x.modulus);
                } else if constexpr (std::is_same_v<T, CeerExpr>) {
                    return Relation::ceer(Enumeration::from_stages(x.stages));
                } else if constexpr (std::is_same_v<T, CloseExpr>) {
                    const Relation& base = rel(x.base);
                    return close(MergeSpec{base, x.pairs}, require_bound(x.bound, doc_.defaults, what, finite_window(base)));
                } else {
                    const Relation& base = rel(x.base);
                    ConstructionSpec spec{base, set(x.oracle_b), std::nullopt, x.variant};
                    if (x.oracle_c)
                        spec.oracle_c = set(*x.oracle_c);
                    return build(spec, require_bound(x.bound, doc_.defaults, what, finite_window(base)));
                }
            },
            e);
    }

    const SpecDocument& doc_;
    std::map<std::string, Relation> relations_;
};

ExitCode classify(const std::exception& e)
{
    if (dynamic_cast<const WindowError*>(&e))
        return ExitCode::window;
    if (dynamic_cast<const CoverageError*>(&e))
        return ExitCode::precondition;
    if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const InvalidArgument*>(&e))
        return ExitCode::usage;
    return ExitCode::internal;
}

const char* error_label(ExitCode code)
{
    switch (code) {
    case ExitCode::window:
        return "window error";
    case ExitCode::precondition:
        return "precondition error";
    case ExitCode::usage:
        return "usage error";
    default:
        return "internal error";
    }
}

} // namespace

std::map<std::string, Relation> evaluate_relations(const SpecDocument& doc)
{
    Session session(doc);
    session.evaluate_declarations();
    return session.relations();
}

RunResult run(const SpecDocument& doc, const RunOptions& options)
{
    RunResult result;
    Session session(doc);
    std::size_t index = 0;
    try {
        session.evaluate_declarations();
        for (; index < doc.commands.size(); ++index) {
            const ExitCode code = session.execute(doc.commands[index], index, options, result.artifacts);
            if (code != ExitCode::ok && result.exit_code == ExitCode::ok)
                result.exit_code = code;
        }
    } catch (const std::exception& e) {
        const ExitCode code = classify(e);
        std::ostringstream msg;
        if (index < doc.commands.size())
            msg << "command " << index + 1 << " (" << serialize(doc.commands[index]) << "): ";
        else
            msg << "declarations: ";
        msg << error_label(code) << ": " << e.what() << "\n";
        result.diagnostics += msg.str();
        result.exit_code = code;
    }

    if (options.out_dir) {
        std::filesystem::create_directories(*options.out_dir);
        for (const auto& a : result.artifacts) {
            std::ofstream file(*options.out_dir / a.name, std::ios::binary);
            file << a.content;
            if (!file)
                throw Error("cannot write " + (*options.out_dir / a.name).string());
        }
    }
    return result;
}

std::string class_table_csv(const Relation& r, Nat bound)
{
    const Partition p = r.restrict(bound);
    std::ostringstream out;
    out << "element,representative,class_size_on_window\n";
    for (Nat x = 0; x <= bound; ++x)
        out << x << "," << p.representative(x) << "," << p.class_size(x) << "\n";
    return out.str();
}

std::string class_table_text(const Relation& r, Nat bound)
{
    const Partition p = r.restrict(bound);
    std::ostringstream out;
    out << p.class_count() << " classes on [0, " << bound << "]\n";
    for (const Nat a : p.representatives()) {
        out << "  [" << a << "] = {";
        const auto members = p.members(a);
        for (std::size_t i = 0; i < members.size(); ++i)
            out << (i ? ", " : "") << members[i];
        out << "}\n";
    }
    return out.str();
}

std::string partition_dot(const Relation& r, Nat bound, const std::string& graph_name)
{
    std::vector<MergeRecord> merges;
    if (r.kind() == RelationKind::construction && r.window_bound() == bound)
        merges = r.log().merges;
    else
        merges = close(MergeSpec{r, {}}, bound).log().merges;
    std::ostringstream out;
    out << "graph \"" << graph_name << "\" {\n";
    for (Nat x = 0; x <= bound; ++x)
        out << "  " << x << ";\n";
    for (const auto& m : merges)
        out << "  " << m.x << " -- " << m.y << (m.origin == MergeOrigin::extra ? " [style=bold]" : "") << ";\n";
    out << "}\n";
    return out.str();
}

std::string merge_log_text(const Relation& r)
{
    std::ostringstream out;
    for (const auto& note : r.log().notes)
        out << "note: " << note << "\n";
    for (const auto& m : r.log().merges)
        out << (m.origin == MergeOrigin::base ? "base " : "merge ") << m.x << " " << m.y << "\n";
    return out.str();
}

} // namespace eqrel::spec
