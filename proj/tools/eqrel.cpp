// eqrel: command-line front end for the relation-spec workbench.

#include "eqrel/runner.hpp"
#include "eqrel/spec_parser.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace eqrel::spec;

struct Common {
    std::string spec_file;
    std::vector<std::string> decls;
    std::optional<eqrel::Nat> bound;
    std::optional<eqrel::Nat> image_bound;
    std::optional<eqrel::Nat> threshold;
    std::string out_dir;
    std::string format;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void add_common(CLI::App* app, Common& c, bool with_spec = true)
{
    if (with_spec) {
        app->add_option("--spec", c.spec_file, "Relation-spec document providing declarations");
        app->add_option("--decl", c.decls, "Extra declaration line, e.g. 'rel R = idn 3' (repeatable)");
    }
    app->add_option("--bound", c.bound, "Window bound");
    app->add_option("--image-bound", c.image_bound, "Image window bound for reduction search");
    app->add_option("--threshold", c.threshold, "Class-count threshold for the minimality audit");
    app->add_option("--out", c.out_dir, "Directory for output artifacts (default: $EQREL_OUT_DIR)");
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "dot", "text"}));
}

RunOptions run_options(const Common& c)
{
    RunOptions opts;
    if (!c.out_dir.empty())
        opts.out_dir = c.out_dir;
    else if (const char* env = std::getenv("EQREL_OUT_DIR"); env && *env)
        opts.out_dir = env;
    if (!c.format.empty())
        opts.format = parse_format(c.format);
    return opts;
}

int execute(const SpecDocument& doc, const RunOptions& opts)
{
    const RunResult result = run(doc, opts);
    for (const auto& a : result.artifacts)
        std::cout << "==> " << a.name << " <==\n" << a.content;
    std::cerr << result.diagnostics;
    return static_cast<int>(result.exit_code);
}

// Parses declarations plus a single command line built from flags.
int run_single(const Common& c, const std::string& command_text)
{
    std::string text;
    if (!c.spec_file.empty())
        text = read_file(c.spec_file) + "\n";
    for (const auto& d : c.decls)
        text += d + "\n";
    SpecDocument doc = parse_spec(text);
    doc.commands.clear();

    std::string line = command_text;
    if (c.bound)
        line += " bound " + std::to_string(*c.bound);
    if (c.image_bound)
        line += " image-bound " + std::to_string(*c.image_bound);
    if (c.threshold)
        line += " threshold " + std::to_string(*c.threshold);
    const SpecDocument with_command = parse_spec(serialize(doc) + line + "\n");
    return execute(with_command, run_options(c));
}

std::string pair_list(const std::vector<std::string>& pairs)
{
    std::string out = "[";
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out += (i ? ", (" : "(") + pairs[i] + ")";
    return out + "]";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"eqrel: equivalence relations under computable reducibility, on finite windows"};
    app.require_subcommand(1);

    Common common;
    std::string file;
    std::function<int()> action;

    auto* run_cmd = app.add_subcommand("run", "Execute every command in a relation-spec document");
    run_cmd->add_option("file", file, "Document path")->required();
    add_common(run_cmd, common, false);
    run_cmd->callback([&] {
        action = [&] { return execute(parse_spec(read_file(file)), run_options(common)); };
    });

    auto* parse_cmd = app.add_subcommand("parse", "Parse a document and print its canonical form");
    parse_cmd->add_option("file", file, "Document path")->required();
    parse_cmd->callback([&] {
        action = [&] {
            std::cout << serialize(parse_spec(read_file(file)));
            return 0;
        };
    });

    std::string rel, other, fn, set, set_c, from, to, f_name, g_name;
    std::vector<std::string> pairs, fns;
    eqrel::Nat start = 0, steps = 0;

    auto* classes = app.add_subcommand("classes", "Class table of a relation on the window");
    add_common(classes, common);
    classes->add_option("--rel", rel)->required();
    classes->callback([&] { action = [&] { return run_single(common, "classes " + rel); }; });

    auto* closure = app.add_subcommand("closure", "Equivalence closure of a relation plus extra pairs");
    add_common(closure, common);
    closure->add_option("--rel", rel)->required();
    closure->add_option("--pair", pairs, "Pair 'x,y' to merge (repeatable)");
    closure->callback([&] { action = [&] { return run_single(common, "closure " + rel + " with " + pair_list(pairs)); }; });

    auto* construct = app.add_subcommand("construct", "Build a closure-based construction over a base relation");
    construct->require_subcommand(1);
    const std::pair<const char*, const char*> variants[] = {
        {"thm21-e", "Merge the base classes of a_2j and a_2j+1 for j in B"},
        {"thm21-f", "Merge the base classes of a_2j and a_2j+1 for j not in B"},
        {"prop31", "Merge all a_2i with i in B into one class and all a_2i+1 with i in C into another"},
    };
    for (const auto& [variant, help] : variants) {
        auto* sub = construct->add_subcommand(variant, help);
        add_common(sub, common);
        sub->add_option("--base", rel)->required();
        sub->add_option("--oracle", set, "Oracle set B")->required();
        if (std::string(variant) == "prop31")
            sub->add_option("--oracle-c", set_c, "Oracle set C")->required();
        sub->callback([&, variant] {
            action = [&, variant] {
                std::string line = std::string("construct ") + variant + " " + rel + " " + set;
                if (!set_c.empty())
                    line += " " + set_c;
                return run_single(common, line);
            };
        });
    }

    auto* reduce = app.add_subcommand("reduce", "Check, search or assert a reduction");
    reduce->require_subcommand(1);
    for (const char* mode : {"check", "search", "assert"}) {
        auto* sub = reduce->add_subcommand(mode, std::string(mode) == "check"    ? "Verify a given function on the window"
                                                  : std::string(mode) == "search" ? "Search for a reduction on the window"
                                                                                  : "Search and exit 3 if none is found");
        add_common(sub, common);
        if (std::string(mode) == "check")
            sub->add_option("--fn", fn)->required();
        sub->add_option("--from", from)->required();
        sub->add_option("--to", to)->required();
        sub->callback([&, mode] {
            action = [&, mode] {
                std::string line = std::string("reduce ") + mode + " ";
                if (!fn.empty())
                    line += fn + " ";
                return run_single(common, line + from + " -> " + to);
            };
        });
    }

    auto* audit = app.add_subcommand("audit", "Bounded evidence reports");
    audit->require_subcommand(1);
    auto* minimality = audit->add_subcommand("minimality", "Classes met by a finite stand-in for a c.e. set");
    add_common(minimality, common);
    minimality->add_option("--rel", rel)->required();
    minimality->add_option("--set", set, "seq or set declaration standing in for a c.e. set")->required();
    minimality->callback([&] { action = [&] { return run_single(common, "audit minimality " + rel + " " + set); }; });
    auto* darkness = audit->add_subcommand("darkness", "Evidence against incomparability with Id");
    add_common(darkness, common);
    darkness->add_option("--rel", rel)->required();
    darkness->add_option("--fn", fns, "Candidate Id -> R function (repeatable)");
    darkness->callback([&] {
        action = [&] {
            std::string list;
            for (std::size_t i = 0; i < fns.size(); ++i)
                list += (i ? ", " : "") + fns[i];
            return run_single(common, "audit darkness " + rel + " [" + list + "]");
        };
    });
    auto* incomparability = audit->add_subcommand("incomparability", "Search reductions in both directions");
    add_common(incomparability, common);
    incomparability->add_option("--rel", rel)->required();
    incomparability->add_option("--other", other)->required();
    incomparability->callback(
        [&] { action = [&] { return run_single(common, "audit incomparability " + rel + " " + other); }; });

    auto* chain = app.add_subcommand("chain", "Iterate a_{i+1} = g(f(a_i))");
    add_common(chain, common);
    chain->add_option("--f", f_name)->required();
    chain->add_option("--g", g_name)->required();
    chain->add_option("--start", start)->required();
    chain->add_option("--steps", steps)->required();
    chain->callback([&] {
        action = [&] {
            return run_single(common, "chain " + f_name + " " + g_name + " from " + std::to_string(start) + " steps " +
                                          std::to_string(steps));
        };
    });

    for (const char* name : {"collapse-map", "witness-map"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "collapse-map"
                                                 ? "Collapse f onto least representatives of E"
                                                 : "Invert f class-wise using the first-enumerated image");
        add_common(sub, common);
        sub->add_option("--fn", fn)->required();
        sub->add_option("--rel", rel)->required();
        sub->callback([&, name] { action = [&, name] { return run_single(common, std::string(name) + " " + fn + " " + rel); }; });
    }

    CLI11_PARSE(app, argc, argv);
    try {
        return action ? action() : 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::internal);
    }
}
