#include "eqrel/spec_parser.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace eqrel::spec {

const char* to_string(DeclKind kind)
{
    switch (kind) {
    case DeclKind::rel:
        return "rel";
    case DeclKind::set:
        return "set";
    case DeclKind::fn:
        return "fn";
    case DeclKind::seq:
        return "seq";
    }
    return "?";
}

const char* to_string(OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::dot:
        return "dot";
    case OutputFormat::text:
        return "text";
    }
    return "?";
}

std::optional<OutputFormat> parse_format(const std::string& word)
{
    if (word == "csv")
        return OutputFormat::csv;
    if (word == "dot")
        return OutputFormat::dot;
    if (word == "text")
        return OutputFormat::text;
    return std::nullopt;
}

const Declaration* SpecDocument::find(const std::string& name) const
{
    for (const auto& d : declarations)
        if (d.name == name)
            return &d;
    return nullptr;
}

namespace {

std::string format_error(std::size_t line, std::size_t column, const std::string& message,
                         const std::vector<std::string>& expected)
{
    std::ostringstream out;
    out << "line " << line << ", column " << column << ": " << message;
    if (!expected.empty()) {
        out << "; expected ";
        for (std::size_t i = 0; i < expected.size(); ++i)
            out << (i ? (i + 1 == expected.size() ? " or " : ", ") : "") << expected[i];
    }
    return out.str();
}

} // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected)
    : Error(format_error(line, column, message, expected)), line_(line), column_(column), detail_(std::move(message)),
      expected_(std::move(expected))
{
}

namespace {

enum class Tok { word, number, punct, newline, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token& t)
{
    switch (t.kind) {
    case Tok::newline:
        return "end of line";
    case Tok::end:
        return "end of input";
    default:
        return "'" + t.text + "'";
    }
}

std::vector<Token> lex(std::string_view text)
{
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t column = 1;
    int depth = 0;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        i += n;
        column += n;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            if (depth == 0)
                out.push_back({Tok::newline, "\n", line, column});
            ++i;
            ++line;
            column = 1;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                advance(1);
        } else if (c == ' ' || c == '\t' || c == '\r') {
            advance(1);
        } else if (c == ';') {
            out.push_back({Tok::newline, ";", line, column});
            advance(1);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i;
            const std::size_t col = column;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                advance(1);
            out.push_back({Tok::number, std::string(text.substr(start, i - start)), line, col});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i;
            const std::size_t col = column;
            auto word_char = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; };
            while (i < text.size() &&
                   (word_char(text[i]) || (text[i] == '-' && i + 1 < text.size() && word_char(text[i + 1]))))
                advance(1);
            out.push_back({Tok::word, std::string(text.substr(start, i - start)), line, col});
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Tok::punct, "->", line, column});
            advance(2);
        } else if (std::string_view("={}[](),:").find(c) != std::string_view::npos) {
            if (c == '{' || c == '[' || c == '(')
                ++depth;
            else if ((c == '}' || c == ']' || c == ')') && depth > 0)
                --depth;
            out.push_back({Tok::punct, std::string(1, c), line, column});
            advance(1);
        } else {
            throw ParseError(line, column, "unexpected character '" + std::string(1, c) + "'");
        }
    }
    out.push_back({Tok::end, "", line, column});
    return out;
}

const std::vector<std::string> kStatementStarts = {
    "rel", "set", "fn", "seq", "default", "classes", "closure", "construct", "reduce", "assert",
    "audit", "chain", "collapse-map", "witness-map"};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    SpecDocument parse()
    {
        while (peek().kind != Tok::end) {
            if (peek().kind == Tok::newline) {
                ++pos_;
                continue;
            }
            statement();
            if (peek().kind != Tok::end && peek().kind != Tok::newline)
                fail("unexpected " + describe(peek()) + " after statement", {"end of line"});
        }
        return std::move(doc_);
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected = {}) const
    {
        throw ParseError(peek().line, peek().column, message, std::move(expected));
    }

    [[noreturn]] void fail_at(const Token& t, const std::string& message) const
    {
        throw ParseError(t.line, t.column, message);
    }

    bool at_word(std::string_view w) const { return peek().kind == Tok::word && peek().text == w; }
    bool at_punct(std::string_view p) const { return peek().kind == Tok::punct && peek().text == p; }

    void expect_word(std::string_view w)
    {
        if (!at_word(w))
            fail("unexpected " + describe(peek()), {"'" + std::string(w) + "'"});
        ++pos_;
    }

    void expect_punct(std::string_view p)
    {
        if (!at_punct(p))
            fail("unexpected " + describe(peek()), {"'" + std::string(p) + "'"});
        ++pos_;
    }

    std::string choose(const std::vector<std::string>& options)
    {
        if (peek().kind == Tok::word)
            for (const auto& o : options)
                if (peek().text == o) {
                    ++pos_;
                    return o;
                }
        std::vector<std::string> quoted;
        for (const auto& o : options)
            quoted.push_back("'" + o + "'");
        fail("unexpected " + describe(peek()), quoted);
    }

    Nat number()
    {
        if (peek().kind != Tok::number)
            fail("unexpected " + describe(peek()), {"a natural number"});
        Nat value = 0;
        const auto& s = peek().text;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size())
            fail("number " + s + " is out of range");
        ++pos_;
        return value;
    }

    std::string identifier()
    {
        if (peek().kind != Tok::word)
            fail("unexpected " + describe(peek()), {"a name"});
        return tokens_[pos_++].text;
    }

    std::string reference(std::initializer_list<DeclKind> kinds)
    {
        const Token& t = peek();
        const std::string name = identifier();
        const auto it = symbols_.find(name);
        if (it == symbols_.end())
            fail_at(t, "dangling reference '" + name + "': not declared before use");
        for (const DeclKind k : kinds)
            if (it->second == k)
                return name;
        std::string wanted;
        for (const DeclKind k : kinds)
            wanted += std::string(wanted.empty() ? "" : " or ") + to_string(k);
        fail_at(t, "'" + name + "' is a " + to_string(it->second) + ", expected a " + wanted);
    }

    NatPair pair()
    {
        expect_punct("(");
        const Nat x = number();
        expect_punct(",");
        const Nat y = number();
        expect_punct(")");
        return {x, y};
    }

    template <typename F>
    void comma_list(std::string_view open, std::string_view close, F item)
    {
        expect_punct(open);
        if (!at_punct(close)) {
            item();
            while (at_punct(",")) {
                ++pos_;
                item();
            }
        }
        expect_punct(close);
    }

    std::vector<NatPair> pair_list()
    {
        std::vector<NatPair> out;
        comma_list("[", "]", [&] { out.push_back(pair()); });
        return out;
    }

    std::vector<Nat> number_list(std::string_view open, std::string_view close)
    {
        std::vector<Nat> out;
        comma_list(open, close, [&] { out.push_back(number()); });
        return out;
    }

    ConstructionVariant variant()
    {
        const auto v = choose({"thm21-e", "thm21-f", "prop31"});
        if (v == "thm21-e")
            return ConstructionVariant::pair_merge;
        if (v == "thm21-f")
            return ConstructionVariant::pair_merge_complement;
        return ConstructionVariant::block_merge;
    }

    std::optional<Nat> optional_bound()
    {
        if (!at_word("bound"))
            return std::nullopt;
        ++pos_;
        return number();
    }

    void declare(DeclKind kind, const Token& name_token, Declaration decl)
    {
        if (symbols_.count(decl.name) != 0)
            fail_at(name_token, "duplicate name '" + decl.name + "'");
        symbols_.emplace(decl.name, kind);
        doc_.declarations.push_back(std::move(decl));
    }

    void statement()
    {
        const Token& head = peek();
        if (head.kind != Tok::word)
            fail("unexpected " + describe(head), kStatementStarts);
        const std::string w = head.text;
        if (w == "rel" || w == "set" || w == "fn" || w == "seq")
            declaration();
        else if (w == "default")
            default_option();
        else
            command();
    }

    void default_option()
    {
        expect_word("default");
        const Token& t = peek();
        const auto key = choose({"bound", "image-bound", "threshold"});
        auto& slot = key == "bound" ? doc_.defaults.bound
                                    : key == "image-bound" ? doc_.defaults.image_bound : doc_.defaults.threshold;
        if (slot)
            fail_at(t, "duplicate default " + key);
        slot = number();
    }

    void declaration()
    {
        const auto kw = choose({"rel", "set", "fn", "seq"});
        const Token name_token = peek();
        Declaration decl;
        decl.name = identifier();
        expect_punct("=");
        if (kw == "rel") {
            decl.kind = DeclKind::rel;
            decl.value = relation_expr();
        } else if (kw == "set") {
            decl.kind = DeclKind::set;
            decl.value = set_expr();
        } else if (kw == "fn") {
            decl.kind = DeclKind::fn;
            decl.value = fn_expr();
        } else {
            decl.kind = DeclKind::seq;
            decl.value = number_list("[", "]");
        }
        declare(decl.kind, name_token, std::move(decl));
    }

    RelExpr relation_expr()
    {
        const auto kw = choose({"id", "idn", "ceer", "close", "construct"});
        if (kw == "id")
            return IdExpr{};
        if (kw == "idn") {
            const Token& t = peek();
            const Nat n = number();
            if (n == 0)
                fail_at(t, "invalid modulus 0: idn needs n >= 1");
            return IdnExpr{n};
        }
        if (kw == "ceer") {
            CeerExpr e;
            expect_punct("{");
            expect_word("stages");
            expect_punct("=");
            comma_list("[", "]", [&] { e.stages.push_back(pair_list()); });
            expect_punct("}");
            return e;
        }
        if (kw == "close") {
            CloseExpr e;
            e.base = reference({DeclKind::rel});
            expect_word("with");
            e.pairs = pair_list();
            e.bound = optional_bound();
            return e;
        }
        ConstructExpr e;
        e.variant = variant();
        e.base = reference({DeclKind::rel});
        e.oracle_b = reference({DeclKind::set});
        if (e.variant == ConstructionVariant::block_merge)
            e.oracle_c = reference({DeclKind::set});
        e.bound = optional_bound();
        return e;
    }

    OracleSet set_expr()
    {
        const Token& t = peek();
        std::set<Nat> members;
        std::optional<ResidueRule> rule;
        if (at_punct("{")) {
            const auto xs = number_list("{", "}");
            members.insert(xs.begin(), xs.end());
            if (at_word("plus")) {
                ++pos_;
                rule = residue_rule();
            }
        } else if (at_word("residues")) {
            rule = residue_rule();
        } else {
            fail("unexpected " + describe(peek()), {"'{'", "'residues'"});
        }
        try {
            return OracleSet(std::move(members), std::move(rule));
        } catch (const InvalidArgument& e) {
            fail_at(t, e.what());
        }
    }

    ResidueRule residue_rule()
    {
        expect_word("residues");
        expect_word("mod");
        ResidueRule rule;
        rule.modulus = number();
        expect_word("of");
        const auto xs = number_list("{", "}");
        rule.residues.insert(xs.begin(), xs.end());
        return rule;
    }

    ReductionFn fn_expr()
    {
        std::vector<Nat> table;
        if (at_word("table")) {
            ++pos_;
            std::map<Nat, Nat> entries;
            const Token& open = peek();
            comma_list("{", "}", [&] {
                const Token& key_token = peek();
                const Nat key = number();
                expect_punct(":");
                if (!entries.emplace(key, number()).second)
                    fail_at(key_token, "duplicate table entry for " + std::to_string(key));
            });
            for (const auto& [key, value] : entries) {
                if (key != table.size())
                    fail_at(open, "table must cover 0.." + std::to_string(entries.size() - 1) + " without gaps");
                table.push_back(value);
            }
        }
        expect_word("tail");
        const auto kw = choose({"identity", "const", "shift", "residue"});
        TailRule tail = TailIdentity{};
        if (kw == "const") {
            tail = TailConstant{number()};
        } else if (kw == "shift") {
            tail = TailShift{number()};
        } else if (kw == "residue") {
            expect_word("mod");
            const Token& t = peek();
            const Nat m = number();
            auto values = number_list("[", "]");
            if (m == 0 || values.size() != m)
                fail_at(t, "residue tail mod " + std::to_string(m) + " needs exactly " + std::to_string(m) + " values");
            tail = TailResidue{std::move(values)};
        }
        return ReductionFn(std::move(table), std::move(tail));
    }

    void options(CommandOptions& opts)
    {
        while (peek().kind == Tok::word) {
            const Token& t = peek();
            const auto key = choose({"bound", "image-bound", "threshold", "format"});
            auto dup = [&](bool present) {
                if (present)
                    fail_at(t, "duplicate option " + key);
            };
            if (key == "bound") {
                dup(opts.bound.has_value());
                opts.bound = number();
            } else if (key == "image-bound") {
                dup(opts.image_bound.has_value());
                opts.image_bound = number();
            } else if (key == "threshold") {
                dup(opts.threshold.has_value());
                opts.threshold = number();
            } else {
                dup(opts.format.has_value());
                const auto f = choose({"csv", "dot", "text"});
                opts.format = parse_format(f);
            }
        }
    }

    void arrow_pair(Command& c)
    {
        c.names.push_back(reference({DeclKind::rel}));
        expect_punct("->");
        c.names.push_back(reference({DeclKind::rel}));
    }

    void command()
    {
        Command c;
        const auto kw = choose(kStatementStarts);
        if (kw == "classes") {
            c.kind = CommandKind::classes;
            c.names.push_back(reference({DeclKind::rel}));
        } else if (kw == "closure") {
            c.kind = CommandKind::closure;
            c.names.push_back(reference({DeclKind::rel}));
            expect_word("with");
            c.pairs = pair_list();
        } else if (kw == "construct") {
            c.kind = CommandKind::construct;
            c.variant = variant();
            c.names.push_back(reference({DeclKind::rel}));
            c.names.push_back(reference({DeclKind::set}));
            if (c.variant == ConstructionVariant::block_merge)
                c.names.push_back(reference({DeclKind::set}));
        } else if (kw == "reduce") {
            const auto mode = choose({"check", "search", "assert"});
            if (mode == "check") {
                c.kind = CommandKind::reduce_check;
                c.names.push_back(reference({DeclKind::fn}));
            } else {
                c.kind = mode == "search" ? CommandKind::reduce_search : CommandKind::reduce_assert;
            }
            arrow_pair(c);
        } else if (kw == "assert") {
            expect_word("reduce");
            c.kind = CommandKind::reduce_assert;
            arrow_pair(c);
        } else if (kw == "audit") {
            const auto what = choose({"minimality", "darkness", "incomparability"});
            c.names.push_back(reference({DeclKind::rel}));
            if (what == "minimality") {
                c.kind = CommandKind::audit_minimality;
                c.names.push_back(reference({DeclKind::seq, DeclKind::set}));
            } else if (what == "darkness") {
                c.kind = CommandKind::audit_darkness;
                comma_list("[", "]", [&] { c.names.push_back(reference({DeclKind::fn})); });
            } else {
                c.kind = CommandKind::audit_incomparability;
                c.names.push_back(reference({DeclKind::rel}));
            }
        } else if (kw == "chain") {
            c.kind = CommandKind::chain;
            c.names.push_back(reference({DeclKind::fn}));
            c.names.push_back(reference({DeclKind::fn}));
            expect_word("from");
            c.start = number();
            expect_word("steps");
            c.steps = number();
        } else if (kw == "collapse-map" || kw == "witness-map") {
            c.kind = kw == "collapse-map" ? CommandKind::collapse_map : CommandKind::witness_map;
            c.names.push_back(reference({DeclKind::fn}));
            c.names.push_back(reference({DeclKind::rel}));
        } else {
            fail_at(tokens_[pos_ - 1], "'" + kw + "' does not start a command");
        }
        options(c.options);
        doc_.commands.push_back(std::move(c));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    SpecDocument doc_;
    std::map<std::string, DeclKind> symbols_;
};

// ---- serialization ----

void write_pairs(std::ostream& out, const std::vector<NatPair>& pairs)
{
    out << "[";
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out << (i ? ", " : "") << "(" << pairs[i].first << "," << pairs[i].second << ")";
    out << "]";
}

template <typename Range>
void write_numbers(std::ostream& out, const Range& xs, const char* open, const char* close)
{
    out << open;
    bool first = true;
    for (const Nat x : xs) {
        out << (first ? "" : ", ") << x;
        first = false;
    }
    out << close;
}

void write_bound(std::ostream& out, const std::optional<Nat>& bound)
{
    if (bound)
        out << " bound " << *bound;
}

void write_relation(std::ostream& out, const RelExpr& e)
{
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IdExpr>) {
                out << "id";
            } else if constexpr (std::is_same_v<T, IdnExpr>) {
                out << "idn " << x.modulus;
            } else if constexpr (std::is_same_v<T, CeerExpr>) {
                out << "ceer { stages = [";
                for (std::size_t i = 0; i < x.stages.size(); ++i) {
                    out << (i ? ", " : "");
                    write_pairs(out, x.stages[i]);
                }
                out << "] }";
            } else if constexpr (std::is_same_v<T, CloseExpr>) {
                out << "close " << x.base << " with ";
                write_pairs(out, x.pairs);
                write_bound(out, x.bound);
            } else {
                out << "construct " << to_string(x.variant) << " " << x.base << " " << x.oracle_b;
                if (x.oracle_c)
                    out << " " << *x.oracle_c;
                write_bound(out, x.bound);
            }
        },
        e);
}

void write_set(std::ostream& out, const OracleSet& s)
{
    const bool has_rule = s.rule().has_value();
    if (!s.members().empty() || !has_rule) {
        write_numbers(out, s.members(), "{", "}");
        if (has_rule)
            out << " plus ";
    }
    if (has_rule) {
        out << "residues mod " << s.rule()->modulus << " of ";
        write_numbers(out, s.rule()->residues, "{", "}");
    }
}

void write_options(std::ostream& out, const CommandOptions& o)
{
    if (o.bound)
        out << " bound " << *o.bound;
    if (o.image_bound)
        out << " image-bound " << *o.image_bound;
    if (o.threshold)
        out << " threshold " << *o.threshold;
    if (o.format)
        out << " format " << to_string(*o.format);
}

} // namespace

SpecDocument parse_spec(std::string_view text)
{
    return Parser(text).parse();
}

std::string serialize(const Command& c)
{
    std::ostringstream out;
    const auto& n = c.names;
    switch (c.kind) {
    case CommandKind::classes:
        out << "classes " << n.at(0);
        break;
    case CommandKind::closure:
        out << "closure " << n.at(0) << " with ";
        write_pairs(out, c.pairs);
        break;
    case CommandKind::construct:
        out << "construct " << to_string(c.variant);
        for (const auto& name : n)
            out << " " << name;
        break;
    case CommandKind::reduce_check:
        out << "reduce check " << n.at(0) << " " << n.at(1) << " -> " << n.at(2);
        break;
    case CommandKind::reduce_search:
        out << "reduce search " << n.at(0) << " -> " << n.at(1);
        break;
    case CommandKind::reduce_assert:
        out << "reduce assert " << n.at(0) << " -> " << n.at(1);
        break;
    case CommandKind::audit_minimality:
        out << "audit minimality " << n.at(0) << " " << n.at(1);
        break;
    case CommandKind::audit_darkness:
        out << "audit darkness " << n.at(0) << " [";
        for (std::size_t i = 1; i < n.size(); ++i)
            out << (i > 1 ? ", " : "") << n[i];
        out << "]";
        break;
    case CommandKind::audit_incomparability:
        out << "audit incomparability " << n.at(0) << " " << n.at(1);
        break;
    case CommandKind::chain:
        out << "chain " << n.at(0) << " " << n.at(1) << " from " << c.start << " steps " << c.steps;
        break;
    case CommandKind::collapse_map:
        out << "collapse-map " << n.at(0) << " " << n.at(1);
        break;
    case CommandKind::witness_map:
        out << "witness-map " << n.at(0) << " " << n.at(1);
        break;
    }
    write_options(out, c.options);
    return out.str();
}

std::string serialize(const SpecDocument& doc)
{
    std::ostringstream out;
    if (doc.defaults.bound)
        out << "default bound " << *doc.defaults.bound << "\n";
    if (doc.defaults.image_bound)
        out << "default image-bound " << *doc.defaults.image_bound << "\n";
    if (doc.defaults.threshold)
        out << "default threshold " << *doc.defaults.threshold << "\n";
    for (const auto& d : doc.declarations) {
        out << to_string(d.kind) << " " << d.name << " = ";
        switch (d.kind) {
        case DeclKind::rel:
            write_relation(out, std::get<RelExpr>(d.value));
            break;
        case DeclKind::set:
            write_set(out, std::get<OracleSet>(d.value));
            break;
        case DeclKind::fn:
            out << std::get<ReductionFn>(d.value).to_string();
            break;
        case DeclKind::seq:
            write_numbers(out, std::get<std::vector<Nat>>(d.value), "[", "]");
            break;
        }
        out << "\n";
    }
    for (const auto& c : doc.commands)
        out << serialize(c) << "\n";
    return out.str();
}

} // namespace eqrel::spec
