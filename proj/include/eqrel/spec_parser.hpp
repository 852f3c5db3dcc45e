#pragma once

#include "eqrel/spec_document.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eqrel::spec {

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected = {});

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& detail() const { return detail_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
    std::vector<std::string> expected_;
};

// Parses a relation-spec document; grammar in docs/spec-format.md.
// Throws ParseError at the first syntax error, duplicate name, dangling
// reference or invalid literal.
SpecDocument parse_spec(std::string_view text);

// Canonical text form. parse_spec(serialize(d)) == d.
std::string serialize(const SpecDocument& doc);
std::string serialize(const Command& command);

} // namespace eqrel::spec
