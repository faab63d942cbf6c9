#ifndef CIRC_PARSER_HPP
#define CIRC_PARSER_HPP

#include <stdexcept>
#include <string>

#include "circ/ast.hpp"

namespace circ {

struct ParseError : std::runtime_error {
    int line, col;
    std::string expected;
    ParseError(int l, int c, const std::string& msg, std::string exp = {})
        : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l), col(c), expected(std::move(exp)) {}
};

// KB surface syntax; '#' starts a line comment.
CircKB parse_kb(const std::string& text);

// A standalone concept expression in the same syntax.
Concept parse_concept(const std::string& text);

} // namespace circ

#endif
