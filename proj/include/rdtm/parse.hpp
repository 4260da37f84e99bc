#ifndef RDTM_PARSE_HPP
#define RDTM_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rdtm/expr.hpp"

namespace rdtm {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string expected, std::string message);

    // Byte offset into the input where parsing stopped.
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// Infix grammar, loosest to tightest: + -, * /, unary minus, ^ (right
// associative), then literals, identifiers, calls and parentheses.
// "x" is the spatial variable; every other bare identifier is a named
// constant. Exponents must fold to a numeric constant.
Expr parse(std::string_view text);

}  // namespace rdtm

#endif  // RDTM_PARSE_HPP
