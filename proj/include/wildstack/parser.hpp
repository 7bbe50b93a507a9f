#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wildstack/rational_fn.hpp"

namespace wildstack {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t at)
        : std::runtime_error(msg + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};

// Grammar: identifiers limited to `x`; nonnegative integer literals; + - * / ^
// with ^ binding tightest; unary minus; parentheses; whitespace insignificant.
// Exponents are integer literals; a negative exponent is rejected with a hint
// to rewrite as 1/(...)^k.
FpRat parse_rational_expr(std::string_view src, std::int64_t p);

}  // namespace wildstack
