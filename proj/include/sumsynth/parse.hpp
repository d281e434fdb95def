#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "sumsynth/poly.hpp"

namespace sumsynth {

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
    std::size_t position;
};

// Grammar: integer and rational (`p/q`) literals, `n`, `n!`, `+ - * ^`,
// unary minus, parentheses. `^` binds tighter than `*`, which binds
// tighter than `+`/`-`; exponents are nonnegative integer literals.
// Division appears only inside rational literals.
BiPoly parse_poly(const std::string& text);

}  // namespace sumsynth
