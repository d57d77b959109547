#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "brandt/element.hpp"

// Shared pieces of the recursive-descent parsers for element, term and
// equation syntax. Internal to the library.

namespace brandt::detail {

void skip_ws(std::string_view s, std::size_t& pos);

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos,
                             const std::string& what);

// Parses a run of digits as a non-negative int. Rejects values above 10^9.
int parse_uint(std::string_view s, std::size_t& pos);

// Parses an element literal starting at pos: "0" or "(i,j)". Range-checks
// pair indices against ctx.
Element parse_element_at(const Semigroup& ctx, std::string_view s,
                         std::size_t& pos);

}  // namespace brandt::detail
