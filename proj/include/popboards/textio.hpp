#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "popboards/board.hpp"
#include "popboards/pop.hpp"

namespace popboards {

// Text formats:
//   board       6,6,6,6,5,3      parts, weakly decreasing
//   transversal 2,6,5,1,3,4      value per column
//   word        2,1,2,3,1,0      letter per step
//   family      4,1,2,1          m,k,d,a
//   pop         4: 1>2, 1>4      size, then "x>y" relations

std::vector<int> parse_int_list(std::string_view text);  // throws ParseError
FerrersBoard parse_board(std::string_view text);
ClawFamily parse_family(std::string_view text);
Pop parse_pop(std::string_view text);

std::string format_int_list(std::span<const int> xs);
std::string format_family(const ClawFamily& fam);
std::string format_pop(const Pop& pop);

// Digit string ("3142") for patterns of size <= 9, comma-separated beyond.
std::string format_pattern(std::span<const int> pattern);

}  // namespace popboards
