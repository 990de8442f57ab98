#pragma once

#include <string>
#include <string_view>

#include "ogs/generators.hpp"
#include "ogs/permutation.hpp"

namespace ogs {

// Grammars (whitespace is insignificant between tokens):
//   one-line : "[" int (";" int)* "]"
//   cycles   : ("(" int ("," int)* ")")+ | "()"
//   word     : term ("*" term)* | "e"     term = [stuv] int ("^" signed-int)?
//
// All parsers throw ParseError on malformed text and RangeError on points or
// subscripts that do not fit the degree.

Permutation parse_one_line(std::string_view text);
std::string print_one_line(Permutation const &p);

/// The degree is explicit since fixed points are invisible in cycle notation.
Permutation parse_cycles(std::string_view text, unsigned degree);
std::string print_cycles(Permutation const &p);

GeneratorWord parse_word(std::string_view text, unsigned degree);
std::string print_word(GeneratorWord const &w);

/// Either notation, chosen by the leading bracket. One-line input must have
/// the given degree.
Permutation parse_permutation(std::string_view text, unsigned degree);

} // namespace ogs
