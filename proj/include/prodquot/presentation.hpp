#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace prodquot {

/// One letter of a word: generator index and exponent sign (+1 or -1).
struct Letter {
  int generator = 0;
  int sign = 1;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Freely reduces a word (cancels adjacent x x^-1).
Word free_reduce(Word w);
Word inverse(const Word& w);

/// A finite presentation: generator names and relators (words equal to 1).
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  bool operator==(const Presentation&) const = default;
};

/// Parses presentation text.
///
///     gens: x, y;            # generator names, exactly once, first
///     rel: x^2 = 1;          # one or more equations per statement
///     rel: x*y*x^-1 = y^3;
///     rel: [x, y] = 1;       # [u,v] = u v u^-1 v^-1
///     rel: z^2 = y^2 = u;    # chains give one relator per '='
///
/// Words are `*`-products of generators, `1`, commutators and parenthesised
/// words, each optionally raised to an integer power with `^`. `#` starts a
/// comment. Each equation u = v becomes the freely reduced relator u v^-1.
/// Throws ParseError with the 1-based line and column of the problem.
Presentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation up to formatting: parsing the output yields
/// an identical Presentation.
std::string format_presentation(const Presentation& p);
std::string format_word(const Presentation& p, const Word& w);

}  // namespace prodquot
