#pragma once

#include <string>
#include <string_view>

#include "rba/poly.hpp"

namespace rba {

/// Canonical text form: letters "x1", "x2", ... (1-based display), brackets
/// "P(...)", primes separated by single spaces, the hole as "@".
std::string to_string(const Word& w);
std::string to_string(const StarWord& q);

/// Terms in descending order: "x1 P(x2) - 2 * x1 + 1/2 * x2"; zero prints "0".
std::string to_string(const Poly& f);

struct ParseError : std::invalid_argument {
  ParseError(std::size_t line, std::size_t col, const std::string& what)
      : std::invalid_argument(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  std::size_t line, col;
};

/// Parse an expression over generators, brackets, rationals, +, -, * and
/// juxtaposition. Juxtaposed factors multiply, so "P(x1)P(x2)" is the
/// weight-lambda product of the two brackets. "P(expr)" applies the operator
/// linearly. alphabet_size > 0 bounds the permitted generator indices;
/// 0 accepts any.
Poly parse_poly(std::string_view text, const Scalar& lambda, std::uint32_t alphabet_size = 0);

/// Parse a single word (one monomial, coefficient 1, hole-free).
Word parse_word(std::string_view text, std::uint32_t alphabet_size = 0);

/// Parse a star word (one monomial, coefficient 1, exactly one "@").
StarWord parse_star_word(std::string_view text, std::uint32_t alphabet_size = 0);

}  // namespace rba
