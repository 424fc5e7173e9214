// lsq_format.hpp -- the LSQ text format and the one-line permutation form
//
// LSQ:
//   # comment lines and blank lines are ignored
//   3            <- order n
//   1 2 3        <- n rows of n tokens: a symbol 1..n, or '.' for an empty cell
//   2 . 1
//   3 1 2

#pragma once

#include "qgp/latin.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qgp {

/// Syntactically valid LSQ content, not yet checked for Latin-ness or
/// symbol range. Empty cells are 0 in `rows`.
struct LsqDocument
{
    std::size_t order = 0;
    RawGrid rows;
    bool partial = false; // any '.' present
};

/// Throws ParseError with the 1-based line of the first problem.
LsqDocument parse_lsq(std::string_view text);

/// Parses and requires a complete, valid Latin square.
LatinSquare read_latin(std::string_view text);

/// Parses and requires a valid partial square ('.' cells optional).
PartialSquare read_partial(std::string_view text);

/// Canonical form: the order on the first line, then one line per row with
/// single spaces between tokens. Every line ends with '\n'.
std::string format_lsq(const LatinSquare& square);
std::string format_lsq(const PartialSquare& square);

/// Parses "c1 c2 ... cn", a permutation of 1..n, into 0-based positions.
/// Throws ParseError for non-integer tokens and DomainError if the values
/// are not a permutation of 1..n.
std::vector<Index> parse_permutation(std::string_view text);

/// Space-separated 1-based form of a 0-based permutation.
std::string format_permutation(std::span<const Index> perm);

/// Parses a whitespace or comma separated list of integers.
std::vector<long long> parse_integer_list(std::string_view text);

} // namespace qgp
