// oracle.hpp -- naive reference enumerations for cross-checking the kernels
//
// Deliberately slow and independent of src/: plain nested vectors,
// std::next_permutation, row-major assignment without heuristics.

#pragma once

#include "qgp/latin.hpp"
#include "qgp/mappings.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qgp::oracle {

/// Thrown when an input is too large to enumerate naively.
class Refusal : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxOracleOrder = 7;

/// All column permutations whose cells hold distinct symbols, in
/// lexicographic order.
std::vector<Permutation> transversals(const LatinSquare& square);

/// All permutations whose image x -> square(x, sigma x) misses exactly one
/// symbol, in lexicographic order.
std::vector<Permutation> quasicomplete(const LatinSquare& square);

/// Number of completions, by depth-first assignment of every empty cell in
/// row-major order. Refuses once more than `budget` nodes are visited.
std::size_t completions(const PartialSquare& partial, std::size_t budget = 50'000'000);

} // namespace qgp::oracle
