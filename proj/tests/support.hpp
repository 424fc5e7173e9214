// support.hpp -- shared fixtures for the test suites

#pragma once

#include "qgp/constructions.hpp"
#include "qgp/latin.hpp"
#include "qgp/lsq_format.hpp"
#include "qgp/mappings.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace qgp::test {

inline LatinSquare square(const RawGrid& rows)
{
    return LatinSquare::from_rows(rows);
}

/// 1-based text form, "3 1 2".
inline Permutation perm(std::string_view text)
{
    return parse_permutation(text);
}

inline Transversal transversal(const LatinSquare& q, std::string_view cols)
{
    return make_transversal(q, perm(cols));
}

// The order-3 square and its three disjoint transversals, named by the
// colours they carry in the worked examples.
inline LatinSquare cyclic3() { return cyclic_square(3); }
inline constexpr std::string_view kYellow = "1 2 3";
inline constexpr std::string_view kGreen = "2 3 1";
inline constexpr std::string_view kBlue = "3 1 2";

/// The order-4 square of the quasicomplete-mapping examples. It has no
/// transversal.
inline LatinSquare qc4()
{
    return square({{2, 1, 3, 4}, {3, 2, 4, 1}, {4, 3, 1, 2}, {1, 4, 2, 3}});
}

/// Its four pairwise disjoint quasicomplete mappings.
inline constexpr std::string_view kQcYellow = "1 3 2 4";
inline constexpr std::string_view kQcGreen = "2 1 4 3";
inline constexpr std::string_view kQcGray = "3 4 1 2";
inline constexpr std::string_view kQcBlue = "4 2 3 1";

/// Result of the Belyavskaya step on the blue transversal, excepting row 2.
inline LatinSquare belyavskaya4()
{
    return square({{1, 2, 4, 3}, {2, 3, 1, 4}, {3, 4, 2, 1}, {4, 1, 3, 2}});
}

/// Fixed-seed generator for property tests.
inline std::mt19937_64 rng(std::uint64_t seed)
{
    return std::mt19937_64(seed);
}

inline std::size_t pick(std::mt19937_64& gen, std::size_t lo, std::size_t hi)
{
    return lo + static_cast<std::size_t>(gen() % (hi - lo + 1));
}

} // namespace qgp::test
