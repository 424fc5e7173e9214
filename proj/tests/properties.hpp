// properties.hpp -- randomized construction properties, shared by the unit
// tests and the acceptance runner

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qgp::test {

struct PropertyResult
{
    std::size_t cases = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Every construction, over random squares of order 3..7, produces a Latin
/// square with complete provenance whose Unchanged cells match the input.
PropertyResult outputs_are_latin(std::uint64_t seed, std::size_t cases);

/// contract_bruck undoes prolong_bruck.
PropertyResult bruck_round_trip(std::uint64_t seed, std::size_t cases);

/// contract_except undoes prolong_belyavskaya and prolong_dd.
PropertyResult except_round_trip(std::uint64_t seed, std::size_t cases);

/// prolong_belyavskaya is prolong_bruck with one intercalate swapped.
PropertyResult intercalate_swap(std::uint64_t seed, std::size_t cases);

/// prolong_disjoint with one transversal and default layout is prolong_bruck.
PropertyResult disjoint_single(std::uint64_t seed, std::size_t cases);

/// two_step classifies the extended transversal as Complete after a Bruck
/// first step and Quasicomplete with special n+1 after a Belyavskaya one.
PropertyResult two_step_classification(std::uint64_t seed, std::size_t cases);

} // namespace qgp::test
