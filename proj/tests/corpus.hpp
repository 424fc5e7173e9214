// corpus.hpp -- squares of order <= 6 used for oracle agreement

#pragma once

#include "grids.hpp"
#include "support.hpp"

#include <string>
#include <vector>

namespace qgp::test {

struct CorpusEntry
{
    std::string name;
    LatinSquare square;
};

/// Cyclic squares 1..6, every worked square of order <= 6, and 50 seeded
/// random squares of orders 1..6.
inline std::vector<CorpusEntry> corpus()
{
    std::vector<CorpusEntry> out;
    for (std::size_t n = 1; n <= 6; ++n)
        out.push_back({"cyclic " + std::to_string(n), cyclic_square(n)});
    out.push_back({"qc4", qc4()});
    const std::pair<const char*, const RawGrid*> worked[] = {
        {"bruck", &grids::kBruck},
        {"disjoint2", &grids::kDisjoint2},
        {"disjoint2 swapped", &grids::kDisjoint2RowsSwapped},
        {"disjoint3", &grids::kDisjoint3},
        {"belyavskaya", &grids::kBelyavskaya},
        {"gen-belyavskaya 5", &grids::kGenBelyavskaya5},
        {"gen-belyavskaya 6", &grids::kGenBelyavskaya6},
        {"dd", &grids::kDD},
        {"gen-dd", &grids::kGenDD},
        {"two-step", &grids::kTwoStep},
    };
    for (const auto& [name, rows] : worked)
        out.push_back({name, square(*rows)});
    for (std::uint64_t i = 0; i < 50; ++i)
        out.push_back({"random " + std::to_string(i), random_square(1 + i % 6, 1000 + i)});
    return out;
}

/// Partial squares derived from the corpus by clearing cells, plus the
/// empty grids of order <= 4.
inline std::vector<std::pair<std::string, PartialSquare>> partial_corpus()
{
    std::vector<std::pair<std::string, PartialSquare>> out;
    for (std::size_t n = 1; n <= 4; ++n)
        out.push_back({"empty " + std::to_string(n), PartialSquare(n)});
    auto gen = rng(8080);
    for (const CorpusEntry& e : corpus()) {
        const std::size_t n = e.square.order();
        PartialSquare p(e.square);
        const std::size_t holes = pick(gen, 0, n * n / 2);
        for (std::size_t h = 0; h < holes; ++h)
            p.set(static_cast<Index>(pick(gen, 0, n - 1)), static_cast<Index>(pick(gen, 0, n - 1)), kEmpty);
        out.push_back({e.name + " with holes", std::move(p)});
    }
    return out;
}

} // namespace qgp::test
