#include "support.hpp"

#include "qgp/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace qgp;
using namespace qgp::test;

namespace {

bool contains_sigma(const QuasicompleteSearch& found, const Permutation& sigma)
{
    return std::any_of(found.mappings.begin(), found.mappings.end(),
                       [&](const MappingRecord& m) { return m.sigma == sigma; });
}

} // namespace

TEST_CASE("conjugated_mapping examples")
{
    const MappingRecord m = conjugated_mapping(qc4(), perm("1 3 2 4"));
    CHECK(m.sigma_bar == std::vector<Symbol>{2, 4, 3, 3});
    CHECK(m.kind == MappingKind::Quasicomplete);
    CHECK(m.special == 1);
    CHECK(m.duplicate_pair == std::pair<Index, Index>{2, 3});

    const MappingRecord one = conjugated_mapping(square({{1}}), perm("1"));
    CHECK(one.sigma_bar == std::vector<Symbol>{1});
    CHECK(one.kind == MappingKind::Complete);

    const MappingRecord two = conjugated_mapping(cyclic_square(2), perm("1 2"));
    CHECK(two.sigma_bar == std::vector<Symbol>{1, 1});
    CHECK(two.kind == MappingKind::Quasicomplete);
    CHECK(two.special == 2);
    CHECK(two.duplicate_pair == std::pair<Index, Index>{0, 1});
}

TEST_CASE("conjugated_mapping classifies Neither and rejects non-permutations")
{
    // Image {1, 3}: one symbol three times.
    const MappingRecord m = conjugated_mapping(cyclic_square(4), perm("1 4 3 2"));
    CHECK(m.sigma_bar == std::vector<Symbol>{1, 1, 1, 1});
    CHECK(m.kind == MappingKind::Neither);
    CHECK(m.special == kEmpty);

    CHECK_THROWS_AS(conjugated_mapping(cyclic3(), Permutation{0, 0, 1}), DomainError);
    CHECK_THROWS_AS(conjugated_mapping(cyclic3(), Permutation{0, 1}), DomainError);
}

TEST_CASE("transversal_to_mapping")
{
    const LatinSquare q = cyclic3();
    const Transversal blue = transversal(q, kBlue);
    CHECK(transversal_to_mapping(blue) == perm("3 1 2"));
    CHECK(blue.values == std::vector<Symbol>{3, 2, 1});
    CHECK(conjugated_mapping(q, transversal_to_mapping(blue)).kind == MappingKind::Complete);

    CHECK(transversal_to_mapping(transversal(square({{1}}), "1")) == perm("1"));
    CHECK(transversal_to_mapping(transversal(q, kYellow)) == perm("1 2 3"));

    CHECK(blue.contains({1, 0}));
    CHECK_FALSE(blue.contains({1, 1}));
}

TEST_CASE("make_transversal rejects non-transversals")
{
    CHECK_THROWS_AS(make_transversal(cyclic3(), perm("1 3 2")), DomainError);
    CHECK_THROWS_AS(make_transversal(cyclic3(), Permutation{0, 0, 1}), DomainError);
    CHECK_THROWS_AS(make_transversal(cyclic3(), Permutation{0, 1}), DomainError);
}

TEST_CASE("find_transversals examples")
{
    const auto three = find_transversals(cyclic3());
    REQUIRE(three.size() == 3);
    CHECK(three[0].col == perm(kYellow));
    CHECK(three[1].col == perm(kGreen));
    CHECK(three[2].col == perm(kBlue));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            CHECK(cells_disjoint(three[a].col, three[b].col));

    CHECK(find_transversals(cyclic_square(4)).empty());
    CHECK(find_transversals(qc4()).empty());
    CHECK(find_transversals(cyclic_square(5), 4).size() == 4);
    CHECK(find_transversals(cyclic_square(5), 0).empty());
}

TEST_CASE("cyclic transversal counts")
{
    const std::size_t expected[] = {1, 0, 3, 0, 15, 0, 133};
    for (std::size_t n = 1; n <= 7; ++n)
        CHECK(find_transversals(cyclic_square(n)).size() == expected[n - 1]);
}

TEST_CASE("find_transversals is lexicographic and Complete")
{
    auto gen = rng(31);
    for (int i = 0; i < 40; ++i) {
        const LatinSquare q = random_square(pick(gen, 3, 7), gen());
        const auto all = find_transversals(q);
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (j)
                CHECK(all[j - 1].col < all[j].col);
            CHECK(conjugated_mapping(q, all[j].col).kind == MappingKind::Complete);
            CHECK(make_transversal(q, all[j].col) == all[j]);
        }
    }
}

TEST_CASE("find_disjoint_transversals examples")
{
    const LatinSquare q = cyclic3();
    const auto triple = find_disjoint_transversals(q, 3);
    REQUIRE(triple.size() == 1);
    CHECK(triple[0].members == std::vector<std::size_t>{0, 1, 2});
    REQUIRE(triple[0].transversals.size() == 3);
    CHECK(triple[0].transversals[0].col == perm(kYellow));
    CHECK(triple[0].transversals[1].col == perm(kGreen));
    CHECK(triple[0].transversals[2].col == perm(kBlue));

    CHECK(find_disjoint_transversals(q, 1).size() == 3);
    CHECK(find_disjoint_transversals(q, 2).size() == 3);
    CHECK(find_disjoint_transversals(cyclic_square(4), 2).empty());
    CHECK(find_disjoint_transversals(cyclic_square(5), 2, 2).size() == 2);

    CHECK_THROWS_AS(find_disjoint_transversals(q, 0), DomainError);
    CHECK_THROWS_AS(find_disjoint_transversals(q, 4), DomainError);
}

TEST_CASE("disjoint families are disjoint, sorted and unique")
{
    auto gen = rng(77);
    for (int i = 0; i < 20; ++i) {
        const LatinSquare q = random_square(pick(gen, 4, 6), gen());
        const auto all = find_transversals(q);
        for (std::size_t k = 2; k <= 3; ++k) {
            const auto families = find_disjoint_transversals(q, k, 200);
            std::set<std::vector<std::size_t>> seen;
            for (const TransversalFamily& f : families) {
                REQUIRE(f.members.size() == k);
                CHECK(std::is_sorted(f.members.begin(), f.members.end()));
                CHECK(seen.insert(f.members).second);
                for (std::size_t a = 0; a < k; ++a) {
                    CHECK(f.transversals[a] == all[f.members[a]]);
                    for (std::size_t b = a + 1; b < k; ++b)
                        CHECK(cells_disjoint(f.transversals[a].col, f.transversals[b].col));
                }
            }
            CHECK(std::is_sorted(families.begin(), families.end(),
                                 [](const auto& x, const auto& y) { return x.members < y.members; }));
        }
    }
}

TEST_CASE("find_quasicomplete_mappings examples")
{
    const auto found = find_quasicomplete_mappings(qc4());
    CHECK_FALSE(found.truncated);
    CHECK(found.mappings.size() == 16);
    REQUIRE(contains_sigma(found, perm("1 3 2 4")));
    for (const MappingRecord& m : found.mappings)
        if (m.sigma == perm("1 3 2 4"))
            CHECK(m.special == 1);

    // The four coloured families are pairwise disjoint.
    const std::string_view colours[] = {kQcYellow, kQcGreen, kQcGray, kQcBlue};
    for (std::size_t a = 0; a < 4; ++a) {
        CHECK(contains_sigma(found, perm(colours[a])));
        for (std::size_t b = a + 1; b < 4; ++b)
            CHECK(cells_disjoint(perm(colours[a]), perm(colours[b])));
    }

    CHECK(find_quasicomplete_mappings(square({{1}})).mappings.empty());
    CHECK(find_quasicomplete_mappings(cyclic_square(2)).mappings.size() == 2);
    CHECK(find_quasicomplete_mappings(cyclic_square(3)).mappings.empty());
}

TEST_CASE("find_quasicomplete_mappings budget")
{
    const auto capped = find_quasicomplete_mappings(qc4(), 5);
    CHECK(capped.truncated);
    CHECK(capped.mappings.size() == 5);
    const auto all = find_quasicomplete_mappings(qc4());
    CHECK(std::equal(capped.mappings.begin(), capped.mappings.end(), all.mappings.begin()));

    const auto exact = find_quasicomplete_mappings(qc4(), 16);
    CHECK_FALSE(exact.truncated);
    CHECK(exact.mappings.size() == 16);

    CHECK(find_quasicomplete_mappings(qc4(), 0).mappings.empty());
}

TEST_CASE("quasicomplete records satisfy their invariants")
{
    auto gen = rng(91);
    for (int i = 0; i < 40; ++i) {
        const LatinSquare q = random_square(pick(gen, 3, 7), gen());
        const auto found = find_quasicomplete_mappings(q, 500);
        for (std::size_t j = 0; j < found.mappings.size(); ++j) {
            const MappingRecord& m = found.mappings[j];
            if (j)
                CHECK(found.mappings[j - 1].sigma < m.sigma);
            CHECK(m == conjugated_mapping(q, m.sigma));
            REQUIRE(m.kind == MappingKind::Quasicomplete);
            const std::set<Symbol> image(m.sigma_bar.begin(), m.sigma_bar.end());
            CHECK(image.size() == q.order() - 1);
            CHECK(image.count(m.special) == 0);
            CHECK(m.duplicate_pair.first < m.duplicate_pair.second);
            CHECK(m.sigma_bar[m.duplicate_pair.first] == m.sigma_bar[m.duplicate_pair.second]);
        }
    }
}
