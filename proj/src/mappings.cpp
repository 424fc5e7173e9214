#include "qgp/mappings.hpp"

#include "qgp/error.hpp"
#include "symbol_set.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace qgp {

namespace {

/// Row-by-row search over column choices. `Accept` decides whether symbol v
/// may be taken given the running per-symbol counts and is told about
/// placements via `take`/`release`; `Finish` is called on complete
/// permutations and returns false to stop the search.
class PermutationSearch
{
public:
    explicit PermutationSearch(const LatinSquare& square)
        : m_square(square), m_n(square.order()), m_free(1, m_n), m_perm(m_n)
    {
        for (std::size_t c = 0; c < m_n; ++c)
            m_free.set(0, c);
    }

    template <typename Accept, typename Finish>
    void run(Accept&& accept, Finish&& finish)
    {
        descend(0, accept, finish);
    }

private:
    template <typename Accept, typename Finish>
    bool descend(std::size_t r, Accept& accept, Finish& finish)
    {
        if (r == m_n)
            return finish(std::as_const(m_perm));
        const std::uint64_t* free = m_free.row(0);
        const auto row = m_square.row(static_cast<Index>(r));
        for (std::size_t w = 0; w < m_free.words(); ++w) {
            // Snapshot the word: columns freed by deeper levels are restored
            // before we return to this loop, so iterating the copy is exact.
            std::uint64_t bits = free[w];
            while (bits) {
                const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                const Symbol v = row[c];
                if (!accept.take(v))
                    continue;
                m_free.reset(0, c);
                m_perm[r] = static_cast<Index>(c);
                const bool more = descend(r + 1, accept, finish);
                m_free.set(0, c);
                accept.release(v);
                if (!more)
                    return false;
            }
        }
        return true;
    }

    const LatinSquare& m_square;
    std::size_t m_n;
    detail::MaskTable m_free;
    Permutation m_perm;
};

/// Each symbol at most once.
struct DistinctSymbols
{
    std::vector<char> used;

    explicit DistinctSymbols(std::size_t n) : used(n + 1, 0) {}

    bool take(Symbol v)
    {
        if (used[v])
            return false;
        used[v] = 1;
        return true;
    }

    void release(Symbol v) { used[v] = 0; }
};

/// Each symbol at most twice, and at most one symbol twice.
struct OneRepeat
{
    std::vector<unsigned> count;
    bool repeated = false;

    explicit OneRepeat(std::size_t n) : count(n + 1, 0) {}

    bool take(Symbol v)
    {
        if (count[v] == 0) {
            count[v] = 1;
            return true;
        }
        if (count[v] == 1 && !repeated) {
            count[v] = 2;
            repeated = true;
            return true;
        }
        return false;
    }

    void release(Symbol v)
    {
        if (--count[v] == 1)
            repeated = false;
    }
};

} // namespace

bool is_permutation(std::span<const Index> perm, std::size_t n)
{
    if (perm.size() != n)
        return false;
    std::vector<char> seen(n, 0);
    for (Index i : perm) {
        if (i >= n || seen[i])
            return false;
        seen[i] = 1;
    }
    return true;
}

bool cells_disjoint(std::span<const Index> a, std::span<const Index> b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t x = 0; x < n; ++x)
        if (a[x] == b[x])
            return false;
    return true;
}

Transversal make_transversal(const LatinSquare& square, std::span<const Index> col)
{
    const std::size_t n = square.order();
    if (!is_permutation(col, n))
        throw DomainError("transversal columns must be a permutation of 1.." + std::to_string(n));
    Transversal t{Permutation(col.begin(), col.end()), std::vector<Symbol>(n)};
    std::vector<char> seen(n + 1, 0);
    for (std::size_t r = 0; r < n; ++r) {
        const Symbol v = square.at(static_cast<Index>(r), col[r]);
        if (seen[v])
            throw DomainError("cells do not form a transversal: symbol " + std::to_string(v) +
                              " appears twice");
        seen[v] = 1;
        t.values[r] = v;
    }
    return t;
}

MappingRecord conjugated_mapping(const LatinSquare& square, std::span<const Index> sigma)
{
    const std::size_t n = square.order();
    if (!is_permutation(sigma, n))
        throw DomainError("mapping must be a permutation of 1.." + std::to_string(n));

    MappingRecord record;
    record.sigma.assign(sigma.begin(), sigma.end());
    record.sigma_bar.resize(n);
    // first_row[v] is 1 + the first row whose image is v
    std::vector<std::size_t> first_row(n + 1, 0);
    std::size_t image = 0;
    std::size_t repeats = 0;
    std::pair<Index, Index> pair{0, 0};
    for (std::size_t x = 0; x < n; ++x) {
        const Symbol v = square.at(static_cast<Index>(x), sigma[x]);
        record.sigma_bar[x] = v;
        if (first_row[v] == 0) {
            first_row[v] = x + 1;
            ++image;
        } else {
            ++repeats;
            pair = {static_cast<Index>(first_row[v] - 1), static_cast<Index>(x)};
        }
    }

    if (image == n) {
        record.kind = MappingKind::Complete;
    } else if (image + 1 == n && repeats == 1) {
        record.kind = MappingKind::Quasicomplete;
        record.duplicate_pair = pair;
        for (std::size_t v = 1; v <= n; ++v) {
            if (first_row[v] == 0) {
                record.special = static_cast<Symbol>(v);
                break;
            }
        }
    }
    return record;
}

std::vector<Transversal> find_transversals(const LatinSquare& square, std::size_t limit)
{
    std::vector<Transversal> out;
    if (limit == 0)
        return out;
    DistinctSymbols accept(square.order());
    PermutationSearch search(square);
    search.run(accept, [&](const Permutation& perm) {
        Transversal t{perm, std::vector<Symbol>(perm.size())};
        for (std::size_t r = 0; r < perm.size(); ++r)
            t.values[r] = square.at(static_cast<Index>(r), perm[r]);
        out.push_back(std::move(t));
        return out.size() < limit;
    });
    return out;
}

std::vector<TransversalFamily> find_disjoint_transversals(const LatinSquare& square,
                                                          std::size_t k,
                                                          std::size_t limit)
{
    const std::size_t n = square.order();
    if (k < 1 || k > n)
        throw DomainError("family size must be between 1 and " + std::to_string(n));

    const std::vector<Transversal> all = find_transversals(square);
    std::vector<TransversalFamily> out;
    if (limit == 0)
        return out;

    detail::MaskTable occupied(n, n);
    std::vector<std::size_t> chosen;

    auto fits = [&](const Transversal& t) {
        for (std::size_t r = 0; r < n; ++r)
            if (occupied.test(r, t.col[r]))
                return false;
        return true;
    };
    auto mark = [&](const Transversal& t, bool on) {
        for (std::size_t r = 0; r < n; ++r)
            on ? occupied.set(r, t.col[r]) : occupied.reset(r, t.col[r]);
    };

    // Returns false once the limit is reached.
    auto descend = [&](auto& self, std::size_t from) -> bool {
        if (chosen.size() == k) {
            TransversalFamily family{chosen, {}};
            for (std::size_t i : chosen)
                family.transversals.push_back(all[i]);
            out.push_back(std::move(family));
            return out.size() < limit;
        }
        // Not enough transversals left to finish the family.
        const std::size_t needed = k - chosen.size();
        for (std::size_t i = from; i + needed <= all.size(); ++i) {
            if (!fits(all[i]))
                continue;
            mark(all[i], true);
            chosen.push_back(i);
            const bool more = self(self, i + 1);
            chosen.pop_back();
            mark(all[i], false);
            if (!more)
                return false;
        }
        return true;
    };
    descend(descend, 0);
    return out;
}

QuasicompleteSearch find_quasicomplete_mappings(const LatinSquare& square, std::size_t budget)
{
    QuasicompleteSearch result;
    if (budget == 0)
        return result;
    // Ask for one more than the budget to learn whether the list is complete.
    const std::size_t stop_at = budget == kUnbounded ? kUnbounded : budget + 1;
    OneRepeat accept(square.order());
    PermutationSearch search(square);
    search.run(accept, [&](const Permutation& perm) {
        if (!accept.repeated)
            return true; // complete mapping
        result.mappings.push_back(conjugated_mapping(square, perm));
        return result.mappings.size() < stop_at;
    });
    if (result.mappings.size() > budget) {
        result.mappings.pop_back();
        result.truncated = true;
    }
    return result;
}

} // namespace qgp
