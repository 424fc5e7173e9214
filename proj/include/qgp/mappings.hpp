// mappings.hpp -- transversals, conjugated mappings and quasicomplete mappings

#pragma once

#include "qgp/latin.hpp"

#include <span>
#include <utility>
#include <vector>

namespace qgp {

/// A permutation of 0..n-1; for mappings of a square, row x goes to column
/// perm[x].
using Permutation = std::vector<Index>;

/// n cells of a square, one per row and column, holding every symbol once.
/// Row r contributes the cell (r, col[r]) whose symbol is values[r].
struct Transversal
{
    Permutation col;
    std::vector<Symbol> values;

    std::size_t order() const noexcept { return col.size(); }
    bool contains(CellRef cell) const noexcept { return cell.row < col.size() && col[cell.row] == cell.col; }

    friend bool operator==(const Transversal&, const Transversal&) = default;
};

/// Builds the transversal of `square` with the given column choices.
/// Throws DomainError if `col` is not a permutation or the cells repeat a
/// symbol.
Transversal make_transversal(const LatinSquare& square, std::span<const Index> col);

bool is_permutation(std::span<const Index> perm, std::size_t n);

/// Whether the cell sets {(x, a[x])} and {(x, b[x])} share no cell.
bool cells_disjoint(std::span<const Index> a, std::span<const Index> b);

enum class MappingKind
{
    Complete,      // sigma_bar is a bijection
    Quasicomplete, // sigma_bar misses exactly one symbol
    Neither,
};

/// A permutation sigma together with its conjugated mapping
/// sigma_bar(x) = x . sigma(x), evaluated in a particular square.
struct MappingRecord
{
    Permutation sigma;
    std::vector<Symbol> sigma_bar;
    MappingKind kind = MappingKind::Neither;

    // Quasicomplete only: the symbol missing from the image of sigma_bar, and
    // the two rows x1 < x2 sharing the duplicated value.
    Symbol special = kEmpty;
    std::pair<Index, Index> duplicate_pair{0, 0};

    friend bool operator==(const MappingRecord&, const MappingRecord&) = default;
};

/// Evaluates and classifies sigma against `square`. Throws DomainError if
/// sigma is not a permutation of the square's rows.
MappingRecord conjugated_mapping(const LatinSquare& square, std::span<const Index> sigma);

inline Permutation transversal_to_mapping(const Transversal& t)
{
    return t.col;
}

/// Every transversal of `square`, in lexicographic order of `col`, at most
/// `limit` of them.
std::vector<Transversal> find_transversals(const LatinSquare& square, std::size_t limit = kUnbounded);

/// k pairwise cell-disjoint transversals. `members` are indices into the
/// transversal list returned by find_transversals, ascending.
struct TransversalFamily
{
    std::vector<std::size_t> members;
    std::vector<Transversal> transversals;
};

/// Every unordered family of k pairwise disjoint transversals, ordered
/// lexicographically by member indices. Throws DomainError unless
/// 1 <= k <= order.
std::vector<TransversalFamily> find_disjoint_transversals(const LatinSquare& square,
                                                          std::size_t k,
                                                          std::size_t limit = kUnbounded);

struct QuasicompleteSearch
{
    std::vector<MappingRecord> mappings; // lexicographic in sigma
    bool truncated = false;              // stopped at the budget
};

/// Every quasicomplete mapping of `square`, stopping after `budget` results.
QuasicompleteSearch find_quasicomplete_mappings(const LatinSquare& square,
                                                std::size_t budget = kUnbounded);

} // namespace qgp
