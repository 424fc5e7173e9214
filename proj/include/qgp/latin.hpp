// latin.hpp -- Latin squares, partial Latin squares and completion search

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace qgp {

/// A symbol of an order-n square, in 1..n. Symbols keep the same numbering
/// the grids are written with; `kEmpty` marks an unfilled cell.
using Symbol = std::uint16_t;

inline constexpr Symbol kEmpty = 0;

/// Zero-based row or column position. External text forms are 1-based.
using Index = std::uint32_t;

/// Largest supported order.
inline constexpr std::size_t kMaxOrder = std::numeric_limits<Symbol>::max() - 1;

/// Passed as a result limit to request every result.
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct CellRef
{
    Index row = 0;
    Index col = 0;

    friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

/// Row-major grid in the same numbering as the text format: entries are
/// symbols 1..n, with 0 standing for an empty cell where that is allowed.
/// Used for input that has not been validated yet.
using RawGrid = std::vector<std::vector<int>>;

/// One problem found by `validate`.
struct ValidationIssue
{
    enum class Kind
    {
        NotSquare,       // `index` is the offending row, `symbol` its length
        OutOfRange,      // `index` is the row, `symbol` the bad entry
        RowDuplicate,    // `index` is the row
        ColumnDuplicate, // `index` is the column
    };

    Kind kind;
    std::size_t index; // 0-based
    int symbol;

    /// Human readable, 1-based form, e.g. "column 1 duplicates symbol 1".
    std::string describe(std::size_t order) const;

    friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

using ValidationReport = std::vector<ValidationIssue>;

/// Every shape, range and Latin violation of `grid`. Empty cells (0) are
/// reported as out of range. Empty report iff `is_latin(grid)`.
ValidationReport validate(const RawGrid& grid);

/// Whether `grid` is a Latin square. A grid that is not square or holds
/// symbols outside 1..n throws ValidationError instead of returning false.
bool is_latin(const RawGrid& grid);

/// An order-n Latin square over 1..n; also the Cayley table of the
/// quasigroup x.y = at(x, y). Immutable once built.
class LatinSquare
{
public:
    /// Throws ValidationError unless `cells` (row-major, n*n entries) is a
    /// Latin square over 1..order.
    LatinSquare(std::size_t order, std::vector<Symbol> cells);

    static LatinSquare from_rows(const RawGrid& rows);

    std::size_t order() const noexcept { return m_order; }

    Symbol at(Index row, Index col) const noexcept { return m_cells[row * m_order + col]; }
    Symbol at(CellRef cell) const noexcept { return at(cell.row, cell.col); }

    std::span<const Symbol> row(Index r) const noexcept
    {
        return {m_cells.data() + r * m_order, m_order};
    }

    std::span<const Symbol> cells() const noexcept { return m_cells; }

    RawGrid rows() const;

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    std::size_t m_order;
    std::vector<Symbol> m_cells;
};

/// An order-m grid whose filled cells never repeat a symbol within a row
/// or column. Mutable, so constructions can assemble one cell at a time;
/// `set` does not check the invariant, `check()` and `complete_partial` do.
class PartialSquare
{
public:
    /// An empty grid. Throws DomainError for order 0 or above kMaxOrder.
    explicit PartialSquare(std::size_t order);

    explicit PartialSquare(const LatinSquare& square);

    /// Entries 0 are empty. Throws ValidationError on shape, range or
    /// repetition problems.
    static PartialSquare from_rows(const RawGrid& rows);

    std::size_t order() const noexcept { return m_order; }

    Symbol at(Index row, Index col) const noexcept { return m_cells[row * m_order + col]; }
    Symbol at(CellRef cell) const noexcept { return at(cell.row, cell.col); }

    void set(Index row, Index col, Symbol value) noexcept { m_cells[row * m_order + col] = value; }
    void set(CellRef cell, Symbol value) noexcept { set(cell.row, cell.col, value); }

    bool filled(Index row, Index col) const noexcept { return at(row, col) != kEmpty; }

    std::size_t filled_count() const noexcept;

    std::span<const Symbol> cells() const noexcept { return m_cells; }

    RawGrid rows() const;

    /// Throws ValidationError if a filled symbol is out of range or repeats.
    void check() const;

    friend bool operator==(const PartialSquare&, const PartialSquare&) = default;

private:
    std::size_t m_order;
    std::vector<Symbol> m_cells;
};

/// All completions of `partial`, at most `limit` of them.
///
/// Backtracking search: the empty cell with the fewest candidates is filled
/// first (ties go to the earliest cell in row-major order) and candidates
/// are tried in ascending order, so the output order is reproducible. An
/// uncompletable square yields an empty vector.
std::vector<LatinSquare> complete_partial(const PartialSquare& partial,
                                          std::size_t limit = kUnbounded);

/// A Latin square built by a completion search over the empty grid with
/// seed-shuffled cell and symbol orders. Deterministic in (order, seed) but
/// not uniformly distributed over Latin squares.
LatinSquare random_square(std::size_t order, std::uint64_t seed);

/// cell(r, c) = ((r + c) mod n) + 1 with 0-based r, c.
LatinSquare cyclic_square(std::size_t order);

/// Relocates row r to row_perm[r] and column c to col_perm[c]. Lets added
/// rows and columns of a prolongation sit anywhere in the result.
LatinSquare permute(const LatinSquare& square,
                    std::span<const Index> row_perm,
                    std::span<const Index> col_perm);

} // namespace qgp
