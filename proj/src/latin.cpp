#include "qgp/latin.hpp"

#include "qgp/error.hpp"
#include "symbol_set.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

namespace qgp {

namespace {

/// Shape and range problems are fatal for both full and partial grids;
/// `allow_empty` additionally accepts 0 entries and skips them in the
/// repetition checks.
ValidationReport collect_issues(const RawGrid& grid, bool allow_empty)
{
    ValidationReport report;
    const std::size_t n = grid.size();
    if (n == 0) {
        report.push_back({ValidationIssue::Kind::NotSquare, 0, 0});
        return report;
    }
    for (std::size_t r = 0; r < n; ++r) {
        if (grid[r].size() != n)
            report.push_back({ValidationIssue::Kind::NotSquare, r, static_cast<int>(grid[r].size())});
    }
    if (!report.empty())
        return report;

    const int lo = allow_empty ? 0 : 1;
    const int hi = static_cast<int>(std::min(n, kMaxOrder));
    for (std::size_t r = 0; r < n; ++r) {
        for (int v : grid[r]) {
            if (v < lo || v > hi)
                report.push_back({ValidationIssue::Kind::OutOfRange, r, v});
        }
    }

    std::vector<int> seen(n + 1);
    auto in_range = [&](int v) { return v >= 1 && v <= hi; };
    for (std::size_t r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int v : grid[r]) {
            if (in_range(v) && ++seen[v] == 2)
                report.push_back({ValidationIssue::Kind::RowDuplicate, r, v});
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t r = 0; r < n; ++r) {
            int v = grid[r][c];
            if (in_range(v) && ++seen[v] == 2)
                report.push_back({ValidationIssue::Kind::ColumnDuplicate, c, v});
        }
    }
    return report;
}

[[noreturn]] void throw_report(const ValidationReport& report, std::size_t order)
{
    std::string message;
    for (const auto& issue : report) {
        if (!message.empty())
            message += "; ";
        message += issue.describe(order);
    }
    throw ValidationError(message);
}

RawGrid to_rows(std::size_t n, std::span<const Symbol> cells)
{
    RawGrid rows(n, std::vector<int>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            rows[r][c] = cells[r * n + c];
    return rows;
}

RawGrid to_rows_checked(std::size_t n, std::span<const Symbol> cells)
{
    if (n == 0 || n > kMaxOrder)
        throw ValidationError("order must be between 1 and " + std::to_string(kMaxOrder));
    if (cells.size() != n * n)
        throw ValidationError("expected " + std::to_string(n * n) + " cells, got " +
                              std::to_string(cells.size()));
    return to_rows(n, cells);
}

std::vector<Symbol> flatten(const RawGrid& rows)
{
    std::vector<Symbol> cells;
    cells.reserve(rows.size() * rows.size());
    for (const auto& row : rows)
        for (int v : row)
            cells.push_back(static_cast<Symbol>(v));
    return cells;
}

/// Iterative backtracking over the empty cells of a partial square.
class CompletionSearch
{
public:
    /// `cell_rank` lists every cell index once; among cells with equally few
    /// candidates the one listed first is chosen. `value_order` lists 1..n in
    /// the order candidates are tried.
    CompletionSearch(const PartialSquare& partial,
                     std::vector<std::size_t> cell_rank,
                     std::vector<Symbol> value_order)
        : m_n(partial.order()),
          m_cells(partial.cells().begin(), partial.cells().end()),
          m_rows(m_n, m_n + 1),
          m_cols(m_n, m_n + 1),
          m_values(std::move(value_order))
    {
        for (std::size_t i = 0; i < m_cells.size(); ++i) {
            if (Symbol v = m_cells[i]; v != kEmpty) {
                m_rows.set(i / m_n, v);
                m_cols.set(i % m_n, v);
            }
        }
        for (std::size_t i : cell_rank)
            if (m_cells[i] == kEmpty)
                m_empty.push_back(i);

        // Valid symbols are bits 1..n.
        m_valid.assign(m_rows.words(), 0);
        for (std::size_t s = 1; s <= m_n; ++s)
            m_valid[s / 64] |= std::uint64_t{1} << (s % 64);
    }

    template <typename Emit>
    void run(std::size_t limit, Emit&& emit)
    {
        if (limit == 0)
            return;
        std::size_t found = 0;
        for (;;) {
            auto [cell, count] = choose();
            if (cell == kNone) {
                emit(LatinSquare(m_n, m_cells));
                if (++found >= limit || !advance())
                    return;
                continue;
            }
            if (count == 0) {
                if (!advance())
                    return;
                continue;
            }
            m_stack.push_back({cell, 0, kEmpty});
            if (!advance())
                return;
        }
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    struct Frame
    {
        std::size_t cell;
        std::size_t next; // position in m_values to try next
        Symbol value;
    };

    struct Choice
    {
        std::size_t cell;
        std::size_t count;
    };

    std::size_t candidates(std::size_t cell) const noexcept
    {
        const std::uint64_t* row = m_rows.row(cell / m_n);
        const std::uint64_t* col = m_cols.row(cell % m_n);
        std::size_t count = 0;
        for (std::size_t w = 0; w < m_valid.size(); ++w)
            count += static_cast<std::size_t>(std::popcount(m_valid[w] & ~(row[w] | col[w])));
        return count;
    }

    Choice choose() const noexcept
    {
        Choice best{kNone, kNone};
        for (std::size_t cell : m_empty) {
            if (m_cells[cell] != kEmpty)
                continue;
            std::size_t count = candidates(cell);
            if (count < best.count) {
                best = {cell, count};
                if (count <= 1)
                    break;
            }
        }
        return best;
    }

    void place(std::size_t cell, Symbol v) noexcept
    {
        m_cells[cell] = v;
        m_rows.set(cell / m_n, v);
        m_cols.set(cell % m_n, v);
    }

    void unplace(std::size_t cell, Symbol v) noexcept
    {
        m_cells[cell] = kEmpty;
        m_rows.reset(cell / m_n, v);
        m_cols.reset(cell % m_n, v);
    }

    /// Moves the deepest open frame to its next candidate, popping exhausted
    /// frames. False once the whole tree is exhausted.
    bool advance() noexcept
    {
        while (!m_stack.empty()) {
            Frame& f = m_stack.back();
            if (f.value != kEmpty) {
                unplace(f.cell, f.value);
                f.value = kEmpty;
            }
            const std::size_t r = f.cell / m_n;
            const std::size_t c = f.cell % m_n;
            while (f.next < m_values.size()) {
                Symbol v = m_values[f.next++];
                if (!m_rows.test(r, v) && !m_cols.test(c, v)) {
                    place(f.cell, v);
                    f.value = v;
                    return true;
                }
            }
            m_stack.pop_back();
        }
        return false;
    }

    std::size_t m_n;
    std::vector<Symbol> m_cells;
    detail::MaskTable m_rows;
    detail::MaskTable m_cols;
    std::vector<Symbol> m_values;
    std::vector<std::size_t> m_empty;
    std::vector<std::uint64_t> m_valid;
    std::vector<Frame> m_stack;
};

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng)
{
    // Spelled out so the result does not depend on the standard library's
    // distribution implementation.
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[rng() % i]);
}

void check_order(std::size_t order)
{
    if (order == 0)
        throw DomainError("order must be at least 1");
    if (order > kMaxOrder)
        throw DomainError("order exceeds " + std::to_string(kMaxOrder));
}

} // namespace

std::string ValidationIssue::describe(std::size_t order) const
{
    const std::string at = std::to_string(index + 1);
    switch (kind) {
    case Kind::NotSquare:
        if (order == 0)
            return "grid is empty";
        return "row " + at + " has " + std::to_string(symbol) + " entries, expected " +
               std::to_string(order);
    case Kind::OutOfRange:
        return "row " + at + ": symbol " + std::to_string(symbol) + " out of range for order " +
               std::to_string(order);
    case Kind::RowDuplicate:
        return "row " + at + " duplicates symbol " + std::to_string(symbol);
    case Kind::ColumnDuplicate:
        return "column " + at + " duplicates symbol " + std::to_string(symbol);
    }
    return {};
}

ValidationReport validate(const RawGrid& grid)
{
    return collect_issues(grid, false);
}

bool is_latin(const RawGrid& grid)
{
    ValidationReport report = validate(grid);
    for (const auto& issue : report) {
        if (issue.kind == ValidationIssue::Kind::NotSquare ||
            issue.kind == ValidationIssue::Kind::OutOfRange)
            throw_report(report, grid.size());
    }
    return report.empty();
}

LatinSquare::LatinSquare(std::size_t order, std::vector<Symbol> cells)
    : m_order(order), m_cells(std::move(cells))
{
    RawGrid rows = to_rows_checked(m_order, m_cells);
    if (ValidationReport report = validate(rows); !report.empty())
        throw_report(report, m_order);
}

LatinSquare LatinSquare::from_rows(const RawGrid& rows)
{
    if (ValidationReport report = validate(rows); !report.empty())
        throw_report(report, rows.size());
    return LatinSquare(rows.size(), flatten(rows));
}

RawGrid LatinSquare::rows() const
{
    return to_rows(m_order, m_cells);
}

PartialSquare::PartialSquare(std::size_t order) : m_order(order)
{
    check_order(order);
    m_cells.assign(order * order, kEmpty);
}

PartialSquare::PartialSquare(const LatinSquare& square)
    : m_order(square.order()), m_cells(square.cells().begin(), square.cells().end())
{
}

PartialSquare PartialSquare::from_rows(const RawGrid& rows)
{
    if (ValidationReport report = collect_issues(rows, true); !report.empty())
        throw_report(report, rows.size());
    PartialSquare square(rows.size());
    square.m_cells = flatten(rows);
    return square;
}

std::size_t PartialSquare::filled_count() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(m_cells.begin(), m_cells.end(), [](Symbol v) { return v != kEmpty; }));
}

RawGrid PartialSquare::rows() const
{
    return to_rows(m_order, m_cells);
}

void PartialSquare::check() const
{
    RawGrid rows = to_rows_checked(m_order, m_cells);
    if (ValidationReport report = collect_issues(rows, true); !report.empty())
        throw_report(report, m_order);
}

std::vector<LatinSquare> complete_partial(const PartialSquare& partial, std::size_t limit)
{
    partial.check();
    const std::size_t n = partial.order();

    std::vector<std::size_t> cells(n * n);
    std::iota(cells.begin(), cells.end(), std::size_t{0});
    std::vector<Symbol> values(n);
    std::iota(values.begin(), values.end(), Symbol{1});

    std::vector<LatinSquare> out;
    CompletionSearch search(partial, std::move(cells), std::move(values));
    search.run(limit, [&](LatinSquare square) { out.push_back(std::move(square)); });
    return out;
}

LatinSquare random_square(std::size_t order, std::uint64_t seed)
{
    check_order(order);
    std::mt19937_64 rng(seed);

    std::vector<std::size_t> cells(order * order);
    std::iota(cells.begin(), cells.end(), std::size_t{0});
    shuffle(cells, rng);
    std::vector<Symbol> values(order);
    std::iota(values.begin(), values.end(), Symbol{1});
    shuffle(values, rng);

    std::vector<LatinSquare> out;
    CompletionSearch search(PartialSquare(order), std::move(cells), std::move(values));
    search.run(1, [&](LatinSquare square) { out.push_back(std::move(square)); });
    // The empty grid always has a completion.
    return std::move(out.front());
}

LatinSquare cyclic_square(std::size_t order)
{
    check_order(order);
    std::vector<Symbol> cells(order * order);
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c < order; ++c)
            cells[r * order + c] = static_cast<Symbol>((r + c) % order + 1);
    return LatinSquare(order, std::move(cells));
}

LatinSquare permute(const LatinSquare& square,
                    std::span<const Index> row_perm,
                    std::span<const Index> col_perm)
{
    const std::size_t n = square.order();
    auto is_perm = [n](std::span<const Index> p) {
        if (p.size() != n)
            return false;
        std::vector<char> seen(n, 0);
        for (Index i : p) {
            if (i >= n || seen[i])
                return false;
            seen[i] = 1;
        }
        return true;
    };
    if (!is_perm(row_perm) || !is_perm(col_perm))
        throw DomainError("row and column relocations must be permutations of the square's order");

    std::vector<Symbol> cells(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            cells[row_perm[r] * n + col_perm[c]] = square.at(static_cast<Index>(r), static_cast<Index>(c));
    return LatinSquare(n, std::move(cells));
}

} // namespace qgp
