#include "qgp/constructions.hpp"

#include "qgp/error.hpp"
#include "qgp/lsq_format.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qgp {

namespace {

using Kind = Provenance::Kind;

/// Cells (x, col[x]) of one slot with their symbols; `kept` is the row
/// whose cell stays in place.
struct Slot
{
    Permutation col;
    std::vector<Symbol> values;
    std::optional<Index> kept;
};

struct ResolvedLayout
{
    std::vector<Symbol> fill;
    Permutation col_assign;
    Permutation row_assign;
};

ResolvedLayout resolve(const Layout& layout, std::size_t n, std::size_t k)
{
    ResolvedLayout out{layout.fill, layout.col_assign, layout.row_assign};
    if (out.fill.empty()) {
        for (std::size_t j = 0; j < k; ++j)
            out.fill.push_back(static_cast<Symbol>(n + 1 + j));
    }
    if (out.col_assign.empty()) {
        for (std::size_t j = 0; j < k; ++j)
            out.col_assign.push_back(static_cast<Index>(j));
    }
    if (out.row_assign.empty()) {
        for (std::size_t j = 0; j < k; ++j)
            out.row_assign.push_back(static_cast<Index>(j));
    }

    if (out.fill.size() != k)
        throw DomainError("fill needs " + std::to_string(k) + " symbols");
    std::vector<char> seen(k, 0);
    for (Symbol s : out.fill) {
        if (s <= n || s > n + k || seen[s - n - 1])
            throw DomainError("fill must assign each of the new symbols " + std::to_string(n + 1) +
                              ".." + std::to_string(n + k) + " exactly once");
        seen[s - n - 1] = 1;
    }
    if (!is_permutation(out.col_assign, k))
        throw DomainError("column assignment must be a permutation of 1.." + std::to_string(k));
    if (!is_permutation(out.row_assign, k))
        throw DomainError("row assignment must be a permutation of 1.." + std::to_string(k));
    return out;
}

void check_order_growth(std::size_t n, std::size_t k)
{
    if (k == 0)
        throw DomainError("at least one transversal or mapping is required");
    if (k > n)
        throw DomainError("at most " + std::to_string(n) + " slots fit an order-" + std::to_string(n) + " square");
    if (n + k > kMaxOrder)
        throw DomainError("prolonged order exceeds " + std::to_string(kMaxOrder));
}

/// Recomputes the values of `t` in `square`, rejecting stale or foreign
/// transversals.
void check_transversal(const LatinSquare& square, const Transversal& t)
{
    if (t.order() != square.order())
        throw DomainError("transversal order " + std::to_string(t.order()) + " does not match square order " +
                          std::to_string(square.order()));
    if (make_transversal(square, t.col) != t)
        throw DomainError("transversal values do not match the square");
}

void check_pairwise_disjoint(std::span<const Slot> slots)
{
    for (std::size_t a = 0; a < slots.size(); ++a)
        for (std::size_t b = a + 1; b < slots.size(); ++b)
            if (!cells_disjoint(slots[a].col, slots[b].col))
                throw DomainError("slots " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                  " share a cell");
}

void check_quasicomplete(const LatinSquare& square, const MappingRecord& m, Index kept_x)
{
    if (m.sigma.size() != square.order() || conjugated_mapping(square, m.sigma) != m)
        throw DomainError("mapping record was not computed against this square");
    if (m.kind != MappingKind::Quasicomplete)
        throw DomainError("mapping is not quasicomplete");
    if (kept_x != m.duplicate_pair.first && kept_x != m.duplicate_pair.second)
        throw DomainError("kept row " + std::to_string(kept_x + 1) + " is not in the duplicate pair (" +
                          std::to_string(m.duplicate_pair.first + 1) + ", " +
                          std::to_string(m.duplicate_pair.second + 1) + ")");
}

/// Output grid under construction, with provenance.
class Builder
{
public:
    Builder(const LatinSquare& square, std::size_t k)
        : m_n(square.order()), m_m(m_n + k), m_grid(m_m), m_prov(m_m * m_m)
    {
        for (Index r = 0; r < m_n; ++r)
            for (Index c = 0; c < m_n; ++c)
                m_grid.set(r, c, square.at(r, c));
    }

    std::size_t n() const noexcept { return m_n; }

    void put(std::size_t r, std::size_t c, Symbol v, Kind kind, std::size_t slot)
    {
        m_grid.set(static_cast<Index>(r), static_cast<Index>(c), v);
        m_prov[r * m_m + c] = {kind, static_cast<std::uint16_t>(slot)};
    }

    void tag(std::size_t r, std::size_t c, Kind kind, std::size_t slot)
    {
        m_prov[r * m_m + c] = {kind, static_cast<std::uint16_t>(slot)};
    }

    /// Moves the slot cells into the new row/column and fills the vacated
    /// cells; kept cells stay.
    void project(std::span<const Slot> slots, const ResolvedLayout& layout)
    {
        for (std::size_t j = 0; j < slots.size(); ++j) {
            const Slot& s = slots[j];
            const std::size_t new_col = m_n + layout.col_assign[j];
            const std::size_t new_row = m_n + layout.row_assign[j];
            for (std::size_t x = 0; x < m_n; ++x) {
                if (s.kept && *s.kept == x) {
                    tag(x, s.col[x], Kind::Kept, j);
                    continue;
                }
                put(x, new_col, s.values[x], Kind::ProjectedCol, j);
                put(new_row, s.col[x], s.values[x], Kind::ProjectedRow, j);
                put(x, s.col[x], layout.fill[j], Kind::Vacated, j);
            }
        }
    }

    Skeleton skeleton() const
    {
        Skeleton out{m_grid, m_prov};
        for (std::size_t i = 0; i < out.provenance.size(); ++i)
            if (out.partial.cells()[i] == kEmpty)
                out.provenance[i] = {Kind::Completed, 0};
        return out;
    }

    /// The grid must be complete and Latin by now; anything else is a bug in
    /// the construction, not bad input.
    ConstructionReport finish() const
    {
        try {
            return {LatinSquare(m_m, {m_grid.cells().begin(), m_grid.cells().end()}), m_prov, 0};
        } catch (const ValidationError& e) {
            throw std::logic_error(std::string("construction produced an invalid square: ") + e.what());
        }
    }

private:
    std::size_t m_n;
    std::size_t m_m;
    PartialSquare m_grid;
    std::vector<Provenance> m_prov;
};

Slot slot_of(const Transversal& t, std::optional<Index> kept = std::nullopt)
{
    return {t.col, t.values, kept};
}

Slot slot_of(const MappingRecord& m, Index kept)
{
    return {m.sigma, m.sigma_bar, kept};
}

Index except_row(const Transversal& t, CellRef excepted)
{
    if (!t.contains(excepted))
        throw DomainError("excepted cell (" + std::to_string(excepted.row + 1) + ", " +
                          std::to_string(excepted.col + 1) + ") is not on its transversal");
    return excepted.row;
}

} // namespace

ConstructionReport prolong_bruck(const LatinSquare& square, const Transversal& t)
{
    const std::size_t n = square.order();
    check_order_growth(n, 1);
    check_transversal(square, t);

    Builder builder(square, 1);
    const Slot slot = slot_of(t);
    builder.project({&slot, 1}, resolve({}, n, 1));
    builder.put(n, n, static_cast<Symbol>(n + 1), Kind::BorderFill, 0);
    return builder.finish();
}

ConstructionReport prolong_disjoint(const LatinSquare& square,
                                    std::span<const Transversal> transversals,
                                    const Layout& layout,
                                    const std::optional<LatinSquare>& bottom)
{
    const std::size_t n = square.order();
    const std::size_t k = transversals.size();
    check_order_growth(n, k);
    std::vector<Slot> slots;
    for (const auto& t : transversals) {
        check_transversal(square, t);
        slots.push_back(slot_of(t));
    }
    check_pairwise_disjoint(slots);
    const ResolvedLayout resolved = resolve(layout, n, k);
    const LatinSquare block = bottom ? *bottom : cyclic_square(k);
    if (block.order() != k)
        throw DomainError("bottom block must have order " + std::to_string(k));

    Builder builder(square, k);
    builder.project(slots, resolved);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const Symbol v = static_cast<Symbol>(n + block.at(static_cast<Index>(i), static_cast<Index>(j)));
            const auto slot = std::find(resolved.fill.begin(), resolved.fill.end(), v) - resolved.fill.begin();
            builder.put(n + i, n + j, v, Kind::BorderFill, static_cast<std::size_t>(slot));
        }
    }
    return builder.finish();
}

ConstructionReport prolong_belyavskaya(const LatinSquare& square, const Transversal& t, CellRef excepted)
{
    const std::size_t n = square.order();
    check_order_growth(n, 1);
    check_transversal(square, t);
    const Index row = except_row(t, excepted);
    const Symbol a = square.at(excepted);
    const Symbol fresh = static_cast<Symbol>(n + 1);

    Builder builder(square, 1);
    const Slot slot = slot_of(t, row);
    builder.project({&slot, 1}, resolve({}, n, 1));
    builder.put(row, n, fresh, Kind::BorderFill, 0);
    builder.put(n, excepted.col, fresh, Kind::BorderFill, 0);
    builder.put(n, n, a, Kind::DiagonalSeed, 0);
    return builder.finish();
}

Skeleton belyavskaya_gen_skeleton(const LatinSquare& square,
                                  std::span<const ExceptedTransversal> pairs,
                                  const Layout& layout)
{
    const std::size_t n = square.order();
    const std::size_t k = pairs.size();
    check_order_growth(n, k);
    std::vector<Slot> slots;
    for (const auto& p : pairs) {
        check_transversal(square, p.transversal);
        slots.push_back(slot_of(p.transversal, except_row(p.transversal, p.excepted)));
    }
    check_pairwise_disjoint(slots);
    const ResolvedLayout resolved = resolve(layout, n, k);

    Builder builder(square, k);
    builder.project(slots, resolved);
    for (std::size_t j = 0; j < k; ++j) {
        const CellRef e = pairs[j].excepted;
        builder.put(e.row, n + resolved.col_assign[j], resolved.fill[j], Kind::BorderFill, j);
        builder.put(n + resolved.row_assign[j], e.col, resolved.fill[j], Kind::BorderFill, j);
    }
    return builder.skeleton();
}

std::vector<ConstructionReport> complete_skeleton(const Skeleton& skeleton, std::size_t limit)
{
    std::vector<LatinSquare> completions = complete_partial(skeleton.partial, limit);
    std::vector<ConstructionReport> out;
    out.reserve(completions.size());
    for (auto& square : completions)
        out.push_back({std::move(square), skeleton.provenance, completions.size()});
    return out;
}

std::vector<ConstructionReport> prolong_belyavskaya_gen(const LatinSquare& square,
                                                        std::span<const ExceptedTransversal> pairs,
                                                        const Layout& layout,
                                                        std::size_t limit)
{
    return complete_skeleton(belyavskaya_gen_skeleton(square, pairs, layout), limit);
}

Index default_kept(const MappingRecord& mapping)
{
    return std::max(mapping.duplicate_pair.first, mapping.duplicate_pair.second);
}

ConstructionReport prolong_dd(const LatinSquare& square, const MappingRecord& mapping, Index kept_x)
{
    const std::size_t n = square.order();
    check_order_growth(n, 1);
    check_quasicomplete(square, mapping, kept_x);
    const Symbol fresh = static_cast<Symbol>(n + 1);

    Builder builder(square, 1);
    const Slot slot = slot_of(mapping, kept_x);
    builder.project({&slot, 1}, resolve({}, n, 1));
    builder.put(kept_x, n, fresh, Kind::BorderFill, 0);
    builder.put(n, mapping.sigma[kept_x], fresh, Kind::BorderFill, 0);
    builder.put(n, n, mapping.special, Kind::DiagonalSeed, 0);
    return builder.finish();
}

Skeleton dd_gen_skeleton(const LatinSquare& square,
                         std::span<const KeptMapping> pairs,
                         const Layout& layout,
                         bool seed_diagonal)
{
    const std::size_t n = square.order();
    const std::size_t k = pairs.size();
    check_order_growth(n, k);
    std::vector<Slot> slots;
    for (const auto& p : pairs) {
        check_quasicomplete(square, p.mapping, p.kept_x);
        slots.push_back(slot_of(p.mapping, p.kept_x));
    }
    check_pairwise_disjoint(slots);
    const ResolvedLayout resolved = resolve(layout, n, k);

    Builder builder(square, k);
    builder.project(slots, resolved);
    if (seed_diagonal) {
        for (std::size_t j = 0; j < k; ++j)
            builder.put(n + resolved.row_assign[j], n + resolved.col_assign[j], pairs[j].mapping.special,
                        Kind::DiagonalSeed, j);
    }
    Skeleton skeleton = builder.skeleton();
    // Seeds may collide (equal specials in one bottom row or column).
    try {
        skeleton.partial.check();
    } catch (const ValidationError& e) {
        throw DomainError(std::string("seeded diagonal is inconsistent: ") + e.what());
    }
    return skeleton;
}

std::vector<ConstructionReport> prolong_dd_gen(const LatinSquare& square,
                                               std::span<const KeptMapping> pairs,
                                               const Layout& layout,
                                               bool seed_diagonal,
                                               std::size_t limit)
{
    return complete_skeleton(dd_gen_skeleton(square, pairs, layout, seed_diagonal), limit);
}

TwoStepReport two_step(const LatinSquare& square,
                       const Transversal& t1,
                       const Transversal& t2,
                       FirstStep first,
                       std::optional<CellRef> excepted,
                       std::optional<Index> kept_choice)
{
    const std::size_t n = square.order();
    check_transversal(square, t1);
    check_transversal(square, t2);
    if (!cells_disjoint(t1.col, t2.col))
        throw DomainError("the two transversals share a cell");

    ConstructionReport step1 = [&] {
        if (first == FirstStep::Bruck)
            return prolong_bruck(square, t1);
        if (!excepted)
            throw DomainError("a Belyavskaya first step needs an excepted cell");
        return prolong_belyavskaya(square, t1, *excepted);
    }();

    Permutation sigma2 = t2.col;
    sigma2.push_back(static_cast<Index>(n));
    MappingRecord extended = conjugated_mapping(step1.output, sigma2);

    switch (extended.kind) {
    case MappingKind::Complete: {
        ConstructionReport last = prolong_bruck(step1.output, make_transversal(step1.output, sigma2));
        return {std::move(step1), std::move(extended), std::move(last)};
    }
    case MappingKind::Quasicomplete: {
        ConstructionReport last = prolong_dd(step1.output, extended, kept_choice.value_or(static_cast<Index>(n)));
        return {std::move(step1), std::move(extended), std::move(last)};
    }
    case MappingKind::Neither:
        break;
    }
    throw std::logic_error("second transversal became neither complete nor quasicomplete");
}

namespace {

void check_contraction_input(const LatinSquare& square, Symbol deleted)
{
    const std::size_t m = square.order();
    if (m < 2)
        throw InfeasibleError("an order-1 square cannot be contracted");
    if (deleted < 1 || deleted > m)
        throw DomainError("deleted symbol " + std::to_string(deleted) + " is out of range for order " +
                          std::to_string(m));
}

/// Column < n holding `deleted` in row r; rows other than the one holding
/// `deleted` in the last column always have one.
Index find_symbol(const LatinSquare& square, Index r, Symbol deleted)
{
    const auto row = square.row(r);
    return static_cast<Index>(std::find(row.begin(), row.end(), deleted) - row.begin());
}

/// Drops the last row and column after `repair` has rewritten some cells,
/// renames symbol m to `deleted` and validates.
LatinSquare shrink(std::vector<Symbol> cells, std::size_t m, Symbol deleted)
{
    const std::size_t n = m - 1;
    std::vector<Symbol> out(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Symbol v = cells[r * m + c];
            out[r * n + c] = v == m ? deleted : v;
        }
    }
    try {
        return LatinSquare(n, std::move(out));
    } catch (const ValidationError& e) {
        throw InfeasibleError(std::string("contraction does not yield a Latin square: ") + e.what());
    }
}

} // namespace

BruckContraction contract_bruck(const LatinSquare& square, Symbol deleted)
{
    check_contraction_input(square, deleted);
    const std::size_t m = square.order();
    const Index last = static_cast<Index>(m - 1);
    if (square.at(last, last) != deleted)
        throw InfeasibleError("symbol " + std::to_string(deleted) + " is not in the bottom-right cell");

    std::vector<Symbol> cells(square.cells().begin(), square.cells().end());
    Permutation col(m - 1);
    for (Index r = 0; r < last; ++r) {
        col[r] = find_symbol(square, r, deleted);
        cells[r * m + col[r]] = square.at(r, last);
    }
    LatinSquare result = shrink(std::move(cells), m, deleted);
    // Repaired cells hold the old last column, i.e. every symbol once.
    Transversal t = make_transversal(result, col);
    return {std::move(result), std::move(t)};
}

ExceptContraction contract_except(const LatinSquare& square, Symbol deleted)
{
    check_contraction_input(square, deleted);
    const std::size_t m = square.order();
    const Index last = static_cast<Index>(m - 1);
    if (square.at(last, last) == deleted)
        throw InfeasibleError("symbol " + std::to_string(deleted) + " sits in the bottom-right cell");

    Index r0 = 0;
    while (square.at(r0, last) != deleted)
        ++r0;
    Index c0 = 0;
    while (square.at(last, c0) != deleted)
        ++c0;

    std::vector<Symbol> cells(square.cells().begin(), square.cells().end());
    Permutation sigma(m - 1);
    for (Index r = 0; r < last; ++r) {
        if (r == r0) {
            sigma[r] = c0;
            continue;
        }
        sigma[r] = find_symbol(square, r, deleted);
        cells[r * m + sigma[r]] = square.at(r, last);
    }
    LatinSquare result = shrink(std::move(cells), m, deleted);
    MappingRecord mapping = conjugated_mapping(result, sigma);
    return {std::move(result), std::move(mapping)};
}

std::vector<FeasibleContraction> contract_all(const LatinSquare& square, ContractionMethod method)
{
    std::vector<FeasibleContraction> out;
    for (std::size_t s = 1; s <= square.order(); ++s) {
        const Symbol deleted = static_cast<Symbol>(s);
        try {
            if (method == ContractionMethod::Bruck) {
                auto [result, t] = contract_bruck(square, deleted);
                MappingRecord record = conjugated_mapping(result, t.col);
                out.push_back({deleted, std::move(result), std::move(record)});
            } else {
                auto [result, mapping] = contract_except(square, deleted);
                out.push_back({deleted, std::move(result), std::move(mapping)});
            }
        } catch (const InfeasibleError&) {
        }
    }
    return out;
}

namespace {

void expect_count(const char* what, std::size_t got, std::size_t want)
{
    if (got != want)
        throw DomainError(std::string("expected ") + std::to_string(want) + " " + what + ", got " +
                          std::to_string(got));
}

CellRef excepted_cell(const Transversal& t, Index row)
{
    if (row >= t.order())
        throw DomainError("excepted row " + std::to_string(row + 1) + " is out of range");
    return {row, t.col[row]};
}

std::vector<ConstructionReport> one(ConstructionReport report)
{
    std::vector<ConstructionReport> out;
    out.push_back(std::move(report));
    return out;
}

} // namespace

std::vector<ConstructionReport> prolong(const LatinSquare& square,
                                        const ProlongationPlan& plan,
                                        std::size_t limit)
{
    std::vector<Transversal> ts;
    for (const auto& col : plan.transversals)
        ts.push_back(make_transversal(square, col));

    auto mappings = [&] {
        std::vector<KeptMapping> out;
        if (!plan.kept_rows.empty())
            expect_count("kept rows", plan.kept_rows.size(), plan.sigmas.size());
        for (std::size_t j = 0; j < plan.sigmas.size(); ++j) {
            MappingRecord m = conjugated_mapping(square, plan.sigmas[j]);
            Index kept = plan.kept_rows.empty() ? default_kept(m) : plan.kept_rows[j];
            out.push_back({std::move(m), kept});
        }
        return out;
    };

    switch (plan.method) {
    case Method::Bruck:
        expect_count("transversals", ts.size(), 1);
        return one(prolong_bruck(square, ts[0]));
    case Method::Disjoint:
        return one(prolong_disjoint(square, ts, plan.layout, plan.bottom));
    case Method::Belyavskaya:
        expect_count("transversals", ts.size(), 1);
        expect_count("excepted rows", plan.excepted_rows.size(), 1);
        return one(prolong_belyavskaya(square, ts[0], excepted_cell(ts[0], plan.excepted_rows[0])));
    case Method::GenBelyavskaya: {
        expect_count("excepted rows", plan.excepted_rows.size(), ts.size());
        std::vector<ExceptedTransversal> pairs;
        for (std::size_t j = 0; j < ts.size(); ++j)
            pairs.push_back({ts[j], excepted_cell(ts[j], plan.excepted_rows[j])});
        return prolong_belyavskaya_gen(square, pairs, plan.layout, limit);
    }
    case Method::DD: {
        expect_count("mappings", plan.sigmas.size(), 1);
        auto ms = mappings();
        if (ms[0].mapping.kind != MappingKind::Quasicomplete)
            throw DomainError("mapping is not quasicomplete");
        return one(prolong_dd(square, ms[0].mapping, ms[0].kept_x));
    }
    case Method::GenDD: {
        auto ms = mappings();
        for (const auto& m : ms)
            if (m.mapping.kind != MappingKind::Quasicomplete)
                throw DomainError("mapping (" + format_permutation(m.mapping.sigma) + ") is not quasicomplete");
        return prolong_dd_gen(square, ms, plan.layout, plan.seed_diagonal, limit);
    }
    case Method::TwoStep: {
        expect_count("transversals", ts.size(), 2);
        std::optional<CellRef> excepted;
        if (plan.first == FirstStep::Belyavskaya) {
            expect_count("excepted rows", plan.excepted_rows.size(), 1);
            excepted = excepted_cell(ts[0], plan.excepted_rows[0]);
        }
        std::optional<Index> kept;
        if (!plan.kept_rows.empty())
            kept = plan.kept_rows[0];
        return one(two_step(square, ts[0], ts[1], plan.first, excepted, kept).final);
    }
    }
    throw DomainError("unknown method");
}

} // namespace qgp
