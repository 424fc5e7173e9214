// constructions.hpp -- quasigroup prolongations and contractions
//
// A prolongation grows an order-n square to order n+k. Each of the k
// parameter objects (a transversal, or a quasicomplete mapping) occupies a
// "slot" j = 0..k-1; its cells are projected into the new column
// n + col_assign[j] and the new row n + row_assign[j], and the vacated cells
// receive the new symbol fill[j]. The new rows and columns are always
// appended; use `permute` afterwards to move them.

#pragma once

#include "qgp/latin.hpp"
#include "qgp/mappings.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qgp {

/// Where a cell of a construction's output came from. `slot` names the
/// parameter object responsible, where there is one.
struct Provenance
{
    enum class Kind : std::uint8_t
    {
        Unchanged,    // copied from the input square
        ProjectedRow, // in new row n+row_assign[slot], value moved down from a slot cell
        ProjectedCol, // in new column n+col_assign[slot], value moved right from a slot cell
        Vacated,      // a slot cell, now holding fill[slot]
        Kept,         // the excepted / kept cell of a slot, value unchanged
        BorderFill,   // set to the new symbol fill[slot] by the construction rule
        DiagonalSeed, // (new row, new column) of a slot, set to an old symbol
        Completed,    // chosen by the completion search
    };

    Kind kind = Kind::Unchanged;
    std::uint16_t slot = 0;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ConstructionReport
{
    LatinSquare output;
    std::vector<Provenance> provenance; // row-major, one per output cell
    std::size_t completions_found = 0;  // generalized methods: size of the enumeration

    const Provenance& origin(Index row, Index col) const
    {
        return provenance[row * output.order() + col];
    }
};

/// Placement of the k slots. Empty vectors select the defaults:
/// fill[j] = n+1+j and identity column / row assignments.
struct Layout
{
    std::vector<Symbol> fill;
    Permutation col_assign;
    Permutation row_assign;
};

/// Bruck-Belousov: one transversal, vacated cells and the corner get n+1.
ConstructionReport prolong_bruck(const LatinSquare& square, const Transversal& t);

/// k disjoint transversals at once. `bottom` is an order-k square whose
/// symbol s stands for n+s; it is copied into rows and columns n+1..n+k
/// as given (cyclic by default).
ConstructionReport prolong_disjoint(const LatinSquare& square,
                                    std::span<const Transversal> transversals,
                                    const Layout& layout = {},
                                    const std::optional<LatinSquare>& bottom = std::nullopt);

/// Belyavskaya: as Bruck, but the excepted cell keeps its symbol a, which
/// also goes to the corner, while its row and column borders get n+1.
ConstructionReport prolong_belyavskaya(const LatinSquare& square, const Transversal& t, CellRef excepted);

struct ExceptedTransversal
{
    Transversal transversal;
    CellRef excepted;
};

/// Belyavskaya on k disjoint transversals. Everything outside the k x k
/// bottom block is fixed by the rule; the block is left to
/// `complete_partial`, so this returns one report per completion (at most
/// `limit`), possibly none.
std::vector<ConstructionReport> prolong_belyavskaya_gen(const LatinSquare& square,
                                                        std::span<const ExceptedTransversal> slots,
                                                        const Layout& layout = {},
                                                        std::size_t limit = kUnbounded);

/// Derienko-Dudek on a quasicomplete mapping: row kept_x (one of the
/// duplicate pair) keeps its cell, the corner gets the special symbol.
ConstructionReport prolong_dd(const LatinSquare& square, const MappingRecord& mapping, Index kept_x);

/// Larger row of the duplicate pair.
Index default_kept(const MappingRecord& mapping);

struct KeptMapping
{
    MappingRecord mapping;
    Index kept_x;
};

/// Derienko-Dudek on k cell-disjoint quasicomplete mappings. Border cells
/// of the kept rows and the unseeded bottom block are left to the
/// completion search.
std::vector<ConstructionReport> prolong_dd_gen(const LatinSquare& square,
                                               std::span<const KeptMapping> slots,
                                               const Layout& layout = {},
                                               bool seed_diagonal = true,
                                               std::size_t limit = kUnbounded);

/// The partial square a generalized construction hands to the completion
/// search, with provenance for every filled cell.
struct Skeleton
{
    PartialSquare partial;
    std::vector<Provenance> provenance;
};

Skeleton belyavskaya_gen_skeleton(const LatinSquare& square,
                                  std::span<const ExceptedTransversal> slots,
                                  const Layout& layout = {});

Skeleton dd_gen_skeleton(const LatinSquare& square,
                         std::span<const KeptMapping> slots,
                         const Layout& layout = {},
                         bool seed_diagonal = true);

/// Completes a skeleton into reports; cells empty in the skeleton are
/// tagged Completed.
std::vector<ConstructionReport> complete_skeleton(const Skeleton& skeleton, std::size_t limit);

enum class FirstStep
{
    Bruck,
    Belyavskaya,
};

struct TwoStepReport
{
    ConstructionReport first;   // order n+1
    MappingRecord extended;     // t2 extended by n+1 -> n+1, classified on first.output
    ConstructionReport final;   // order n+2
};

/// Prolongs with t1, then prolongs the result along t2 extended to the new
/// row: Bruck if it became complete, Derienko-Dudek (keeping `kept_choice`,
/// default the new row) if quasicomplete.
TwoStepReport two_step(const LatinSquare& square,
                       const Transversal& t1,
                       const Transversal& t2,
                       FirstStep first,
                       std::optional<CellRef> excepted = std::nullopt,
                       std::optional<Index> kept_choice = std::nullopt);

struct BruckContraction
{
    LatinSquare square;
    Transversal transversal;
};

struct ExceptContraction
{
    LatinSquare square;
    MappingRecord mapping;
};

/// Inverse of prolong_bruck. Requires `deleted` in the bottom-right corner.
/// When `deleted` is not the largest symbol m, symbol m takes its name in
/// the result. Throws InfeasibleError if the result is not Latin.
BruckContraction contract_bruck(const LatinSquare& square, Symbol deleted);

/// Inverse of prolong_belyavskaya (mapping comes back Complete) and of
/// prolong_dd (Quasicomplete). Requires the corner to differ from
/// `deleted`. Same renaming rule as contract_bruck.
ExceptContraction contract_except(const LatinSquare& square, Symbol deleted);

enum class ContractionMethod
{
    Bruck,
    Except,
};

struct FeasibleContraction
{
    Symbol deleted;
    LatinSquare square;
    MappingRecord mapping; // Bruck: the recovered transversal as a Complete record
};

/// Tries every symbol and returns the feasible contractions, ascending by
/// deleted symbol.
std::vector<FeasibleContraction> contract_all(const LatinSquare& square, ContractionMethod method);

enum class Method
{
    Bruck,
    Disjoint,
    Belyavskaya,
    GenBelyavskaya,
    DD,
    GenDD,
    TwoStep,
};

/// Method-independent description of a prolongation, as assembled from
/// the command line or the C API. Positions are 0-based.
struct ProlongationPlan
{
    Method method = Method::Bruck;
    std::vector<Permutation> transversals; // TwoStep: {t1, t2}
    std::vector<Index> excepted_rows;      // per transversal; column implied
    std::vector<Permutation> sigmas;       // DD / GenDD
    std::vector<Index> kept_rows;          // per sigma; default_kept if absent. TwoStep: kept_choice
    Layout layout;
    std::optional<LatinSquare> bottom;     // Disjoint
    FirstStep first = FirstStep::Bruck;    // TwoStep
    bool seed_diagonal = true;             // GenDD
};

/// Validates the plan against `square` and runs it. Single-result methods
/// return one report; generalized ones up to `limit`. Throws DomainError
/// for invalid plans.
std::vector<ConstructionReport> prolong(const LatinSquare& square,
                                        const ProlongationPlan& plan,
                                        std::size_t limit = kUnbounded);

} // namespace qgp
