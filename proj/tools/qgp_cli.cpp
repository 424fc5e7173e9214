// qgp -- command-line front end over the C API in qgp/qgp.h
//
// Exit status: 0 success, 1 validation failure, 2 usage / parse / domain
// error, 3 infeasible (empty result).

#include <qgp/qgp.h>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit : int
{
    kOk = 0,
    kInvalid = 1,
    kUsage = 2,
    kInfeasible = 3,
};

struct Failure
{
    int exit_code;
    std::string message;
};

int exit_for(int status)
{
    switch (status) {
    case QGP_ERR_VALIDATION:
        return kInvalid;
    case QGP_ERR_INFEASIBLE:
        return kInfeasible;
    default:
        return kUsage;
    }
}

void check(int status, const std::string& context = {})
{
    if (status == QGP_OK)
        return;
    std::string message = context.empty() ? "" : context + ": ";
    message += qgp_last_error();
    throw Failure{exit_for(status), message};
}

template <typename H, int (*Destroy)(H)>
struct Release
{
    void operator()(H h) const { Destroy(h); }
};

using Square = std::unique_ptr<qgp_square_struct, Release<qgp_square_t, qgp_square_destroy>>;
using SquareList = std::unique_ptr<qgp_square_list_struct, Release<qgp_square_list_t, qgp_square_list_destroy>>;
using PermList = std::unique_ptr<qgp_perm_list_struct, Release<qgp_perm_list_t, qgp_perm_list_destroy>>;
using Plan = std::unique_ptr<qgp_plan_struct, Release<qgp_plan_t, qgp_plan_destroy>>;
using ReportList = std::unique_ptr<qgp_report_list_struct, Release<qgp_report_list_t, qgp_report_list_destroy>>;

std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{kUsage, path + ": cannot open file"};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Square load(const std::string& path)
{
    const std::string text = read_input(path);
    qgp_square_t raw = nullptr;
    check(qgp_square_parse(text.data(), text.size(), &raw), path);
    return Square(raw);
}

std::string format(qgp_square_t square)
{
    std::size_t len = 0;
    qgp_square_format(square, nullptr, &len);
    std::string text(len, '\0');
    check(qgp_square_format(square, text.data(), &len));
    text.resize(len - 1);
    return text;
}

std::size_t order_of(qgp_square_t square)
{
    std::size_t n = 0;
    check(qgp_square_order(square, &n));
    return n;
}

std::vector<std::uint32_t> parse_list(const std::string& text, const char* what)
{
    std::vector<std::uint32_t> out;
    std::string cleaned = text;
    for (char& ch : cleaned)
        if (ch == ',')
            ch = ' ';
    std::istringstream in(cleaned);
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || value > UINT32_MAX)
            throw Failure{kUsage, std::string("invalid ") + what + " '" + text + "'"};
        out.push_back(static_cast<std::uint32_t>(value));
    }
    if (out.empty())
        throw Failure{kUsage, std::string("empty ") + what};
    return out;
}

std::string join(const std::vector<std::uint32_t>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string describe(const qgp_mapping_info& info)
{
    switch (info.kind) {
    case QGP_MAPPING_COMPLETE:
        return "complete";
    case QGP_MAPPING_QUASICOMPLETE:
        return "quasicomplete, special " + std::to_string(info.special) + ", duplicate rows " +
               std::to_string(info.x1) + " " + std::to_string(info.x2);
    default:
        return "neither";
    }
}

std::vector<std::uint32_t> perm_at(qgp_perm_list_t list, std::size_t i)
{
    std::size_t width = 0;
    check(qgp_perm_list_width(list, &width));
    std::vector<std::uint32_t> perm(width);
    check(qgp_perm_list_get(list, i, perm.data()));
    return perm;
}

std::size_t list_size(qgp_perm_list_t list)
{
    std::size_t n = 0;
    check(qgp_perm_list_size(list, &n));
    return n;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& path)
{
    Square square = load(path);
    std::size_t len = 0;
    qgp_square_validate(square.get(), nullptr, &len);
    std::string report(len, '\0');
    check(qgp_square_validate(square.get(), report.data(), &len));
    report.resize(len - 1);

    int partial = 0;
    check(qgp_square_is_partial(square.get(), &partial));
    if (report.empty() && !partial) {
        std::cout << "ok: Latin square of order " << order_of(square.get()) << '\n';
        return kOk;
    }
    if (partial)
        std::cout << "square has empty cells\n";
    std::cout << report;
    return kInvalid;
}

int cmd_gen(std::size_t order, std::uint64_t seed, bool cyclic)
{
    qgp_square_t raw = nullptr;
    check(cyclic ? qgp_square_cyclic(order, &raw) : qgp_square_random(order, seed, &raw));
    Square square(raw);
    std::cout << format(square.get());
    return kOk;
}

void print_squares(const std::vector<Square>& squares, const char* label)
{
    for (std::size_t i = 0; i < squares.size(); ++i) {
        if (i)
            std::cout << '\n';
        if (squares.size() > 1)
            std::cout << "# " << label << ' ' << (i + 1) << '\n';
        std::cout << format(squares[i].get());
    }
}

int cmd_complete(const std::string& path, std::size_t limit, bool count_only)
{
    Square square = load(path);
    qgp_square_list_t raw = nullptr;
    check(qgp_complete(square.get(), limit, &raw));
    SquareList list(raw);
    std::size_t n = 0;
    check(qgp_square_list_size(list.get(), &n));
    if (count_only) {
        std::cout << n << '\n';
        return kOk;
    }
    if (n == 0) {
        std::cerr << "qgp: no completion exists\n";
        return kInfeasible;
    }
    std::vector<Square> squares;
    for (std::size_t i = 0; i < n; ++i) {
        qgp_square_t s = nullptr;
        check(qgp_square_list_get(list.get(), i, &s));
        squares.emplace_back(s);
    }
    print_squares(squares, "completion");
    return kOk;
}

int cmd_transversals(const std::string& path, bool count_only, std::size_t disjoint, std::size_t limit)
{
    Square square = load(path);
    qgp_perm_list_t raw = nullptr;
    if (disjoint > 0)
        check(qgp_disjoint_transversals(square.get(), disjoint, limit, &raw));
    else
        check(qgp_transversals(square.get(), limit, &raw));
    PermList list(raw);
    std::size_t group = 1;
    check(qgp_perm_list_group(list.get(), &group));
    const std::size_t entries = list_size(list.get());
    if (count_only) {
        std::cout << entries / group << '\n';
        return kOk;
    }
    for (std::size_t i = 0; i < entries; ++i) {
        if (group > 1 && i > 0 && i % group == 0)
            std::cout << '\n';
        std::cout << join(perm_at(list.get(), i)) << '\n';
    }
    return kOk;
}

int cmd_qcmappings(const std::string& path, bool count_only, std::size_t budget)
{
    Square square = load(path);
    qgp_perm_list_t raw = nullptr;
    int truncated = 0;
    check(qgp_quasicomplete_mappings(square.get(), budget, &raw, &truncated));
    PermList list(raw);
    const std::size_t entries = list_size(list.get());
    if (truncated)
        std::cerr << "qgp: stopped after " << entries << " mappings (raise --budget for more)\n";
    if (count_only) {
        std::cout << entries << '\n';
        return kOk;
    }
    for (std::size_t i = 0; i < entries; ++i) {
        auto sigma = perm_at(list.get(), i);
        std::vector<std::uint32_t> bar(sigma.size());
        qgp_mapping_info info{};
        check(qgp_classify(square.get(), sigma.data(), sigma.size(), bar.data(), &info));
        std::cout << join(sigma) << "  # image " << join(bar) << "; " << describe(info) << '\n';
    }
    return kOk;
}

struct ProlongArgs
{
    std::string path;
    std::string method;
    std::vector<std::string> transversals;
    std::vector<std::string> sigmas;
    std::vector<std::uint32_t> excepts;
    std::vector<std::uint32_t> keeps;
    std::string fill;
    std::string cols;
    std::string rows;
    std::string bottom;
    std::string t1;
    std::string t2;
    std::string first = "bruck";
    std::size_t limit = 1;
    bool all = false;
    bool no_diag_seed = false;
    bool provenance = false;
};

char provenance_code(int kind)
{
    switch (kind) {
    case QGP_PROV_UNCHANGED: return '.';
    case QGP_PROV_PROJECTED_ROW: return 'R';
    case QGP_PROV_PROJECTED_COL: return 'C';
    case QGP_PROV_VACATED: return 'V';
    case QGP_PROV_KEPT: return 'K';
    case QGP_PROV_BORDER_FILL: return 'B';
    case QGP_PROV_DIAGONAL_SEED: return 'D';
    case QGP_PROV_COMPLETED: return '*';
    default: return '?';
    }
}

int cmd_prolong(const ProlongArgs& args)
{
    static const std::vector<std::pair<std::string, int>> methods = {
        {"bruck", QGP_METHOD_BRUCK},
        {"disjoint", QGP_METHOD_DISJOINT},
        {"belyavskaya", QGP_METHOD_BELYAVSKAYA},
        {"gen-belyavskaya", QGP_METHOD_GEN_BELYAVSKAYA},
        {"dd", QGP_METHOD_DD},
        {"gen-dd", QGP_METHOD_GEN_DD},
        {"two-step", QGP_METHOD_TWO_STEP},
    };
    int method = -1;
    for (const auto& [name, id] : methods)
        if (name == args.method)
            method = id;

    Square square = load(args.path);
    qgp_plan_t raw_plan = nullptr;
    check(qgp_plan_create(method, &raw_plan));
    Plan plan(raw_plan);

    auto add_perm = [&](const std::string& text, auto add, const char* what) {
        auto perm = parse_list(text, what);
        check(add(plan.get(), perm.data(), perm.size()), std::string("--") + what);
    };

    std::vector<std::string> transversals = args.transversals;
    if (!args.t1.empty() || !args.t2.empty()) {
        if (method != QGP_METHOD_TWO_STEP)
            throw Failure{kUsage, "--t1/--t2 apply to --method two-step only"};
        if (args.t1.empty() || args.t2.empty() || !transversals.empty())
            throw Failure{kUsage, "two-step needs both --t1 and --t2 (and no --transversal)"};
        transversals = {args.t1, args.t2};
    }
    for (const auto& t : transversals)
        add_perm(t, qgp_plan_add_transversal, "transversal");
    for (const auto& s : args.sigmas)
        add_perm(s, qgp_plan_add_sigma, "sigma");
    for (auto row : args.excepts)
        check(qgp_plan_add_except(plan.get(), row), "--except");
    for (auto row : args.keeps)
        check(qgp_plan_add_keep(plan.get(), row), "--keep");
    if (!args.fill.empty())
        add_perm(args.fill, qgp_plan_set_fill, "fill");
    if (!args.cols.empty())
        add_perm(args.cols, qgp_plan_set_cols, "cols");
    if (!args.rows.empty())
        add_perm(args.rows, qgp_plan_set_rows, "rows");
    if (!args.bottom.empty()) {
        Square bottom = load(args.bottom);
        check(qgp_plan_set_bottom(plan.get(), bottom.get()), "--bottom");
    }
    check(qgp_plan_set_first(plan.get(), args.first == "belyavskaya" ? QGP_METHOD_BELYAVSKAYA : QGP_METHOD_BRUCK));
    check(qgp_plan_set_diag_seed(plan.get(), args.no_diag_seed ? 0 : 1));

    qgp_report_list_t raw_reports = nullptr;
    check(qgp_prolong(square.get(), plan.get(), args.all ? 0 : args.limit, &raw_reports));
    ReportList reports(raw_reports);
    std::size_t n = 0;
    check(qgp_report_list_size(reports.get(), &n));
    if (n == 0) {
        std::cerr << "qgp: the construction has no completion\n";
        return kInfeasible;
    }
    for (std::size_t i = 0; i < n; ++i) {
        qgp_square_t raw = nullptr;
        check(qgp_report_list_square(reports.get(), i, &raw));
        Square out(raw);
        if (i)
            std::cout << '\n';
        if (n > 1)
            std::cout << "# completion " << (i + 1) << '\n';
        if (args.provenance) {
            const std::size_t m = order_of(out.get());
            for (std::size_t r = 1; r <= m; ++r) {
                std::string line = "# ";
                for (std::size_t c = 1; c <= m; ++c) {
                    int kind = 0;
                    check(qgp_report_list_provenance(reports.get(), i, r, c, &kind, nullptr));
                    line += provenance_code(kind);
                }
                std::cout << line << '\n';
            }
        }
        std::cout << format(out.get());
    }
    return kOk;
}

int cmd_contract(const std::string& path, const std::string& method_name, std::uint32_t deleted, bool try_all)
{
    const int method = method_name == "bruck" ? QGP_CONTRACT_BRUCK : QGP_CONTRACT_EXCEPT;
    Square square = load(path);
    const std::size_t m = order_of(square.get());

    std::vector<std::uint32_t> symbols;
    if (try_all) {
        for (std::uint32_t s = 1; s <= m; ++s)
            symbols.push_back(s);
    } else {
        if (deleted == 0)
            throw Failure{kUsage, "--deleted is required unless --try-all is given"};
        symbols.push_back(deleted);
    }

    std::size_t found = 0;
    for (std::uint32_t s : symbols) {
        qgp_square_t raw = nullptr;
        std::vector<std::uint32_t> sigma(m > 0 ? m - 1 : 0);
        qgp_mapping_info info{};
        const int status = qgp_contract(square.get(), method, s, &raw, sigma.data(), &info);
        if (status == QGP_ERR_INFEASIBLE && try_all)
            continue;
        check(status, "contract");
        Square out(raw);
        if (found++)
            std::cout << '\n';
        std::cout << "# deleted " << s << "\n# " << (method == QGP_CONTRACT_BRUCK ? "transversal " : "sigma ")
                  << join(sigma) << " (" << describe(info) << ")\n"
                  << format(out.get());
    }
    if (found == 0) {
        std::cerr << "qgp: no symbol admits this contraction\n";
        return kInfeasible;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quasigroup (Latin square) prolongations and contractions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qgp_version()));

    std::string file;
    std::size_t limit = 0;

    auto* verify = app.add_subcommand("verify", "Check that FILE holds a Latin square");
    verify->add_option("FILE", file, "LSQ file, '-' for stdin")->required();

    std::size_t order = 0;
    std::uint64_t seed = 0;
    bool cyclic = false;
    auto* gen = app.add_subcommand("gen", "Generate a Latin square");
    gen->add_option("--order", order, "Order n")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "Seed for the random generator");
    gen->add_flag("--cyclic", cyclic, "The cyclic square instead of a random one");

    bool all = false;
    bool count = false;
    auto* complete = app.add_subcommand("complete", "Complete a partial Latin square");
    complete->add_option("FILE", file, "LSQ file, '-' for stdin")->required();
    auto* complete_all = complete->add_flag("--all", all, "Every completion");
    complete->add_option("--limit", limit, "At most N completions (default 1)")->excludes(complete_all);
    complete->add_flag("--count", count, "Print the number of completions only (implies --all)");

    bool list = false;
    std::size_t disjoint = 0;
    auto* transversals = app.add_subcommand("transversals", "Enumerate transversals");
    transversals->add_option("FILE", file, "LSQ file, '-' for stdin")->required();
    auto* t_count = transversals->add_flag("--count", count, "Print the count only");
    transversals->add_flag("--list", list, "One column permutation per line (default)")->excludes(t_count);
    transversals->add_option("--disjoint", disjoint, "Families of K pairwise disjoint transversals")
        ->check(CLI::PositiveNumber);
    transversals->add_option("--limit", limit, "At most N results");

    std::size_t budget = 1'000'000;
    auto* qcm = app.add_subcommand("qcmappings", "Enumerate quasicomplete mappings");
    qcm->add_option("FILE", file, "LSQ file, '-' for stdin")->required();
    auto* q_count = qcm->add_flag("--count", count, "Print the count only");
    qcm->add_flag("--list", list, "One mapping per line (default)")->excludes(q_count);
    qcm->add_option("--budget", budget, "Stop after N mappings (0 = no limit)")->capture_default_str();

    ProlongArgs pa;
    auto* prolong = app.add_subcommand("prolong", "Prolong a Latin square");
    prolong->add_option("FILE", pa.path, "LSQ file, '-' for stdin")->required();
    prolong->add_option("--method", pa.method, "Construction")
        ->required()
        ->check(CLI::IsMember({"bruck", "disjoint", "belyavskaya", "gen-belyavskaya", "dd", "gen-dd", "two-step"}));
    prolong->add_option("--transversal", pa.transversals, "Transversal as a column permutation, repeatable");
    prolong->add_option("--sigma", pa.sigmas, "Quasicomplete mapping, repeatable");
    prolong->add_option("--except", pa.excepts, "Excepted row per transversal, repeatable");
    prolong->add_option("--keep", pa.keeps, "Kept row per mapping, repeatable");
    prolong->add_option("--fill", pa.fill, "New symbol per slot, e.g. \"6 5 4\"");
    prolong->add_option("--cols", pa.cols, "New column (1..k) per slot");
    prolong->add_option("--rows", pa.rows, "New row (1..k) per slot");
    prolong->add_option("--bottom", pa.bottom, "Order-k LSQ file for the bottom block (symbol s means n+s)");
    prolong->add_option("--t1", pa.t1, "Two-step: first transversal");
    prolong->add_option("--t2", pa.t2, "Two-step: second transversal");
    prolong->add_option("--first", pa.first, "Two-step: first construction")
        ->check(CLI::IsMember({"bruck", "belyavskaya"}));
    auto* p_all = prolong->add_flag("--all", pa.all, "Every completion of a generalized construction");
    prolong->add_option("--limit", pa.limit, "At most N completions (default 1)")->excludes(p_all);
    prolong->add_flag("--no-diag-seed", pa.no_diag_seed, "gen-dd: leave the bottom diagonal to the search");
    prolong->add_flag("--provenance", pa.provenance, "Print a provenance map before each square");

    std::string contract_method;
    std::uint32_t deleted = 0;
    bool try_all = false;
    auto* contract = app.add_subcommand("contract", "Contract a Latin square by one order");
    contract->add_option("FILE", file, "LSQ file, '-' for stdin")->required();
    contract->add_option("--method", contract_method, "Inverse of which prolongation")
        ->required()
        ->check(CLI::IsMember({"bruck", "except"}));
    contract->add_option("--deleted", deleted, "Symbol to delete")->check(CLI::PositiveNumber);
    contract->add_flag("--try-all", try_all, "Try every symbol, print each feasible contraction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*verify)
            return cmd_verify(file);
        if (*gen)
            return cmd_gen(order, seed, cyclic);
        if (*complete)
            return cmd_complete(file, count || all ? 0 : (limit == 0 ? 1 : limit), count);
        if (*transversals)
            return cmd_transversals(file, count, disjoint, limit);
        if (*qcm)
            return cmd_qcmappings(file, count, budget);
        if (*prolong)
            return cmd_prolong(pa);
        if (*contract)
            return cmd_contract(file, contract_method, deleted, try_all);
    } catch (const Failure& f) {
        std::cerr << "qgp: " << f.message << '\n';
        return f.exit_code;
    }
    return kUsage;
}
