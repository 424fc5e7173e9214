#include "qgp/qgp.h"

#include "qgp/constructions.hpp"
#include "qgp/error.hpp"
#include "qgp/latin.hpp"
#include "qgp/lsq_format.hpp"
#include "qgp/mappings.hpp"

#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

namespace {

class ApiError : public std::exception
{
public:
    ApiError(int code, std::string message) : m_code(code), m_message(std::move(message)) {}
    int code() const noexcept { return m_code; }
    const char* what() const noexcept override { return m_message.c_str(); }

private:
    int m_code;
    std::string m_message;
};

thread_local std::string t_error;
thread_local std::size_t t_error_line = 0;

int record(int code, const char* message, std::size_t line = 0)
{
    t_error = message;
    t_error_line = line;
    return code;
}

template <typename F>
int guard(F&& body) noexcept
{
    try {
        t_error.clear();
        t_error_line = 0;
        return body();
    } catch (const ApiError& e) {
        return record(e.code(), e.what());
    } catch (const qgp::ParseError& e) {
        return record(QGP_ERR_PARSE, e.what(), e.line());
    } catch (const qgp::ValidationError& e) {
        return record(QGP_ERR_VALIDATION, e.what());
    } catch (const qgp::DomainError& e) {
        return record(QGP_ERR_DOMAIN, e.what());
    } catch (const qgp::InfeasibleError& e) {
        return record(QGP_ERR_INFEASIBLE, e.what());
    } catch (const std::bad_alloc&) {
        return record(QGP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return record(QGP_ERR_INTERNAL, e.what());
    } catch (...) {
        return record(QGP_ERR_INTERNAL, "unknown exception");
    }
}

template <std::uint32_t Magic>
struct Checked
{
    std::uint32_t magic = Magic;
    ~Checked() { magic = 0; }
    bool valid() const noexcept { return magic == Magic; }
};

template <typename T>
T& deref(T* handle, const char* what)
{
    if (handle == nullptr)
        throw ApiError(QGP_ERR_NULL_POINTER, std::string("null ") + what);
    if (!handle->valid())
        throw ApiError(QGP_ERR_INVALID_HANDLE, std::string("invalid ") + what + " handle");
    return *handle;
}

template <typename T>
void require(T* ptr, const char* what)
{
    if (ptr == nullptr)
        throw ApiError(QGP_ERR_NULL_POINTER, std::string("null ") + what);
}

int write_text(const std::string& text, char* buf, std::size_t* len)
{
    require(len, "length pointer");
    const std::size_t need = text.size() + 1;
    if (buf == nullptr || *len < need) {
        *len = need;
        throw ApiError(QGP_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(need) + " bytes");
    }
    std::memcpy(buf, text.c_str(), need);
    *len = need;
    return QGP_OK;
}

qgp::Permutation to_perm(const std::uint32_t* values, std::size_t n)
{
    if (n > 0)
        require(values, "permutation");
    qgp::Permutation perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] == 0)
            throw qgp::DomainError("positions are 1-based; got 0");
        perm[i] = values[i] - 1;
    }
    return perm;
}

void from_perm(const qgp::Permutation& perm, std::uint32_t* out)
{
    for (std::size_t i = 0; i < perm.size(); ++i)
        out[i] = perm[i] + 1;
}

qgp_mapping_info to_info(const qgp::MappingRecord& m)
{
    qgp_mapping_info info{QGP_MAPPING_NEITHER, 0, 0, 0};
    switch (m.kind) {
    case qgp::MappingKind::Complete:
        info.kind = QGP_MAPPING_COMPLETE;
        break;
    case qgp::MappingKind::Quasicomplete:
        info.kind = QGP_MAPPING_QUASICOMPLETE;
        info.special = m.special;
        info.x1 = m.duplicate_pair.first + 1;
        info.x2 = m.duplicate_pair.second + 1;
        break;
    case qgp::MappingKind::Neither:
        break;
    }
    return info;
}

} // namespace

struct qgp_square_struct : Checked<0x51475331>
{
    qgp::LsqDocument doc;

    explicit qgp_square_struct(qgp::LsqDocument d) : doc(std::move(d)) {}

    qgp::LatinSquare latin() const
    {
        if (doc.partial)
            throw qgp::ValidationError("square has empty cells");
        return qgp::LatinSquare::from_rows(doc.rows);
    }
};

struct qgp_square_list_struct : Checked<0x51474C31>
{
    std::vector<qgp::LatinSquare> squares;
};

struct qgp_perm_list_struct : Checked<0x51475031>
{
    std::size_t width = 0;
    std::size_t group = 1;
    std::vector<qgp::Permutation> entries;
};

struct qgp_plan_struct : Checked<0x514750A1>
{
    qgp::ProlongationPlan plan;
};

struct qgp_report_list_struct : Checked<0x51475232>
{
    std::vector<qgp::ConstructionReport> reports;
};

namespace {

qgp::LsqDocument document_of(const qgp::LatinSquare& square)
{
    return {square.order(), square.rows(), false};
}

int emit_square(const qgp::LatinSquare& square, qgp_square_t* out)
{
    require(out, "output handle");
    *out = new qgp_square_struct(document_of(square));
    return QGP_OK;
}

qgp::Method to_method(int method)
{
    switch (method) {
    case QGP_METHOD_BRUCK: return qgp::Method::Bruck;
    case QGP_METHOD_DISJOINT: return qgp::Method::Disjoint;
    case QGP_METHOD_BELYAVSKAYA: return qgp::Method::Belyavskaya;
    case QGP_METHOD_GEN_BELYAVSKAYA: return qgp::Method::GenBelyavskaya;
    case QGP_METHOD_DD: return qgp::Method::DD;
    case QGP_METHOD_GEN_DD: return qgp::Method::GenDD;
    case QGP_METHOD_TWO_STEP: return qgp::Method::TwoStep;
    default: throw qgp::DomainError("unknown method " + std::to_string(method));
    }
}

std::size_t limit_of(std::size_t limit)
{
    return limit == 0 ? qgp::kUnbounded : limit;
}

template <typename T>
int destroy(T* handle, const char* what)
{
    return guard([&] {
        if (handle == nullptr)
            return QGP_OK;
        deref(handle, what);
        delete handle;
        return QGP_OK;
    });
}

} // namespace

extern "C" {

const char* qgp_version(void)
{
    return "0.1.0";
}

const char* qgp_last_error(void)
{
    return t_error.c_str();
}

size_t qgp_last_error_line(void)
{
    return t_error_line;
}

const char* qgp_status_name(int status)
{
    switch (status) {
    case QGP_OK: return "ok";
    case QGP_ERR_NULL_POINTER: return "null pointer";
    case QGP_ERR_INVALID_HANDLE: return "invalid handle";
    case QGP_ERR_PARSE: return "parse error";
    case QGP_ERR_VALIDATION: return "validation error";
    case QGP_ERR_DOMAIN: return "domain error";
    case QGP_ERR_INFEASIBLE: return "infeasible";
    case QGP_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case QGP_ERR_OUT_OF_RANGE: return "out of range";
    case QGP_ERR_INTERNAL: return "internal error";
    default: return "unknown status";
    }
}

int qgp_square_parse(const char* text, size_t len, qgp_square_t* out)
{
    return guard([&] {
        require(text, "text");
        require(out, "output handle");
        *out = new qgp_square_struct(qgp::parse_lsq(std::string_view(text, len)));
        return QGP_OK;
    });
}

int qgp_square_from_cells(size_t order, const int32_t* cells, qgp_square_t* out)
{
    return guard([&] {
        require(out, "output handle");
        if (order == 0 || order > qgp::kMaxOrder)
            throw qgp::DomainError("order must be between 1 and " + std::to_string(qgp::kMaxOrder));
        require(cells, "cells");
        qgp::LsqDocument doc{order, qgp::RawGrid(order, std::vector<int>(order)), false};
        for (std::size_t r = 0; r < order; ++r) {
            for (std::size_t c = 0; c < order; ++c) {
                doc.rows[r][c] = cells[r * order + c];
                doc.partial = doc.partial || cells[r * order + c] == 0;
            }
        }
        *out = new qgp_square_struct(std::move(doc));
        return QGP_OK;
    });
}

int qgp_square_cyclic(size_t order, qgp_square_t* out)
{
    return guard([&] { return emit_square(qgp::cyclic_square(order), out); });
}

int qgp_square_random(size_t order, uint64_t seed, qgp_square_t* out)
{
    return guard([&] { return emit_square(qgp::random_square(order, seed), out); });
}

int qgp_square_destroy(qgp_square_t square)
{
    return destroy(square, "square");
}

int qgp_square_order(qgp_square_t square, size_t* order)
{
    return guard([&] {
        require(order, "output");
        *order = deref(square, "square").doc.order;
        return QGP_OK;
    });
}

int qgp_square_get(qgp_square_t square, size_t row, size_t col, int32_t* symbol)
{
    return guard([&] {
        const auto& doc = deref(square, "square").doc;
        require(symbol, "output");
        if (row < 1 || row > doc.order || col < 1 || col > doc.order)
            throw ApiError(QGP_ERR_OUT_OF_RANGE, "cell index out of range");
        *symbol = doc.rows[row - 1][col - 1];
        return QGP_OK;
    });
}

int qgp_square_is_partial(qgp_square_t square, int* partial)
{
    return guard([&] {
        require(partial, "output");
        *partial = deref(square, "square").doc.partial ? 1 : 0;
        return QGP_OK;
    });
}

int qgp_square_is_latin(qgp_square_t square, int* latin)
{
    return guard([&] {
        const auto& doc = deref(square, "square").doc;
        require(latin, "output");
        if (doc.partial)
            throw qgp::ValidationError("square has empty cells");
        *latin = qgp::is_latin(doc.rows) ? 1 : 0;
        return QGP_OK;
    });
}

int qgp_square_validate(qgp_square_t square, char* buf, size_t* len)
{
    return guard([&] {
        const auto& doc = deref(square, "square").doc;
        std::string text;
        for (const auto& issue : qgp::validate(doc.rows))
            text += issue.describe(doc.order) + '\n';
        return write_text(text, buf, len);
    });
}

int qgp_square_format(qgp_square_t square, char* buf, size_t* len)
{
    return guard([&] {
        const auto& doc = deref(square, "square").doc;
        std::string text = std::to_string(doc.order) + '\n';
        for (const auto& row : doc.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c)
                    text += ' ';
                text += row[c] == 0 ? std::string(".") : std::to_string(row[c]);
            }
            text += '\n';
        }
        return write_text(text, buf, len);
    });
}

int qgp_square_permute(qgp_square_t square,
                       const uint32_t* row_perm,
                       const uint32_t* col_perm,
                       size_t n,
                       qgp_square_t* out)
{
    return guard([&] {
        qgp::LatinSquare latin = deref(square, "square").latin();
        return emit_square(qgp::permute(latin, to_perm(row_perm, n), to_perm(col_perm, n)), out);
    });
}

int qgp_square_list_size(qgp_square_list_t list, size_t* size)
{
    return guard([&] {
        require(size, "output");
        *size = deref(list, "square list").squares.size();
        return QGP_OK;
    });
}

int qgp_square_list_get(qgp_square_list_t list, size_t i, qgp_square_t* out)
{
    return guard([&] {
        const auto& squares = deref(list, "square list").squares;
        if (i >= squares.size())
            throw ApiError(QGP_ERR_OUT_OF_RANGE, "list index out of range");
        return emit_square(squares[i], out);
    });
}

int qgp_square_list_destroy(qgp_square_list_t list)
{
    return destroy(list, "square list");
}

int qgp_complete(qgp_square_t square, size_t limit, qgp_square_list_t* out)
{
    return guard([&] {
        const auto& doc = deref(square, "square").doc;
        require(out, "output handle");
        auto list = std::make_unique<qgp_square_list_struct>();
        list->squares = qgp::complete_partial(qgp::PartialSquare::from_rows(doc.rows), limit_of(limit));
        *out = list.release();
        return QGP_OK;
    });
}

int qgp_perm_list_size(qgp_perm_list_t list, size_t* entries)
{
    return guard([&] {
        require(entries, "output");
        *entries = deref(list, "permutation list").entries.size();
        return QGP_OK;
    });
}

int qgp_perm_list_group(qgp_perm_list_t list, size_t* group)
{
    return guard([&] {
        require(group, "output");
        *group = deref(list, "permutation list").group;
        return QGP_OK;
    });
}

int qgp_perm_list_width(qgp_perm_list_t list, size_t* width)
{
    return guard([&] {
        require(width, "output");
        *width = deref(list, "permutation list").width;
        return QGP_OK;
    });
}

int qgp_perm_list_get(qgp_perm_list_t list, size_t i, uint32_t* out)
{
    return guard([&] {
        const auto& entries = deref(list, "permutation list").entries;
        require(out, "output");
        if (i >= entries.size())
            throw ApiError(QGP_ERR_OUT_OF_RANGE, "list index out of range");
        from_perm(entries[i], out);
        return QGP_OK;
    });
}

int qgp_perm_list_destroy(qgp_perm_list_t list)
{
    return destroy(list, "permutation list");
}

int qgp_transversals(qgp_square_t square, size_t limit, qgp_perm_list_t* out)
{
    return guard([&] {
        qgp::LatinSquare latin = deref(square, "square").latin();
        require(out, "output handle");
        auto list = std::make_unique<qgp_perm_list_struct>();
        list->width = latin.order();
        for (auto& t : qgp::find_transversals(latin, limit_of(limit)))
            list->entries.push_back(std::move(t.col));
        *out = list.release();
        return QGP_OK;
    });
}

int qgp_disjoint_transversals(qgp_square_t square, size_t k, size_t limit, qgp_perm_list_t* out)
{
    return guard([&] {
        qgp::LatinSquare latin = deref(square, "square").latin();
        require(out, "output handle");
        auto list = std::make_unique<qgp_perm_list_struct>();
        list->width = latin.order();
        list->group = k;
        for (auto& family : qgp::find_disjoint_transversals(latin, k, limit_of(limit)))
            for (auto& t : family.transversals)
                list->entries.push_back(std::move(t.col));
        *out = list.release();
        return QGP_OK;
    });
}

int qgp_quasicomplete_mappings(qgp_square_t square, size_t budget, qgp_perm_list_t* out, int* truncated)
{
    return guard([&] {
        qgp::LatinSquare latin = deref(square, "square").latin();
        require(out, "output handle");
        auto search = qgp::find_quasicomplete_mappings(latin, limit_of(budget));
        auto list = std::make_unique<qgp_perm_list_struct>();
        list->width = latin.order();
        for (auto& m : search.mappings)
            list->entries.push_back(std::move(m.sigma));
        if (truncated)
            *truncated = search.truncated ? 1 : 0;
        *out = list.release();
        return QGP_OK;
    });
}

int qgp_classify(qgp_square_t square, const uint32_t* sigma, size_t n, uint32_t* sigma_bar, qgp_mapping_info* info)
{
    return guard([&] {
        qgp::LatinSquare latin = deref(square, "square").latin();
        qgp::MappingRecord m = qgp::conjugated_mapping(latin, to_perm(sigma, n));
        if (sigma_bar)
            for (std::size_t x = 0; x < m.sigma_bar.size(); ++x)
                sigma_bar[x] = m.sigma_bar[x];
        if (info)
            *info = to_info(m);
        return QGP_OK;
    });
}

int qgp_plan_create(int method, qgp_plan_t* out)
{
    return guard([&] {
        require(out, "output handle");
        auto plan = std::make_unique<qgp_plan_struct>();
        plan->plan.method = to_method(method);
        *out = plan.release();
        return QGP_OK;
    });
}

int qgp_plan_destroy(qgp_plan_t plan)
{
    return destroy(plan, "plan");
}

int qgp_plan_add_transversal(qgp_plan_t plan, const uint32_t* cols, size_t n)
{
    return guard([&] {
        deref(plan, "plan").plan.transversals.push_back(to_perm(cols, n));
        return QGP_OK;
    });
}

int qgp_plan_add_except(qgp_plan_t plan, uint32_t row)
{
    return guard([&] {
        auto& p = deref(plan, "plan").plan;
        if (row == 0)
            throw qgp::DomainError("rows are 1-based; got 0");
        p.excepted_rows.push_back(row - 1);
        return QGP_OK;
    });
}

int qgp_plan_add_sigma(qgp_plan_t plan, const uint32_t* sigma, size_t n)
{
    return guard([&] {
        deref(plan, "plan").plan.sigmas.push_back(to_perm(sigma, n));
        return QGP_OK;
    });
}

int qgp_plan_add_keep(qgp_plan_t plan, uint32_t row)
{
    return guard([&] {
        auto& p = deref(plan, "plan").plan;
        if (row == 0)
            throw qgp::DomainError("rows are 1-based; got 0");
        p.kept_rows.push_back(row - 1);
        return QGP_OK;
    });
}

int qgp_plan_set_fill(qgp_plan_t plan, const uint32_t* symbols, size_t k)
{
    return guard([&] {
        auto& p = deref(plan, "plan").plan;
        if (k > 0)
            require(symbols, "fill");
        p.layout.fill.clear();
        for (std::size_t j = 0; j < k; ++j) {
            if (symbols[j] == 0 || symbols[j] > qgp::kMaxOrder)
                throw qgp::DomainError("fill symbol " + std::to_string(symbols[j]) + " out of range");
            p.layout.fill.push_back(static_cast<qgp::Symbol>(symbols[j]));
        }
        return QGP_OK;
    });
}

int qgp_plan_set_cols(qgp_plan_t plan, const uint32_t* perm, size_t k)
{
    return guard([&] {
        deref(plan, "plan").plan.layout.col_assign = to_perm(perm, k);
        return QGP_OK;
    });
}

int qgp_plan_set_rows(qgp_plan_t plan, const uint32_t* perm, size_t k)
{
    return guard([&] {
        deref(plan, "plan").plan.layout.row_assign = to_perm(perm, k);
        return QGP_OK;
    });
}

int qgp_plan_set_bottom(qgp_plan_t plan, qgp_square_t bottom)
{
    return guard([&] {
        auto& p = deref(plan, "plan").plan;
        p.bottom = deref(bottom, "square").latin();
        return QGP_OK;
    });
}

int qgp_plan_set_first(qgp_plan_t plan, int method)
{
    return guard([&] {
        auto& p = deref(plan, "plan").plan;
        if (method == QGP_METHOD_BRUCK)
            p.first = qgp::FirstStep::Bruck;
        else if (method == QGP_METHOD_BELYAVSKAYA)
            p.first = qgp::FirstStep::Belyavskaya;
        else
            throw qgp::DomainError("first step must be Bruck or Belyavskaya");
        return QGP_OK;
    });
}

int qgp_plan_set_diag_seed(qgp_plan_t plan, int enabled)
{
    return guard([&] {
        deref(plan, "plan").plan.seed_diagonal = enabled != 0;
        return QGP_OK;
    });
}

int qgp_prolong(qgp_square_t square, qgp_plan_t plan, size_t limit, qgp_report_list_t* out)
{
    return guard([&] {
        qgp::LatinSquare latin = deref(square, "square").latin();
        const auto& p = deref(plan, "plan").plan;
        require(out, "output handle");
        auto list = std::make_unique<qgp_report_list_struct>();
        list->reports = qgp::prolong(latin, p, limit_of(limit));
        *out = list.release();
        return QGP_OK;
    });
}

int qgp_report_list_size(qgp_report_list_t list, size_t* size)
{
    return guard([&] {
        require(size, "output");
        *size = deref(list, "report list").reports.size();
        return QGP_OK;
    });
}

int qgp_report_list_square(qgp_report_list_t list, size_t i, qgp_square_t* out)
{
    return guard([&] {
        const auto& reports = deref(list, "report list").reports;
        if (i >= reports.size())
            throw ApiError(QGP_ERR_OUT_OF_RANGE, "list index out of range");
        return emit_square(reports[i].output, out);
    });
}

int qgp_report_list_provenance(qgp_report_list_t list, size_t i, size_t row, size_t col, int* kind, uint32_t* slot)
{
    return guard([&] {
        const auto& reports = deref(list, "report list").reports;
        require(kind, "output");
        if (i >= reports.size())
            throw ApiError(QGP_ERR_OUT_OF_RANGE, "list index out of range");
        const auto& report = reports[i];
        const std::size_t m = report.output.order();
        if (row < 1 || row > m || col < 1 || col > m)
            throw ApiError(QGP_ERR_OUT_OF_RANGE, "cell index out of range");
        const auto& p = report.origin(static_cast<qgp::Index>(row - 1), static_cast<qgp::Index>(col - 1));
        *kind = static_cast<int>(p.kind);
        if (slot)
            *slot = p.slot + 1u;
        return QGP_OK;
    });
}

int qgp_report_list_destroy(qgp_report_list_t list)
{
    return destroy(list, "report list");
}

int qgp_contract(qgp_square_t square, int method, uint32_t deleted, qgp_square_t* out, uint32_t* sigma, qgp_mapping_info* info)
{
    return guard([&] {
        qgp::LatinSquare latin = deref(square, "square").latin();
        require(out, "output handle");
        if (deleted == 0 || deleted > qgp::kMaxOrder)
            throw qgp::DomainError("deleted symbol " + std::to_string(deleted) + " out of range");
        const auto symbol = static_cast<qgp::Symbol>(deleted);

        std::optional<qgp::LatinSquare> result;
        qgp::MappingRecord mapping;
        if (method == QGP_CONTRACT_BRUCK) {
            auto [sq, t] = qgp::contract_bruck(latin, symbol);
            mapping = qgp::conjugated_mapping(sq, t.col);
            result = std::move(sq);
        } else if (method == QGP_CONTRACT_EXCEPT) {
            auto [sq, m] = qgp::contract_except(latin, symbol);
            mapping = std::move(m);
            result = std::move(sq);
        } else {
            throw qgp::DomainError("unknown contraction method " + std::to_string(method));
        }
        if (sigma)
            from_perm(mapping.sigma, sigma);
        if (info)
            *info = to_info(mapping);
        return emit_square(*result, out);
    });
}

} // extern "C"
