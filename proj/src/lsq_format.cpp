#include "qgp/lsq_format.hpp"

#include "qgp/error.hpp"

#include <charconv>

namespace qgp {

namespace {

bool is_space(char ch)
{
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f';
}

std::vector<std::string_view> tokenize(std::string_view line, bool commas = false)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    auto separator = [&](char ch) { return is_space(ch) || ch == '\n' || (commas && ch == ','); };
    while (i < line.size()) {
        while (i < line.size() && separator(line[i]))
            ++i;
        std::size_t start = i;
        while (i < line.size() && !separator(line[i]))
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

bool parse_int(std::string_view token, long long& out)
{
    if (!token.empty() && token.front() == '+')
        token.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

} // namespace

LsqDocument parse_lsq(std::string_view text)
{
    LsqDocument doc;
    bool have_order = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        std::size_t first = 0;
        while (first < line.size() && is_space(line[first]))
            ++first;
        if (first == line.size() || line[first] == '#')
            continue;

        auto tokens = tokenize(line);
        if (!have_order) {
            long long order = 0;
            if (tokens.size() != 1 || !parse_int(tokens[0], order))
                throw ParseError(line_no, "expected the order as a single integer");
            if (order < 1 || order > static_cast<long long>(kMaxOrder))
                throw ParseError(line_no, "order " + std::string(tokens[0]) + " is out of range");
            doc.order = static_cast<std::size_t>(order);
            have_order = true;
            continue;
        }
        if (doc.rows.size() == doc.order)
            throw ParseError(line_no, "unexpected content after " + std::to_string(doc.order) + " rows");
        if (tokens.size() != doc.order)
            throw ParseError(line_no, "expected " + std::to_string(doc.order) + " entries, found " +
                                          std::to_string(tokens.size()));
        std::vector<int> row;
        row.reserve(doc.order);
        for (auto token : tokens) {
            if (token == ".") {
                row.push_back(0);
                doc.partial = true;
                continue;
            }
            long long v = 0;
            if (!parse_int(token, v) || v < -1'000'000 || v > 1'000'000)
                throw ParseError(line_no, "invalid entry '" + std::string(token) + "'");
            row.push_back(static_cast<int>(v));
        }
        doc.rows.push_back(std::move(row));
    }
    if (!have_order)
        throw ParseError(line_no, "missing order line");
    if (doc.rows.size() != doc.order)
        throw ParseError(line_no, "expected " + std::to_string(doc.order) + " rows, found " +
                                      std::to_string(doc.rows.size()));
    return doc;
}

LatinSquare read_latin(std::string_view text)
{
    LsqDocument doc = parse_lsq(text);
    if (doc.partial)
        throw ValidationError("square has empty cells");
    return LatinSquare::from_rows(doc.rows);
}

PartialSquare read_partial(std::string_view text)
{
    return PartialSquare::from_rows(parse_lsq(text).rows);
}

namespace {

template <typename Square>
std::string format_any(const Square& square)
{
    std::string out = std::to_string(square.order()) + '\n';
    const std::size_t n = square.order();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (c)
                out += ' ';
            Symbol v = square.at(static_cast<Index>(r), static_cast<Index>(c));
            out += v == kEmpty ? std::string(".") : std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

} // namespace

std::string format_lsq(const LatinSquare& square)
{
    return format_any(square);
}

std::string format_lsq(const PartialSquare& square)
{
    return format_any(square);
}

std::vector<long long> parse_integer_list(std::string_view text)
{
    std::vector<long long> values;
    for (auto token : tokenize(text, true)) {
        long long v = 0;
        if (!parse_int(token, v))
            throw ParseError(1, "invalid integer '" + std::string(token) + "'");
        values.push_back(v);
    }
    return values;
}

std::vector<Index> parse_permutation(std::string_view text)
{
    std::vector<long long> values = parse_integer_list(text);
    const std::size_t n = values.size();
    if (n == 0)
        throw DomainError("empty permutation");
    std::vector<char> seen(n, 0);
    std::vector<Index> perm;
    perm.reserve(n);
    for (long long v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1])
            throw DomainError("'" + std::string(text) + "' is not a permutation of 1.." + std::to_string(n));
        seen[v - 1] = 1;
        perm.push_back(static_cast<Index>(v - 1));
    }
    return perm;
}

std::string format_permutation(std::span<const Index> perm)
{
    std::string out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(perm[i] + 1);
    }
    return out;
}

} // namespace qgp
