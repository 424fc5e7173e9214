#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace qgp::oracle {

namespace {

using Table = std::vector<std::vector<int>>;

Table table_of(const LatinSquare& square)
{
    const std::size_t n = square.order();
    if (n > kMaxOracleOrder)
        throw Refusal("order " + std::to_string(n) + " is too large to enumerate naively");
    return square.rows();
}

/// Size of the image of x -> t[x][p[x]].
std::size_t image_size(const Table& t, const std::vector<int>& p)
{
    std::set<int> image;
    for (std::size_t x = 0; x < t.size(); ++x)
        image.insert(t[x][p[x]]);
    return image.size();
}

template <typename Keep>
std::vector<Permutation> filter_permutations(const LatinSquare& square, Keep keep)
{
    const Table t = table_of(square);
    std::vector<int> p(t.size());
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        if (keep(t, p))
            out.emplace_back(p.begin(), p.end());
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct Counter
{
    Table grid;
    std::size_t n;
    std::size_t budget;
    std::size_t visited = 0;
    std::size_t found = 0;

    bool allowed(std::size_t r, std::size_t c, int v) const
    {
        for (std::size_t i = 0; i < n; ++i)
            if ((i != c && grid[r][i] == v) || (i != r && grid[i][c] == v))
                return false;
        return true;
    }

    void count(std::size_t cell)
    {
        if (++visited > budget)
            throw Refusal("completion count exceeded the node budget");
        if (cell == n * n) {
            ++found;
            return;
        }
        const std::size_t r = cell / n;
        const std::size_t c = cell % n;
        if (grid[r][c] != 0) {
            count(cell + 1);
            return;
        }
        for (int v = 1; v <= static_cast<int>(n); ++v) {
            if (!allowed(r, c, v))
                continue;
            grid[r][c] = v;
            count(cell + 1);
            grid[r][c] = 0;
        }
    }
};

} // namespace

std::vector<Permutation> transversals(const LatinSquare& square)
{
    return filter_permutations(square, [](const Table& t, const std::vector<int>& p) {
        return image_size(t, p) == t.size();
    });
}

std::vector<Permutation> quasicomplete(const LatinSquare& square)
{
    return filter_permutations(square, [](const Table& t, const std::vector<int>& p) {
        return image_size(t, p) + 1 == t.size();
    });
}

std::size_t completions(const PartialSquare& partial, std::size_t budget)
{
    const std::size_t n = partial.order();
    Counter counter{partial.rows(), n, budget};
    // A filled cell that clashes makes every branch dead.
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (counter.grid[r][c] != 0 && !counter.allowed(r, c, counter.grid[r][c]))
                return 0;
    counter.count(0);
    return counter.found;
}

} // namespace qgp::oracle
