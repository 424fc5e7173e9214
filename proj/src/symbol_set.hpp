// symbol_set.hpp -- fixed-capacity bitset used by the search kernels

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qgp::detail {

/// A contiguous block of `rows` bitsets, each `bits` wide. One allocation
/// for all row/column masks of a search keeps them together in memory.
class MaskTable
{
public:
    MaskTable(std::size_t rows, std::size_t bits)
        : m_words((bits + 63) / 64), m_data(rows * m_words, 0)
    {
    }

    std::size_t words() const noexcept { return m_words; }

    bool test(std::size_t row, std::size_t bit) const noexcept
    {
        return (m_data[row * m_words + bit / 64] >> (bit % 64)) & 1u;
    }

    void set(std::size_t row, std::size_t bit) noexcept
    {
        m_data[row * m_words + bit / 64] |= std::uint64_t{1} << (bit % 64);
    }

    void reset(std::size_t row, std::size_t bit) noexcept
    {
        m_data[row * m_words + bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
    }

    const std::uint64_t* row(std::size_t r) const noexcept { return m_data.data() + r * m_words; }

private:
    std::size_t m_words;
    std::vector<std::uint64_t> m_data;
};

} // namespace qgp::detail
