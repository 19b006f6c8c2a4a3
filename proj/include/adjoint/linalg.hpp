#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "adjoint/field.hpp"

namespace adjoint {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Dense GF(2) row, 64 columns per machine word.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t columns) : columns_(columns), words_((columns + 63) / 64, 0) {}

    std::size_t size() const noexcept { return columns_; }
    Coeff coeff(std::size_t c) const noexcept { return (words_[c / 64] >> (c % 64)) & 1U; }
    void set(std::size_t c) noexcept { words_[c / 64] |= std::uint64_t{1} << (c % 64); }
    void flip(std::size_t c) noexcept { words_[c / 64] ^= std::uint64_t{1} << (c % 64); }
    void add(std::size_t c, Coeff v) noexcept
    {
        if (v & 1U)
            flip(c);
    }

    std::size_t find_next(std::size_t from) const noexcept
    {
        std::size_t w = from / 64;
        if (w >= words_.size())
            return npos;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from % 64));
        while (bits == 0) {
            if (++w == words_.size())
                return npos;
            bits = words_[w];
        }
        return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    }
    bool is_zero() const noexcept { return find_next(0) == npos; }

    /// Clears column c using a pivot row whose first set column is c.
    void eliminate(std::size_t c, const BitRow& pivot) noexcept
    {
        for (std::size_t w = c / 64; w < words_.size(); ++w)
            words_[w] ^= pivot.words_[w];
    }
    void normalize(std::size_t) noexcept {}

    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    std::size_t columns_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row over a general F_p.
class ModRow {
public:
    ModRow(PrimeField field, std::size_t columns) : field_(field), entries_(columns, 0) {}
    ModRow(PrimeField field, std::vector<Coeff> entries)
        : field_(field), entries_(std::move(entries)) {}

    const std::vector<Coeff>& entries() const noexcept { return entries_; }

    std::size_t size() const noexcept { return entries_.size(); }
    Coeff coeff(std::size_t c) const noexcept { return entries_[c]; }
    void add(std::size_t c, Coeff v) noexcept { entries_[c] = field_.add(entries_[c], v); }

    std::size_t find_next(std::size_t from) const noexcept
    {
        for (std::size_t c = from; c < entries_.size(); ++c)
            if (entries_[c] != 0)
                return c;
        return npos;
    }
    bool is_zero() const noexcept { return find_next(0) == npos; }

    /// Clears column c using a pivot row that is zero before c and 1 at c.
    void eliminate(std::size_t c, const ModRow& pivot) noexcept
    {
        const Coeff factor = field_.neg(entries_[c]);
        for (std::size_t k = c; k < entries_.size(); ++k)
            if (pivot.entries_[k] != 0)
                entries_[k] = field_.add(entries_[k], field_.mul(factor, pivot.entries_[k]));
    }
    /// Scales so that column c becomes 1.
    void normalize(std::size_t c)
    {
        const Coeff s = field_.inv(entries_[c]);
        for (Coeff& e : entries_)
            e = field_.mul(e, s);
    }

    friend bool operator==(const ModRow&, const ModRow&) = default;

private:
    PrimeField field_;
    std::vector<Coeff> entries_;
};

/// Incremental row space. Rows are kept in semi-echelon form (distinct leading
/// columns, each leading entry 1) while inserting; `make_reduced` upgrades to
/// reduced row-echelon form sorted by pivot.
///
/// `reduce` leaves a vector with no entry in any pivot column. That
/// representative is independent of which basis of the span is stored, so
/// membership and normal forms work in either state.
template <class Row>
class Echelon {
public:
    explicit Echelon(std::size_t columns) : columns_(columns), pivot_row_(columns, -1) {}

    std::size_t columns() const noexcept { return columns_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool is_reduced() const noexcept { return reduced_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    std::size_t pivot(std::size_t i) const noexcept { return pivots_[i]; }
    bool is_pivot(std::size_t c) const noexcept { return pivot_row_[c] >= 0; }

    void reduce(Row& row) const
    {
        for (std::size_t c = row.find_next(0); c != npos; c = row.find_next(c + 1)) {
            const auto r = pivot_row_[c];
            if (r >= 0)
                row.eliminate(c, rows_[static_cast<std::size_t>(r)]);
        }
    }

    bool contains(Row row) const
    {
        reduce(row);
        return row.is_zero();
    }

    /// Adds the row to the span; returns true when the rank grew.
    bool insert(Row row)
    {
        reduce(row);
        const std::size_t c = row.find_next(0);
        if (c == npos)
            return false;
        row.normalize(c);
        pivot_row_[c] = static_cast<std::int64_t>(rows_.size());
        pivots_.push_back(c);
        rows_.push_back(std::move(row));
        reduced_ = false;
        return true;
    }

    void make_reduced()
    {
        if (reduced_)
            return;
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(),
                  [this](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
        // Rows with larger pivots are already reduced when they are used.
        for (std::size_t i : order) {
            Row& row = rows_[i];
            for (std::size_t c = row.find_next(pivots_[i] + 1); c != npos;
                 c = row.find_next(c + 1)) {
                const auto r = pivot_row_[c];
                if (r >= 0)
                    row.eliminate(c, rows_[static_cast<std::size_t>(r)]);
            }
        }
        std::vector<Row> sorted;
        sorted.reserve(rows_.size());
        std::sort(pivots_.begin(), pivots_.end());
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            auto& slot = pivot_row_[pivots_[k]];
            sorted.push_back(std::move(rows_[static_cast<std::size_t>(slot)]));
            slot = static_cast<std::int64_t>(k);
        }
        rows_ = std::move(sorted);
        reduced_ = true;
    }

private:
    std::size_t columns_;
    std::vector<std::int64_t> pivot_row_;
    std::vector<std::size_t> pivots_;
    std::vector<Row> rows_;
    bool reduced_ = true;
};

using Gf2Echelon = Echelon<BitRow>;
using ModpEchelon = Echelon<ModRow>;

} // namespace adjoint
