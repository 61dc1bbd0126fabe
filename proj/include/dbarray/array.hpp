// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"
#include "sequence.hpp"

namespace dbarray {

/// An r x t doubly periodic binary array. Cell (i, j) always means (i mod r, j mod t).
class CyclicArray {
public:
    CyclicArray() = default;
    CyclicArray(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0)
    {
        require(rows >= 1 && cols >= 1, errc::invalid_argument, "array dimensions must be positive");
    }

    static CyclicArray from_rows(const std::vector<std::string>& rows)
    {
        require(!rows.empty() && !rows.front().empty(), errc::parse, "array needs at least one non-empty row");
        CyclicArray a(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == a.cols_, errc::parse,
                    "row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) + ", expected " +
                        std::to_string(a.cols_));
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const char c = rows[i][j];
                require(c == '0' || c == '1', errc::parse, "array rows may contain only 0 and 1");
                a.set(i, j, static_cast<std::uint8_t>(c - '0'));
            }
        }
        return a;
    }

    /// Array whose column j is cols[j]; every column must have the same stored length.
    static CyclicArray from_columns(const std::vector<Bits>& cols)
    {
        require(!cols.empty(), errc::invalid_argument, "array needs at least one column");
        CyclicArray a(cols.front().size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            require(cols[j].size() == a.rows_, errc::invalid_argument, "columns of unequal length");
            for (std::size_t i = 0; i < a.rows_; ++i)
                a.set(i, j, cols[j][i]);
        }
        return a;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return cells_.size(); }
    const Bits& cells() const { return cells_; }

    std::uint8_t operator()(std::size_t i, std::size_t j) const { return cells_[(i % rows_) * cols_ + j % cols_]; }
    std::uint8_t at(long i, long j) const
    {
        const long r = static_cast<long>(rows_);
        const long t = static_cast<long>(cols_);
        return (*this)(static_cast<std::size_t>(((i % r) + r) % r), static_cast<std::size_t>(((j % t) + t) % t));
    }
    void set(std::size_t i, std::size_t j, std::uint8_t v) { cells_[(i % rows_) * cols_ + j % cols_] = v & 1U; }

    std::size_t weight() const { return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1)); }
    bool is_zero() const { return weight() == 0; }

    /// The n x m window anchored at (i, j), packed row-major with the first cell most significant.
    std::uint64_t window_mask(std::size_t i, std::size_t j, int n, int m) const
    {
        std::uint64_t w = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < m; ++v)
                w = (w << 1) | (*this)(i + static_cast<std::size_t>(u), j + static_cast<std::size_t>(v));
        return w;
    }

    Bits column(std::size_t j) const
    {
        Bits c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    std::string row_string(std::size_t i) const
    {
        std::string s;
        for (std::size_t j = 0; j < cols_; ++j)
            s += static_cast<char>('0' + (*this)(i, j));
        return s;
    }

    std::vector<std::string> row_strings() const
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < rows_; ++i)
            out.push_back(row_string(i));
        return out;
    }

    friend bool operator==(const CyclicArray&, const CyclicArray&) = default;
    friend bool operator<(const CyclicArray& a, const CyclicArray& b)
    {
        if (a.rows_ != b.rows_)
            return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_)
            return a.cols_ < b.cols_;
        return a.cells_ < b.cells_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Bits cells_;
};

inline std::ostream& operator<<(std::ostream& os, const CyclicArray& a)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        os << a.row_string(i) << '\n';
    return os;
}

/// Content moved down by dv rows and right by dh columns: out(i, j) = a(i - dv, j - dh).
inline CyclicArray shift2d(const CyclicArray& a, long dv, long dh)
{
    CyclicArray out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, a.at(static_cast<long>(i) - dv, static_cast<long>(j) - dh));
    return out;
}

inline CyclicArray add2d(const CyclicArray& a, const CyclicArray& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), errc::invalid_argument,
            "dimension mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    CyclicArray out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, a(i, j) ^ b(i, j));
    return out;
}

/// The n x m sub-matrix W(u, v) = a(i + u, j + v).
inline CyclicArray window(const CyclicArray& a, std::size_t i, std::size_t j, std::size_t n, std::size_t m)
{
    require(n >= 1 && m >= 1, errc::invalid_argument, "window dimensions must be positive");
    CyclicArray w(n, m);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < m; ++v)
            w.set(u, v, a(i + u, j + v));
    return w;
}

/// Least array (row-major cells) over all r*t cyclic 2D shifts.
inline CyclicArray canonical(const CyclicArray& a)
{
    const std::size_t r = a.rows();
    const std::size_t t = a.cols();
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    for (std::size_t di = 0; di < r; ++di) {
        for (std::size_t dj = 0; dj < t; ++dj) {
            if (di == 0 && dj == 0)
                continue;
            // compare shift (di, dj) against the current best lexicographically
            int cmp = 0;
            for (std::size_t p = 0; p < r * t && cmp == 0; ++p) {
                const std::size_t i = p / t;
                const std::size_t j = p % t;
                const int x = a(i + di, j + dj);
                const int y = a(i + best_i, j + best_j);
                cmp = x - y;
            }
            if (cmp < 0) {
                best_i = di;
                best_j = dj;
            }
        }
    }
    return shift2d(a, -static_cast<long>(best_i), -static_cast<long>(best_j));
}

/// True iff b is some cyclic 2D shift of a.
inline bool is_shift_of(const CyclicArray& a, const CyclicArray& b)
{
    return a.rows() == b.rows() && a.cols() == b.cols() && canonical(a) == canonical(b);
}

/// out(i, j) = a(-i, -j). This is the array of the reversed sequence under folding.
inline CyclicArray point_reflect(const CyclicArray& a)
{
    CyclicArray out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, a.at(-static_cast<long>(i), -static_cast<long>(j)));
    return out;
}

/// Smallest column rotation c > 0 (with some vertical shift) mapping the array onto itself;
/// cols() when the array has full horizontal period.
inline std::size_t horizontal_period(const CyclicArray& a)
{
    for (std::size_t c = 1; c < a.cols(); ++c) {
        if (a.cols() % c != 0)
            continue;
        for (std::size_t v = 0; v < a.rows(); ++v)
            if (shift2d(a, static_cast<long>(v), static_cast<long>(c)) == a)
                return c;
    }
    return a.cols();
}

} // namespace dbarray
