// SPDX-License-Identifier: Apache-2.0
#pragma once

// Diagonal folding: position p of a length-rt sequence goes to cell (p mod r, p mod t). With
// gcd(r, t) = 1 this is the CRT bijection Z_rt -> Z_r x Z_t.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "array.hpp"
#include "error.hpp"
#include "gf2poly.hpp"
#include "sequence.hpp"
#include "wide_poly.hpp"

namespace dbarray {

class FoldingMap {
public:
    FoldingMap(std::size_t r, std::size_t t) : r_(r), t_(t)
    {
        require(r >= 1 && t >= 1, errc::invalid_argument, "fold dimensions must be positive");
        require(std::gcd(r, t) == 1, errc::not_coprime,
                "r and t are not coprime (r=" + std::to_string(r) + ", t=" + std::to_string(t) + ")");
        // r * r_inv = 1 (mod t)
        r_inv_ = 0;
        for (std::size_t k = 0; k < t_; ++k)
            if ((r_ % t_) * k % t_ == 1 % t_) {
                r_inv_ = k;
                break;
            }
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return t_; }
    std::size_t cells() const { return r_ * t_; }

    /// The unique p in [0, rt) with p = i (mod r) and p = j (mod t).
    std::size_t position(std::size_t i, std::size_t j) const
    {
        i %= r_;
        j %= t_;
        const std::size_t k = ((j + t_ - i % t_) % t_) * r_inv_ % t_;
        return i + r_ * k;
    }

    std::pair<std::size_t, std::size_t> cell(std::size_t p) const { return {p % r_, p % t_}; }

private:
    std::size_t r_;
    std::size_t t_;
    std::size_t r_inv_ = 0;
};

/// Writes s down the diagonals of an r x t array. A period that properly divides rt is
/// repeated to fill the array.
inline CyclicArray fold(const CyclicSequence& s, std::size_t r, std::size_t t)
{
    const FoldingMap map(r, t);
    require(map.cells() % s.size() == 0, errc::invalid_length,
            "sequence length " + std::to_string(s.size()) + " does not divide r*t = " + std::to_string(map.cells()));
    CyclicArray a(r, t);
    for (std::size_t p = 0; p < map.cells(); ++p)
        a.set(p % r, p % t, s[p]);
    return a;
}

inline CyclicSequence unfold(const CyclicArray& a)
{
    const FoldingMap map(a.rows(), a.cols());
    Bits bits(map.cells());
    for (std::size_t p = 0; p < bits.size(); ++p)
        bits[p] = a(p % a.rows(), p % a.cols());
    return CyclicSequence(std::move(bits));
}

/// Sorted, distinct sequence positions.
class PositionSet {
public:
    PositionSet() = default;
    PositionSet(std::initializer_list<std::uint64_t> ps) : PositionSet(std::vector<std::uint64_t>(ps)) {}
    explicit PositionSet(std::vector<std::uint64_t> ps) : positions_(std::move(ps))
    {
        std::sort(positions_.begin(), positions_.end());
        require(std::adjacent_find(positions_.begin(), positions_.end()) == positions_.end(),
                errc::invalid_argument, "positions must be distinct");
    }

    std::size_t size() const { return positions_.size(); }
    const std::vector<std::uint64_t>& values() const { return positions_; }
    auto begin() const { return positions_.begin(); }
    auto end() const { return positions_.end(); }

    /// Every position moved by c modulo `modulus`.
    PositionSet translated(std::uint64_t c, std::uint64_t modulus) const
    {
        std::vector<std::uint64_t> out;
        for (auto p : positions_)
            out.push_back((p + c) % modulus);
        return PositionSet(std::move(out));
    }

    friend bool operator==(const PositionSet&, const PositionSet&) = default;

private:
    std::vector<std::uint64_t> positions_;
};

/// Positions of the sequence that land in the top-left n x m window of the folded r x t array.
inline PositionSet window_positions(std::size_t r, std::size_t t, std::size_t n, std::size_t m)
{
    const FoldingMap map(r, t);
    require(n >= 1 && m >= 1 && n <= r && m <= t, errc::invalid_argument,
            "window " + std::to_string(n) + "x" + std::to_string(m) + " does not fit in " + std::to_string(r) + "x" +
                std::to_string(t));
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out.push_back(map.position(i, j));
    return PositionSet(std::move(out));
}

/// x^p mod f for every p below the exponent of f.
class ResidueTable {
public:
    explicit ResidueTable(Gf2Poly f) : f_(f)
    {
        require(is_irreducible(f), errc::invalid_argument, f.to_string() + " is not irreducible");
        require(f.constant_term() || f.degree() == 1, errc::invalid_argument, "polynomial has no exponent");
        period_ = exponent(f);
        residues_.reserve(period_);
        Gf2Poly cur = Gf2Poly::one();
        const Gf2Poly xr = mod(Gf2Poly::x(), f);
        for (std::uint64_t p = 0; p < period_; ++p) {
            residues_.push_back(cur);
            cur = mulmod(cur, xr, f);
        }
    }

    Gf2Poly poly() const { return f_; }
    std::uint64_t period() const { return period_; }
    Gf2Poly operator[](std::uint64_t p) const { return residues_[p % period_]; }

private:
    Gf2Poly f_;
    std::uint64_t period_ = 0;
    std::vector<Gf2Poly> residues_;
};

/// Rank test: the residues x^p mod f (p in R) are linearly independent over GF(2).
inline bool positions_independent(const ResidueTable& table, const PositionSet& positions,
                                  std::string* diagnostic = nullptr)
{
    const int n = table.poly().degree();
    if (positions.size() > static_cast<std::size_t>(n)) {
        if (diagnostic)
            *diagnostic = std::to_string(positions.size()) + " positions exceed degree " + std::to_string(n) +
                          ": always dependent";
        return false;
    }
    // basis[b] holds a vector whose leading bit is b
    std::uint64_t basis[64] = {};
    for (auto p : positions) {
        std::uint64_t v = table[p].bits();
        while (v != 0) {
            const int lead = Gf2Poly{v}.degree();
            if (basis[lead] == 0) {
                basis[lead] = v;
                break;
            }
            v ^= basis[lead];
        }
        if (v == 0) {
            if (diagnostic)
                *diagnostic = "x^" + std::to_string(p) + " mod f lies in the span of the earlier residues";
            return false;
        }
    }
    return true;
}

inline bool positions_independent(Gf2Poly f, const PositionSet& positions, std::string* diagnostic = nullptr)
{
    return positions_independent(ResidueTable(f), positions, diagnostic);
}

/// Largest position set accepted by the literal set polynomial.
inline constexpr std::size_t kMaxSetPolynomialPositions = 4;

/// The literal product over all nonempty subsets Q of R of sum_{p in Q} x^p.
inline Gf2WidePoly set_polynomial(const PositionSet& positions)
{
    require(positions.size() <= kMaxSetPolynomialPositions, errc::oracle_size,
            "set polynomial over " + std::to_string(positions.size()) + " positions exceeds the oracle cap of 4");
    const auto& ps = positions.values();
    Gf2WidePoly product{Gf2Poly::one()};
    std::vector<std::size_t> terms;
    std::vector<std::uint64_t> scratch;
    for (std::size_t q = 1; q < (std::size_t{1} << ps.size()); ++q) {
        terms.clear();
        for (std::size_t i = 0; i < ps.size(); ++i)
            if ((q >> i) & 1U)
                terms.push_back(ps[i]);
        product.multiply_by_terms(terms, scratch);
    }
    return product;
}

/// The set polynomial reduced modulo f, multiplied out factor by factor in the residue ring.
/// Equals set_polynomial(R) mod f without materializing the product.
inline Gf2Poly set_polynomial_mod(const ResidueTable& table, const PositionSet& positions)
{
    require(positions.size() <= 16, errc::oracle_size, "set polynomial residue over more than 16 positions");
    const Gf2Poly f = table.poly();
    const auto& ps = positions.values();
    Gf2Poly product = mod(Gf2Poly::one(), f);
    for (std::size_t q = 1; q < (std::size_t{1} << ps.size()); ++q) {
        Gf2Poly sum;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if ((q >> i) & 1U)
                sum += table[ps[i]];
        product = mulmod(product, sum, f);
    }
    return product;
}

} // namespace dbarray
