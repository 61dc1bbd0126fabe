// SPDX-License-Identifier: Apache-2.0
#pragma once

// Arbitrary-degree binary polynomials. Only the set-polynomial oracle needs them: a product
// over every subset sum quickly outgrows a machine word.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gf2poly.hpp"

namespace dbarray {

class Gf2WidePoly {
public:
    Gf2WidePoly() = default;
    explicit Gf2WidePoly(Gf2Poly p)
    {
        if (!p.is_zero())
            words_.push_back(p.bits());
    }

    static Gf2WidePoly monomial(std::size_t e)
    {
        Gf2WidePoly p;
        p.flip(e);
        return p;
    }

    bool is_zero() const { return words_.empty(); }

    long degree() const
    {
        if (words_.empty())
            return -1;
        return static_cast<long>(words_.size() * 64 - 1) - std::countl_zero(words_.back());
    }

    bool coeff(std::size_t i) const
    {
        const std::size_t w = i / 64;
        return w < words_.size() && ((words_[w] >> (i % 64)) & 1U) != 0;
    }

    void flip(std::size_t i)
    {
        const std::size_t w = i / 64;
        if (w >= words_.size())
            words_.resize(w + 1, 0);
        words_[w] ^= std::uint64_t{1} << (i % 64);
        trim();
    }

    friend bool operator==(const Gf2WidePoly&, const Gf2WidePoly&) = default;

    friend Gf2WidePoly operator+(Gf2WidePoly a, const Gf2WidePoly& b)
    {
        if (a.words_.size() < b.words_.size())
            a.words_.resize(b.words_.size(), 0);
        for (std::size_t i = 0; i < b.words_.size(); ++i)
            a.words_[i] ^= b.words_[i];
        a.trim();
        return a;
    }

    /// Schoolbook product, one shifted copy of `a` per set bit of `b`.
    friend Gf2WidePoly operator*(const Gf2WidePoly& a, const Gf2WidePoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        Gf2WidePoly r;
        r.words_.assign(a.words_.size() + b.words_.size() + 1, 0);
        for (std::size_t wb = 0; wb < b.words_.size(); ++wb) {
            std::uint64_t bits = b.words_[wb];
            while (bits != 0) {
                const int bit = std::countr_zero(bits);
                bits &= bits - 1;
                r.xor_shifted(a, wb * 64 + static_cast<std::size_t>(bit));
            }
        }
        r.trim();
        return r;
    }

    /// Remainder modulo a word-sized polynomial, by bitwise long division.
    Gf2Poly mod(Gf2Poly f) const
    {
        require_modulus(f);
        const int n = f.degree();
        std::vector<std::uint64_t> r = words_;
        r.push_back(0); // room for the high half of a shifted f
        for (long d = degree(); d >= n; --d) {
            const std::size_t bit = static_cast<std::size_t>(d);
            if (((r[bit / 64] >> (bit % 64)) & 1U) == 0)
                continue;
            const std::size_t shift = bit - static_cast<std::size_t>(n);
            const unsigned bs = static_cast<unsigned>(shift % 64);
            r[shift / 64] ^= f.bits() << bs;
            if (bs != 0)
                r[shift / 64 + 1] ^= f.bits() >> (64 - bs);
        }
        // everything at or above degree n has cancelled
        return Gf2Poly{r[0] & ((std::uint64_t{1} << n) - 1)};
    }

    bool divisible_by(Gf2Poly f) const { return mod(f).is_zero(); }

    /// Multiplies in place by a sparse polynomial given as its exponents.
    void multiply_by_terms(const std::vector<std::size_t>& exponents, std::vector<std::uint64_t>& scratch)
    {
        if (is_zero() || exponents.empty()) {
            words_.clear();
            return;
        }
        const std::size_t top = *std::max_element(exponents.begin(), exponents.end());
        scratch.assign(words_.size() + top / 64 + 2, 0);
        for (auto e : exponents)
            xor_shifted_into(scratch, e);
        words_.swap(scratch);
        trim();
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            if (!coeff(static_cast<std::size_t>(i)))
                continue;
            if (!out.empty())
                out += '+';
            if (i == 0)
                out += '1';
            else if (i == 1)
                out += 'x';
            else
                out += "x^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim()
    {
        while (!words_.empty() && words_.back() == 0)
            words_.pop_back();
    }

    void xor_shifted_into(std::vector<std::uint64_t>& out, std::size_t shift) const
    {
        const std::size_t ws = shift / 64;
        const unsigned bs = static_cast<unsigned>(shift % 64);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            out[i + ws] ^= words_[i] << bs;
            if (bs != 0)
                out[i + ws + 1] ^= words_[i] >> (64 - bs);
        }
    }

    void xor_shifted(const Gf2WidePoly& a, std::size_t shift)
    {
        const std::size_t ws = shift / 64;
        const unsigned bs = static_cast<unsigned>(shift % 64);
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            words_[i + ws] ^= a.words_[i] << bs;
            if (bs != 0)
                words_[i + ws + 1] ^= a.words_[i] >> (64 - bs);
        }
    }

    std::vector<std::uint64_t> words_; // little-endian, no trailing zero words
};

} // namespace dbarray
