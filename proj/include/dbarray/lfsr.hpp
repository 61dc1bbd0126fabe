// SPDX-License-Identifier: Apache-2.0
#pragma once

// Linear feedback shift registers over GF(2) and the operators on their output sequences.
//
// A characteristic polynomial f(x) = x^n + c_1 x^(n-1) + ... + c_n drives the recurrence
//     a_k = c_1 a_(k-1) + c_2 a_(k-2) + ... + c_n a_(k-n).
// Registers that read their taps in the opposite order produce the reversed sequences, which
// are exactly the sequences of reciprocal(f) under this convention.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "gf2poly.hpp"
#include "sequence.hpp"

namespace dbarray {

/// Partition of the 2^n - 1 nonzero states into cycles, each returned at its canonical rotation
/// and sorted (length, then bits).
inline SequenceFamily generate_cycles(Gf2Poly f)
{
    const int n = f.degree();
    require(n >= 1, errc::invalid_argument, "characteristic polynomial needs degree >= 1");
    require(n <= kMaxScanDegree, errc::invalid_argument,
            "register degree " + std::to_string(n) + " above the desk-scale cap of 24");
    require(f.constant_term(), errc::singular_register,
            "singular register: " + f.to_string() + " has zero constant term");

    // State = window (a_j ... a_(j+n-1)) with a_j as the most significant bit; c_i taps a_(k-i),
    // which sits at bit i-1.
    std::uint64_t taps = 0;
    for (int i = 1; i <= n; ++i)
        if (f.coeff(n - i))
            taps |= std::uint64_t{1} << (i - 1);
    const std::uint64_t mask = mersenne(n);

    std::vector<bool> seen(std::size_t{1} << n, false);
    SequenceFamily fam;
    fam.order = n;
    for (std::uint64_t start = 1; start <= mask; ++start) {
        if (seen[start])
            continue;
        Bits bits;
        std::uint64_t state = start;
        do {
            seen[state] = true;
            bits.push_back(static_cast<std::uint8_t>((state >> (n - 1)) & 1U));
            const auto next = static_cast<std::uint64_t>(std::popcount(state & taps) & 1);
            state = ((state << 1) | next) & mask;
        } while (state != start);
        fam.members.push_back(CyclicSequence(std::move(bits)).canonical());
    }
    std::sort(fam.members.begin(), fam.members.end());
    const std::size_t len = fam.members.front().size();
    if (std::all_of(fam.members.begin(), fam.members.end(), [&](const auto& s) { return s.size() == len; }))
        fam.exponent = len;
    return fam;
}

/// True iff the cyclic n-windows across all members are exactly the nonzero n-tuples, once each.
inline bool verify_zero_factor(const SequenceFamily& fam)
{
    const int n = fam.order;
    if (n < 1 || n > kMaxScanDegree)
        return false;
    const std::uint64_t expected = mersenne(n);
    if (fam.total_length() != expected)
        return false;
    std::vector<bool> seen(std::size_t{1} << n, false);
    for (const auto& s : fam.members) {
        for (std::size_t p = 0; p < s.size(); ++p) {
            const std::uint64_t w = s.window(p, n);
            if (w == 0 || seen[w])
                return false;
            seen[w] = true;
        }
    }
    return true;
}

/// The maximal-length sequence of a primitive polynomial, at its canonical rotation.
inline CyclicSequence m_sequence(Gf2Poly f)
{
    require(f.degree() >= 1, errc::invalid_argument, "m_sequence needs degree >= 1");
    require(is_irreducible(f), errc::invalid_argument, "not primitive: " + f.to_string() + " is reducible");
    const std::uint64_t e = exponent(f);
    require(e == mersenne(f.degree()), errc::invalid_argument,
            "not primitive: " + f.to_string() + " has exponent " + std::to_string(e) + " != 2^" +
                std::to_string(f.degree()) + "-1");
    return generate_cycles(f).members.front();
}

/// E^i: rotation so that the result starts at position i of s.
inline CyclicSequence shift(const CyclicSequence& s, long i)
{
    const long n = static_cast<long>(s.size());
    Bits out(s.size());
    for (long p = 0; p < n; ++p)
        out[static_cast<std::size_t>(p)] = s.at(p + i);
    return CyclicSequence(std::move(out));
}

/// Position-wise XOR. When one period divides the other the shorter one is expanded first.
/// An all-zero result collapses to the zero sequence [0].
inline CyclicSequence add_seq(const CyclicSequence& s, const CyclicSequence& u)
{
    const std::size_t len = std::max(s.size(), u.size());
    require(len % s.size() == 0 && len % u.size() == 0, errc::invalid_argument,
            "length mismatch: " + std::to_string(s.size()) + " vs " + std::to_string(u.size()));
    Bits out(len);
    for (std::size_t p = 0; p < len; ++p)
        out[p] = s[p] ^ u[p];
    return CyclicSequence(std::move(out));
}

/// s + E^i s is a rotation of s for every 0 < i < len(s).
inline bool shift_and_add_check(const CyclicSequence& s)
{
    if (s.size() < 2)
        return false;
    const CyclicSequence canon = s.canonical();
    for (std::size_t i = 1; i < s.size(); ++i) {
        const CyclicSequence sum = add_seq(s, shift(s, static_cast<long>(i)));
        if (sum.size() != s.size() || sum.canonical() != canon)
            return false;
    }
    return true;
}

/// D(s)_i = s_i + s_(i+1).
inline CyclicSequence d_morphism(const CyclicSequence& s)
{
    Bits out(s.size());
    for (std::size_t p = 0; p < s.size(); ++p)
        out[p] = s[p] ^ s[p + 1];
    return CyclicSequence(std::move(out));
}

/// A preimage of s under D starting with bit `choice` (prefix sums). Even weight keeps the period;
/// odd weight doubles it, the second half being the complement of the first.
inline CyclicSequence d_inverse(const CyclicSequence& s, std::uint8_t choice)
{
    require(choice <= 1, errc::invalid_argument, "choice bit must be 0 or 1");
    const std::size_t len = weight_parity(s) == Parity::even ? s.size() : 2 * s.size();
    Bits out(len);
    out[0] = choice;
    for (std::size_t p = 1; p < len; ++p)
        out[p] = out[p - 1] ^ s[p - 1];
    return CyclicSequence(std::move(out));
}

/// Lexicographically least span-n de Bruijn sequence (concatenated Lyndon words).
inline CyclicSequence de_bruijn(int n)
{
    require(n >= 1 && n <= kMaxScanDegree, errc::invalid_argument,
            "de Bruijn span must be in [1, 24], got " + std::to_string(n));
    Bits seq;
    std::vector<std::uint8_t> a(static_cast<std::size_t>(n) + 1, 0);
    // Iterative FKM: enumerate prenecklaces in lexicographic order.
    seq.push_back(0); // the Lyndon word "0"
    for (;;) {
        // next prenecklace
        std::size_t j = static_cast<std::size_t>(n);
        while (j >= 1 && a[j] == 1)
            --j;
        if (j == 0)
            break;
        a[j] = 1;
        for (std::size_t k = j + 1; k <= static_cast<std::size_t>(n); ++k)
            a[k] = a[k - j];
        if (static_cast<std::size_t>(n) % j == 0)
            for (std::size_t k = 1; k <= j; ++k)
                seq.push_back(a[k]);
    }
    return CyclicSequence(std::move(seq));
}

} // namespace dbarray
