// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace dbarray {

using Bits = std::vector<std::uint8_t>;

enum class Parity { even, odd };

inline std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

namespace detail {

/// Smallest p dividing bits.size() such that bits is p-periodic (prefix function).
inline std::size_t minimal_period(std::span<const std::uint8_t> bits)
{
    const std::size_t n = bits.size();
    if (n == 0)
        return 0;
    std::vector<std::size_t> pi(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && bits[i] != bits[k])
            k = pi[k - 1];
        if (bits[i] == bits[k])
            ++k;
        pi[i] = k;
    }
    const std::size_t p = n - pi[n - 1];
    return n % p == 0 ? p : n;
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
inline std::size_t least_rotation(std::span<const std::uint8_t> s)
{
    const std::size_t n = s.size();
    if (n == 0)
        return 0;
    std::vector<long> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const std::uint8_t sj = s[j % n];
        long i = f[j - k - 1];
        while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n])
                k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n])
                k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}

} // namespace detail

/// One period of a periodic binary sequence. The stored length is always the minimal period;
/// the phase (which bit comes first) is preserved.
class CyclicSequence {
public:
    /// The zero sequence [0].
    CyclicSequence() : bits_{0} {}

    explicit CyclicSequence(Bits bits) : bits_(std::move(bits))
    {
        require(!bits_.empty(), errc::invalid_argument, "a cyclic sequence needs at least one bit");
        for (auto& b : bits_)
            require(b <= 1, errc::invalid_argument, "sequence entries must be 0 or 1");
        bits_.resize(detail::minimal_period(bits_));
    }

    /// Accepts "[0101]" or "0101".
    static CyclicSequence parse(std::string_view text)
    {
        Bits bits;
        for (char c : text) {
            if (c == '0' || c == '1')
                bits.push_back(static_cast<std::uint8_t>(c - '0'));
            else if (c != '[' && c != ']' && c != ' ')
                fail(errc::parse, "unexpected character '" + std::string(1, c) + "' in sequence");
        }
        return CyclicSequence(std::move(bits));
    }

    std::size_t size() const { return bits_.size(); }
    std::span<const std::uint8_t> bits() const { return bits_; }

    /// Bit at position p, read cyclically.
    std::uint8_t operator[](std::size_t p) const { return bits_[p % bits_.size()]; }
    std::uint8_t at(long p) const
    {
        const long n = static_cast<long>(bits_.size());
        return bits_[static_cast<std::size_t>(((p % n) + n) % n)];
    }

    std::size_t weight() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }
    bool is_zero() const { return bits_.size() == 1 && bits_[0] == 0; }

    /// Lexicographically least rotation.
    CyclicSequence canonical() const
    {
        const std::size_t k = detail::least_rotation(bits_);
        Bits out(bits_.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = bits_[(i + k) % bits_.size()];
        return CyclicSequence(std::move(out));
    }

    /// The length-n window starting at position p, first bit most significant.
    std::uint64_t window(std::size_t p, int n) const
    {
        std::uint64_t w = 0;
        for (int i = 0; i < n; ++i)
            w = (w << 1) | (*this)[p + static_cast<std::size_t>(i)];
        return w;
    }

    /// Expansion of the period to `length` bits (length must be a multiple of size()).
    Bits expanded(std::size_t length) const
    {
        require(length % bits_.size() == 0, errc::invalid_length,
                "length " + std::to_string(length) + " is not a multiple of the period " +
                    std::to_string(bits_.size()));
        Bits out(length);
        for (std::size_t i = 0; i < length; ++i)
            out[i] = bits_[i % bits_.size()];
        return out;
    }

    std::string to_string() const
    {
        std::string s = "[";
        for (auto b : bits_)
            s += static_cast<char>('0' + b);
        return s + "]";
    }

    /// Exact, phase-sensitive equality.
    friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;
    /// Ordering of canonical forms is what families sort by; this orders by length, then bits.
    friend bool operator<(const CyclicSequence& a, const CyclicSequence& b)
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.bits_ < b.bits_;
    }

private:
    Bits bits_;
};

inline std::ostream& operator<<(std::ostream& os, const CyclicSequence& s) { return os << s.to_string(); }

/// Equality up to rotation.
inline bool equivalent(const CyclicSequence& a, const CyclicSequence& b)
{
    return a.size() == b.size() && a.canonical() == b.canonical();
}

inline Parity weight_parity(const CyclicSequence& s) { return s.weight() % 2 == 0 ? Parity::even : Parity::odd; }

/// Cycles of a register state diagram over n-tuples (zero factor carrier).
struct SequenceFamily {
    int order = 0;
    std::vector<CyclicSequence> members;
    /// Common period of all members, when they share one.
    std::optional<std::size_t> exponent;

    std::size_t total_length() const
    {
        std::size_t t = 0;
        for (const auto& m : members)
            t += m.size();
        return t;
    }
};

/// PF(n,k): 2^(n-k) cycles of length 2^k covering every n-tuple once.
struct PerfectFactor {
    int order = 0;     // n
    int subdegree = 0; // k
    std::vector<CyclicSequence> cycles;
    /// Rotation offset of each cycle's zero state within its stored phase.
    std::vector<std::size_t> zero_state;

    /// Cycle i read from its zero state advanced by j positions.
    std::uint8_t bit(std::size_t cycle, std::size_t j, std::size_t p) const
    {
        return cycles[cycle][zero_state[cycle] + j + p];
    }
};

} // namespace dbarray
