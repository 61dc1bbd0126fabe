// SPDX-License-Identifier: Apache-2.0
#pragma once

// Binary polynomials packed into one machine word (bit i = coefficient of x^i).

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace dbarray {

/// Highest degree representable in a single word.
inline constexpr int kMaxDegree = 63;
/// Degree cap for operations that factor 2^n - 1 by trial division.
inline constexpr int kMaxExponentDegree = 32;
/// Degree cap for exhaustive scans (enumeration, naive exponent loop).
inline constexpr int kMaxScanDegree = 24;

class Gf2Poly {
public:
    constexpr Gf2Poly() = default;
    constexpr explicit Gf2Poly(std::uint64_t bits) : bits_(bits) {}

    static constexpr Gf2Poly zero() { return Gf2Poly{}; }
    static constexpr Gf2Poly one() { return Gf2Poly{1}; }
    static constexpr Gf2Poly x() { return Gf2Poly{2}; }

    static Gf2Poly monomial(int e)
    {
        require(e >= 0 && e <= kMaxDegree, errc::invalid_argument,
                "monomial degree " + std::to_string(e) + " outside [0, 63]");
        return Gf2Poly{std::uint64_t{1} << e};
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }

    /// Index of the highest set bit; -1 for the zero polynomial.
    constexpr int degree() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

    constexpr bool coeff(int i) const { return i >= 0 && i <= kMaxDegree && ((bits_ >> i) & 1U) != 0; }
    constexpr bool constant_term() const { return (bits_ & 1U) != 0; }
    constexpr int term_count() const { return std::popcount(bits_); }

    constexpr Gf2Poly& operator+=(Gf2Poly o)
    {
        bits_ ^= o.bits_;
        return *this;
    }
    friend constexpr Gf2Poly operator+(Gf2Poly a, Gf2Poly b) { return Gf2Poly{a.bits_ ^ b.bits_}; }

    friend constexpr bool operator==(Gf2Poly, Gf2Poly) = default;
    friend constexpr auto operator<=>(Gf2Poly a, Gf2Poly b) { return a.bits_ <=> b.bits_; }

    /// Human form in descending powers, e.g. "x^4+x+1".
    std::string to_string() const
    {
        if (bits_ == 0)
            return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (!coeff(i))
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

    std::string to_hex() const
    {
        std::ostringstream os;
        os << "0x" << std::hex << bits_;
        return os.str();
    }

    /// Accepts "0x13" or "x^4 + x + 1" (whitespace ignored, terms may repeat and cancel).
    static Gf2Poly parse(std::string_view text);

private:
    std::uint64_t bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Gf2Poly p) { return os << p.to_string(); }

inline Gf2Poly Gf2Poly::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const std::string original(text);
    require(!s.empty(), errc::parse, "empty polynomial string");

    if (s.size() > 2 && s[0] == '0' && s[1] == 'x') {
        std::uint64_t v = 0;
        require(s.size() <= 18, errc::parse, "hex polynomial wider than 64 bits: " + original);
        for (std::size_t i = 2; i < s.size(); ++i) {
            const char c = s[i];
            int d = 0;
            if (c >= '0' && c <= '9')
                d = c - '0';
            else if (c >= 'a' && c <= 'f')
                d = c - 'a' + 10;
            else
                fail(errc::parse, "bad hex digit in polynomial: " + original);
            v = (v << 4) | static_cast<std::uint64_t>(d);
        }
        return Gf2Poly{v};
    }

    std::uint64_t v = 0;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t end = std::min(s.find('+', pos), s.size());
        const std::string term = s.substr(pos, end - pos);
        require(!term.empty(), errc::parse, "empty term in polynomial: " + original);
        int e = 0;
        if (term == "0") {
            e = -1;
        } else if (term == "1") {
            e = 0;
        } else if (term == "x") {
            e = 1;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            const std::string digits = term.substr(2);
            require(digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 3,
                    errc::parse, "bad exponent in term '" + term + "'");
            e = std::stoi(digits);
        } else {
            fail(errc::parse, "unrecognized term '" + term + "' in polynomial: " + original);
        }
        if (e >= 0) {
            require(e <= kMaxDegree, errc::parse, "term degree above 63: " + term);
            v ^= std::uint64_t{1} << e;
        }
        pos = end + 1;
    }
    return Gf2Poly{v};
}

// ---------------------------------------------------------------------------
// Arithmetic

/// Carry-less product; the product degree must stay within one word.
inline Gf2Poly mul(Gf2Poly f, Gf2Poly g)
{
    if (f.is_zero() || g.is_zero())
        return Gf2Poly{};
    require(f.degree() + g.degree() <= kMaxDegree, errc::invalid_argument,
            "product degree " + std::to_string(f.degree() + g.degree()) + " exceeds 63");
    std::uint64_t a = f.bits();
    std::uint64_t b = g.bits();
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1U)
            r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return Gf2Poly{r};
}

inline std::pair<Gf2Poly, Gf2Poly> divmod(Gf2Poly a, Gf2Poly b)
{
    require(!b.is_zero(), errc::invalid_modulus, "division by the zero polynomial");
    const int db = b.degree();
    std::uint64_t q = 0;
    std::uint64_t r = a.bits();
    for (int dr = Gf2Poly{r}.degree(); dr >= db; dr = Gf2Poly{r}.degree()) {
        q |= std::uint64_t{1} << (dr - db);
        r ^= b.bits() << (dr - db);
    }
    return {Gf2Poly{q}, Gf2Poly{r}};
}

inline Gf2Poly mod(Gf2Poly a, Gf2Poly b) { return divmod(a, b).second; }

inline Gf2Poly gcd(Gf2Poly a, Gf2Poly b)
{
    while (!b.is_zero()) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

/// (a * b) mod f for residues a, b of degree below deg(f). Interleaved so nothing overflows.
inline Gf2Poly mulmod(Gf2Poly a, Gf2Poly b, Gf2Poly f)
{
    const int n = f.degree();
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    const std::uint64_t low = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const std::uint64_t fl = f.bits() & low;
    std::uint64_t x = a.bits();
    std::uint64_t y = b.bits();
    std::uint64_t r = 0;
    while (y != 0) {
        if (y & 1U)
            r ^= x;
        y >>= 1;
        const bool carry = (x & top) != 0;
        x = (x << 1) & low;
        if (carry)
            x ^= fl;
    }
    return Gf2Poly{r};
}

inline void require_modulus(Gf2Poly f)
{
    require(f.degree() >= 1, errc::invalid_modulus,
            "modulus must have degree >= 1, got " + f.to_string());
}

/// x^e reduced modulo f by square-and-multiply.
inline Gf2Poly pow_x_mod(std::uint64_t e, Gf2Poly f)
{
    require_modulus(f);
    Gf2Poly result = Gf2Poly::one();
    Gf2Poly base = mod(Gf2Poly::x(), f);
    while (e != 0) {
        if (e & 1U)
            result = mulmod(result, base, f);
        base = mulmod(base, base, f);
        e >>= 1;
    }
    return result;
}

/// Coefficient-reversed polynomial x^deg f(1/x).
inline Gf2Poly reciprocal(Gf2Poly f)
{
    require(!f.is_zero(), errc::invalid_argument, "reciprocal of the zero polynomial");
    const int n = f.degree();
    std::uint64_t r = 0;
    for (int i = 0; i <= n; ++i)
        if (f.coeff(i))
            r |= std::uint64_t{1} << (n - i);
    return Gf2Poly{r};
}

// ---------------------------------------------------------------------------
// Integer helpers

/// Prime factors of k with multiplicity collapsed, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t k)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
        if (k % p == 0) {
            out.push_back(p);
            while (k % p == 0)
                k /= p;
        }
    }
    if (k > 1)
        out.push_back(k);
    return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t k)
{
    std::vector<std::uint64_t> out{1};
    std::uint64_t rest = k;
    for (std::uint64_t p : prime_factors(k)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t euler_phi(std::int64_t k)
{
    require(k >= 1, errc::invalid_argument, "euler_phi requires k >= 1, got " + std::to_string(k));
    std::int64_t result = k;
    for (std::uint64_t p : prime_factors(static_cast<std::uint64_t>(k)))
        result -= result / static_cast<std::int64_t>(p);
    return result;
}

inline std::uint64_t mersenne(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// ---------------------------------------------------------------------------
// Structure

/// Rabin's test: x^(2^n) = x (mod f) and gcd(x^(2^(n/q)) - x, f) = 1 for every prime q | n.
inline bool is_irreducible(Gf2Poly f)
{
    require(f.degree() >= 1, errc::invalid_argument, "irreducibility needs degree >= 1, got " + f.to_string());
    const int n = f.degree();
    if (n == 1)
        return true;
    if (!f.constant_term())
        return false;

    std::vector<Gf2Poly> frob(static_cast<std::size_t>(n) + 1);
    frob[0] = Gf2Poly::x();
    for (int i = 1; i <= n; ++i)
        frob[i] = mulmod(frob[i - 1], frob[i - 1], f);
    if (frob[n] != Gf2Poly::x())
        return false;
    for (std::uint64_t q : prime_factors(static_cast<std::uint64_t>(n))) {
        const Gf2Poly h = frob[static_cast<std::size_t>(n / static_cast<int>(q))] + Gf2Poly::x();
        if (gcd(f, h) != Gf2Poly::one())
            return false;
    }
    return true;
}

namespace detail {

inline std::uint64_t exponent_by_divisors(Gf2Poly f)
{
    const int n = f.degree();
    for (std::uint64_t d : divisors(mersenne(n)))
        if (pow_x_mod(d, f) == Gf2Poly::one())
            return d;
    fail(errc::invalid_argument, "no divisor of 2^n-1 is a period of x modulo " + f.to_string());
}

inline std::uint64_t exponent_by_stepping(Gf2Poly f)
{
    const Gf2Poly start = mod(Gf2Poly::x(), f);
    Gf2Poly cur = start;
    const std::uint64_t limit = std::uint64_t{1} << f.degree();
    for (std::uint64_t k = 1; k <= limit; ++k) {
        if (cur == Gf2Poly::one())
            return k;
        cur = mulmod(cur, start, f);
    }
    fail(errc::invalid_argument, "x has no finite order modulo " + f.to_string());
}

} // namespace detail

/// Smallest k >= 1 with f | x^k - 1. Irreducible f uses the divisors of 2^n - 1;
/// other nonsingular f (degree <= 24) fall back to stepping through powers of x.
inline std::uint64_t exponent(Gf2Poly f)
{
    require(f.degree() >= 1, errc::invalid_argument, "exponent needs degree >= 1, got " + f.to_string());
    require(f.constant_term(), errc::invalid_argument,
            "no exponent exists: " + f.to_string() + " has zero constant term");
    if (f.degree() <= kMaxExponentDegree && is_irreducible(f))
        return detail::exponent_by_divisors(f);
    require(f.degree() <= kMaxScanDegree, errc::invalid_argument,
            "exponent of a degree-" + std::to_string(f.degree()) + " polynomial is beyond the desk-scale cap");
    return detail::exponent_by_stepping(f);
}

inline bool is_primitive(Gf2Poly f)
{
    if (f.degree() < 1 || f.degree() > kMaxExponentDegree)
        return false;
    if (!is_irreducible(f))
        return false;
    return exponent(f) == mersenne(f.degree());
}

/// All irreducible polynomials of degree n in ascending bitmask order, optionally restricted to
/// exponent e. An e that does not divide 2^n - 1 yields an empty list and a diagnostic.
inline std::vector<Gf2Poly> enumerate_irreducible(int n, std::optional<std::uint64_t> e = std::nullopt,
                                                  std::string* diagnostic = nullptr)
{
    require(n >= 1 && n <= kMaxScanDegree, errc::invalid_argument,
            "enumeration degree must be in [1, 24], got " + std::to_string(n));
    std::vector<Gf2Poly> out;
    if (e && (*e == 0 || mersenne(n) % *e != 0)) {
        if (diagnostic)
            *diagnostic = "exponent " + std::to_string(*e) + " does not divide 2^" + std::to_string(n) + "-1 = " +
                          std::to_string(mersenne(n));
        return out;
    }
    const std::uint64_t first = std::uint64_t{1} << n;
    const std::uint64_t last = (std::uint64_t{1} << (n + 1)) - 1;
    for (std::uint64_t bits = first; bits <= last; ++bits) {
        const Gf2Poly f{bits};
        if (n > 1 && !f.constant_term())
            continue;
        if (!is_irreducible(f))
            continue;
        if (e && (!f.constant_term() || exponent(f) != *e))
            continue;
        out.push_back(f);
    }
    return out;
}

/// Divisors k of 2^n - 1 that divide no 2^l - 1 with l < n, i.e. the exponents first reached at degree n.
inline std::vector<std::uint64_t> primitive_exponents(int n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t k : divisors(mersenne(n))) {
        bool inherited = false;
        for (int l = 1; l < n && !inherited; ++l)
            inherited = mersenne(l) % k == 0;
        if (!inherited)
            out.push_back(k);
    }
    return out;
}

} // namespace dbarray
