// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include <dbarray/gf2poly.hpp>
#include <dbarray/wide_poly.hpp>

#include "oracles.hpp"

using namespace dbarray;

namespace {

Gf2Poly P(const char* s) { return Gf2Poly::parse(s); }

} // namespace

TEST(Gf2Poly, ParseAndPrint)
{
    EXPECT_EQ(P("x^4+x^3+1").bits(), 0x19U);
    EXPECT_EQ(P("0x13"), P("x^4 + x + 1"));
    EXPECT_EQ(P("1"), Gf2Poly::one());
    EXPECT_EQ(P("x"), Gf2Poly::x());
    EXPECT_EQ(P("x^6+x^5+x^4+x^2+1").to_string(), "x^6+x^5+x^4+x^2+1");
    EXPECT_EQ(Gf2Poly::zero().to_string(), "0");
    EXPECT_EQ(Gf2Poly::zero().degree(), -1);
    EXPECT_THROW(P("x^4+y"), error);
    EXPECT_THROW(P(""), error);
}

TEST(Gf2Poly, RoundTripText)
{
    for (std::uint64_t b = 0; b < 4096; ++b) {
        const Gf2Poly p{b};
        EXPECT_EQ(Gf2Poly::parse(p.to_string()), p);
        EXPECT_EQ(Gf2Poly::parse(p.to_hex()), p);
    }
}

TEST(Gf2Poly, MulMatchesSchoolbook)
{
    EXPECT_EQ(mul(P("x^4+x^3+1"), P("x^4+x+1")), P("x^8+x^7+x^5+x^4+x^3+x+1"));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t a = rng() >> 33;
        const std::uint64_t b = rng() >> 34;
        EXPECT_EQ(mul(Gf2Poly{a}, Gf2Poly{b}).bits(), oracle::mul(a, b));
    }
    EXPECT_THROW(mul(Gf2Poly::monomial(40), Gf2Poly::monomial(30)), error);
}

TEST(Gf2Poly, DivmodIdentity)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const Gf2Poly a{rng() >> 20};
        const Gf2Poly b{(rng() >> 44) | 1U};
        const auto [q, r] = divmod(a, b);
        EXPECT_LT(r.degree(), b.degree());
        EXPECT_EQ(mul(q, b) + r, a);
        EXPECT_EQ(r.bits(), oracle::rem(a.bits(), b.bits()));
    }
    EXPECT_THROW(divmod(Gf2Poly::one(), Gf2Poly::zero()), error);
}

TEST(Gf2Poly, PowXMod)
{
    EXPECT_EQ(pow_x_mod(15, P("x^4+x+1")), Gf2Poly::one());
    EXPECT_EQ(pow_x_mod(0, P("x^4+x+1")), Gf2Poly::one());
    EXPECT_EQ(pow_x_mod(4, P("x^4+x+1")), P("x+1"));
    // against stepping one power at a time
    const Gf2Poly f = P("x^7+x+1");
    Gf2Poly cur = Gf2Poly::one();
    for (std::uint64_t e = 0; e < 300; ++e) {
        EXPECT_EQ(pow_x_mod(e, f), cur) << e;
        cur = mod(mul(cur, Gf2Poly::x()), f);
    }
}

TEST(Gf2Poly, IrreducibleAgreesWithTrialDivision)
{
    for (std::uint64_t b = 2; b < (std::uint64_t{1} << 13); ++b)
        ASSERT_EQ(is_irreducible(Gf2Poly{b}), oracle::is_irreducible(b)) << Gf2Poly{b};
    // sampled up to degree 16
    std::mt19937_64 rng(3);
    for (int i = 0; i < 3000; ++i) {
        const std::uint64_t b = (rng() & 0xffffU) | 0x10000U;
        ASSERT_EQ(is_irreducible(Gf2Poly{b}), oracle::is_irreducible(b)) << Gf2Poly{b};
    }
    EXPECT_TRUE(is_irreducible(P("x^6+x^5+x^4+x^2+1")));
    EXPECT_FALSE(is_irreducible(P("x^4+x^2+1")));
}

TEST(Gf2Poly, ExponentAgreesWithStepping)
{
    for (std::uint64_t b = 3; b < (std::uint64_t{1} << 11); b += 2) {
        const Gf2Poly f{b};
        if (f.degree() < 1)
            continue;
        ASSERT_EQ(exponent(f), oracle::exponent(b)) << f;
    }
    EXPECT_EQ(exponent(P("x^4+x^3+x^2+x+1")), 5U);
    EXPECT_EQ(exponent(P("x^6+x^5+x^4+x^2+1")), 21U);
    EXPECT_THROW(exponent(P("x^4+x")), error);
}

TEST(Gf2Poly, Primitive)
{
    EXPECT_TRUE(is_primitive(P("x^4+x^3+1")));
    EXPECT_TRUE(is_primitive(P("x^4+x+1")));
    EXPECT_FALSE(is_primitive(P("x^4+x^3+x^2+x+1")));
    for (std::uint64_t b = 3; b < 1024; b += 2) {
        const Gf2Poly f{b};
        if (f.degree() < 1)
            continue;
        const bool expect = oracle::is_irreducible(b) && oracle::exponent(b) == (std::uint64_t{1} << f.degree()) - 1;
        ASSERT_EQ(is_primitive(f), expect) << f;
    }
}

TEST(Gf2Poly, EulerPhi)
{
    for (std::int64_t k = 1; k < 2000; ++k)
        ASSERT_EQ(euler_phi(k), oracle::phi(k)) << k;
    EXPECT_EQ(euler_phi(85), 64);
    EXPECT_THROW(euler_phi(0), error);
}

TEST(Gf2Poly, EnumerateIrreducible)
{
    const auto all4 = enumerate_irreducible(4);
    ASSERT_EQ(all4.size(), 3U);
    EXPECT_EQ(all4[0], P("x^4+x+1"));
    EXPECT_EQ(all4[1], P("x^4+x^3+1"));
    EXPECT_EQ(all4[2], P("x^4+x^3+x^2+x+1"));
    EXPECT_EQ(enumerate_irreducible(4, 15).size(), 2U);
    EXPECT_EQ(enumerate_irreducible(4, 5).size(), 1U);
    std::string diag;
    EXPECT_TRUE(enumerate_irreducible(4, 7, &diag).empty());
    EXPECT_FALSE(diag.empty());
    for (int n = 1; n <= 10; ++n) {
        const auto list = enumerate_irreducible(n);
        EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
        for (auto f : list)
            EXPECT_TRUE(oracle::is_irreducible(f.bits()));
    }
}

TEST(Gf2Poly, Reciprocal)
{
    EXPECT_EQ(reciprocal(P("x^4+x^3+1")), P("x^4+x+1"));
    EXPECT_EQ(reciprocal(P("x^6+x^5+x^4+x^2+1")), P("x^6+x^4+x^2+x+1"));
    for (auto f : enumerate_irreducible(8)) {
        EXPECT_EQ(reciprocal(reciprocal(f)), f);
        EXPECT_TRUE(is_irreducible(reciprocal(f)));
        EXPECT_EQ(exponent(reciprocal(f)), exponent(f));
    }
}

TEST(WidePoly, MatchesNarrowArithmetic)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t a = rng() >> 34;
        const std::uint64_t b = rng() >> 34;
        const Gf2WidePoly w = Gf2WidePoly(Gf2Poly{a}) * Gf2WidePoly(Gf2Poly{b});
        const Gf2Poly f{(rng() >> 50) | 1U};
        if (f.degree() < 1)
            continue;
        EXPECT_EQ(w.mod(f), mod(mul(Gf2Poly{a}, Gf2Poly{b}), f));
    }
    const Gf2WidePoly big = Gf2WidePoly::monomial(200) + Gf2WidePoly(Gf2Poly::one());
    EXPECT_EQ(big.degree(), 200);
    // x^200 + 1 mod x^4+x+1: 200 = 5 (mod 15)
    EXPECT_EQ(big.mod(P("x^4+x+1")), pow_x_mod(5, P("x^4+x+1")) + Gf2Poly::one());
}
