// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include <dbarray/folding.hpp>
#include <dbarray/lfsr.hpp>

#include "oracles.hpp"

using namespace dbarray;

namespace {

Gf2Poly P(const char* s) { return Gf2Poly::parse(s); }

} // namespace

TEST(Folding, MapIsCrtBijection)
{
    for (std::size_t r = 1; r <= 12; ++r)
        for (std::size_t t = 1; t <= 12; ++t) {
            if (std::gcd(r, t) != 1)
                continue;
            const FoldingMap map(r, t);
            std::vector<bool> hit(r * t, false);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < t; ++j) {
                    const std::size_t p = map.position(i, j);
                    ASSERT_LT(p, r * t);
                    EXPECT_EQ(p % r, i);
                    EXPECT_EQ(p % t, j);
                    EXPECT_FALSE(hit[p]);
                    hit[p] = true;
                }
        }
    EXPECT_EQ(FoldingMap(3, 5).position(0, 1), 6U);
    EXPECT_THROW(FoldingMap(2, 4), error);
}

TEST(Folding, FoldUnfoldRoundTrip)
{
    std::mt19937_64 rng(99);
    int checked = 0;
    while (checked < 300) {
        const std::size_t r = 1 + rng() % 64;
        const std::size_t t = 1 + rng() % 64;
        if (std::gcd(r, t) != 1 || r * t > 4096)
            continue;
        const CyclicSequence s(oracle::random_bits(rng, r * t));
        const CyclicArray a = fold(s, r, t);
        ASSERT_EQ(unfold(a), s);
        ASSERT_EQ(fold(unfold(a), r, t), a);
        ++checked;
    }
}

TEST(Folding, ShiftedSequenceMovesDiagonally)
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        const std::size_t r = 2 + rng() % 9;
        const std::size_t t = 2 + rng() % 9;
        if (std::gcd(r, t) != 1)
            continue;
        const CyclicSequence s(oracle::random_bits(rng, r * t));
        const CyclicArray a = fold(s, r, t);
        // a sequence delayed by one position lands one row down and one column right
        EXPECT_EQ(fold(shift(s, -1), r, t), shift2d(a, 1, 1));
        EXPECT_EQ(fold(shift(s, 1), r, t), shift2d(a, -1, -1));
    }
}

TEST(Folding, PeriodicExtensionAndErrors)
{
    const CyclicSequence s = CyclicSequence::parse("[00101]");
    const CyclicArray a = fold(s, 3, 5);
    EXPECT_EQ(unfold(a), s);
    EXPECT_THROW(fold(CyclicSequence::parse("[0001]"), 3, 5), error);
    EXPECT_THROW(fold(s, 5, 10), error);
}

TEST(Folding, WindowPositions)
{
    const PositionSet R = window_positions(3, 5, 2, 2);
    EXPECT_EQ(R, (PositionSet{0, 6, 10, 1}));
    EXPECT_THROW(window_positions(3, 5, 4, 1), error);
    EXPECT_THROW(PositionSet({1, 1}), error);
    EXPECT_EQ(R.translated(14, 15), (PositionSet{14, 5, 9, 0}));
}

TEST(Folding, SetPolynomialExamples)
{
    EXPECT_EQ(set_polynomial(PositionSet{0}).mod(P("x^8+x^4+x^3+x^2+1")), Gf2Poly::one());
    const Gf2WidePoly g01 = set_polynomial(PositionSet{0, 1});
    EXPECT_EQ(g01, Gf2WidePoly(P("x^2+x")));
    EXPECT_TRUE(set_polynomial(PositionSet{0, 3}).divisible_by(P("x^2+x+1")));
    EXPECT_THROW(set_polynomial(PositionSet{0, 1, 2, 3, 4}), error);
}

TEST(Folding, IndependenceMatchesSetPolynomialOnSmallCases)
{
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 6; ++n) {
        for (auto f : enumerate_irreducible(n)) {
            const ResidueTable table(f);
            for (int trial = 0; trial < 200; ++trial) {
                const std::size_t size = 1 + rng() % 4;
                std::set<std::uint64_t> ps;
                while (ps.size() < std::min<std::size_t>(size, table.period()))
                    ps.insert(rng() % table.period());
                const PositionSet R(std::vector<std::uint64_t>(ps.begin(), ps.end()));
                ASSERT_EQ(positions_independent(table, R), !set_polynomial(R).divisible_by(f)) << f;
                ASSERT_EQ(set_polynomial(R).mod(f), set_polynomial_mod(table, R)) << f;
            }
        }
    }
}

TEST(Folding, IndependenceIsTranslationInvariant)
{
    std::mt19937_64 rng(17);
    for (int n = 3; n <= 8; ++n) {
        for (auto f : enumerate_irreducible(n)) {
            const ResidueTable table(f);
            for (int trial = 0; trial < 30; ++trial) {
                std::set<std::uint64_t> ps;
                while (ps.size() < std::min<std::uint64_t>(4, table.period()))
                    ps.insert(rng() % table.period());
                const PositionSet R(std::vector<std::uint64_t>(ps.begin(), ps.end()));
                const bool base = positions_independent(table, R);
                const std::uint64_t c = rng() % table.period();
                ASSERT_EQ(positions_independent(table, R.translated(c, table.period())), base);
            }
        }
    }
}

TEST(Folding, IndependenceDiagnostics)
{
    const Gf2Poly f = P("x^2+x+1");
    std::string why;
    EXPECT_FALSE(positions_independent(f, PositionSet{0, 3}, &why));
    EXPECT_FALSE(why.empty());
    EXPECT_FALSE(positions_independent(f, PositionSet{0, 1, 2}, &why));
    EXPECT_NE(why.find("exceed"), std::string::npos);
    EXPECT_TRUE(positions_independent(f, PositionSet{0, 1}));
    EXPECT_THROW(positions_independent(P("x^4+x^2+1"), PositionSet{0}), error);
}

TEST(Folding, MSequenceFoldsAreWindowComplete)
{
    // every primitive f of degree nm <= 12 with r = 2^n - 1 coprime to t
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; n * m <= 12; ++m) {
            const std::size_t r = mersenne(n);
            const std::size_t t = mersenne(n * m) / r;
            if (std::gcd(r, t) != 1 || r < 2 || t < 2 || static_cast<std::size_t>(m) >= t ||
                static_cast<std::size_t>(n) >= r)
                continue;
            for (auto f : enumerate_irreducible(n * m, mersenne(n * m))) {
                const ResidueTable table(f);
                EXPECT_TRUE(positions_independent(table, window_positions(r, t, n, m))) << f;
            }
        }
}
