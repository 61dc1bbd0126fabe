// SPDX-License-Identifier: Apache-2.0
#pragma once

// Perfect factors, de Bruijn array codes built from them, and pseudo-random array codes
// built by folding register cycles. Every construction hands its output to the oracle in
// arraycode.hpp; the report's `verified` flag is that verdict and nothing else.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "array.hpp"
#include "arraycode.hpp"
#include "error.hpp"
#include "folding.hpp"
#include "gf2poly.hpp"
#include "lfsr.hpp"
#include "sequence.hpp"

namespace dbarray {

struct ConstructionReport {
    std::string construction;
    std::size_t r = 0;
    std::size_t t = 0;
    int n = 0;
    int m = 0;
    std::uint64_t claimed_size = 0;
    ArrayCode produced;
    VerifyReport verification;
    bool verified = false;
    bool experimental = false;
    std::optional<DistanceReport> distance;
    std::optional<Gf2Poly> source;
    std::vector<std::string> notes;
};

inline constexpr int kMaxPerfectFactorSearchOrder = 6;
inline constexpr int kMaxConstructionWindowBits = 24;
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

// ---------------------------------------------------------------------------
// Perfect factors

/// Checks cycle count, cycle lengths and that every n-tuple appears exactly once.
inline bool verify_perfect_factor(const PerfectFactor& pf)
{
    const int n = pf.order;
    const int k = pf.subdegree;
    if (k < 1 || n < k || n > kMaxScanDegree || k > 62)
        return false;
    if (pf.cycles.size() != (std::size_t{1} << (n - k)) || pf.zero_state.size() != pf.cycles.size())
        return false;
    std::vector<bool> seen(std::size_t{1} << n, false);
    for (const auto& c : pf.cycles) {
        if (c.size() != (std::size_t{1} << k))
            return false;
        for (std::size_t p = 0; p < c.size(); ++p) {
            const auto w = c.window(p, n);
            if (seen[w])
                return false;
            seen[w] = true;
        }
    }
    return true;
}

/// A PF(n,k) is the same thing as a (2^k,1;n,1)-DBAC whose arrays are the cycles as columns.
inline ArrayCode as_array_code(const PerfectFactor& pf)
{
    ArrayCode code;
    code.kind = CodeKind::DBAC;
    code.r = std::size_t{1} << pf.subdegree;
    code.t = 1;
    code.n = pf.order;
    code.m = 1;
    for (std::size_t c = 0; c < pf.cycles.size(); ++c) {
        Bits col(code.r);
        for (std::size_t p = 0; p < code.r; ++p)
            col[p] = pf.bit(c, 0, p);
        code.arrays.push_back(CyclicArray::from_columns({col}));
    }
    return code;
}

namespace detail {

class PerfectFactorSearch {
public:
    PerfectFactorSearch(int n, int k, std::optional<Parity> parity, std::uint64_t budget)
        : n_(n), length_(std::size_t{1} << k), mask_(mersenne(n)), parity_(parity), budget_(budget),
          used_(std::size_t{1} << n, false)
    {
    }

    bool run() { return cover(); }
    const std::vector<Bits>& cycles() const { return cycles_; }

private:
    bool cover()
    {
        const auto it = std::find(used_.begin(), used_.end(), false);
        if (it == used_.end())
            return true;
        const auto start = static_cast<std::uint64_t>(it - used_.begin());
        path_.assign(1, start);
        used_[start] = true;
        const bool ok = extend(start);
        if (!ok)
            used_[start] = false;
        return ok;
    }

    bool extend(std::uint64_t start)
    {
        if (++nodes_ > budget_)
            fail(errc::resource_exhausted, "perfect factor search exceeded its node budget");
        if (path_.size() == length_) {
            if ((((path_.back() << 1) & mask_) | (start & 1U)) != start)
                return false;
            Bits seq(length_);
            std::size_t weight = 0;
            for (std::size_t p = 0; p < length_; ++p) {
                seq[p] = static_cast<std::uint8_t>((path_[p] >> (n_ - 1)) & 1U);
                weight += seq[p];
            }
            if (parity_ && (weight % 2 == 0) != (*parity_ == Parity::even))
                return false;
            const auto saved = path_;
            cycles_.push_back(std::move(seq));
            if (cover())
                return true;
            cycles_.pop_back();
            path_ = saved;
            return false;
        }
        for (std::uint64_t b = 0; b <= 1; ++b) {
            const std::uint64_t next = ((path_.back() << 1) & mask_) | b;
            if (used_[next])
                continue;
            used_[next] = true;
            path_.push_back(next);
            if (extend(start))
                return true;
            path_.pop_back();
            used_[next] = false;
        }
        return false;
    }

    int n_;
    std::size_t length_;
    std::uint64_t mask_;
    std::optional<Parity> parity_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<bool> used_;
    std::vector<std::uint64_t> path_;
    std::vector<Bits> cycles_;
};

inline PerfectFactor finish_perfect_factor(int n, int k, std::vector<CyclicSequence> cycles)
{
    PerfectFactor pf;
    pf.order = n;
    pf.subdegree = k;
    for (auto& c : cycles)
        pf.cycles.push_back(c.canonical());
    std::sort(pf.cycles.begin(), pf.cycles.end());
    pf.zero_state.assign(pf.cycles.size(), 0);
    return pf;
}

} // namespace detail

/// PF(n,k), which exists iff k <= n < 2^k. PF(n,n) is a de Bruijn sequence; otherwise a
/// depth-first cover of the de Bruijn graph by length-2^k cycles (n <= 6). Zero states sit at
/// each cycle's canonical rotation.
inline PerfectFactor perfect_factor(int n, int k, std::optional<Parity> parity = std::nullopt,
                                    std::uint64_t budget = kDefaultSearchBudget)
{
    const bool exists = k >= 1 && k <= n && (k >= 63 || static_cast<std::uint64_t>(n) < (std::uint64_t{1} << k));
    require(exists, errc::nonexistence,
            "PF(" + std::to_string(n) + "," + std::to_string(k) + ") does not exist: a perfect factor needs k <= n < 2^k");
    if (n == k) {
        const CyclicSequence db = de_bruijn(n);
        if (parity && weight_parity(db) != *parity)
            fail(errc::nonexistence, "PF(" + std::to_string(n) + "," + std::to_string(n) + ") is a single de Bruijn cycle of weight " +
                                         std::to_string(db.weight()) + "; no " + std::string(to_string(*parity)) +
                                         "-weight version exists");
        return detail::finish_perfect_factor(n, k, {db});
    }
    require(n <= kMaxPerfectFactorSearchOrder, errc::invalid_argument,
            "perfect factor search is capped at n <= 6, got n=" + std::to_string(n));
    detail::PerfectFactorSearch search(n, k, parity, budget);
    if (!search.run())
        fail(errc::nonexistence, "no PF(" + std::to_string(n) + "," + std::to_string(k) + ") with all cycles of " +
                                     std::string(to_string(*parity)) + " weight");
    std::vector<CyclicSequence> cycles;
    for (const auto& c : search.cycles())
        cycles.emplace_back(c);
    return detail::finish_perfect_factor(n, k, std::move(cycles));
}

// ---------------------------------------------------------------------------
// de Bruijn array codes from perfect factors

namespace detail {

/// Column vector E^j X_i of length 2^k, read from the cycle's zero state.
inline Bits pf_column(const PerfectFactor& pf, std::size_t cycle, std::size_t j, bool complement)
{
    const std::size_t len = std::size_t{1} << pf.subdegree;
    Bits col(len);
    for (std::size_t p = 0; p < len; ++p)
        col[p] = static_cast<std::uint8_t>(pf.bit(cycle, j, p) ^ (complement ? 1U : 0U));
    return col;
}

/// Odometer over `digits` positions each in [0, base).
inline bool next_tuple(std::vector<std::size_t>& digits, std::size_t base)
{
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base)
            return true;
        digits[i] = 0;
    }
    return false;
}

/// Groups generated codewords by 2D-shift class, keeping the first representative of each.
class CodewordClasses {
public:
    void add(const CyclicArray& a)
    {
        ++generated_;
        auto [it, inserted] = classes_.try_emplace(canonical(a), a, 0);
        ++it->second.second;
    }

    std::uint64_t generated() const { return generated_; }
    std::size_t size() const { return classes_.size(); }

    std::vector<CyclicArray> representatives() const
    {
        std::vector<CyclicArray> out;
        for (const auto& [key, entry] : classes_)
            out.push_back(entry.first);
        return out;
    }

    /// True when every class was generated exactly `times` times.
    bool uniform_multiplicity(std::uint64_t times) const
    {
        return std::all_of(classes_.begin(), classes_.end(),
                           [&](const auto& kv) { return kv.second.second == times; });
    }

private:
    std::map<CyclicArray, std::pair<CyclicArray, std::uint64_t>> classes_;
    std::uint64_t generated_ = 0;
};

inline void finish_dbac(ConstructionReport& rep, const CodewordClasses& classes, std::uint64_t multiplicity)
{
    rep.produced.arrays = classes.representatives();
    rep.notes.push_back("enumerated " + std::to_string(classes.generated()) + " column tuples into " +
                        std::to_string(classes.size()) + " distinct codewords (claimed " +
                        std::to_string(rep.claimed_size) + ")");
    rep.notes.push_back(std::string("every codeword generated exactly ") + std::to_string(multiplicity) +
                        " times: " + (classes.uniform_multiplicity(multiplicity) ? "yes" : "no"));
    std::size_t periodic = 0;
    for (const auto& a : rep.produced.arrays)
        if (horizontal_period(a) != a.cols())
            ++periodic;
    rep.notes.push_back("codewords with a proper horizontal period: " + std::to_string(periodic));
    rep.verification = verify(rep.produced);
    rep.verified = rep.verification.verdict;
    if (classes.size() != rep.claimed_size)
        rep.notes.push_back("size mismatch: produced " + std::to_string(classes.size()) + ", claimed " +
                            std::to_string(rep.claimed_size));
}

inline void require_valid_pf(const PerfectFactor& pf)
{
    require(verify_perfect_factor(pf), errc::precondition, "input is not a valid perfect factor");
}

} // namespace detail

/// Codewords [X_i1, E^j2 X_i2, ..., E^j(l+1) X_i(l+1)] with l = 2^m - 1, sum of cycle indices
/// = 1 (mod 2^(n-k)) and sum of shifts = 0 (mod 2^k). Claims a (2^k,2^m;n,2^m-1)-DBAC of size
/// 2^(nl-k-m).
inline ConstructionReport construct_pmc_odd(const PerfectFactor& pf, int m)
{
    detail::require_valid_pf(pf);
    const int n = pf.order;
    const int k = pf.subdegree;
    require(m >= 1 && m <= 5, errc::precondition, "m must be in [1, 5]");
    const int ell = (1 << m) - 1;
    const long size_exp = static_cast<long>(n) * ell - k - m;
    require(size_exp >= 0, errc::precondition,
            "degenerate parameters: claimed size 2^" + std::to_string(size_exp) + " is not an integer");
    require(m >= k, errc::precondition, "construction requires m >= k (m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")");
    require(n * ell <= kMaxConstructionWindowBits, errc::precondition,
            "window " + std::to_string(n) + "x" + std::to_string(ell) + " exceeds the desk-scale cap n*(2^m-1) <= 24");

    ConstructionReport rep;
    rep.construction = "pmc-odd";
    rep.r = std::size_t{1} << k;
    rep.t = std::size_t{1} << m;
    rep.n = n;
    rep.m = ell;
    rep.claimed_size = std::uint64_t{1} << size_exp;
    rep.produced = ArrayCode{CodeKind::DBAC, rep.r, rep.t, n, ell, {}};

    const std::size_t d = pf.cycles.size();
    const std::size_t shifts = rep.r;
    detail::CodewordClasses classes;
    std::vector<std::size_t> idx(static_cast<std::size_t>(ell), 0);     // i_1..i_l, zero-based
    do {
        // with one-based labels: sum i_r = 1 (mod d)
        std::size_t sum = 0;
        for (auto i : idx)
            sum += i + 1;
        const std::size_t last = ((1 + d * (sum / d + 1) - sum % d) % d + d - 1) % d; // zero-based i_(l+1)
        std::vector<std::size_t> js(static_cast<std::size_t>(ell - 1), 0); // j_2..j_l
        do {
            std::size_t jsum = 0;
            for (auto j : js)
                jsum += j;
            const std::size_t jlast = (shifts - jsum % shifts) % shifts;
            std::vector<Bits> cols;
            cols.push_back(detail::pf_column(pf, idx[0], 0, false));
            for (std::size_t r = 1; r < idx.size(); ++r)
                cols.push_back(detail::pf_column(pf, idx[r], js[r - 1], false));
            cols.push_back(detail::pf_column(pf, last, jlast, false));
            classes.add(CyclicArray::from_columns(cols));
        } while (detail::next_tuple(js, shifts));
    } while (detail::next_tuple(idx, d));

    detail::finish_dbac(rep, classes, std::uint64_t{1} << m);
    return rep;
}

/// Codewords [X_i1, E^j2 X_i2, ..., E^jl X_il, ~X_i1, E^j2 ~X_i2, ..., E^jl ~X_il] with l = 2^m
/// and free choices. Claims a (2^k,2^(m+1);n,2^m)-DBAC of size 2^(nl-k-m-1).
inline ConstructionReport construct_pmc_sd(const PerfectFactor& pf, int m)
{
    detail::require_valid_pf(pf);
    const int n = pf.order;
    const int k = pf.subdegree;
    require(m >= 0 && m <= 4, errc::precondition, "m must be in [0, 4]");
    const int ell = 1 << m;
    const long size_exp = static_cast<long>(n) * ell - k - m - 1;
    require(size_exp >= 0, errc::precondition,
            "degenerate parameters: claimed size 2^" + std::to_string(size_exp) + " is not an integer");
    require(n * ell <= kMaxConstructionWindowBits, errc::precondition,
            "window " + std::to_string(n) + "x" + std::to_string(ell) + " exceeds the desk-scale cap n*2^m <= 24");

    ConstructionReport rep;
    rep.construction = "pmc-sd";
    rep.r = std::size_t{1} << k;
    rep.t = std::size_t{2} << m;
    rep.n = n;
    rep.m = ell;
    rep.claimed_size = std::uint64_t{1} << size_exp;
    rep.produced = ArrayCode{CodeKind::DBAC, rep.r, rep.t, n, ell, {}};
    if (m < k)
        rep.notes.push_back("m < k: the oracle decides whether the code is valid");

    const std::size_t d = pf.cycles.size();
    const std::size_t shifts = rep.r;
    detail::CodewordClasses classes;
    std::vector<std::size_t> idx(static_cast<std::size_t>(ell), 0);
    do {
        std::vector<std::size_t> js(static_cast<std::size_t>(ell - 1), 0);
        do {
            std::vector<Bits> cols;
            for (int half = 0; half < 2; ++half)
                for (std::size_t r = 0; r < idx.size(); ++r)
                    cols.push_back(detail::pf_column(pf, idx[r], r == 0 ? 0 : js[r - 1], half == 1));
            classes.add(CyclicArray::from_columns(cols));
        } while (detail::next_tuple(js, shifts));
    } while (detail::next_tuple(idx, d));

    detail::finish_dbac(rep, classes, std::uint64_t{2} << m);
    return rep;
}

/// Raises the window height by one: each column of each codeword is replaced by a D-preimage,
/// the choice bit for column j taken from a cyclic shift of a span-m de Bruijn sequence, over
/// all 2^m shifts. Built from a proof sketch, so the oracle verdict is the only claim made.
inline ConstructionReport construct_db_pmc_direct(const ArrayCode& code, int m)
{
    require(code.kind == CodeKind::DBAC || code.kind == CodeKind::PM, errc::precondition,
            "input must be a DBAC (or PM), got " + std::string(to_string(code.kind)));
    require(m >= 1 && m <= 10, errc::precondition, "m must be in [1, 10]");
    require(code.m == m, errc::precondition,
            "input window width " + std::to_string(code.m) + " differs from m=" + std::to_string(m));
    require(code.t == (std::size_t{1} << m), errc::precondition,
            "t=" + std::to_string(code.t) + " is not 2^m = " + std::to_string(std::size_t{1} << m));
    require(code.n + 1 <= kMaxWindowBits / code.m, errc::precondition, "raised window exceeds the 32-bit cap");
    const VerifyReport input = verify(code);
    require(input.verdict, errc::precondition, "input code does not verify as " + code.label());
    for (std::size_t a = 0; a < code.arrays.size(); ++a) {
        for (std::size_t j = 0; j < code.t; ++j) {
            const CyclicSequence col(code.arrays[a].column(j));
            require(col.size() == code.r, errc::precondition,
                    "column " + std::to_string(j) + " of array " + std::to_string(a) + " has period " +
                        std::to_string(col.size()) + ", not r=" + std::to_string(code.r));
            require(weight_parity(col) == Parity::even, errc::precondition,
                    "column " + std::to_string(j) + " of array " + std::to_string(a) + " has odd weight");
        }
    }

    ConstructionReport rep;
    rep.construction = "db-direct";
    rep.experimental = true;
    rep.r = code.r;
    rep.t = code.t;
    rep.n = code.n + 1;
    rep.m = m;
    rep.claimed_size = (std::uint64_t{1} << m) * code.arrays.size();
    rep.produced = ArrayCode{CodeKind::DBAC, rep.r, rep.t, rep.n, m, {}};
    rep.notes.push_back("EXPERIMENTAL: implemented from a proof sketch; acceptance is the oracle verdict");

    const CyclicSequence selector = de_bruijn(m);
    for (const auto& a : code.arrays) {
        for (std::size_t s = 0; s < selector.size(); ++s) {
            std::vector<Bits> cols;
            for (std::size_t j = 0; j < code.t; ++j) {
                const CyclicSequence lifted = d_inverse(CyclicSequence(a.column(j)), selector[j + s]);
                cols.push_back(lifted.expanded(code.r));
            }
            rep.produced.arrays.push_back(CyclicArray::from_columns(cols));
        }
    }
    rep.verification = verify(rep.produced);
    rep.verified = rep.verification.verdict;
    if (!rep.verified)
        for (const auto& d : rep.verification.diagnostics)
            rep.notes.push_back("counterexample: " + d);
    return rep;
}

// ---------------------------------------------------------------------------
// Pseudo-random array codes by folding

namespace detail {

inline void finish_fold_code(ConstructionReport& rep)
{
    rep.verification = verify(rep.produced);
    rep.verified = rep.verification.verdict;
    const bool closed = rep.verification.closure.value_or(false);
    rep.distance = min_distance(rep.produced, closed);
    if (!rep.distance->consistent())
        rep.notes.push_back("pairwise and weight minimum distance disagree");
}

inline ArrayCode fold_family(const SequenceFamily& fam, std::size_t r, std::size_t t, int n, int m,
                             std::vector<std::string>& notes)
{
    ArrayCode code;
    code.kind = fam.members.size() == 1 ? CodeKind::PRA : CodeKind::PRAC;
    code.r = r;
    code.t = t;
    code.n = n;
    code.m = m;
    bool extended = false;
    for (const auto& s : fam.members) {
        extended = extended || s.size() != r * t;
        code.arrays.push_back(fold(s, r, t));
    }
    if (extended)
        notes.push_back("periodic extension: some cycle period properly divides r*t");
    return code;
}

} // namespace detail

/// Folds all cycles of an irreducible f of degree nm and exponent e = (2^n-1) l, gcd(2^n-1, l) = 1,
/// into (2^n-1) x l arrays.
inline ConstructionReport construct_prac_fold(Gf2Poly f, int n, int m)
{
    require(n >= 1 && m >= 1, errc::precondition, "n and m must be positive");
    require(f.degree() >= 1 && f.degree() <= kMaxScanDegree, errc::precondition,
            "polynomial degree must be in [1, 24]");
    require(is_irreducible(f), errc::precondition, "hypothesis failed: " + f.to_string() + " is not irreducible");
    require(f.degree() == n * m, errc::precondition,
            "hypothesis failed: degree " + std::to_string(f.degree()) + " != n*m = " + std::to_string(n * m));
    require(f.constant_term(), errc::precondition, "hypothesis failed: " + f.to_string() + " has no exponent");
    const std::uint64_t e = exponent(f);
    const std::uint64_t rows = mersenne(n);
    require(e % rows == 0, errc::precondition,
            "hypothesis failed: exponent " + std::to_string(e) + " is not a multiple of 2^n-1 = " + std::to_string(rows));
    const std::uint64_t ell = e / rows;
    require(std::gcd(rows, ell) == 1, errc::precondition,
            "hypothesis failed: gcd(2^n-1, l) = gcd(" + std::to_string(rows) + "," + std::to_string(ell) + ") != 1");
    require(static_cast<std::uint64_t>(n) <= rows && static_cast<std::uint64_t>(m) <= ell, errc::precondition,
            "hypothesis failed: the " + std::to_string(n) + "x" + std::to_string(m) + " window does not fit in " +
                std::to_string(rows) + "x" + std::to_string(ell));

    ConstructionReport rep;
    rep.construction = "prac-fold";
    rep.source = f;
    rep.r = rows;
    rep.t = ell;
    rep.n = n;
    rep.m = m;
    rep.claimed_size = mersenne(n * m) / e;

    const ResidueTable table(f);
    const PositionSet window = window_positions(rows, ell, static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    std::string why;
    const bool independent = positions_independent(table, window, &why);
    if (!independent)
        rep.notes.push_back("obstruction: f divides g_R for the window positions (" + why + ")");
    bool all_offsets = true;
    for (std::uint64_t c = 0; c < e && all_offsets; ++c)
        all_offsets = positions_independent(table, window.translated(c, e));
    rep.notes.push_back(std::string("window independence holds at all ") + std::to_string(e) +
                        " anchors: " + (all_offsets ? "yes" : "no"));

    const SequenceFamily fam = generate_cycles(f);
    const std::uint64_t windows = static_cast<std::uint64_t>(fam.members.size()) * rows * ell;
    rep.notes.push_back("cycles " + std::to_string(fam.members.size()) + " x cells " + std::to_string(rows * ell) +
                        " = " + std::to_string(windows) + (windows == mersenne(n * m) ? " = " : " != ") + "2^nm-1");
    rep.produced = detail::fold_family(fam, rows, ell, n, m, rep.notes);
    detail::finish_fold_code(rep);
    return rep;
}

/// Folds the cycles of f*g (distinct irreducibles of equal degree and exponent) into r x t arrays.
inline ConstructionReport experiment_product_fold(Gf2Poly f, Gf2Poly g, std::size_t r, std::size_t t, int n, int m)
{
    require(f != g, errc::precondition, "f and g must be distinct");
    require(f.degree() >= 1 && g.degree() >= 1, errc::precondition, "f and g need degree >= 1");
    require(is_irreducible(f) && is_irreducible(g), errc::precondition, "f and g must both be irreducible");
    require(f.degree() == g.degree(), errc::precondition, "f and g must have equal degree");
    require(f.constant_term() && g.constant_term(), errc::precondition, "f and g need nonzero constant terms");
    const std::uint64_t e = exponent(f);
    require(exponent(g) == e, errc::precondition,
            "exponents differ: " + std::to_string(e) + " vs " + std::to_string(exponent(g)));
    require(2 * f.degree() == n * m, errc::precondition, "n*m must equal the product degree");
    require(r * t == e, errc::precondition, "r*t must equal the common exponent " + std::to_string(e));
    require(std::gcd(r, t) == 1, errc::not_coprime, "r and t are not coprime");

    const Gf2Poly h = mul(f, g);
    ConstructionReport rep;
    rep.construction = "product-fold";
    rep.source = h;
    rep.r = r;
    rep.t = t;
    rep.n = n;
    rep.m = m;
    rep.claimed_size = mersenne(n * m) / e;
    const SequenceFamily fam = generate_cycles(h);
    rep.notes.push_back("product " + h.to_string() + " has " + std::to_string(fam.members.size()) +
                        " cycles, uniform length: " + (fam.exponent ? std::to_string(*fam.exponent) : "no"));
    rep.produced = detail::fold_family(fam, r, t, n, m, rep.notes);
    detail::finish_fold_code(rep);
    return rep;
}

/// One report per irreducible polynomial of degree `deg` and exponent e, folding its cycles into r x t.
inline std::vector<ConstructionReport> experiment_exponent_family(int deg, std::uint64_t e, std::size_t r, std::size_t t,
                                                                  int n, int m)
{
    require(r * t == e, errc::precondition, "r*t must equal e");
    require(std::gcd(r, t) == 1, errc::not_coprime, "r and t are not coprime");
    require(n * m == deg, errc::precondition, "n*m must equal deg");
    std::string diag;
    const auto polys = enumerate_irreducible(deg, e, &diag);
    require(diag.empty(), errc::precondition, diag);
    std::vector<ConstructionReport> out;
    for (const auto f : polys) {
        ConstructionReport rep;
        rep.construction = "exponent-family";
        rep.source = f;
        rep.r = r;
        rep.t = t;
        rep.n = n;
        rep.m = m;
        rep.claimed_size = mersenne(deg) / e;
        const SequenceFamily fam = generate_cycles(f);
        rep.produced = detail::fold_family(fam, r, t, n, m, rep.notes);
        detail::finish_fold_code(rep);
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace dbarray
