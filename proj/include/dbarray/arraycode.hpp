// SPDX-License-Identifier: Apache-2.0
#pragma once

// Array codes and the brute-force oracle that certifies them.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "array.hpp"
#include "error.hpp"

namespace dbarray {

enum class CodeKind { PM, SPM, PRA, DBAC, SDBAC, PRAC };

inline std::string_view to_string(CodeKind k)
{
    switch (k) {
    case CodeKind::PM: return "PM";
    case CodeKind::SPM: return "SPM";
    case CodeKind::PRA: return "PRA";
    case CodeKind::DBAC: return "DBAC";
    case CodeKind::SDBAC: return "SDBAC";
    case CodeKind::PRAC: return "PRAC";
    }
    return "?";
}

inline CodeKind parse_kind(std::string_view s)
{
    for (auto k : {CodeKind::PM, CodeKind::SPM, CodeKind::PRA, CodeKind::DBAC, CodeKind::SDBAC, CodeKind::PRAC})
        if (to_string(k) == s)
            return k;
    fail(errc::parse, "unknown code kind '" + std::string(s) + "'");
}

/// Kinds whose windows exclude the all-zeros matrix.
inline bool is_shortened(CodeKind k) { return k == CodeKind::SPM || k == CodeKind::PRA || k == CodeKind::SDBAC || k == CodeKind::PRAC; }
/// Kinds consisting of exactly one array.
inline bool is_single(CodeKind k) { return k == CodeKind::PM || k == CodeKind::SPM || k == CodeKind::PRA; }
/// Kinds that must be closed under adding shifted codewords.
inline bool has_shift_and_add(CodeKind k) { return k == CodeKind::PRA || k == CodeKind::PRAC; }

inline constexpr int kMaxWindowBits = 32;

struct ArrayCode {
    CodeKind kind = CodeKind::DBAC;
    std::size_t r = 0;
    std::size_t t = 0;
    int n = 0;
    int m = 0;
    std::vector<CyclicArray> arrays;

    std::string label() const
    {
        return "(" + std::to_string(r) + "," + std::to_string(t) + ";" + std::to_string(n) + "," + std::to_string(m) +
               ")-" + std::string(to_string(kind));
    }
};

struct VerifyReport {
    bool counting = false;
    bool dimensions = false;
    bool coverage = false;
    /// Present only for kinds with the shift-and-add property.
    std::optional<bool> closure;
    bool verdict = false;
    std::vector<std::string> diagnostics;
};

namespace detail {

inline std::string window_string(std::uint64_t mask, int n, int m)
{
    std::string s;
    for (int u = 0; u < n; ++u) {
        if (u > 0)
            s += '/';
        for (int v = 0; v < m; ++v) {
            const int bit = n * m - 1 - (u * m + v);
            s += static_cast<char>('0' + ((mask >> bit) & 1U));
        }
    }
    return s;
}

struct CellsHash {
    std::size_t operator()(const Bits& b) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (auto c : b)
            h = (h ^ c) * 1099511628211ULL;
        return h;
    }
};

inline bool check_coverage(const ArrayCode& code, VerifyReport& report)
{
    const int bits = code.n * code.m;
    const bool shortened = is_shortened(code.kind);
    const std::uint64_t universe = bits >= 64 ? 0 : (std::uint64_t{1} << bits);

    // count[w] saturates at 2; the first anchor of each window is remembered for diagnostics
    std::unordered_map<std::uint64_t, std::pair<std::uint8_t, std::string>> sparse;
    std::vector<std::uint8_t> dense;
    const bool use_dense = bits <= 24;
    if (use_dense)
        dense.assign(universe, 0);

    bool ok = true;
    std::size_t duplicates_reported = 0;
    std::uint64_t seen = 0;
    for (std::size_t a = 0; a < code.arrays.size(); ++a) {
        const auto& arr = code.arrays[a];
        for (std::size_t i = 0; i < arr.rows(); ++i) {
            for (std::size_t j = 0; j < arr.cols(); ++j) {
                const std::uint64_t w = arr.window_mask(i, j, code.n, code.m);
                std::uint8_t prior = 0;
                if (use_dense) {
                    prior = dense[w];
                    dense[w] = static_cast<std::uint8_t>(std::min(2, prior + 1));
                } else {
                    auto& slot = sparse[w];
                    prior = slot.first;
                    slot.first = static_cast<std::uint8_t>(std::min(2, prior + 1));
                }
                if (prior == 0)
                    ++seen;
                if (shortened && w == 0) {
                    ok = false;
                    report.diagnostics.push_back("all-zeros window in array " + std::to_string(a) + " at (" +
                                                 std::to_string(i) + "," + std::to_string(j) + ")");
                } else if (prior >= 1) {
                    ok = false;
                    if (duplicates_reported++ < 4)
                        report.diagnostics.push_back("duplicated window " + window_string(w, code.n, code.m) +
                                                     " again in array " + std::to_string(a) + " at (" +
                                                     std::to_string(i) + "," + std::to_string(j) + ")");
                }
            }
        }
    }
    const std::uint64_t target = universe - (shortened ? 1 : 0);
    const std::uint64_t distinct_targets = seen - ((shortened && (use_dense ? dense[0] > 0 : sparse.count(0) > 0)) ? 1 : 0);
    if (distinct_targets != target) {
        ok = false;
        report.diagnostics.push_back(std::to_string(target - distinct_targets) + " of " + std::to_string(target) +
                                     " target windows never appear");
    }
    return ok;
}

inline bool check_closure(const ArrayCode& code, VerifyReport& report)
{
    std::unordered_set<Bits, CellsHash> positioned;
    for (const auto& a : code.arrays)
        for (std::size_t di = 0; di < code.r; ++di)
            for (std::size_t dj = 0; dj < code.t; ++dj)
                positioned.insert(shift2d(a, static_cast<long>(di), static_cast<long>(dj)).cells());

    for (std::size_t x = 0; x < code.arrays.size(); ++x) {
        for (std::size_t y = 0; y < code.arrays.size(); ++y) {
            for (std::size_t di = 0; di < code.r; ++di) {
                for (std::size_t dj = 0; dj < code.t; ++dj) {
                    if (x == y && di == 0 && dj == 0)
                        continue;
                    const CyclicArray other = shift2d(code.arrays[y], static_cast<long>(di), static_cast<long>(dj));
                    if (other == code.arrays[x])
                        continue; // the same positioned array reached another way
                    const CyclicArray sum = add2d(code.arrays[x], other);
                    if (sum.is_zero() || positioned.count(sum.cells()) == 0) {
                        report.diagnostics.push_back("array " + std::to_string(x) + " + shift(" + std::to_string(di) +
                                                     "," + std::to_string(dj) + ") of array " + std::to_string(y) +
                                                     " is not a shift of any codeword");
                        return false;
                    }
                }
            }
        }
    }
    report.diagnostics.push_back("closure membership tested up to 2D shift of any codeword");
    return true;
}

} // namespace detail

/// Runs every check that applies to the declared kind. Failures are reported, never thrown.
inline VerifyReport verify(const ArrayCode& code)
{
    VerifyReport report;
    if (code.n < 1 || code.m < 1 || code.r < 1 || code.t < 1) {
        report.diagnostics.push_back("parameters must be positive");
        return report;
    }
    if (code.n * code.m > kMaxWindowBits) {
        report.diagnostics.push_back("window of " + std::to_string(code.n * code.m) +
                                     " bits exceeds the desk-scale cap of 32");
        return report;
    }
    for (std::size_t a = 0; a < code.arrays.size(); ++a) {
        if (code.arrays[a].rows() != code.r || code.arrays[a].cols() != code.t) {
            report.diagnostics.push_back("array " + std::to_string(a) + " is not " + std::to_string(code.r) + "x" +
                                         std::to_string(code.t));
            return report;
        }
    }

    const std::uint64_t matrices = std::uint64_t{1} << (code.n * code.m);
    const std::uint64_t target = matrices - (is_shortened(code.kind) ? 1 : 0);
    const std::uint64_t cells = static_cast<std::uint64_t>(code.arrays.size()) * code.r * code.t;
    report.counting = cells == target && (!is_single(code.kind) || code.arrays.size() == 1);
    if (!report.counting)
        report.diagnostics.push_back(std::to_string(code.arrays.size()) + " arrays x " + std::to_string(code.r * code.t) +
                                     " cells = " + std::to_string(cells) + ", expected " + std::to_string(target) +
                                     (is_single(code.kind) ? " in exactly one array" : ""));

    const auto dim_ok = [](std::size_t size, int w) {
        return size > static_cast<std::size_t>(w) || (size == 1 && w == 1);
    };
    report.dimensions = dim_ok(code.r, code.n) && dim_ok(code.t, code.m);
    if (!report.dimensions)
        report.diagnostics.push_back("dimension condition fails: need r > n or r = n = 1, and t > m or t = m = 1");

    report.coverage = !code.arrays.empty() && detail::check_coverage(code, report);

    bool verdict = report.counting && report.dimensions && report.coverage;
    if (has_shift_and_add(code.kind)) {
        report.closure = !code.arrays.empty() && detail::check_closure(code, report);
        verdict = verdict && *report.closure;
    }
    report.verdict = verdict;
    return report;
}

struct DistanceReport {
    /// Exhaustive minimum over distinct pairs of codewords.
    std::size_t pairwise = 0;
    /// Minimum nonzero weight; meaningful only when the code is closed under addition.
    std::optional<std::size_t> by_weight;
    std::size_t codewords = 0;

    bool consistent() const { return !by_weight || *by_weight == pairwise; }
};

/// Codewords are all 2D shifts of all arrays, plus the zero array for shortened kinds.
/// The weight shortcut is filled in when `closed` is true.
inline DistanceReport min_distance(const ArrayCode& code, bool closed)
{
    require(!code.arrays.empty(), errc::invalid_argument, "min_distance of an empty code");
    const std::size_t cells = code.r * code.t;
    const std::size_t words = (cells + 63) / 64;

    std::unordered_set<Bits, detail::CellsHash> seen;
    std::vector<std::vector<std::uint64_t>> packed;
    const auto add = [&](const CyclicArray& a) {
        if (!seen.insert(a.cells()).second)
            return;
        std::vector<std::uint64_t> w(words, 0);
        for (std::size_t p = 0; p < cells; ++p)
            if (a.cells()[p])
                w[p / 64] |= std::uint64_t{1} << (p % 64);
        packed.push_back(std::move(w));
    };
    for (const auto& a : code.arrays)
        for (std::size_t di = 0; di < code.r; ++di)
            for (std::size_t dj = 0; dj < code.t; ++dj)
                add(shift2d(a, static_cast<long>(di), static_cast<long>(dj)));
    if (is_shortened(code.kind))
        add(CyclicArray(code.r, code.t));

    DistanceReport rep;
    rep.codewords = packed.size();
    std::size_t best = packed.size() > 1 ? std::numeric_limits<std::size_t>::max() : 0;
    for (std::size_t x = 0; x < packed.size(); ++x) {
        for (std::size_t y = x + 1; y < packed.size(); ++y) {
            std::size_t d = 0;
            for (std::size_t w = 0; w < words && d < best; ++w)
                d += static_cast<std::size_t>(std::popcount(packed[x][w] ^ packed[y][w]));
            best = std::min(best, d);
        }
    }
    rep.pairwise = best;
    if (closed) {
        std::size_t w = std::numeric_limits<std::size_t>::max();
        for (const auto& a : code.arrays)
            if (!a.is_zero())
                w = std::min(w, a.weight());
        rep.by_weight = w;
    }
    return rep;
}

} // namespace dbarray
