#pragma once

#include <optional>
#include <span>

#include "heffter/core.hpp"

namespace heffter {

/// Exhaustive-search request for tiny H(m,n;h,k). Without a cell pattern the
/// array is tight (every cell filled), which requires h = n and k = m.
struct SearchSpec {
    int m = 0;
    int n = 0;
    int h = 0;
    int k = 0;
    std::optional<std::vector<Cell>> cell_pattern;
    std::size_t limit = static_cast<std::size_t>(-1);  // max solutions to keep
    std::uint64_t budget = 50'000'000;                 // max value placements tried
};

struct SearchResult {
    std::vector<PartialArray> solutions;
    std::uint64_t nodes = 0;
    bool budget_exceeded = false;  // partial results only
};

/// Enumerate every Heffter array on the given cell pattern (modular sums),
/// backtracking cell-by-cell in row-major order with values tried in
/// ascending signed order, so solutions come out in lexicographic order.
SearchResult brute_force_heffter(const SearchSpec& spec);

struct OrderingSearch {
    std::optional<std::vector<std::int64_t>> ordering;
    std::uint64_t tried = 0;
    bool budget_exceeded = false;
};

/// Find a permutation of `entries` whose partial sums are distinct mod
/// `modulus`, trying the given order first and then all permutations in
/// lexicographic index order. Factorial search; meant for <= 12 entries.
OrderingSearch find_simple_ordering(std::span<const std::int64_t> entries,
                                    std::int64_t modulus,
                                    std::uint64_t budget = 1'000'000'000);

}  // namespace heffter
