#pragma once

#include <functional>
#include <optional>
#include <span>

#include "heffter/core.hpp"

namespace heffter {

/// Cyclic cycle decomposition candidate for K_modulus: base cycles as vertex
/// lists (residues mod `modulus`), developed by translation through Z_modulus.
struct CycleSystem {
    std::int64_t modulus = 0;
    int cycle_length = 0;
    std::vector<std::vector<std::int64_t>> base;
    bool developed = false;
    /// Materialized orbit; develop() fills it. Edge tallies stream from the
    /// base cycles instead, so large moduli never require this.
    std::optional<std::vector<std::vector<std::int64_t>>> orbit;

    std::size_t developed_count() const { return base.size() * static_cast<std::size_t>(modulus); }
};

/// One base cycle per row (axis = Row) or column (axis = Column): vertices are
/// the prefix sums 0, e1, e1+e2, ... of the line read in natural order.
/// Throws NotSimpleError for the first line whose prefix sums collide.
CycleSystem base_cycles(const PartialArray& array, Axis axis);

/// Translate every base cycle by each g in Z_modulus.
CycleSystem develop(CycleSystem system);

/// Visit every developed edge as (cycle_id, u, v) with u < v.
/// cycle_id = base_index * modulus + g.
void for_each_developed_edge(
    const CycleSystem& system,
    const std::function<void(std::size_t, std::int64_t, std::int64_t)>& fn);

struct DecompositionCheck {
    bool ok = false;
    std::uint64_t edges_covered = 0;  // distinct edges covered exactly once
    std::string witness;              // first doubly-covered or missing edge
};

/// The developed cycles partition the edge set of K_modulus.
DecompositionCheck verify_decomposition(const CycleSystem& system);

/// Same check on an explicit cycle list over Z_modulus (no development).
DecompositionCheck verify_edge_partition(
    const std::vector<std::vector<std::int64_t>>& cycles, std::int64_t modulus);

struct OrthogonalityCheck {
    bool ok = false;
    std::string witness;  // a cycle pair sharing two or more edges
};

/// Every (cycle of `a`, cycle of `b`) pair shares at most one edge. Both
/// systems must be developed partitions of the same K_modulus edge set.
OrthogonalityCheck check_orthogonality(const CycleSystem& a, const CycleSystem& b);

/// Same check on explicit cycle lists; each list must cover no edge twice.
OrthogonalityCheck cycles_orthogonal(
    const std::vector<std::vector<std::int64_t>>& a,
    const std::vector<std::vector<std::int64_t>>& b, std::int64_t modulus);

/// Row and column successor permutations on the filled cells (canonical
/// (row, col) order): omega_r steps to the next filled cell rightward in the
/// row, omega_c to the next downward in the column, both wrapping.
struct OrderingPair {
    std::vector<Cell> cells;    // canonical cell order; permutations index into it
    std::vector<int> omega_r;
    std::vector<int> omega_c;
};

OrderingPair natural_orderings(const PartialArray& array);

/// Cycle type of a permutation, largest cycle first.
std::vector<int> cycle_type(std::span<const int> perm);

struct CompatibilityReport {
    bool compatible = false;
    std::vector<int> type_rc;  // cycle type of omega_r . omega_c (omega_c applied first)
    std::vector<int> type_cr;  // cycle type of the reverse composition
};

/// Orderings are compatible when omega_r . omega_c is a single cycle through
/// all `total_cells` filled cells.
CompatibilityReport check_compatible(const OrderingPair& pair, std::int64_t total_cells);

enum class CompatPrediction { Yes, Unknown };

/// gcd(n, k-2) = 1 guarantees compatible orderings exist for odd n, k with the
/// two-band diagonal layout; the converse is open, so everything else is Unknown.
CompatPrediction gcd_compat_predicate(int n, int k);

}  // namespace heffter
