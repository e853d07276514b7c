#pragma once

#include <optional>
#include <span>

#include "heffter/core.hpp"

namespace heffter {

/// Witness for one failing line, sorted by (axis, index).
struct LineWitness {
    Axis axis;
    int index;
    std::string detail;
};

/// Aggregated result of the defining-property checks.
struct VerifyReport {
    bool fill_ok = false;
    bool support_ok = false;
    bool modular_sums_ok = false;
    bool integer_sums_ok = false;
    bool globally_simple = false;
    std::vector<LineWitness> witnesses;

    /// Defining Heffter-array properties: fill counts, support, line sums.
    bool heffter_ok(bool integer) const {
        return fill_ok && support_ok && (integer ? integer_sums_ok : modular_sums_ok);
    }
};

struct FillCounts {
    std::vector<int> rows;   // rows[i] = filled cells in row i+1
    std::vector<int> cols;
    bool ok = false;
};

struct SupportCheck {
    bool ok = false;
    std::vector<std::int64_t> missing;     // absolute values absent from the array
    std::vector<std::int64_t> duplicated;  // absolute values appearing twice (or as x and -x)
};

enum class SumMode { Integer, Modular };

struct SumsCheck {
    bool ok = false;
    std::vector<LineWitness> witnesses;  // lines with nonzero sum
};

/// Every row has exactly h filled cells and every column exactly k.
FillCounts check_fill_counts(const PartialArray& array);

/// The multiset of |entries| is exactly {1..nk}; no value appears as both x and -x.
SupportCheck check_support(const PartialArray& array);

/// Every row and column sums to zero, over Z or mod 2nk+1.
SumsCheck check_sums(const PartialArray& array, SumMode mode);

/// Partial sums e1, e1+e2, ... as canonical symmetric residues mod `modulus`.
std::vector<std::int64_t> partial_sums(std::span<const std::int64_t> entries,
                                       std::int64_t modulus);

struct SimpleCheck {
    bool ok = false;
    std::int64_t repeated = 0;  // first repeated residue, when !ok
    int first_pos = 0;          // 1-based positions of the first repeat pair
    int second_pos = 0;
};

/// An ordering is simple when its partial sums are pairwise distinct mod `modulus`.
SimpleCheck is_simple(std::span<const std::int64_t> entries, std::int64_t modulus);

/// Full verification: fill counts, support, both sum modes, and simplicity of
/// every row (left-to-right) and column (top-to-bottom) in natural order.
VerifyReport verify_array(const PartialArray& array);

/// verify_array, read through the globally-simple flag; witnesses list every
/// failing line.
VerifyReport is_globally_simple(const PartialArray& array);

/// Ordered partial sums of one line under a stated start cell and direction.
/// Residues are reported in {0 .. modulus-1} for table-exact comparison.
struct SumTrace {
    Axis axis;
    int index;
    Cell start_cell;
    bool reverse;  // false: top-to-bottom/left-to-right in scan direction
    std::vector<std::int64_t> sums;
};

/// Partial sums of one line scanned cyclically from `start`, over filled
/// cells only. `reverse` scans by decreasing index.
SumTrace trace_line(const PartialArray& array, Axis axis, int index, int start,
                    bool reverse);

/// The reference tables' shifted/reversed partial-sum convention:
/// columns start at (c+h+1, c) top-to-bottom; rows start at (r, r+h-2) for
/// the n = 3 (mod 4) class and (r, r+h-1) for n = 0 (mod 4), right-to-left.
/// Throws ClassError when `cls` does not match the array's order.
std::vector<SumTrace> sum_table(const PartialArray& array, Axis axis,
                                ArrayClass cls);

/// Occupied-diagonal layout: diagonals indexed by (col - row) mod n.
struct DiagonalBands {
    int occupied = 0;                 // number of distinct occupied diagonals
    std::vector<int> empty_widths;    // cyclic runs of empty diagonals, ascending
};

DiagonalBands scan_diagonal_bands(const PartialArray& array);

}  // namespace heffter
