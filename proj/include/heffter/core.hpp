#pragma once

#include <cstdint>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace heffter {

/// Row/column axis selector used by verification and decomposition.
enum class Axis { Row, Column };

inline const char* axis_name(Axis a) { return a == Axis::Row ? "row" : "column"; }

/// Congruence class of a square array's order n.
enum class ArrayClass { N3, N0 };  // n = 3 (mod 4), n = 0 (mod 4)

struct HeffterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Wrong congruence class / parameter range for a construction or table convention.
struct ClassError : HeffterError {
    using HeffterError::HeffterError;
};

/// construct(n, k) rejected the parameters; message names the violated condition.
struct UnsupportedClassError : ClassError {
    using ClassError::ClassError;
};

struct ParseError : HeffterError {
    using HeffterError::HeffterError;
};

/// 1-based cell address. Ordered by (row, col).
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// A diagonal placement hit an already-filled cell.
struct CollisionError : HeffterError {
    Cell cell;
    explicit CollisionError(Cell c)
        : HeffterError("collision at cell (" + std::to_string(c.row) + "," +
                       std::to_string(c.col) + ")"),
          cell(c) {}
};

/// A row or column whose natural ordering is not simple.
struct NotSimpleError : HeffterError {
    Axis axis;
    int index;
    NotSimpleError(Axis a, int i)
        : HeffterError(std::string(axis_name(a)) + " " + std::to_string(i) +
                       " is not simple"),
          axis(a), index(i) {}
};

/// Reduce a 1-based index into {1..n}; 0 maps to n, n+1 maps to 1.
int wrap_index(long long i, int n);

/// Unique representative of x mod `modulus` in [-(modulus-1)/2, (modulus-1)/2].
/// Requires an odd modulus >= 3.
std::int64_t canonical_residue(std::int64_t x, std::int64_t modulus);

/// Dimensions of an m x n array with h filled cells per row and k per column.
/// Entries live in Z_{2nk+1}; m*h = n*k is the number of filled cells.
struct Dims {
    int m = 0;
    int n = 0;
    int h = 0;
    int k = 0;

    Dims() = default;
    Dims(int m_, int n_, int h_, int k_);

    /// Square case: n x n with k filled cells per line.
    static Dims square(int n, int k) { return Dims(n, n, k, k); }

    std::int64_t filled() const { return static_cast<std::int64_t>(n) * k; }
    std::int64_t modulus() const { return 2 * filled() + 1; }
    bool is_square() const { return m == n && h == k; }

    auto operator<=>(const Dims&) const = default;
};

/// Sparse grid of distinct nonzero entries. Empty cells are absent from the
/// map, never stored as 0; entries are signed canonical residues with
/// |value| <= nk.
class PartialArray {
public:
    PartialArray() = default;
    explicit PartialArray(Dims dims) : dims_(dims) {}

    const Dims& dims() const { return dims_; }
    const std::map<Cell, std::int64_t>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    bool filled(Cell c) const { return entries_.count(c) != 0; }

    /// Entry at `c`; throws if the cell is empty.
    std::int64_t at(Cell c) const;

    /// Fill an empty cell. Throws CollisionError if already filled and
    /// HeffterError for a zero or out-of-range value.
    void place(Cell c, std::int64_t value);

    /// Filled cells of one row, by increasing column (natural order).
    std::vector<std::pair<Cell, std::int64_t>> row_cells(int r) const;
    /// Filled cells of one column, by increasing row (natural order).
    std::vector<std::pair<Cell, std::int64_t>> col_cells(int c) const;

    /// Entry values of one line in natural order.
    std::vector<std::int64_t> line_values(Axis axis, int index) const;

    bool operator==(const PartialArray&) const = default;

private:
    Dims dims_;
    std::map<Cell, std::int64_t> entries_;
};

}  // namespace heffter
