#pragma once

#include <iosfwd>
#include <string>

#include "heffter/core.hpp"
#include "heffter/verify.hpp"

namespace heffter {

/// Canonical JSON form: dims plus cells sorted by (row, col), signed entries.
/// parse(emit(a)) == a on canonical form.
std::string to_json(const PartialArray& array);
PartialArray from_json(const std::string& text);

/// CSV grid, one line per row, empty field for an empty cell (never 0).
std::string to_csv(const PartialArray& array);

/// Parse a CSV grid. Dims are recovered from the grid: m x n from its shape,
/// h and k from the fill counts (which must be uniform; the modulus 2nk+1
/// comes from the total number of filled cells either way).
PartialArray from_csv(const std::string& text);

/// Fixed-width text grid for documents; empty cells print as a centered dot.
std::string to_grid(const PartialArray& array);

/// Serialize in the named format: "json", "csv" or "grid".
std::string serialize(const PartialArray& array, const std::string& format);

/// Partial-sum traces as CSV, one "Row i,..." / "Col i,..." line each.
std::string sum_table_csv(const std::vector<SumTrace>& traces);

/// Load from a file, sniffing JSON vs CSV. Throws ParseError.
PartialArray load_array(const std::string& path);
PartialArray parse_array(const std::string& text);

}  // namespace heffter
