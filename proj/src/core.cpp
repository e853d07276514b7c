#include "heffter/core.hpp"

namespace heffter {

int wrap_index(long long i, int n) {
    if (n < 1) throw HeffterError("wrap_index: n must be positive");
    long long r = (i - 1) % n;
    if (r < 0) r += n;
    return static_cast<int>(r + 1);
}

std::int64_t canonical_residue(std::int64_t x, std::int64_t modulus) {
    if (modulus < 3 || modulus % 2 == 0)
        throw HeffterError("canonical_residue: modulus must be odd and >= 3");
    std::int64_t r = x % modulus;
    if (r < 0) r += modulus;
    if (r > (modulus - 1) / 2) r -= modulus;
    return r;
}

Dims::Dims(int m_, int n_, int h_, int k_) : m(m_), n(n_), h(h_), k(k_) {
    if (m < 1 || n < 1 || h < 1 || k < 1)
        throw HeffterError("Dims: all dimensions must be positive");
    if (static_cast<std::int64_t>(m) * h != static_cast<std::int64_t>(n) * k)
        throw HeffterError("Dims: m*h != n*k");
    if (h > n || k > m)
        throw HeffterError("Dims: more filled cells than available per line");
}

std::int64_t PartialArray::at(Cell c) const {
    auto it = entries_.find(c);
    if (it == entries_.end())
        throw HeffterError("empty cell (" + std::to_string(c.row) + "," +
                           std::to_string(c.col) + ")");
    return it->second;
}

void PartialArray::place(Cell c, std::int64_t value) {
    if (c.row < 1 || c.row > dims_.m || c.col < 1 || c.col > dims_.n)
        throw HeffterError("cell out of range");
    if (value == 0) throw HeffterError("zero entry is not allowed");
    if (value < -dims_.filled() || value > dims_.filled())
        throw HeffterError("entry " + std::to_string(value) + " outside [-nk, nk]");
    auto [it, inserted] = entries_.emplace(c, value);
    if (!inserted) throw CollisionError(c);
}

std::vector<std::pair<Cell, std::int64_t>> PartialArray::row_cells(int r) const {
    std::vector<std::pair<Cell, std::int64_t>> out;
    // map order is (row, col), so one row is a contiguous range
    for (auto it = entries_.lower_bound(Cell{r, 1});
         it != entries_.end() && it->first.row == r; ++it)
        out.emplace_back(it->first, it->second);
    return out;
}

std::vector<std::pair<Cell, std::int64_t>> PartialArray::col_cells(int c) const {
    std::vector<std::pair<Cell, std::int64_t>> out;
    for (const auto& [cell, v] : entries_)
        if (cell.col == c) out.emplace_back(cell, v);
    return out;
}

std::vector<std::int64_t> PartialArray::line_values(Axis axis, int index) const {
    auto cells = axis == Axis::Row ? row_cells(index) : col_cells(index);
    std::vector<std::int64_t> out;
    out.reserve(cells.size());
    for (const auto& [cell, v] : cells) out.push_back(v);
    return out;
}

}  // namespace heffter
