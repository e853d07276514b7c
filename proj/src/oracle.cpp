#include "heffter/oracle.hpp"

#include <algorithm>

#include "heffter/verify.hpp"

namespace heffter {

namespace {

struct Search {
    const SearchSpec& spec;
    Dims dims;
    std::int64_t nk;        // number of filled cells = largest support value
    std::int64_t modulus;
    std::vector<Cell> cells;          // pattern in row-major order
    std::vector<char> last_in_row;    // cells[i] is the last pattern cell of its row
    std::vector<char> last_in_col;
    std::vector<std::int64_t> row_sum, col_sum;
    std::vector<char> used;           // used[a] = absolute value a already placed
    std::vector<std::int64_t> value;  // chosen value per pattern position
    SearchResult result;
    bool stop = false;

    explicit Search(const SearchSpec& s)
        : spec(s), dims(s.m, s.n, s.h, s.k) {
        nk = dims.filled();
        modulus = dims.modulus();
        if (s.cell_pattern) {
            cells = *s.cell_pattern;
            std::sort(cells.begin(), cells.end());
            if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
                throw HeffterError("cell pattern has duplicates");
            for (Cell c : cells)
                if (c.row < 1 || c.row > dims.m || c.col < 1 || c.col > dims.n)
                    throw HeffterError("cell pattern out of range");
        } else {
            if (s.h != s.n || s.k != s.m)
                throw HeffterError(
                    "no cell pattern given and the array is not tight (h = n, k = m)");
            for (int r = 1; r <= dims.m; ++r)
                for (int c = 1; c <= dims.n; ++c) cells.push_back({r, c});
        }
        if (static_cast<std::int64_t>(cells.size()) != nk)
            throw HeffterError("cell pattern size != nk");
        std::vector<int> row_fill(dims.m + 1, 0), col_fill(dims.n + 1, 0);
        for (Cell c : cells) {
            ++row_fill[c.row];
            ++col_fill[c.col];
        }
        for (int r = 1; r <= dims.m; ++r)
            if (row_fill[r] != dims.h) throw HeffterError("cell pattern row fill != h");
        for (int c = 1; c <= dims.n; ++c)
            if (col_fill[c] != dims.k) throw HeffterError("cell pattern col fill != k");

        last_in_row.assign(cells.size(), 0);
        last_in_col.assign(cells.size(), 0);
        std::vector<int> row_last(dims.m + 1, -1), col_last(dims.n + 1, -1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            row_last[cells[i].row] = static_cast<int>(i);
            col_last[cells[i].col] = static_cast<int>(i);
        }
        for (int r = 1; r <= dims.m; ++r) last_in_row[row_last[r]] = 1;
        for (int c = 1; c <= dims.n; ++c) last_in_col[col_last[c]] = 1;

        row_sum.assign(dims.m + 1, 0);
        col_sum.assign(dims.n + 1, 0);
        used.assign(static_cast<std::size_t>(nk) + 1, 0);
        value.assign(cells.size(), 0);
    }

    void try_value(std::size_t i, std::int64_t v) {
        if (++result.nodes > spec.budget) {
            result.budget_exceeded = true;
            stop = true;
            return;
        }
        const Cell cell = cells[i];
        if (last_in_row[i] &&
            canonical_residue(row_sum[cell.row] + v, modulus) != 0)
            return;
        if (last_in_col[i] &&
            canonical_residue(col_sum[cell.col] + v, modulus) != 0)
            return;
        std::int64_t a = v < 0 ? -v : v;
        used[a] = 1;
        row_sum[cell.row] += v;
        col_sum[cell.col] += v;
        value[i] = v;
        extend(i + 1);
        used[a] = 0;
        row_sum[cell.row] -= v;
        col_sum[cell.col] -= v;
    }

    void extend(std::size_t i) {
        if (stop) return;
        if (i == cells.size()) {
            emit();
            return;
        }
        const Cell cell = cells[i];
        // a line being completed forces the value mod m; otherwise try all
        // unused values in ascending signed order
        if (last_in_row[i] || last_in_col[i]) {
            std::int64_t forced =
                canonical_residue(-(last_in_row[i] ? row_sum[cell.row] : col_sum[cell.col]),
                                  modulus);
            if (forced == 0) return;
            std::int64_t a = forced < 0 ? -forced : forced;
            if (a > nk || used[a]) return;
            try_value(i, forced);
            return;
        }
        for (std::int64_t v = -nk; v <= nk && !stop; ++v) {
            if (v == 0) continue;
            std::int64_t a = v < 0 ? -v : v;
            if (used[a]) continue;
            try_value(i, v);
        }
    }

    void emit() {
        if (result.solutions.size() >= spec.limit) {
            stop = true;
            return;
        }
        PartialArray a(dims);
        for (std::size_t i = 0; i < cells.size(); ++i) a.place(cells[i], value[i]);
        result.solutions.push_back(std::move(a));
        if (result.solutions.size() >= spec.limit) stop = true;
    }
};

}  // namespace

SearchResult brute_force_heffter(const SearchSpec& spec) {
    Search search(spec);
    if (spec.limit == 0) return std::move(search.result);
    search.extend(0);
    return std::move(search.result);
}

OrderingSearch find_simple_ordering(std::span<const std::int64_t> entries,
                                    std::int64_t modulus, std::uint64_t budget) {
    OrderingSearch out;
    const std::size_t j = entries.size();
    auto simple = [&](std::span<const std::int64_t> seq) {
        return is_simple(seq, modulus).ok;
    };
    if (j == 0) {
        out.ordering = std::vector<std::int64_t>{};
        return out;
    }

    // identity first, then all index permutations in lexicographic order
    std::vector<std::int64_t> candidate(entries.begin(), entries.end());
    ++out.tried;
    if (out.tried > budget) {
        out.budget_exceeded = true;
        return out;
    }
    if (simple(candidate)) {
        out.ordering = std::move(candidate);
        return out;
    }
    std::vector<int> idx(j);
    for (std::size_t i = 0; i < j; ++i) idx[i] = static_cast<int>(i);
    while (std::next_permutation(idx.begin(), idx.end())) {
        if (++out.tried > budget) {
            out.budget_exceeded = true;
            return out;
        }
        for (std::size_t i = 0; i < j; ++i)
            candidate[i] = entries[static_cast<std::size_t>(idx[i])];
        if (simple(candidate)) {
            out.ordering = std::move(candidate);
            return out;
        }
    }
    return out;
}

}  // namespace heffter
