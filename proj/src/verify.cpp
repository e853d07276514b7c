#include "heffter/verify.hpp"

#include <algorithm>
#include <unordered_set>

namespace heffter {

FillCounts check_fill_counts(const PartialArray& array) {
    const Dims& d = array.dims();
    FillCounts fc;
    fc.rows.assign(d.m, 0);
    fc.cols.assign(d.n, 0);
    for (const auto& [cell, v] : array.entries()) {
        ++fc.rows[cell.row - 1];
        ++fc.cols[cell.col - 1];
    }
    fc.ok = std::all_of(fc.rows.begin(), fc.rows.end(),
                        [&](int c) { return c == d.h; }) &&
            std::all_of(fc.cols.begin(), fc.cols.end(),
                        [&](int c) { return c == d.k; });
    return fc;
}

SupportCheck check_support(const PartialArray& array) {
    const std::int64_t nk = array.dims().filled();
    SupportCheck sc;
    std::vector<int> count(static_cast<std::size_t>(nk) + 1, 0);
    for (const auto& [cell, v] : array.entries()) {
        std::int64_t a = v < 0 ? -v : v;
        if (a >= 1 && a <= nk) ++count[static_cast<std::size_t>(a)];
    }
    for (std::int64_t x = 1; x <= nk; ++x) {
        int c = count[static_cast<std::size_t>(x)];
        if (c == 0) sc.missing.push_back(x);
        if (c > 1) sc.duplicated.push_back(x);
    }
    sc.ok = sc.missing.empty() && sc.duplicated.empty();
    return sc;
}

SumsCheck check_sums(const PartialArray& array, SumMode mode) {
    const Dims& d = array.dims();
    const std::int64_t modulus = d.modulus();
    SumsCheck out;
    std::vector<std::int64_t> row_sum(d.m, 0), col_sum(d.n, 0);
    for (const auto& [cell, v] : array.entries()) {
        row_sum[cell.row - 1] += v;
        col_sum[cell.col - 1] += v;
    }
    auto bad = [&](std::int64_t s) {
        return mode == SumMode::Integer ? s != 0 : canonical_residue(s, modulus) != 0;
    };
    for (int r = 1; r <= d.m; ++r)
        if (bad(row_sum[r - 1]))
            out.witnesses.push_back({Axis::Row, r, "sum " + std::to_string(row_sum[r - 1])});
    for (int c = 1; c <= d.n; ++c)
        if (bad(col_sum[c - 1]))
            out.witnesses.push_back({Axis::Column, c, "sum " + std::to_string(col_sum[c - 1])});
    out.ok = out.witnesses.empty();
    return out;
}

std::vector<std::int64_t> partial_sums(std::span<const std::int64_t> entries,
                                       std::int64_t modulus) {
    std::vector<std::int64_t> out;
    out.reserve(entries.size());
    std::int64_t s = 0;
    for (std::int64_t e : entries) {
        s = canonical_residue(s + e, modulus);
        out.push_back(s);
    }
    return out;
}

SimpleCheck is_simple(std::span<const std::int64_t> entries, std::int64_t modulus) {
    SimpleCheck sc;
    std::unordered_set<std::int64_t> seen;
    std::vector<std::int64_t> sums = partial_sums(entries, modulus);
    for (std::size_t j = 0; j < sums.size(); ++j) {
        if (!seen.insert(sums[j]).second) {
            sc.ok = false;
            sc.repeated = sums[j];
            sc.second_pos = static_cast<int>(j) + 1;
            for (std::size_t i = 0; i < j; ++i)
                if (sums[i] == sums[j]) {
                    sc.first_pos = static_cast<int>(i) + 1;
                    break;
                }
            return sc;
        }
    }
    sc.ok = true;
    return sc;
}

VerifyReport verify_array(const PartialArray& array) {
    const Dims& d = array.dims();
    const std::int64_t modulus = d.modulus();
    VerifyReport rep;

    auto fc = check_fill_counts(array);
    rep.fill_ok = fc.ok;
    if (!fc.ok) {
        for (int r = 1; r <= d.m; ++r)
            if (fc.rows[r - 1] != d.h)
                rep.witnesses.push_back({Axis::Row, r,
                                         "fill count " + std::to_string(fc.rows[r - 1]) +
                                             " != " + std::to_string(d.h)});
        for (int c = 1; c <= d.n; ++c)
            if (fc.cols[c - 1] != d.k)
                rep.witnesses.push_back({Axis::Column, c,
                                         "fill count " + std::to_string(fc.cols[c - 1]) +
                                             " != " + std::to_string(d.k)});
    }

    auto sup = check_support(array);
    rep.support_ok = sup.ok;

    rep.modular_sums_ok = check_sums(array, SumMode::Modular).ok;
    auto isum = check_sums(array, SumMode::Integer);
    rep.integer_sums_ok = isum.ok;
    for (auto& w : isum.witnesses)
        rep.witnesses.push_back({w.axis, w.index, "integer " + w.detail});

    // a line with a nonzero sum cannot belong to a globally simple Heffter
    // array, so the flag folds in the modular sum check
    rep.globally_simple = rep.modular_sums_ok;
    auto check_line = [&](Axis axis, int index) {
        auto values = array.line_values(axis, index);
        auto sc = is_simple(values, modulus);
        if (!sc.ok) {
            rep.globally_simple = false;
            rep.witnesses.push_back(
                {axis, index,
                 "repeated partial sum " + std::to_string(sc.repeated) + " at positions " +
                     std::to_string(sc.first_pos) + " and " + std::to_string(sc.second_pos)});
        }
    };
    for (int r = 1; r <= d.m; ++r) check_line(Axis::Row, r);
    for (int c = 1; c <= d.n; ++c) check_line(Axis::Column, c);

    std::stable_sort(rep.witnesses.begin(), rep.witnesses.end(),
                     [](const LineWitness& a, const LineWitness& b) {
                         return std::pair(a.axis, a.index) < std::pair(b.axis, b.index);
                     });
    return rep;
}

VerifyReport is_globally_simple(const PartialArray& array) { return verify_array(array); }

SumTrace trace_line(const PartialArray& array, Axis axis, int index, int start,
                    bool reverse) {
    const Dims& d = array.dims();
    const int len = axis == Axis::Row ? d.n : d.m;
    const std::int64_t modulus = d.modulus();
    SumTrace tr;
    tr.axis = axis;
    tr.index = index;
    tr.reverse = reverse;
    tr.start_cell = axis == Axis::Row ? Cell{index, wrap_index(start, len)}
                                      : Cell{wrap_index(start, len), index};
    std::int64_t s = 0;
    for (int j = 0; j < len; ++j) {
        int pos = wrap_index(reverse ? start - static_cast<long long>(j)
                                     : start + static_cast<long long>(j),
                             len);
        Cell cell = axis == Axis::Row ? Cell{index, pos} : Cell{pos, index};
        if (!array.filled(cell)) continue;
        s += array.at(cell);
        s %= modulus;
        if (s < 0) s += modulus;
        tr.sums.push_back(s);
    }
    return tr;
}

std::vector<SumTrace> sum_table(const PartialArray& array, Axis axis,
                                ArrayClass cls) {
    const Dims& d = array.dims();
    if (!d.is_square()) throw ClassError("sum-table conventions need a square array");
    const int n = d.n;
    if ((cls == ArrayClass::N3 && n % 4 != 3) || (cls == ArrayClass::N0 && n % 4 != 0))
        throw ClassError("array order n = " + std::to_string(n) +
                         " does not match the requested class convention");
    const int h = cls == ArrayClass::N3 ? (n + 1) / 2 : n / 2;

    std::vector<SumTrace> out;
    out.reserve(static_cast<std::size_t>(n));
    if (axis == Axis::Column) {
        // top-to-bottom from (c+h+1, c), both classes
        for (int c = 1; c <= n; ++c)
            out.push_back(trace_line(array, Axis::Column, c, c + h + 1, false));
    } else {
        // right-to-left from (r, r+h-2) resp. (r, r+h-1)
        const int off = cls == ArrayClass::N3 ? h - 2 : h - 1;
        for (int r = 1; r <= n; ++r)
            out.push_back(trace_line(array, Axis::Row, r, r + off, true));
    }
    return out;
}

DiagonalBands scan_diagonal_bands(const PartialArray& array) {
    const int n = array.dims().n;
    std::vector<char> occupied(static_cast<std::size_t>(n), 0);
    for (const auto& [cell, v] : array.entries())
        occupied[static_cast<std::size_t>(((cell.col - cell.row) % n + n) % n)] = 1;
    DiagonalBands bands;
    for (char o : occupied) bands.occupied += o;
    if (bands.occupied == n) return bands;
    if (bands.occupied == 0) {
        bands.empty_widths = {n};
        return bands;
    }

    // collect cyclic runs of empty diagonals
    std::vector<int> runs;
    int i = 0;
    while (occupied[static_cast<std::size_t>(i)] == 0) ++i;  // align to an occupied diagonal
    for (int step = 0, run = 0; step <= n; ++step) {
        int idx = (i + step) % n;
        if (step == n) {
            if (run > 0) runs.push_back(run);
            break;
        }
        if (occupied[static_cast<std::size_t>(idx)]) {
            if (run > 0) runs.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
    std::sort(runs.begin(), runs.end());
    bands.empty_widths = std::move(runs);
    return bands;
}

}  // namespace heffter
