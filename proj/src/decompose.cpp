#include "heffter/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace heffter {

namespace {

std::string edge_str(std::int64_t u, std::int64_t v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

// triangular index of edge {u, v}, u < v, over Z_m
std::size_t edge_id(std::int64_t u, std::int64_t v, std::int64_t m) {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(m) +
           static_cast<std::size_t>(v);
}

}  // namespace

CycleSystem base_cycles(const PartialArray& array, Axis axis) {
    const Dims& d = array.dims();
    CycleSystem sys;
    sys.modulus = d.modulus();
    sys.cycle_length = axis == Axis::Row ? d.h : d.k;
    const int lines = axis == Axis::Row ? d.m : d.n;
    for (int i = 1; i <= lines; ++i) {
        auto values = array.line_values(axis, i);
        std::vector<std::int64_t> cycle;
        cycle.reserve(values.size());
        std::unordered_set<std::int64_t> seen;
        std::int64_t s = 0;
        for (std::size_t j = 0; j < values.size(); ++j) {
            cycle.push_back(s);  // vertex before adding e_{j+1}
            if (!seen.insert(s).second) throw NotSimpleError(axis, i);
            s = ((s + values[j]) % sys.modulus + sys.modulus) % sys.modulus;
        }
        // closing back to 0 realizes the final entry; s != 0 would mean the
        // line does not sum to zero and the final prefix repeats a vertex
        if (s != 0) throw NotSimpleError(axis, i);
        sys.base.push_back(std::move(cycle));
    }
    return sys;
}

CycleSystem develop(CycleSystem system) {
    system.developed = true;
    std::vector<std::vector<std::int64_t>> orbit;
    orbit.reserve(system.developed_count());
    for (const auto& cyc : system.base)
        for (std::int64_t g = 0; g < system.modulus; ++g) {
            std::vector<std::int64_t> c(cyc.size());
            for (std::size_t j = 0; j < cyc.size(); ++j)
                c[j] = (cyc[j] + g) % system.modulus;
            orbit.push_back(std::move(c));
        }
    system.orbit = std::move(orbit);
    return system;
}

void for_each_developed_edge(
    const CycleSystem& system,
    const std::function<void(std::size_t, std::int64_t, std::int64_t)>& fn) {
    const std::int64_t m = system.modulus;
    std::size_t cycle_id = 0;
    for (const auto& cyc : system.base) {
        for (std::int64_t g = 0; g < m; ++g, ++cycle_id) {
            for (std::size_t j = 0; j < cyc.size(); ++j) {
                std::int64_t u = (cyc[j] + g) % m;
                std::int64_t v = (cyc[(j + 1) % cyc.size()] + g) % m;
                if (u > v) std::swap(u, v);
                fn(cycle_id, u, v);
            }
        }
    }
}

namespace {

using EdgeVisitor = std::function<void(std::size_t, std::int64_t, std::int64_t)>;
using EdgeStream = std::function<void(const EdgeVisitor&)>;

EdgeStream stream_of(const CycleSystem& system) {
    return [&system](const EdgeVisitor& fn) { for_each_developed_edge(system, fn); };
}

EdgeStream stream_of(const std::vector<std::vector<std::int64_t>>& cycles,
                     std::int64_t m) {
    return [&cycles, m](const EdgeVisitor& fn) {
        for (std::size_t cid = 0; cid < cycles.size(); ++cid) {
            const auto& cyc = cycles[cid];
            for (std::size_t j = 0; j < cyc.size(); ++j) {
                std::int64_t u = ((cyc[j] % m) + m) % m;
                std::int64_t v = ((cyc[(j + 1) % cyc.size()] % m) + m) % m;
                if (u > v) std::swap(u, v);
                fn(cid, u, v);
            }
        }
    };
}

DecompositionCheck check_partition(const EdgeStream& stream, std::int64_t m) {
    DecompositionCheck out;
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(m) *
                                          static_cast<std::size_t>(m),
                                      0);
    bool doubled = false;
    stream([&](std::size_t, std::int64_t u, std::int64_t v) {
        if (doubled) return;
        if (u == v) {
            doubled = true;
            out.witness = "degenerate edge " + edge_str(u, v);
            return;
        }
        auto& c = covered[edge_id(u, v, m)];
        if (c) {
            doubled = true;
            out.witness = "edge " + edge_str(u, v) + " covered twice";
            return;
        }
        c = 1;
        ++out.edges_covered;
    });
    if (doubled) return out;
    const std::uint64_t total =
        static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m - 1) / 2;
    if (out.edges_covered != total) {
        for (std::int64_t u = 0; u < m && out.witness.empty(); ++u)
            for (std::int64_t v = u + 1; v < m; ++v)
                if (!covered[edge_id(u, v, m)]) {
                    out.witness = "edge " + edge_str(u, v) + " missing";
                    break;
                }
        return out;
    }
    out.ok = true;
    return out;
}

OrthogonalityCheck check_orth(const EdgeStream& sa, const EdgeStream& sb,
                              std::int64_t m, std::uint64_t stride) {
    const std::size_t slots = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
    OrthogonalityCheck out;

    // index every edge to its unique containing cycle in each system
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> in_a(slots, kUnset), in_b(slots, kUnset);
    bool bad = false;
    auto index_into = [&](const EdgeStream& stream, std::vector<std::size_t>& idx) {
        stream([&](std::size_t cid, std::int64_t u, std::int64_t v) {
            if (bad) return;
            auto& slot = idx[edge_id(u, v, m)];
            if (slot != kUnset) {
                bad = true;
                out.witness = "edge " + edge_str(u, v) + " covered twice within one system";
                return;
            }
            slot = cid;
        });
    };
    index_into(sa, in_a);
    index_into(sb, in_b);
    if (bad) return out;

    // two cycles sharing >= 2 edges show up as a repeated (cid_a, cid_b) pair
    std::unordered_map<std::uint64_t, std::pair<std::int64_t, std::int64_t>> pair_seen;
    for (std::int64_t u = 0; u < m; ++u)
        for (std::int64_t v = u + 1; v < m; ++v) {
            std::size_t id = edge_id(u, v, m);
            if (in_a[id] == kUnset || in_b[id] == kUnset) continue;
            std::uint64_t key = static_cast<std::uint64_t>(in_a[id]) * stride +
                                static_cast<std::uint64_t>(in_b[id]);
            auto [it, inserted] = pair_seen.emplace(key, std::pair{u, v});
            if (!inserted) {
                out.witness = "cycles " + std::to_string(in_a[id]) + " and " +
                              std::to_string(in_b[id]) + " share edges " +
                              edge_str(it->second.first, it->second.second) + " and " +
                              edge_str(u, v);
                return out;
            }
        }
    out.ok = true;
    return out;
}

}  // namespace

DecompositionCheck verify_decomposition(const CycleSystem& system) {
    if (!system.developed)
        throw HeffterError("verify_decomposition needs a developed system");
    return check_partition(stream_of(system), system.modulus);
}

DecompositionCheck verify_edge_partition(
    const std::vector<std::vector<std::int64_t>>& cycles, std::int64_t modulus) {
    return check_partition(stream_of(cycles, modulus), modulus);
}

OrthogonalityCheck check_orthogonality(const CycleSystem& a, const CycleSystem& b) {
    if (!a.developed || !b.developed)
        throw HeffterError("check_orthogonality needs developed systems");
    if (a.modulus != b.modulus)
        throw HeffterError("check_orthogonality: modulus mismatch");
    return check_orth(stream_of(a), stream_of(b), a.modulus,
                      std::max<std::uint64_t>(b.developed_count(), 1));
}

OrthogonalityCheck cycles_orthogonal(
    const std::vector<std::vector<std::int64_t>>& a,
    const std::vector<std::vector<std::int64_t>>& b, std::int64_t modulus) {
    return check_orth(stream_of(a, modulus), stream_of(b, modulus), modulus,
                      std::max<std::uint64_t>(b.size(), 1));
}

OrderingPair natural_orderings(const PartialArray& array) {
    const Dims& d = array.dims();
    OrderingPair pair;
    pair.cells.reserve(array.size());
    std::map<Cell, int> index;
    for (const auto& [cell, v] : array.entries()) {
        index.emplace(cell, static_cast<int>(pair.cells.size()));
        pair.cells.push_back(cell);
    }
    pair.omega_r.resize(pair.cells.size());
    pair.omega_c.resize(pair.cells.size());
    for (std::size_t i = 0; i < pair.cells.size(); ++i) {
        Cell cell = pair.cells[i];
        for (int j = 1; j <= d.n; ++j) {
            Cell next{cell.row, wrap_index(cell.col + j, d.n)};
            if (array.filled(next)) {
                pair.omega_r[i] = index.at(next);
                break;
            }
        }
        for (int j = 1; j <= d.m; ++j) {
            Cell next{wrap_index(cell.row + j, d.m), cell.col};
            if (array.filled(next)) {
                pair.omega_c[i] = index.at(next);
                break;
            }
        }
    }
    return pair;
}

std::vector<int> cycle_type(std::span<const int> perm) {
    std::vector<char> seen(perm.size(), 0);
    std::vector<int> type;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

CompatibilityReport check_compatible(const OrderingPair& pair, std::int64_t total_cells) {
    CompatibilityReport rep;
    const std::size_t n = pair.omega_r.size();
    std::vector<int> rc(n), cr(n);
    for (std::size_t i = 0; i < n; ++i) {
        rc[i] = pair.omega_r[static_cast<std::size_t>(pair.omega_c[i])];
        cr[i] = pair.omega_c[static_cast<std::size_t>(pair.omega_r[i])];
    }
    rep.type_rc = cycle_type(rc);
    rep.type_cr = cycle_type(cr);
    rep.compatible = rep.type_rc.size() == 1 &&
                     rep.type_rc.front() == static_cast<int>(total_cells) &&
                     static_cast<std::int64_t>(n) == total_cells;
    return rep;
}

CompatPrediction gcd_compat_predicate(int n, int k) {
    if (n % 2 == 1 && k % 2 == 1 && 3 <= k && k < n && std::gcd(n, k - 2) == 1)
        return CompatPrediction::Yes;
    return CompatPrediction::Unknown;
}

}  // namespace heffter
