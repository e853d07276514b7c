#include "heffter/construct.hpp"

#include <utility>

namespace heffter {

ClassParams ClassParams::of(int n, int k) {
    ClassParams p;
    p.n = n;
    p.k = k;
    switch (n % 4) {
        case 3:
            p.cls = ArrayClass::N3;
            p.h = (n + 1) / 2;
            p.q = (n - 3) / 4;
            break;
        case 0:
            p.cls = ArrayClass::N0;
            p.h = n / 2;
            p.q = n / 4;
            break;
        default:
            throw ClassError("n = " + std::to_string(n) + " is not 0 or 3 (mod 4)");
    }
    if (k % 4 != 1) throw ClassError("k = " + std::to_string(k) + " is not 1 (mod 4)");
    p.t = k >= 9 ? (k - 5) / 4 : 0;
    return p;
}

void place_diagonal(PartialArray& array, const DiagonalSpec& spec) {
    const int n = array.dims().n;
    for (int j = 0; j < spec.len; ++j) {
        Cell cell{wrap_index(spec.r + static_cast<long long>(j) * spec.delta, n),
                  wrap_index(spec.c + static_cast<long long>(j) * spec.delta, n)};
        array.place(cell, spec.v + static_cast<std::int64_t>(j) * spec.delta_v);
    }
}

namespace {

struct BaseLayout {
    std::vector<DiagonalSpec> diagonals;
    std::vector<std::pair<Cell, std::int64_t>> fixed;
};

// One table per congruence class: diagonals A..N plus the fixed cells.

BaseLayout base_layout_n3(int n) {
    const std::int64_t N = n;
    const int h = (n + 1) / 2;
    const int q = (n - 3) / 4;
    BaseLayout L;
    L.diagonals = {
        {h + 1, h + 1, h - 2, 1, -1, h - 3},          // A
        {3, 3, -(N - 3), 1, 1, h - 3},                // B
        {2, 3, 4 * N, 2, -1, q},                      // C
        {3, 2, -(4 * N + 1), 2, -1, q},               // D
        {3, 4, 5 * N - 3, 2, -1, q},                  // E
        {4, 3, -(3 * N + 4), 2, -1, q},               // F
        {h + 1, h, -(4 * N - q), 2, 1, q},            // G
        {h + 2, h + 1, -(5 * N - q - 3), 2, 1, q},    // H
        {h, h + 1, 4 * N + q + 1, 2, 1, q},           // I
        {h + 1, h + 2, 3 * N + q + 4, 2, 1, q},       // J
        {h + 1, 2, -(N + 2), 1, -2, h - 2},           // K
        {h + 1, 1, N + 1, 1, 2, h - 1},               // L
        {1, h + 1, -3 * N, 1, 2, h - 1},              // M
        {2, h + 1, 3 * N - 1, 1, -2, h - 2},          // N
    };
    L.fixed = {
        {{1, 1}, N - 1},        {{1, 2}, 5 * N - 2},
        {{1, h}, 2 * N + 2},    {{1, n}, -5 * N + 1},
        {{2, 1}, -3 * N - 3},   {{2, 2}, -N + 2},
        {{h, 1}, -2 * N + 1},   {{h, h}, -N},
        {{h, n}, 2 * N + 1},
        {{n - 1, n - 1}, -(h - 1)}, {{n - 1, n}, 5 * N},
        {{n, 1}, 3 * N + 2},    {{n, h}, -2 * N},
        {{n, n - 1}, -3 * N - 1}, {{n, n}, 1},
    };
    return L;
}

BaseLayout base_layout_n0(int n) {
    const std::int64_t N = n;
    const int h = n / 2;
    const int q = n / 4;
    BaseLayout L;
    L.diagonals = {
        {h + 1, h + 2, h - 2, 1, -1, h - 3},            // A
        {1, 2, -(N - 2), 1, 1, h - 1},                  // B
        {1, 3, 4 * N - 2, 2, -1, q},                    // C
        {2, 2, -(4 * N - 1), 2, -1, q},                 // D
        {2, 4, 5 * N - 5, 2, -1, q - 1},                // E
        {3, 3, -(3 * N + 2), 2, -1, q - 1},             // F
        {h + 1, h + 1, -(4 * N - q - 2), 2, 1, q - 1},  // G
        {h + 2, h + 2, -(5 * N - q - 4), 2, 1, q - 1},  // H
        {h, h + 2, 4 * N + q - 1, 2, 1, q - 1},         // I
        {h + 1, h + 3, 3 * N + q + 1, 2, 1, q - 1},     // J
        {h + 1, 1, N - 1, 1, 2, h - 1},                 // K
        {h + 1, 2, -N, 1, -2, h - 2},                   // L
        {2, h + 2, 3 * N - 4, 1, -2, h - 2},            // M
        {1, h + 2, -(3 * N - 3), 1, 2, h - 1},          // N
    };
    L.fixed = {
        {{1, 1}, 3 * N - 2},      {{1, h + 1}, -3 * N - 1},
        {{h, 1}, -2 * N + 2},     {{h, h + 1}, 5 * N - 3},
        {{h, n}, -3 * N},
        {{n - 2, n - 1}, -(h - 1)}, {{n - 2, n}, 5 * N - 2},
        {{n - 1, 1}, -2 * N},     {{n - 1, h}, 5 * N},
        {{n - 1, n - 1}, -3 * N + 1}, {{n - 1, n}, -2 * N + 4},
        {{n, 1}, 1},              {{n, 2}, 5 * N - 4},
        {{n, h}, -5 * N + 1},     {{n, h + 1}, -2 * N + 3},
        {{n, n}, 2 * N - 1},
    };
    return L;
}

// The dims carry the final k: entry-range checks and the modulus depend on
// it even while only the base cells are present.
PartialArray build_base(int n, int k, const BaseLayout& layout) {
    PartialArray a(Dims::square(n, k));
    for (const auto& d : layout.diagonals) place_diagonal(a, d);
    for (const auto& [cell, v] : layout.fixed) a.place(cell, v);
    return a;
}

PartialArray base_n3(int n, int k) {
    if (n % 4 != 3) throw ClassError("base H(n;5) class n=3 (mod 4) needs n = 3 (mod 4)");
    if (n < 7) throw ClassError("base H(n;5) needs n >= 7");
    return build_base(n, k, base_layout_n3(n));
}

PartialArray base_n0(int n, int k) {
    if (n % 4 != 0) throw ClassError("base H(n;5) class n=0 (mod 4) needs n = 0 (mod 4)");
    if (n < 8) throw ClassError("base H(n;5) needs n >= 8");
    return build_base(n, k, base_layout_n0(n));
}

}  // namespace

PartialArray build_base_h5_n3(int n) { return base_n3(n, 5); }

PartialArray build_base_h5_n0(int n) { return base_n0(n, 5); }

void augment_n3(PartialArray& array, const ClassParams& params) {
    if (params.cls != ArrayClass::N3) throw ClassError("augment_n3 needs n = 3 (mod 4)");
    const std::int64_t N = params.n;
    const int n = params.n, h = params.h;
    for (int i = 1; i <= params.t; ++i) {
        const std::int64_t s = 4 * N * i;
        place_diagonal(array, {1 + 2 * i, 1, N + s + 1, 1, 2, n});        // D_{1+2i}
        place_diagonal(array, {2 + 2 * i, 1, -(3 * N + s + 1), 1, -2, n});  // D_{2+2i}
        place_diagonal(array, {1 + 2 * i, h + 1, -(N + s + 2), 1, -2, n});  // D_{h+2i}
        place_diagonal(array, {2 + 2 * i, h + 1, 3 * N + s + 2, 1, 2, n});  // D_{h+1+2i}
    }
}

void augment_n0(PartialArray& array, const ClassParams& params) {
    if (params.cls != ArrayClass::N0) throw ClassError("augment_n0 needs n = 0 (mod 4)");
    const std::int64_t N = params.n;
    const int n = params.n, h = params.h;
    for (int i = 1; i <= params.t; ++i) {
        const std::int64_t s = 4 * N * i;
        place_diagonal(array, {2 + 2 * i, 1, -(N + s + 1), 1, -4, n});      // D_{2+2i}
        place_diagonal(array, {3 + 2 * i, 1, N + s + 3, 1, 4, n});          // D_{3+2i}
        place_diagonal(array, {2 + 2 * i, h + 3, N + s + 2, 1, 4, n});      // D_{h+1+2i}
        place_diagonal(array, {3 + 2 * i, h + 3, -(N + s + 4), 1, -4, n});  // D_{h+2+2i}
    }
}

PartialArray construct(int n, int k, bool force) {
    if (k % 4 != 1)
        throw UnsupportedClassError("k = " + std::to_string(k) + " is not 1 (mod 4)");
    if (n % 4 != 0 && n % 4 != 3)
        throw UnsupportedClassError("n = " + std::to_string(n) + " is not 0 or 3 (mod 4)");
    if (k < 5)
        throw UnsupportedClassError("k = " + std::to_string(k) + " is below the minimum 5");
    if (k == 9 && !force)
        throw UnsupportedClassError(
            "k = 9 (t = 1) is outside the claimed range; pass force to build it anyway "
            "and verify the result instead of trusting it");
    if (k >= n)
        throw UnsupportedClassError("need k < n, got k = " + std::to_string(k) +
                                    ", n = " + std::to_string(n));

    auto params = ClassParams::of(n, k);
    PartialArray a = params.cls == ArrayClass::N3 ? base_n3(n, k) : base_n0(n, k);
    if (k > 5) {
        if (params.cls == ArrayClass::N3)
            augment_n3(a, params);
        else
            augment_n0(a, params);
    }
    return a;
}

}  // namespace heffter
