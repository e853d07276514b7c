#pragma once

#include "heffter/core.hpp"

namespace heffter {

/// A broken diagonal: `len` cells starting at (r, c) with value v, stepping
/// both indices by `delta` (wrapped into {1..n}) and the value by `delta_v`.
struct DiagonalSpec {
    int r = 1;
    int c = 1;
    std::int64_t v = 0;
    int delta = 1;
    std::int64_t delta_v = 0;
    int len = 0;
};

/// Derived parameters of a construction class for given (n, k).
///   n = 3 (mod 4): h = (n+1)/2, q = (n-3)/4
///   n = 0 (mod 4): h = n/2,     q = n/4
/// t = (k-5)/4 is the number of augmentation groups.
struct ClassParams {
    int n = 0;
    int k = 0;
    ArrayClass cls = ArrayClass::N3;
    int h = 0;
    int q = 0;
    int t = 0;

    static ClassParams of(int n, int k);
};

/// Place one diagonal; throws CollisionError on the first occupied target.
void place_diagonal(PartialArray& array, const DiagonalSpec& spec);

/// Base H(n;5) for n = 3 (mod 4), n >= 7: diagonals A..N plus 15 fixed cells.
PartialArray build_base_h5_n3(int n);

/// Base H(n;5) for n = 0 (mod 4), n >= 8: diagonals A..N plus 17 fixed cells.
PartialArray build_base_h5_n0(int n);

/// Add t = (k-5)/4 groups of four length-n diagonals to an n = 3 (mod 4) base.
void augment_n3(PartialArray& array, const ClassParams& params);

/// Add t groups of four length-n diagonals to an n = 0 (mod 4) base.
void augment_n0(PartialArray& array, const ClassParams& params);

/// Build the full H(n;k) for k = 1 (mod 4) and n = 0 or 3 (mod 4).
/// k = 5 returns the bare base. k = 9 (t = 1) is outside the claimed range
/// and is rejected unless `force` is set; forced arrays must be verified by
/// the caller rather than trusted.
PartialArray construct(int n, int k, bool force = false);

}  // namespace heffter
