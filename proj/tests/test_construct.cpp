#include <doctest.h>

#include <set>

#include "heffter/construct.hpp"
#include "heffter/io.hpp"
#include "heffter/verify.hpp"
#include "support.hpp"

using namespace heffter;

namespace {

std::set<std::int64_t> support_of(const PartialArray& a) {
    std::set<std::int64_t> s;
    for (const auto& [cell, v] : a.entries()) s.insert(v < 0 ? -v : v);
    return s;
}

std::set<std::int64_t> range_set(std::int64_t lo, std::int64_t hi) {
    std::set<std::int64_t> s;
    for (std::int64_t x = lo; x <= hi; ++x) s.insert(x);
    return s;
}

}  // namespace

TEST_CASE("place_diagonal walks cells and values in lockstep") {
    PartialArray a(Dims::square(19, 5));
    const int h = 10;
    place_diagonal(a, {h + 1, h + 1, h - 2, 1, -1, h - 3});
    REQUIRE(a.size() == 7);
    CHECK(a.at({11, 11}) == 8);
    CHECK(a.at({12, 12}) == 7);
    CHECK(a.at({17, 17}) == 2);

    SUBCASE("wraps indices modulo n") {
        PartialArray b(Dims::square(5, 5));
        place_diagonal(b, {4, 2, 1, 2, 1, 3});  // cells (4,2), (1,4), (3,1)
        CHECK(b.at({4, 2}) == 1);
        CHECK(b.at({1, 4}) == 2);
        CHECK(b.at({3, 1}) == 3);
    }
    SUBCASE("single-cell diagonal") {
        PartialArray b(Dims::square(5, 5));
        place_diagonal(b, {2, 3, -4, 1, 7, 1});
        CHECK(b.size() == 1);
        CHECK(b.at({2, 3}) == -4);
    }
    SUBCASE("replaying the same spec collides at its start cell") {
        try {
            place_diagonal(a, {h + 1, h + 1, h - 2, 1, -1, h - 3});
            FAIL("expected CollisionError");
        } catch (const CollisionError& e) {
            CHECK(e.cell == Cell{11, 11});
        }
    }
}

TEST_CASE("base H(n;5), n = 3 (mod 4)") {
    PartialArray a = build_base_h5_n3(19);
    CHECK(a.dims() == Dims::square(19, 5));
    CHECK(a.size() == 95);
    // fixed cells
    CHECK(a.at({1, 1}) == 18);
    CHECK(a.at({1, 2}) == 93);
    CHECK(a.at({1, 10}) == 40);
    CHECK(a.at({1, 19}) == -94);
    CHECK(a.at({19, 19}) == 1);
    CHECK(a.at({10, 1}) == -37);
    CHECK(a.at({10, 10}) == -19);
    CHECK(a.at({10, 19}) == 39);

    CHECK_THROWS_AS(build_base_h5_n3(20), ClassError);
    CHECK_THROWS_AS(build_base_h5_n3(17), ClassError);
    CHECK_THROWS_AS(build_base_h5_n3(3), ClassError);

    SUBCASE("smallest case n = 7 is a valid integer Heffter array") {
        auto rep = verify_array(build_base_h5_n3(7));
        CHECK(rep.heffter_ok(true));
    }
    SUBCASE("support of the base is exactly {1..5n}") {
        CHECK(support_of(a) == range_set(1, 95));
    }
}

TEST_CASE("base H(n;5), n = 0 (mod 4)") {
    PartialArray a = build_base_h5_n0(20);
    CHECK(a.size() == 100);
    CHECK(a.at({1, 1}) == 58);
    CHECK(a.at({20, 1}) == 1);
    CHECK(a.at({20, 2}) == 96);
    CHECK(a.at({20, 20}) == 39);
    CHECK(a.at({19, 1}) == -40);
    CHECK(a.at({19, 9}) == 35);
    CHECK(a.at({19, 10}) == 100);

    CHECK_THROWS_AS(build_base_h5_n0(19), ClassError);
    CHECK_THROWS_AS(build_base_h5_n0(4), ClassError);

    SUBCASE("smallest case n = 8 is a valid integer Heffter array") {
        auto rep = verify_array(build_base_h5_n0(8));
        CHECK(rep.heffter_ok(true));
    }
    SUBCASE("support of the base is exactly {1..5n}") {
        CHECK(support_of(a) == range_set(1, 100));
    }
}

TEST_CASE("augmentation starting cells and values, n = 3 (mod 4)") {
    PartialArray a = construct(19, 17);
    // group i = 1
    CHECK(a.at({3, 1}) == 96);     // D_3 start, n + 4n + 1
    CHECK(a.at({4, 1}) == -134);   // D_4 start
    CHECK(a.at({3, 11}) == -97);   // D_{h+2} start, -(n + 4n + 2)
    CHECK(a.at({4, 11}) == 135);   // D_{h+3} start
    // group i = 3
    CHECK(a.at({7, 1}) == 248);
    CHECK(a.at({8, 11}) == 287);
}

TEST_CASE("augmentation starting cells and values, n = 0 (mod 4)") {
    PartialArray a = construct(20, 17);
    CHECK(a.at({4, 1}) == -101);   // D_4 start, -(n + 4n + 1)
    CHECK(a.at({5, 1}) == 103);    // D_5 start
    CHECK(a.at({4, 13}) == 102);   // D_{h+3} start, n + 4n + 2
    CHECK(a.at({5, 13}) == -104);  // D_{h+4} start
    CHECK(a.at({9, 1}) == 263);    // i = 3
}

TEST_CASE("each augmentation group contributes zero to every line sum") {
    for (auto [n, k] : {std::pair{19, 17}, std::pair{20, 17}}) {
        auto params = ClassParams::of(n, k);
        PartialArray a = construct(n, k);
        auto sums = check_sums(a, SumMode::Integer);
        CHECK(sums.ok);
        // and the base alone sums to zero, so the groups must cancel too
        auto base = verify_array(construct(n, 5));
        CHECK(base.integer_sums_ok);
        CHECK(params.t == 3);
    }
}

TEST_CASE("augmentation support partitions {5n+1..nk}") {
    PartialArray base = construct(19, 5);
    PartialArray full = construct(19, 17);
    CHECK(support_of(base) == range_set(1, 5 * 19));
    CHECK(support_of(full) == range_set(1, 19 * 17));

    CHECK(support_of(construct(20, 5)) == range_set(1, 100));
    CHECK(support_of(construct(20, 17)) == range_set(1, 340));
}

TEST_CASE("construct matches the reference grids cell for cell") {
    PartialArray want = from_csv(testsupport::slurp(testsupport::data_path("h19_17.csv")));
    PartialArray got = construct(19, 17);
    CHECK(got.size() == 323);
    CHECK(got == want);

    want = from_csv(testsupport::slurp(testsupport::data_path("h20_17.csv")));
    got = construct(20, 17);
    CHECK(got.size() == 340);
    CHECK(got == want);
}

TEST_CASE("construct gates its parameter classes") {
    CHECK_THROWS_AS(construct(18, 13), UnsupportedClassError);  // n = 2 (mod 4)
    CHECK_THROWS_AS(construct(17, 13), UnsupportedClassError);  // n = 1 (mod 4)
    CHECK_THROWS_AS(construct(19, 15), UnsupportedClassError);  // k = 3 (mod 4)
    CHECK_THROWS_AS(construct(19, 21), UnsupportedClassError);  // k > n
    CHECK_THROWS_AS(construct(19, 19), UnsupportedClassError);
    CHECK_THROWS_AS(construct(19, 1), UnsupportedClassError);

    SUBCASE("k = 5 returns the bare base") {
        CHECK(construct(19, 5).size() == 95);
        CHECK(construct(19, 5) == build_base_h5_n3(19));
    }
    SUBCASE("k = 9 needs force, and forced arrays still verify per class") {
        CHECK_THROWS_AS(construct(19, 9), UnsupportedClassError);
        auto a = construct(19, 9, /*force=*/true);
        auto rep = verify_array(a);
        CHECK(rep.heffter_ok(true));
        CHECK(rep.globally_simple);  // t = 1 happens to work for n = 3 (mod 4)

        // ... but not for n = 0 (mod 4): row n and column n collide
        auto b = construct(12, 9, /*force=*/true);
        auto brep = verify_array(b);
        CHECK(brep.heffter_ok(true));
        CHECK(!brep.globally_simple);
        REQUIRE(!brep.witnesses.empty());
        CHECK(brep.witnesses.front().axis == Axis::Row);
        CHECK(brep.witnesses.front().index == 12);
    }
}

TEST_CASE("constructed arrays occupy k diagonals in bands") {
    auto bands = scan_diagonal_bands(construct(19, 17));
    CHECK(bands.occupied == 17);
    CHECK(bands.empty_widths == std::vector<int>{1, 1});

    bands = scan_diagonal_bands(construct(23, 13));
    CHECK(bands.occupied == 13);
    CHECK(bands.empty_widths == std::vector<int>{5, 5});

    bands = scan_diagonal_bands(construct(20, 17));
    CHECK(bands.occupied == 17);
    CHECK(bands.empty_widths == std::vector<int>{1, 2});

    // below the top k the n = 0 (mod 4) layout splits into three bands
    bands = scan_diagonal_bands(construct(24, 17));
    CHECK(bands.occupied == 17);
    CHECK(bands.empty_widths == std::vector<int>{2, 2, 3});
}
