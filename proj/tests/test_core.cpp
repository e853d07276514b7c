#include <doctest.h>

#include "heffter/core.hpp"

using namespace heffter;

TEST_CASE("wrap_index reduces into {1..n}") {
    CHECK(wrap_index(20, 19) == 1);
    CHECK(wrap_index(19, 19) == 19);
    CHECK(wrap_index(0, 19) == 19);
    CHECK(wrap_index(1, 19) == 1);
    CHECK(wrap_index(-3, 19) == 16);
    CHECK(wrap_index(5, 1) == 1);

    for (long long i = -50; i <= 50; ++i) {
        for (int n : {1, 2, 7, 19}) {
            int w = wrap_index(i, n);
            CHECK(w >= 1);
            CHECK(w <= n);
            CHECK(wrap_index(i + n, n) == w);
            CHECK((w - i) % n == 0);
        }
    }
    CHECK_THROWS_AS(wrap_index(1, 0), HeffterError);
}

TEST_CASE("canonical_residue picks the symmetric representative") {
    CHECK(canonical_residue(646, 647) == -1);
    CHECK(canonical_residue(-97 + 97, 97) == 0);
    CHECK(canonical_residue(627, 647) == -20);  // 627 + 20 = 647
    CHECK(canonical_residue(323, 647) == 323);
    CHECK(canonical_residue(324, 647) == -323);
    CHECK_THROWS_AS(canonical_residue(1, 4), HeffterError);
    CHECK_THROWS_AS(canonical_residue(1, 1), HeffterError);

    // additive homomorphism
    for (std::int64_t a = -40; a <= 40; a += 7)
        for (std::int64_t b = -40; b <= 40; b += 3) {
            std::int64_t m = 19;
            std::int64_t lhs = canonical_residue(canonical_residue(a, m) +
                                                 canonical_residue(b, m), m);
            CHECK(lhs == canonical_residue(a + b, m));
        }
}

TEST_CASE("Dims validates the fill identity") {
    Dims d = Dims::square(19, 17);
    CHECK(d.filled() == 323);
    CHECK(d.modulus() == 647);
    CHECK(d.is_square());
    CHECK_THROWS_AS(Dims(2, 3, 2, 2), HeffterError);   // 2*2 != 3*2
    CHECK_THROWS_AS(Dims(3, 3, 4, 4), HeffterError);   // h > n
    Dims rect(2, 3, 3, 2);
    CHECK(rect.filled() == 6);
    CHECK(rect.modulus() == 13);
    CHECK(!rect.is_square());
}

TEST_CASE("PartialArray stores sparse nonzero entries") {
    PartialArray a(Dims::square(3, 3));
    a.place({1, 1}, 5);
    a.place({1, 3}, -2);
    a.place({2, 1}, 9);
    CHECK(a.size() == 3);
    CHECK(a.filled({1, 1}));
    CHECK(!a.filled({1, 2}));
    CHECK(a.at({1, 3}) == -2);
    CHECK_THROWS_AS(a.at({3, 3}), HeffterError);
    CHECK_THROWS_AS(a.place({1, 1}, 4), CollisionError);
    CHECK_THROWS_AS(a.place({2, 2}, 0), HeffterError);
    CHECK_THROWS_AS(a.place({2, 2}, 10), HeffterError);   // |v| > nk = 9
    CHECK_THROWS_AS(a.place({4, 1}, 1), HeffterError);

    auto row1 = a.row_cells(1);
    REQUIRE(row1.size() == 2);
    CHECK(row1[0].first == Cell{1, 1});
    CHECK(row1[1].first == Cell{1, 3});
    auto col1 = a.col_cells(1);
    REQUIRE(col1.size() == 2);
    CHECK(col1[0].second == 5);
    CHECK(col1[1].second == 9);
    CHECK(a.line_values(Axis::Row, 1) == std::vector<std::int64_t>{5, -2});
    CHECK(a.line_values(Axis::Column, 2).empty());
}
