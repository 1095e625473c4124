#include <doctest.h>

#include <vector>

#include "weilrep/gaussq.hpp"

using namespace wr;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(-6, -4) == Rat(3, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0).den() == 1);
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(3, 2) - Rat(-1, 2) == Rat(2));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK(Rat(1, 2) < Rat(2, 3));
    CHECK(Rat(-5, 2).abs() == Rat(5, 2));
}

TEST_CASE("diff_class classifies the difference") {
    GaussQ i{Rat(0), Rat(1)};

    CHECK(diff_class(GaussQ(Rat(3, 2)), GaussQ(Rat(-1, 2))) ==
          DiffClass{DiffKind::Integer, 2});
    CHECK(diff_class(GaussQ(Rat(3, 2)), GaussQ(Rat(0))).kind ==
          DiffKind::HalfIntegerOnly);
    CHECK(diff_class(GaussQ(Rat(1), Rat(1)), i) == DiffClass{DiffKind::Integer, 1});
    CHECK(diff_class(GaussQ(Rat(1), Rat(1)), GaussQ(Rat(0))).kind ==
          DiffKind::NotRealIntegral);
    CHECK(diff_class(GaussQ(Rat(1, 3)), GaussQ(Rat(0))).kind == DiffKind::OtherReal);
}

TEST_CASE("diff_class is antisymmetric and reflexive") {
    std::vector<GaussQ> grid;
    for (long long n = -4; n <= 4; ++n) grid.emplace_back(Rat(n, 2));
    grid.push_back({Rat(1, 3)});
    grid.push_back({Rat(1, 2), Rat(1)});

    for (auto& x : grid) {
        CHECK(diff_class(x, x) == DiffClass{DiffKind::Integer, 0});
        for (auto& y : grid) {
            auto fwd = diff_class(x, y);
            auto bwd = diff_class(y, x);
            CHECK(fwd.kind == bwd.kind);
            if (fwd.kind == DiffKind::Integer) CHECK(fwd.k == -bwd.k);
        }
    }
}

TEST_CASE("real_compare requires matching imaginary parts") {
    CHECK(real_compare(GaussQ(Rat(3, 2)), GaussQ(Rat(1, 2))) == Cmp::Greater);
    GaussQ z{Rat(1, 2), Rat(1)};
    CHECK(real_compare(z, z) == Cmp::Equal);
    CHECK_THROWS_AS(real_compare(GaussQ(Rat(1)), GaussQ(Rat(0), Rat(1))),
                    incomparable_imaginary_parts);
}
