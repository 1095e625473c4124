#include <doctest.h>

#include <algorithm>

#include "weilrep/reducibility.hpp"

using namespace wr;

namespace {

RealChar chr(int eps, Rat s) { return RealChar(eps, GaussQ(s)); }

std::vector<RealChar> char_grid() {
    std::vector<RealChar> out;
    for (long long two_s = -6; two_s <= 6; ++two_s)
        for (int eps : {0, 1}) out.push_back(chr(eps, Rat(two_s, 2)));
    return out;
}

// Theorem-style condition (1) evaluated directly, as an independent check
// of the gl2 rule.
bool cond1_reducible(const RealChar& a, const RealChar& b) {
    auto d = diff_class(a.s, b.s);
    if (d.kind != DiffKind::Integer || d.k == 0) return false;
    bool same = a.eps == b.eps;
    bool odd = ((d.k % 2) + 2) % 2 == 1;
    return same == odd;
}

} // namespace

TEST_CASE("gl2 reducibility") {
    CHECK(gl2_reducible(chr(0, Rat(1, 2)), chr(0, Rat(-1, 2))) == GL2Result{true, 1});
    CHECK(gl2_reducible(chr(0, Rat(1, 2)), chr(1, Rat(-1, 2))) == GL2Result{});
    CHECK(gl2_reducible(chr(0, Rat(3)), chr(1, Rat(1))) == GL2Result{true, 2});
    CHECK(gl2_reducible(chr(0, Rat(1, 2)), chr(0, Rat(0))) == GL2Result{});
    // same character: p = 0
    CHECK(gl2_reducible(chr(0, Rat(1)), chr(0, Rat(1))) == GL2Result{});
}

TEST_CASE("gl2 rule agrees with the parity-integer condition on the grid") {
    for (auto& a : char_grid())
        for (auto& b : char_grid())
            CHECK(gl2_reducible(a, b).reducible == cond1_reducible(a, b));
}

TEST_CASE("twisting by the sign character flips reducibility (Cor 1a)") {
    for (auto& a : char_grid())
        for (auto& b : char_grid()) {
            auto d = diff_class(a.s, b.s);
            if (d.kind != DiffKind::Integer || d.k == 0) continue;
            bool r1 = gl2_reducible(a, b).reducible;
            bool r2 = gl2_reducible(a, b * sign_char()).reducible;
            CHECK(r1 != r2);
        }
}

TEST_CASE("among three characters some pair is irreducible (Cor 1b)") {
    auto grid = char_grid();
    for (auto& a : grid)
        for (auto& b : grid)
            for (auto& c : grid) {
                bool all_reducible = gl2_reducible(a, b).reducible &&
                                     gl2_reducible(a, c).reducible &&
                                     gl2_reducible(b, c).reducible;
                CHECK_FALSE(all_reducible);
            }
}

TEST_CASE("speh criterion on named examples") {
    auto v1 = speh_irreducible({InducedFactor::ds(1, GaussQ{}),
                                InducedFactor::character(0, GaussQ(Rat(3, 2)))});
    REQUIRE_FALSE(v1.irreducible);
    CHECK(v1.witnesses.size() == 1);
    CHECK(v1.witnesses[0].condition == 2);

    auto v2 = speh_irreducible({InducedFactor::ds(1, GaussQ{}),
                                InducedFactor::ds(3, GaussQ{})});
    CHECK(v2.irreducible);

    auto v3 = speh_irreducible({InducedFactor::ds(1, GaussQ{}),
                                InducedFactor::ds(1, GaussQ(Rat(1)))});
    REQUIRE_FALSE(v3.irreducible);
    CHECK(v3.witnesses[0].condition == 3);
}

TEST_CASE("segment criterion on named examples") {
    CHECK(segments_irreducible({InducedFactor::ds(3, GaussQ{}),
                                InducedFactor::character(0, GaussQ(Rat(1, 2)))})
              .irreducible);
    CHECK_FALSE(segments_irreducible({InducedFactor::ds(1, GaussQ{}),
                                      InducedFactor::ds(1, GaussQ(Rat(1)))})
                    .irreducible);
    CHECK(segments_irreducible({InducedFactor::character(0, GaussQ(Rat(1, 2))),
                                InducedFactor::character(0, GaussQ(Rat(5, 4)))})
              .irreducible);
}

TEST_CASE("pairs with mismatched imaginary parts pass") {
    auto f1 = InducedFactor::ds(1, GaussQ(Rat(0), Rat(1)));
    auto f2 = InducedFactor::ds(1, GaussQ(Rat(1)));
    CHECK(speh_irreducible({f1, f2}).irreducible);
    CHECK(segments_irreducible({f1, f2}).irreducible);
}

TEST_CASE("verdicts are permutation invariant") {
    std::vector<InducedFactor> fs = {
        InducedFactor::ds(1, GaussQ{}),
        InducedFactor::character(0, GaussQ(Rat(3, 2))),
        InducedFactor::ds(2, GaussQ(Rat(-1, 2))),
    };
    std::sort(fs.begin(), fs.end());
    bool base_speh = speh_irreducible(fs).irreducible;
    bool base_seg = segments_irreducible(fs).irreducible;
    do {
        CHECK(speh_irreducible(fs).irreducible == base_speh);
        CHECK(segments_irreducible(fs).irreducible == base_seg);
    } while (std::next_permutation(fs.begin(), fs.end()));
}
