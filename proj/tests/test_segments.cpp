#include <doctest.h>

#include "weilrep/segments.hpp"

using namespace wr;

namespace {

Segment seg(Rat lo, Rat hi) { return Segment(GaussQ(lo), GaussQ(hi)); }

} // namespace

TEST_CASE("segment construction") {
    CHECK(seg(Rat(-1, 2), Rat(1, 2)).length() == 1);
    CHECK_THROWS(Segment(GaussQ(Rat(0)), GaussQ(Rat(1, 2))));
    CHECK_THROWS(Segment(GaussQ(Rat(1)), GaussQ(Rat(0))));
    // parity only on points
    CHECK_THROWS(Segment(GaussQ(Rat(0)), GaussQ(Rat(1)), 1));
    CHECK(Segment(GaussQ(Rat(0)), GaussQ(Rat(0)), 1).point_parity == 1);
}

TEST_CASE("seg_of") {
    CHECK(seg_of(InducedFactor::ds(1, GaussQ{})) == seg(Rat(-1, 2), Rat(1, 2)));
    CHECK(seg_of(InducedFactor::ds(3, GaussQ(Rat(1)))) == seg(Rat(-1, 2), Rat(5, 2)));
    auto pt = seg_of(InducedFactor::character(0, GaussQ(Rat(3, 2))));
    CHECK(pt.is_point());
    CHECK(pt.low == GaussQ(Rat(3, 2)));
    CHECK(pt.point_parity == 0);
}

TEST_CASE("ds_of") {
    CHECK(ds_of(seg(Rat(-1, 2), Rat(1, 2))) == IrredWR::discrete(2));
    CHECK(ds_of(seg(Rat(-3, 2), Rat(3, 2))) == IrredWR::discrete(4));
    CHECK_THROWS_AS(ds_of(seg(Rat(0), Rat(0))), zero_length);
}

TEST_CASE("seg_of and ds_of are mutually inverse on length >= 1") {
    for (long long p = 1; p <= 4; ++p)
        for (long long two_s = -3; two_s <= 3; ++two_s) {
            auto f = InducedFactor::ds(p, GaussQ(Rat(two_s, 2)));
            auto back = ds_of(seg_of(f));
            CHECK(VirtualRep(back) == f.param());
        }
}

TEST_CASE("pair classification") {
    CHECK(classify_pair(seg(Rat(1, 2), Rat(3, 2)), seg(Rat(-3, 2), Rat(-1, 2))) ==
          PairClass::Disjoint);
    CHECK(classify_pair(seg(Rat(-1, 2), Rat(3, 2)), seg(Rat(-3, 2), Rat(1, 2))) ==
          PairClass::Overlap);
    CHECK(classify_pair(seg(Rat(-3, 2), Rat(3, 2)), seg(Rat(-1, 2), Rat(1, 2))) ==
          PairClass::Contained);
    CHECK(classify_pair(seg(Rat(0), Rat(1)), seg(Rat(0), Rat(1))) == PairClass::Equal);
    CHECK(classify_pair(seg(Rat(0), Rat(1)), seg(Rat(1, 4), Rat(5, 4))) ==
          PairClass::NotIntegral);
    // shared right end, different left ends: containment
    CHECK(classify_pair(seg(Rat(0), Rat(2)), seg(Rat(1), Rat(2))) ==
          PairClass::Contained);
    // touching at a point is a crossing, not juxtaposition
    CHECK(classify_pair(seg(Rat(0), Rat(1)), seg(Rat(1), Rat(2))) ==
          PairClass::Overlap);
    // gap exactly one is still disjoint (juxtaposed)
    CHECK(classify_pair(seg(Rat(0), Rat(1)), seg(Rat(2), Rat(3))) ==
          PairClass::Disjoint);
    CHECK_THROWS_AS(classify_pair(seg(Rat(0), Rat(0)), seg(Rat(0), Rat(1))),
                    point_input);
}

TEST_CASE("pair classification is symmetric") {
    std::vector<Segment> segs;
    for (long long lo = -2; lo <= 2; ++lo)
        for (long long len = 1; len <= 3; ++len)
            segs.push_back(seg(Rat(lo), Rat(lo + len)));
    segs.push_back(seg(Rat(1, 2), Rat(3, 2)));
    for (auto& a : segs)
        for (auto& b : segs) CHECK(classify_pair(a, b) == classify_pair(b, a));
}
