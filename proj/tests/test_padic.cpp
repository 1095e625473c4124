#include <doctest.h>

#include <algorithm>

#include "weilrep/padic.hpp"

using namespace wr;

TEST_CASE("borel_jh_padic counts compositions") {
    for (long long n = 1; n <= 8; ++n)
        CHECK(borel_jh_padic(n).size() == (std::size_t{1} << (n - 1)));
}

TEST_CASE("borel_jh_padic for GL_2") {
    auto ws = borel_jh_padic(2);
    WDRep split{{{Rat(-1, 2), 0}, {Rat(1, 2), 0}}};
    WDRep steinberg{{{Rat(0), 1}}};
    CHECK(ws == std::set<WDRep>{split, steinberg});
}

TEST_CASE("borel_jh_padic for GL_3 contains the expected extremes") {
    auto ws = borel_jh_padic(3);
    CHECK(ws.count(WDRep{{{Rat(0), 2}}}) == 1);
    CHECK(ws.count(WDRep{{{Rat(-1), 0}, {Rat(0), 0}, {Rat(1), 0}}}) == 1);
    CHECK(ws.count(WDRep{{{Rat(-1, 2), 1}, {Rat(1), 0}}}) == 1);
}

TEST_CASE("every parameter has dimension n") {
    for (long long n = 1; n <= 7; ++n)
        for (auto& w : borel_jh_padic(n)) CHECK(w.dim() == n);
}

TEST_CASE("restrict_wd expands the SL_2 part") {
    CHECK(restrict_wd(WDRep{{{Rat(0), 1}}}) ==
          std::vector<Rat>{Rat(-1, 2), Rat(1, 2)});
    CHECK(restrict_wd(WDRep{{{Rat(1, 2), 2}}}) ==
          std::vector<Rat>{Rat(-1, 2), Rat(1, 2), Rat(3, 2)});
}

TEST_CASE("haines_check holds for the Borel families") {
    for (long long n = 1; n <= 8; ++n) {
        auto ws = borel_jh_padic(n);
        CHECK(haines_check(ws));
        // and the common restriction is the Borel exponent multiset
        std::vector<Rat> expect;
        for (long long i = 0; i < n; ++i) expect.emplace_back(2 * i - (n - 1), 2);
        std::sort(expect.begin(), expect.end());
        CHECK(restrict_wd(*ws.begin()) == expect);
    }
}

TEST_CASE("haines_check detects mismatched restrictions") {
    std::set<WDRep> bad = {WDRep{{{Rat(0), 1}}}, WDRep{{{Rat(0), 0}, {Rat(1), 0}}}};
    CHECK_FALSE(haines_check(bad));
}
