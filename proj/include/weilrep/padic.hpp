#pragma once

#include <set>
#include <vector>

#include "weilrep/rational.hpp"

namespace wr {

// Weil-Deligne parameter for the unramified Borel case: a multiset of
// (nu-exponent, Sym^r SL_2 part) pairs; dimension of a pair is r + 1.
struct WDRep {
    // Canonically sorted.
    std::vector<std::pair<Rat, long long>> parts;

    long long dim() const;

    bool operator==(const WDRep&) const = default;
    auto operator<=>(const WDRep&) const = default;
};

// Jordan-Hoelder parameters of the p-adic Borel principal series of
// GL_n: one per composition of the interval
// [-(n-1)/2, ..., (n-1)/2] into consecutive blocks; 2^(n-1) of them.
std::set<WDRep> borel_jh_padic(long long n);

// Restriction to the Weil group: the SL_2 part contributes the diagonal
// weights of Sym^r through (nu^(1/2), nu^(-1/2)).
std::vector<Rat> restrict_wd(const WDRep& w);

// All parameters in the set restrict to the same multiset of exponents.
bool haines_check(const std::set<WDRep>& ws);

} // namespace wr
