#include "weilrep/padic.hpp"

#include <algorithm>

#include "weilrep/errors.hpp"

namespace wr {

long long WDRep::dim() const {
    long long d = 0;
    for (auto& [s, r] : parts) d += r + 1;
    return d;
}

std::set<WDRep> borel_jh_padic(long long n) {
    if (n < 1) throw domain_error("borel_jh_padic: n >= 1 required");
    std::set<WDRep> out;
    // Compositions of n as bitmasks of the n-1 interior cut points.
    for (long long mask = 0; mask < (1LL << (n - 1)); ++mask) {
        WDRep w;
        long long start = 0;
        for (long long i = 0; i < n; ++i) {
            bool cut = (i == n - 1) || (mask >> i & 1);
            if (!cut) continue;
            long long r = i - start; // block has r+1 points
            // Block starts at the interval value start - (n-1)/2.
            Rat first = Rat(2 * start - (n - 1), 2);
            w.parts.emplace_back(first + Rat(r, 2), r);
            start = i + 1;
        }
        std::sort(w.parts.begin(), w.parts.end());
        out.insert(std::move(w));
    }
    return out;
}

std::vector<Rat> restrict_wd(const WDRep& w) {
    std::vector<Rat> out;
    for (auto& [s, r] : w.parts)
        for (long long k = 0; k <= r; ++k) out.push_back(s + Rat(r, 2) - Rat(k));
    std::sort(out.begin(), out.end());
    return out;
}

bool haines_check(const std::set<WDRep>& ws) {
    if (ws.empty()) return true;
    auto first = restrict_wd(*ws.begin());
    return std::all_of(ws.begin(), ws.end(),
                       [&](const WDRep& w) { return restrict_wd(w) == first; });
}

} // namespace wr
