#pragma once

#include <vector>

#include "weilrep/segments.hpp"

namespace wr {

// Outcome of an irreducibility test. Each witness records an offending
// unordered pair of factor indices and which condition it violated
// (1: char/char, 2: mixed, 3: DS/DS, 4: segment containment failure).
struct Verdict {
    struct Witness {
        std::size_t i = 0;
        std::size_t j = 0;
        int condition = 0;
        bool operator==(const Witness&) const = default;
    };

    bool irreducible = true;
    std::vector<Witness> witnesses;
};

struct GL2Result {
    bool reducible = false;
    long long p = 0; // nonzero when reducible

    bool operator==(const GL2Result&) const = default;
};

// Principal series chi1 x chi2 of GL_2(R) is reducible iff
// chi1 * chi2^{-1}(t) = t^p * omega_R(t) for a nonzero integer p.
GL2Result gl2_reducible(const RealChar& c1, const RealChar& c2);

// Irreducibility of an induced representation by the pairwise exponent
// conditions on (n_j, s_j, sigma_j) data.
Verdict speh_irreducible(const std::vector<InducedFactor>& fs);

// The same question decided in the segment language: a pair involving a
// discrete series is irreducible iff not integrally related or one
// segment contains the other; character pairs fall back to the GL_2 rule.
Verdict segments_irreducible(const std::vector<InducedFactor>& fs);

} // namespace wr
