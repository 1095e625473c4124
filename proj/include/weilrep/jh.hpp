#pragma once

#include <string>
#include <vector>

#include "weilrep/reducibility.hpp"

namespace wr {

// Induced factors in Langlands order: weakly decreasing real part of the
// center exponent.
struct StandardModule {
    std::vector<InducedFactor> factors;

    explicit StandardModule(std::vector<InducedFactor> fs);

    // Sum of the factor parameters (the parameter of the full module).
    VirtualRep param() const;
    long long dim() const;

    bool operator==(const StandardModule&) const = default;
};

enum class JHRole { LanglandsQuotient, Generic, Other };

struct JHFactor {
    VirtualRep param;
    JHRole role = JHRole::Other;
    long long multiplicity = 1;

    bool operator==(const JHFactor&) const = default;
};

struct JHDecomposition {
    std::vector<JHFactor> factors;
    // e.g. "conjectural", "derived-mirror".
    std::vector<std::string> tags;
};

// GL_2: the finite-dimensional Langlands quotient and the (generic)
// essentially discrete series factor of a reducible chi1 x chi2.
JHDecomposition jh_gl2(const RealChar& c1, const RealChar& c2);

// GL_3: length-2 decomposition of [a,b] x [c] when a > b > c on a Z-line
// (or the mirrored configuration c > a, handled by duality).
JHDecomposition jh_gl3(const Segment& seg, const InducedFactor::Char& c);

// GL_4: length-5 (disjoint segments) or length-2 (crossing segments)
// decomposition of [a,b] x [c,d]; conjectural.
JHDecomposition jh_gl4(const Segment& s1, const Segment& s2);

// Standard module whose Langlands quotient has the given parameter.
StandardModule standard_of(const VirtualRep& param);

RealChar central_char(const StandardModule& m);
RealChar central_char(const VirtualRep& param);

// Consistency report for a proposed decomposition.
struct JHReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks inf. character, central character, Langlands-quotient count and
// dimension agreement of every factor against the module.
JHReport validate_jh(const StandardModule& m, const std::vector<JHFactor>& fs);

} // namespace wr
