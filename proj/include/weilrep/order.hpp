#pragma once

#include <map>
#include <set>
#include <tuple>

#include "weilrep/jh.hpp"

namespace wr {

enum class Provenance { Exact, Conjectural };

struct RelationEdge {
    VirtualRep upper;
    VirtualRep lower;
    Provenance prov = Provenance::Exact;

    bool operator==(const RelationEdge&) const = default;
    auto operator<=>(const RelationEdge&) const = default;
};

struct RelationGraph {
    std::set<VirtualRep> nodes;
    std::set<RelationEdge> edges;
    bool truncated = false;
};

// Parameters strictly above p: the other JH factors of the standard module
// of p, via the GL_2 / GL_3 ops (exact), the GL_4 op (conjectural), or the
// dim <= 4 move closure for uncovered shapes (conjectural).
std::map<VirtualRep, Provenance> relation_edges(const VirtualRep& p);

// Fixpoint closure of the module's parameter under replacing a dim <= 4
// sub-multiset of summands by a parameter strictly above it. Always
// contains the starting parameter; every element shares its
// infinitesimal character.
std::set<VirtualRep> conjecture4_closure(const StandardModule& m);

// Breadth-first expansion of relation_edges from the seeds, capped at
// `budget` nodes (truncated flag set when the cap bites).
RelationGraph build_graph(const std::vector<VirtualRep>& seeds, std::size_t budget);

struct TransitivityReport {
    long long verified = 0;
    long long unverifiable = 0;
    // Triples (x, y, z) with x >= y >= z where the direct x >= z edge is
    // derivably absent.
    std::vector<std::tuple<VirtualRep, VirtualRep, VirtualRep>> violations;
    // Same, restricted to triples whose two edges are both exact.
    long long violated_exact = 0;
    long long verified_exact = 0;
};

// Audits every composable edge pair in the graph for a derivable direct
// edge; shapes with no direct JH operation are reported unverifiable.
TransitivityReport check_transitivity(const RelationGraph& g);

std::string export_dot(const RelationGraph& g);

} // namespace wr
