#include "weilrep/order.hpp"

#include <deque>
#include <optional>

#include "weilrep/text.hpp"

namespace wr {

namespace {

struct DirectJH {
    std::vector<JHFactor> factors; // empty when the module is irreducible
    Provenance prov = Provenance::Exact;
};

Segment seg_of_two_dim(const IrredWR& r) {
    return Segment(r.two_dim().nu, r.two_dim().mu);
}

// Full JH factor list of a standard module whose shape has a direct
// decomposition rule; nullopt for uncovered shapes.
std::optional<DirectJH> direct_jh(const StandardModule& m) {
    const auto& fs = m.factors;
    if (fs.size() == 1) return DirectJH{{}, Provenance::Exact};
    if (fs.size() != 2) return std::nullopt;

    const InducedFactor& f0 = fs[0];
    const InducedFactor& f1 = fs[1];
    if (f0.is_char() && f1.is_char()) {
        RealChar c0(f0.as_char().eps, f0.as_char().s);
        RealChar c1(f1.as_char().eps, f1.as_char().s);
        if (!gl2_reducible(c0, c1).reducible) return DirectJH{{}, Provenance::Exact};
        return DirectJH{jh_gl2(c0, c1).factors, Provenance::Exact};
    }
    if (f0.is_char() != f1.is_char()) {
        const InducedFactor& ds = f0.is_char() ? f1 : f0;
        const InducedFactor& ch = f0.is_char() ? f0 : f1;
        try {
            return DirectJH{jh_gl3(seg_of(ds), ch.as_char()).factors,
                            Provenance::Exact};
        } catch (const configuration_not_covered&) {
            // Remaining configurations are irreducible by the containment
            // criterion.
            return DirectJH{{}, Provenance::Exact};
        }
    }
    try {
        return DirectJH{jh_gl4(seg_of(f0), seg_of(f1)).factors,
                        Provenance::Conjectural};
    } catch (const not_reducible_configuration&) {
        return DirectJH{{}, Provenance::Conjectural};
    }
}

// Parameters strictly above the sum of two irreducible summands, by the
// matching dim <= 4 decomposition rule.
std::vector<VirtualRep> pair_uppers(const IrredWR& a, const IrredWR& b) {
    std::vector<VirtualRep> out;
    if (a.is_one_dim() && b.is_one_dim()) {
        const RealChar& c0 = a.one_dim();
        const RealChar& c1 = b.one_dim();
        if (gl2_reducible(c0, c1).reducible)
            out.push_back(induce(c0.s, c1.s));
        return out;
    }
    try {
        if (a.is_one_dim() || b.is_one_dim()) {
            const IrredWR& two = a.is_one_dim() ? b : a;
            const RealChar& one = (a.is_one_dim() ? a : b).one_dim();
            auto dec = jh_gl3(seg_of_two_dim(two), {one.eps, one.s});
            for (auto& f : dec.factors)
                if (f.role != JHRole::LanglandsQuotient) out.push_back(f.param);
        } else {
            auto dec = jh_gl4(seg_of_two_dim(a), seg_of_two_dim(b));
            for (auto& f : dec.factors)
                if (f.role != JHRole::LanglandsQuotient) out.push_back(f.param);
        }
    } catch (const configuration_not_covered&) {
    } catch (const not_reducible_configuration&) {
    }
    return out;
}

std::vector<IrredWR> expand(const VirtualRep& v) {
    std::vector<IrredWR> out;
    for (auto& [rep, m] : v.summands())
        for (long long i = 0; i < m; ++i) out.push_back(rep);
    return out;
}

} // namespace

std::set<VirtualRep> conjecture4_closure(const StandardModule& m) {
    VirtualRep tau0 = m.param();
    std::set<VirtualRep> seen{tau0};
    std::deque<VirtualRep> queue{tau0};
    while (!queue.empty()) {
        VirtualRep v = queue.front();
        queue.pop_front();
        auto parts = expand(v);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                for (const VirtualRep& up : pair_uppers(parts[i], parts[j])) {
                    VirtualRep next = v;
                    next.add(parts[i], -1);
                    next.add(parts[j], -1);
                    VirtualRep moved = next + up;
                    if (seen.insert(moved).second) queue.push_back(moved);
                }
            }
    }
    return seen;
}

std::map<VirtualRep, Provenance> relation_edges(const VirtualRep& p) {
    StandardModule m = standard_of(p);
    std::map<VirtualRep, Provenance> out;
    if (auto direct = direct_jh(m)) {
        for (auto& f : direct->factors)
            if (!(f.param == p)) out.emplace(f.param, direct->prov);
        return out;
    }
    for (const VirtualRep& q : conjecture4_closure(m))
        if (!(q == p)) out.emplace(q, Provenance::Conjectural);
    return out;
}

RelationGraph build_graph(const std::vector<VirtualRep>& seeds, std::size_t budget) {
    RelationGraph g;
    std::deque<VirtualRep> queue;
    auto admit = [&](const VirtualRep& v) -> bool {
        if (g.nodes.count(v)) return true;
        if (g.nodes.size() >= budget) {
            g.truncated = true;
            return false;
        }
        g.nodes.insert(v);
        queue.push_back(v);
        return true;
    };
    for (const auto& s : seeds) admit(s);
    while (!queue.empty()) {
        VirtualRep p = queue.front();
        queue.pop_front();
        for (auto& [upper, prov] : relation_edges(p))
            if (admit(upper)) g.edges.insert({upper, p, prov});
    }
    return g;
}

TransitivityReport check_transitivity(const RelationGraph& g) {
    TransitivityReport rep;
    std::map<VirtualRep, std::vector<std::pair<VirtualRep, Provenance>>> uppers;
    for (const auto& e : g.edges) uppers[e.lower].push_back({e.upper, e.prov});

    // JH factor lists of z's standard module, cached per lower node.
    std::map<VirtualRep, std::optional<DirectJH>> cache;
    auto factors_of = [&](const VirtualRep& z) -> const std::optional<DirectJH>& {
        auto it = cache.find(z);
        if (it == cache.end()) it = cache.emplace(z, direct_jh(standard_of(z))).first;
        return it->second;
    };

    for (const auto& e : g.edges) {
        const VirtualRep& y = e.upper;
        const VirtualRep& z = e.lower;
        auto it = uppers.find(y);
        if (it == uppers.end()) continue;
        for (auto& [x, prov_xy] : it->second) {
            bool exact = prov_xy == Provenance::Exact && e.prov == Provenance::Exact;
            if (x == z) {
                ++rep.verified;
                if (exact) ++rep.verified_exact;
                continue;
            }
            const auto& direct = factors_of(z);
            if (!direct) {
                ++rep.unverifiable;
                continue;
            }
            bool found = false;
            for (auto& f : direct->factors)
                if (f.param == x) {
                    found = true;
                    break;
                }
            if (found) {
                ++rep.verified;
                if (exact) ++rep.verified_exact;
            } else {
                rep.violations.emplace_back(x, y, z);
                if (exact) ++rep.violated_exact;
            }
        }
    }
    return rep;
}

std::string export_dot(const RelationGraph& g) {
    std::map<VirtualRep, std::size_t> ids;
    std::string out = "digraph relation {\n";
    for (const auto& n : g.nodes) {
        std::size_t id = ids.size();
        ids.emplace(n, id);
        out += "  n" + std::to_string(id) + " [label=\"" + to_string(n) + "\"];\n";
    }
    for (const auto& e : g.edges) {
        out += "  n" + std::to_string(ids.at(e.upper)) + " -> n" +
               std::to_string(ids.at(e.lower));
        if (e.prov == Provenance::Conjectural) out += " [style=dashed]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace wr
