#include "weilrep/jh.hpp"

#include <algorithm>

namespace wr {

namespace {

GaussQ half(const GaussQ& x) {
    return {x.re / Rat(2), x.im / Rat(2)};
}

// Langlands order: weakly decreasing real center, longer segment first,
// parity 0 first. Display order only; parameter sets never depend on it.
bool langlands_before(const InducedFactor& x, const InducedFactor& y) {
    if (x.center().re != y.center().re) return x.center().re > y.center().re;
    if (x.center().im != y.center().im) throw mixed_imaginary_parts();
    if (x.dim() != y.dim()) return x.dim() > y.dim();
    if (!x.is_char() && !y.is_char()) return x.as_ds().p > y.as_ds().p;
    if (x.is_char() && y.is_char()) return x.as_char().eps < y.as_char().eps;
    return false;
}

} // namespace

StandardModule::StandardModule(std::vector<InducedFactor> fs)
    : factors(std::move(fs)) {
    std::stable_sort(factors.begin(), factors.end(), langlands_before);
}

VirtualRep StandardModule::param() const {
    VirtualRep out;
    for (const auto& f : factors) out = out + f.param();
    return out;
}

long long StandardModule::dim() const {
    long long d = 0;
    for (const auto& f : factors) d += f.dim();
    return d;
}

JHDecomposition jh_gl2(const RealChar& c1, const RealChar& c2) {
    GL2Result r = gl2_reducible(c1, c2);
    if (!r.reducible) throw not_reducible();
    JHDecomposition out;
    out.factors.push_back({VirtualRep(c1) + VirtualRep(c2),
                           JHRole::LanglandsQuotient, 1});
    out.factors.push_back({induce(c1.s, c2.s), JHRole::Generic, 1});
    return out;
}

JHDecomposition jh_gl3(const Segment& seg, const InducedFactor::Char& c) {
    if (seg.is_point())
        throw configuration_not_covered("jh_gl3: segment must have length >= 1");
    GaussQ a = seg.high, b = seg.low, cs = c.s;

    auto below = diff_class(b, cs); // character strictly below the segment
    if (below.kind == DiffKind::Integer && below.k > 0) {
        JHDecomposition out;
        out.factors.push_back(
            {VirtualRep(IrredWR::two_dim(a, b)) + VirtualRep(RealChar(c.eps, cs)),
             JHRole::LanglandsQuotient, 1});
        // The parity of the character at b is forced by central-character
        // equality: det sigma_{a,b} * chi_c = det sigma_{a,cs} * chi_b gives
        // eps_b = eps_c + (b - cs) mod 2.
        int eps_b = (c.eps + static_cast<int>(below.k % 2)) % 2;
        out.factors.push_back(
            {VirtualRep(IrredWR::two_dim(a, cs)) + VirtualRep(RealChar(eps_b, b)),
             JHRole::Generic, 1});
        return out;
    }

    auto above = diff_class(cs, a); // mirrored: character strictly above
    if (above.kind == DiffKind::Integer && above.k > 0) {
        Segment dual_seg(-a, -b);
        JHDecomposition inner = jh_gl3(dual_seg, {c.eps, -cs});
        JHDecomposition out;
        for (auto& f : inner.factors)
            out.factors.push_back({dual_rep(f.param), f.role, f.multiplicity});
        out.tags.push_back("derived-mirror");
        return out;
    }

    throw configuration_not_covered(
        "jh_gl3: character must sit strictly outside the segment on its Z-line");
}

JHDecomposition jh_gl4(const Segment& s1, const Segment& s2) {
    PairClass pc = classify_pair(s1, s2);
    if (pc != PairClass::Disjoint && pc != PairClass::Overlap)
        throw not_reducible_configuration(
            "jh_gl4: segments must be disjoint or properly crossing");

    const Segment* up = &s1;
    const Segment* lo = &s2;
    if (up->high.re < lo->high.re) std::swap(up, lo);
    GaussQ a = up->high, b = up->low, c = lo->high, d = lo->low;

    auto sigma = [](const GaussQ& x, const GaussQ& y) { return induce(x, y); };

    JHDecomposition out;
    out.tags.push_back("conjectural");
    out.factors.push_back(
        {sigma(a, b) + sigma(c, d), JHRole::LanglandsQuotient, 1});
    if (pc == PairClass::Overlap) {
        out.factors.push_back({sigma(a, d) + sigma(b, c), JHRole::Generic, 1});
        return out;
    }

    out.factors.push_back({sigma(a, c) + sigma(b, d), JHRole::Other, 1});
    out.factors.push_back({sigma(a, d) + sigma(b, c), JHRole::Generic, 1});
    bool bc_even = ((b - c).re.num() % 2) == 0;
    VirtualRep nu_b(RealChar(0, b)), nu_b_w(RealChar(1, b));
    VirtualRep nu_c(RealChar(0, c)), nu_c_w(RealChar(1, c));
    if (bc_even) {
        out.factors.push_back({sigma(a, d) + nu_b_w + nu_c, JHRole::Other, 1});
        out.factors.push_back({sigma(a, d) + nu_b + nu_c_w, JHRole::Other, 1});
    } else {
        out.factors.push_back({sigma(a, d) + nu_b + nu_c, JHRole::Other, 1});
        out.factors.push_back({sigma(a, d) + nu_b_w + nu_c_w, JHRole::Other, 1});
    }
    return out;
}

StandardModule standard_of(const VirtualRep& param) {
    if (!param.all_positive())
        throw domain_error("standard_of: parameter must have positive multiplicities");
    std::vector<InducedFactor> fs;
    for (auto& [rep, m] : param.summands()) {
        for (long long i = 0; i < m; ++i) {
            if (rep.is_one_dim()) {
                fs.push_back(InducedFactor::character(rep.one_dim().eps,
                                                      rep.one_dim().s));
            } else {
                const CplxChar& t = rep.two_dim();
                long long p = (t.mu - t.nu).re.num();
                fs.push_back(InducedFactor::ds(p, half(t.mu + t.nu)));
            }
        }
    }
    return StandardModule(std::move(fs));
}

RealChar central_char(const StandardModule& m) { return det_rep(m.param()); }
RealChar central_char(const VirtualRep& param) { return det_rep(param); }

JHReport validate_jh(const StandardModule& m, const std::vector<JHFactor>& fs) {
    JHReport rep;
    VirtualRep module_param = m.param();
    auto module_inf = inf_char(module_param);
    RealChar module_cc = det_rep(module_param);
    long long module_dim = module_param.dim();

    long long lq_count = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const JHFactor& f = fs[i];
        std::string tag = "factor " + std::to_string(i);
        if (!f.param.all_positive()) {
            rep.violations.push_back(tag + ": non-positive multiplicity");
            continue;
        }
        if (inf_char(f.param) != module_inf)
            rep.violations.push_back(tag + ": infinitesimal character mismatch");
        if (!(det_rep(f.param) == module_cc))
            rep.violations.push_back(tag + ": central character mismatch");
        if (f.param.dim() != module_dim)
            rep.violations.push_back(tag + ": dimension mismatch");
        if (f.role == JHRole::LanglandsQuotient) lq_count += f.multiplicity;
    }
    if (lq_count != 1)
        rep.violations.push_back("expected exactly one Langlands quotient, found " +
                                 std::to_string(lq_count));
    return rep;
}

} // namespace wr
