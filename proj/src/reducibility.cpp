#include "weilrep/reducibility.hpp"

namespace wr {

GL2Result gl2_reducible(const RealChar& c1, const RealChar& c2) {
    auto d = diff_class(c1.s, c2.s);
    if (d.kind != DiffKind::Integer || d.k == 0) return {};
    // chi1/chi2 = sign^(eps1+eps2) |t|^p; equals t^p omega_R iff
    // eps1 + eps2 == p + 1 (mod 2).
    if (((c1.eps + c2.eps) % 2) != (((d.k % 2) + 2 + 1) % 2)) return {};
    return {true, d.k};
}

namespace {

// Pair test for the exponent-condition criterion; returns the violated
// condition number, or 0 when the pair is irreducible.
int speh_pair(const InducedFactor& fi0, const InducedFactor& fj0) {
    const InducedFactor* fi = &fi0;
    const InducedFactor* fj = &fj0;
    if (fi->dim() < fj->dim()) std::swap(fi, fj);

    GaussQ d = fi->center() - fj->center();
    // Conditions are vacuous off the real half-integral locus.
    if (!d.is_real() || !d.re.is_half_integral()) return 0;

    if (fi->is_char() && fj->is_char()) {
        GL2Result r = gl2_reducible(RealChar(fi->as_char().eps, fi->as_char().s),
                                    RealChar(fj->as_char().eps, fj->as_char().s));
        return r.reducible ? 1 : 0;
    }
    Rat val = d.re.abs();
    if (!fj->is_char()) {
        long long pd = fi->as_ds().p - fj->as_ds().p;
        val -= Rat(pd < 0 ? -pd : pd, 2);
        return (val.is_integer() && val > Rat(0)) ? 3 : 0;
    }
    val -= Rat(fi->as_ds().p, 2);
    return (val.is_integer() && val > Rat(0)) ? 2 : 0;
}

int segment_pair(const InducedFactor& fi, const InducedFactor& fj) {
    if (fi.is_char() && fj.is_char()) {
        GL2Result r = gl2_reducible(RealChar(fi.as_char().eps, fi.as_char().s),
                                    RealChar(fj.as_char().eps, fj.as_char().s));
        return r.reducible ? 1 : 0;
    }
    if (fi.is_char() || fj.is_char()) {
        // Point-in-segment containment.
        const InducedFactor& c = fi.is_char() ? fi : fj;
        const InducedFactor& ds = fi.is_char() ? fj : fi;
        Segment seg = seg_of(ds);
        auto d = diff_class(c.as_char().s, seg.low);
        if (d.kind != DiffKind::Integer) return 0;
        if (d.k >= 0 && c.as_char().s.re <= seg.high.re) return 0;
        return 2;
    }
    PairClass pc = classify_pair(seg_of(fi), seg_of(fj));
    if (pc == PairClass::NotIntegral || pc == PairClass::Equal ||
        pc == PairClass::Contained)
        return 0;
    return 3;
}

Verdict run_pairs(const std::vector<InducedFactor>& fs,
                  int (*pair_test)(const InducedFactor&, const InducedFactor&)) {
    Verdict v;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (int cond = pair_test(fs[i], fs[j]); cond != 0) {
                v.irreducible = false;
                v.witnesses.push_back({i, j, cond});
            }
    return v;
}

} // namespace

Verdict speh_irreducible(const std::vector<InducedFactor>& fs) {
    return run_pairs(fs, &speh_pair);
}

Verdict segments_irreducible(const std::vector<InducedFactor>& fs) {
    return run_pairs(fs, &segment_pair);
}

} // namespace wr
