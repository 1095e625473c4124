#include "weilrep/segments.hpp"

namespace wr {

Segment::Segment(GaussQ lo, GaussQ hi, std::optional<int> parity)
    : low(lo), high(hi), point_parity(parity) {
    auto d = diff_class(high, low);
    if (d.kind != DiffKind::Integer || d.k < 0)
        throw domain_error("Segment: high - low must be a nonnegative integer");
    if (point_parity && !is_point())
        throw domain_error("Segment: parity only on point segments");
    if (point_parity) point_parity = ((*point_parity % 2) + 2) % 2;
}

VirtualRep InducedFactor::param() const {
    if (is_char()) return VirtualRep(RealChar(as_char().eps, as_char().s));
    const DS& d = as_ds();
    Rat half(d.p, 2);
    return VirtualRep(IrredWR::two_dim(d.s + GaussQ(half), d.s - GaussQ(half)));
}

Segment seg_of(const InducedFactor& f) {
    if (f.is_char())
        return Segment(f.as_char().s, f.as_char().s, f.as_char().eps);
    const auto& d = f.as_ds();
    Rat half(d.p, 2);
    return Segment(d.s - GaussQ(half), d.s + GaussQ(half));
}

IrredWR ds_of(const Segment& seg) {
    if (seg.is_point()) throw zero_length();
    return IrredWR::two_dim(seg.high, seg.low);
}

PairClass classify_pair(const Segment& s1, const Segment& s2) {
    if (s1.is_point() || s2.is_point()) throw point_input();
    auto d = diff_class(s1.low, s2.low);
    if (d.kind != DiffKind::Integer) return PairClass::NotIntegral;

    // Order so the first segment has the higher right end.
    const Segment* a = &s1;
    const Segment* b = &s2;
    if (a->high.re < b->high.re) std::swap(a, b);

    if (a->low == b->low && a->high == b->high) return PairClass::Equal;
    if (b->high.re < a->low.re) return PairClass::Disjoint;
    // b inside a, or (equal right ends) a inside b.
    if (a->low.re <= b->low.re || a->high == b->high) return PairClass::Contained;
    return PairClass::Overlap;
}

} // namespace wr
