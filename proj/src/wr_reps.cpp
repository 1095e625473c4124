#include "weilrep/wr_reps.hpp"

#include <algorithm>

namespace wr {

CplxChar::CplxChar(GaussQ m, GaussQ n) : mu(m), nu(n) {
    auto d = diff_class(mu, nu);
    if (d.kind != DiffKind::Integer)
        throw domain_error("CplxChar: mu - nu must be a rational integer");
}

IrredWR IrredWR::two_dim(GaussQ mu, GaussQ nu) {
    auto d = diff_class(mu, nu);
    if (d.kind != DiffKind::Integer || d.k == 0)
        throw domain_error("IrredWR: mu - nu must be a nonzero integer");
    if (d.k < 0) std::swap(mu, nu);
    return IrredWR(CplxChar(mu, nu));
}

IrredWR IrredWR::discrete(long long l) {
    if (l < 2) throw domain_error("IrredWR: D_l requires l >= 2");
    Rat half(l - 1, 2);
    return two_dim(GaussQ(half), GaussQ(-half));
}

void VirtualRep::add(const IrredWR& r, long long mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.try_emplace(r, 0);
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
}

VirtualRep VirtualRep::operator+(const VirtualRep& o) const {
    VirtualRep r = *this;
    for (auto& [rep, m] : o.terms_) r.add(rep, m);
    return r;
}

VirtualRep VirtualRep::operator-(const VirtualRep& o) const {
    VirtualRep r = *this;
    for (auto& [rep, m] : o.terms_) r.add(rep, -m);
    return r;
}

long long VirtualRep::dim() const {
    long long d = 0;
    for (auto& [rep, m] : terms_) d += rep.dim() * m;
    return d;
}

bool VirtualRep::all_positive() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](auto& t) { return t.second > 0; });
}

bool VirtualRep::multiplicity_free() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](auto& t) { return t.second == 1; });
}

VirtualRep induce(GaussQ mu, GaussQ nu) {
    auto d = diff_class(mu, nu);
    if (d.kind != DiffKind::Integer)
        throw domain_error("induce: mu - nu must be a rational integer");
    if (d.k == 0) {
        VirtualRep r;
        r.add(IrredWR(RealChar(0, mu)), 1);
        r.add(IrredWR(RealChar(1, mu)), 1);
        return r;
    }
    return VirtualRep(IrredWR::two_dim(mu, nu));
}

RealChar restrict_to_Rx(const CplxChar& chi) {
    long long p = (chi.mu - chi.nu).re.num();
    return RealChar(static_cast<int>(((p % 2) + 2) % 2), chi.mu + chi.nu);
}

static VirtualRep tensor_irred(const IrredWR& a, const IrredWR& b) {
    if (a.is_one_dim() && b.is_one_dim())
        return VirtualRep(a.one_dim() * b.one_dim());
    if (a.is_one_dim() || b.is_one_dim()) {
        const RealChar& c = a.is_one_dim() ? a.one_dim() : b.one_dim();
        const CplxChar& t = a.is_one_dim() ? b.two_dim() : a.two_dim();
        // The sign of the 1-dim is invisible after induction.
        return induce(t.mu + c.s, t.nu + c.s);
    }
    const CplxChar& x = a.two_dim();
    const CplxChar& y = b.two_dim();
    return induce(x.mu + y.mu, x.nu + y.nu) + induce(x.mu + y.nu, x.nu + y.mu);
}

VirtualRep tensor(const VirtualRep& x, const VirtualRep& y) {
    VirtualRep out;
    for (auto& [a, ma] : x.summands())
        for (auto& [b, mb] : y.summands()) {
            VirtualRep prod = tensor_irred(a, b);
            for (auto& [rep, m] : prod.summands()) out.add(rep, m * ma * mb);
        }
    return out;
}

RealChar ext2(const IrredWR& v) {
    if (v.is_one_dim())
        throw wrong_dimension("ext2: input must be 2-dimensional");
    // det(Ind chi) = chi|_{R^x} * omega_R.
    return restrict_to_Rx(v.two_dim()) * sign_char();
}

RealChar det_rep(const VirtualRep& v) {
    if (!v.all_positive()) throw negative_multiplicity();
    RealChar out = trivial_char();
    for (auto& [rep, m] : v.summands()) {
        RealChar d = rep.is_one_dim() ? rep.one_dim() : ext2(rep);
        for (long long i = 0; i < m; ++i) out = out * d;
    }
    return out;
}

// Lambda^2 of a 2-dimensional input: ext2 for an irreducible 2-dim, the
// product for a sum of two characters.
static RealChar ext2_of_dim2(const VirtualRep& v) {
    std::vector<RealChar> chars;
    for (auto& [rep, m] : v.summands()) {
        if (!rep.is_one_dim()) {
            if (m == 1 && v.summand_count() == 1) return ext2(rep);
            throw wrong_dimension("sym_power: unsupported 2-dimensional shape");
        }
        for (long long i = 0; i < m; ++i) chars.push_back(rep.one_dim());
    }
    if (chars.size() != 2)
        throw wrong_dimension("sym_power: unsupported 2-dimensional shape");
    return chars[0] * chars[1];
}

VirtualRep sym_power(long long k, const VirtualRep& v) {
    if (k < 0) throw domain_error("sym_power: k must be nonnegative");
    if (v.dim() != 2 || !v.all_positive())
        throw wrong_dimension("sym_power: input must be 2-dimensional");
    VirtualRep det(ext2_of_dim2(v));

    VirtualRep prev(trivial_char()); // Sym^0
    if (k == 0) return prev;
    VirtualRep cur = v; // Sym^1
    for (long long i = 2; i <= k; ++i) {
        VirtualRep next = tensor(cur, v) - tensor(prev, det);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

VirtualRep dual_rep(const VirtualRep& v) {
    VirtualRep out;
    for (auto& [rep, m] : v.summands()) {
        if (rep.is_one_dim()) {
            const RealChar& c = rep.one_dim();
            out.add(IrredWR(RealChar(c.eps, -c.s)), m);
        } else {
            const CplxChar& t = rep.two_dim();
            out.add(IrredWR::two_dim(-t.nu, -t.mu), m);
        }
    }
    return out;
}

SelfdualType selfdual_type(const IrredWR& x) {
    if (x.is_one_dim())
        return x.one_dim().s == GaussQ{} ? SelfdualType::Orthogonal
                                         : SelfdualType::NotSelfdual;
    const CplxChar& t = x.two_dim();
    if (!(t.mu + t.nu == GaussQ{})) return SelfdualType::NotSelfdual;
    long long p = (t.mu - t.nu).re.num();
    // p odd <=> trivial determinant <=> symplectic.
    return (p % 2 != 0) ? SelfdualType::Symplectic : SelfdualType::Orthogonal;
}

std::vector<GaussQ> inf_char(const VirtualRep& v) {
    std::vector<GaussQ> out;
    for (auto& [rep, m] : v.summands()) {
        long long count = m < 0 ? -m : m;
        for (long long i = 0; i < count; ++i) {
            if (rep.is_one_dim()) {
                out.push_back(rep.one_dim().s);
            } else {
                out.push_back(rep.two_dim().mu);
                out.push_back(rep.two_dim().nu);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_tempered(const VirtualRep& v) {
    for (auto& [rep, m] : v.summands()) {
        if (rep.is_one_dim()) {
            if (!rep.one_dim().s.re.is_zero()) return false;
        } else {
            if (!(rep.two_dim().mu + rep.two_dim().nu).re.is_zero()) return false;
        }
    }
    return true;
}

} // namespace wr
