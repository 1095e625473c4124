#include "weilrep/steinberg.hpp"

namespace wr {

GroupDescriptor GroupDescriptor::gl(long long n) {
    if (n < 1) throw domain_error("GL(n) requires n >= 1");
    return {Kind::GL, n, 0, 0};
}

GroupDescriptor GroupDescriptor::sp(long long two_n) {
    if (two_n < 2 || two_n % 2 != 0)
        throw domain_error("Sp(2n) requires an even argument >= 2");
    return {Kind::Sp, two_n / 2, 0, 0};
}

GroupDescriptor GroupDescriptor::so(long long p, long long q) {
    if (p < 0 || q < 0 || (p + q) % 2 == 0)
        throw domain_error("SO(p,q) requires p, q >= 0 with p+q odd");
    return {Kind::SOpq, 0, p, q};
}

long long GroupDescriptor::dual_std_dim() const {
    switch (kind) {
        case Kind::GL: return n;
        case Kind::Sp: return 2 * n + 1; // dual SO_{2n+1}
        case Kind::SOpq: return p + q - 1; // dual Sp_{p+q-1}
    }
    return 0;
}

VirtualRep steinberg_param(const GroupDescriptor& g) {
    VirtualRep d2(IrredWR::discrete(2));
    switch (g.kind) {
        case GroupDescriptor::Kind::GL: return sym_power(g.n - 1, d2);
        case GroupDescriptor::Kind::Sp: return sym_power(2 * g.n, d2);
        case GroupDescriptor::Kind::SOpq: return sym_power(g.p + g.q - 2, d2);
    }
    return {};
}

bool is_discrete_param(const VirtualRep& v, const GroupDescriptor& g) {
    if (v.dim() != g.dual_std_dim())
        throw dimension_mismatch("parameter dimension does not match the group");
    if (!v.all_positive()) return false;

    if (g.kind == GroupDescriptor::Kind::GL)
        return v.summand_count() == 1 && v.multiplicity_free();

    SelfdualType required = g.kind == GroupDescriptor::Kind::Sp
                                ? SelfdualType::Orthogonal
                                : SelfdualType::Symplectic;
    if (!v.multiplicity_free()) return false;
    for (auto& [rep, m] : v.summands())
        if (selfdual_type(rep) != required) return false;
    return true;
}

long long packet_size_param(const VirtualRep& v, long long k) {
    long long d = v.summand_count();
    if (k % 2 == 0) d -= 1;
    return 1LL << d;
}

namespace {

long long factorial(long long n) {
    long long f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

// |W(SO(m))|: 2^k k! for m = 2k+1, 2^(k-1) k! for m = 2k >= 4, else 1.
long long so_weyl_order(long long m) {
    if (m <= 2) return 1;
    long long k = m / 2;
    long long order = factorial(k) * (1LL << k);
    if (m % 2 == 0) order /= 2;
    return order;
}

} // namespace

long long steinberg_packet_size(const GroupDescriptor& g) {
    switch (g.kind) {
        case GroupDescriptor::Kind::GL:
            throw unsupported_group("packet size formula applies to Sp and SO(p,q)");
        case GroupDescriptor::Kind::Sp:
            return 1LL << g.n;
        case GroupDescriptor::Kind::SOpq:
            return factorial(g.p + g.q) / (factorial(g.p) * factorial(g.q));
    }
    return 0;
}

Rat weyl_ratio(const GroupDescriptor& g) {
    switch (g.kind) {
        case GroupDescriptor::Kind::GL:
            throw unsupported_group("Weyl ratio applies to Sp and SO(p,q)");
        case GroupDescriptor::Kind::Sp:
            // |W_G| = 2^n n!, |W_K| = |W(U(n))| = n!.
            return Rat(1LL << g.n);
        case GroupDescriptor::Kind::SOpq: {
            long long half = (g.p + g.q - 1) / 2;
            long long wg = factorial(half) * (1LL << half);
            return Rat(wg, so_weyl_order(g.p) * so_weyl_order(g.q));
        }
    }
    return Rat(0);
}

} // namespace wr
