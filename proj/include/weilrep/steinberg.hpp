#pragma once

#include <variant>

#include "weilrep/wr_reps.hpp"

namespace wr {

// GL(n), Sp(2n), or SO(p,q) with p+q odd.
struct GroupDescriptor {
    enum class Kind { GL, Sp, SOpq };
    Kind kind = Kind::GL;
    long long n = 1; // GL rank, or half-rank for Sp(2n)
    long long p = 0, q = 0;

    bool operator==(const GroupDescriptor&) const = default;

    static GroupDescriptor gl(long long n);
    static GroupDescriptor sp(long long two_n);
    static GroupDescriptor so(long long p, long long q);

    // Dimension of the standard representation of the dual group.
    long long dual_std_dim() const;
};

// Parameter of the Steinberg representation: the principal SL_2 composed
// with D_2, which is Sym^(m-1)(D_2) on a dual group inside GL_m.
VirtualRep steinberg_param(const GroupDescriptor& g);

// Combinatorial discreteness test for a parameter of the given group:
// multiplicity-free sum of selfdual irreducibles of the parity matching
// the dual group (single irreducible for GL).
bool is_discrete_param(const VirtualRep& v, const GroupDescriptor& g);

// Packet size 2^d for the parameter Sym^k(D_2): d = number of summands
// for k odd, one less for k even.
long long packet_size_param(const VirtualRep& v, long long k);

// Closed-form packet size of the Steinberg L-packet: 2^n for Sp(2n),
// (p+q)!/(p!q!) for SO(p,q).
long long steinberg_packet_size(const GroupDescriptor& g);

// |W_G| / |W_K| computed from root data, reported alongside the closed
// form (they disagree already for SO(2,1): 2 vs 3).
Rat weyl_ratio(const GroupDescriptor& g);

} // namespace wr
