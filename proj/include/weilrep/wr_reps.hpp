#pragma once

#include <compare>
#include <map>
#include <variant>
#include <vector>

#include "weilrep/gaussq.hpp"

namespace wr {

// Character of R^x: t -> sign(t)^eps * |t|^s.
struct RealChar {
    int eps = 0; // 0 or 1
    GaussQ s;

    RealChar() = default;
    RealChar(int e, GaussQ v) : eps(((e % 2) + 2) % 2), s(v) {}

    // Pointwise product of characters.
    RealChar operator*(const RealChar& o) const {
        return RealChar(eps + o.eps, s + o.s);
    }

    bool operator==(const RealChar&) const = default;
    auto operator<=>(const RealChar&) const = default;
};

inline RealChar trivial_char() { return {0, GaussQ{}}; }
inline RealChar sign_char() { return {1, GaussQ{}}; }

// Character of C^x: z -> z^mu * conj(z)^nu, with mu - nu a rational integer.
struct CplxChar {
    GaussQ mu;
    GaussQ nu;

    CplxChar(GaussQ m, GaussQ n);

    bool operator==(const CplxChar&) const = default;
    auto operator<=>(const CplxChar&) const = default;
};

// Irreducible representation of the real Weil group: a character of R^x or
// the 2-dimensional induction of a character of C^x. The 2-dimensional case
// is stored with mu > nu (Ind(mu,nu) and Ind(nu,mu) are the same
// representation).
class IrredWR {
public:
    explicit IrredWR(RealChar c) : rep_(c) {}
    // Normalizes orientation; requires mu - nu a nonzero integer.
    static IrredWR two_dim(GaussQ mu, GaussQ nu);
    // D_l: Ind of z -> e^{(l-1) i theta}, mu = (l-1)/2, nu = -(l-1)/2.
    static IrredWR discrete(long long l);

    bool is_one_dim() const { return std::holds_alternative<RealChar>(rep_); }
    const RealChar& one_dim() const { return std::get<RealChar>(rep_); }
    const CplxChar& two_dim() const { return std::get<CplxChar>(rep_); }

    long long dim() const { return is_one_dim() ? 1 : 2; }

    bool operator==(const IrredWR&) const = default;
    auto operator<=>(const IrredWR&) const = default;

private:
    explicit IrredWR(CplxChar c) : rep_(c) {}
    std::variant<RealChar, CplxChar> rep_;
};

// Finite Z-linear combination of irreducibles: an element of the
// Grothendieck ring of finite-dimensional W_R-representations. Canonical
// (sorted, nonzero multiplicities), so equality is structural.
class VirtualRep {
public:
    VirtualRep() = default;
    VirtualRep(IrredWR r) { add(r, 1); }
    VirtualRep(RealChar c) { add(IrredWR(c), 1); }

    void add(const IrredWR& r, long long mult);
    VirtualRep operator+(const VirtualRep& o) const;
    VirtualRep operator-(const VirtualRep& o) const;

    const std::map<IrredWR, long long>& summands() const { return terms_; }
    long long dim() const;
    long long summand_count() const { return static_cast<long long>(terms_.size()); }
    bool all_positive() const;
    // All multiplicities exactly 1.
    bool multiplicity_free() const;
    bool empty() const { return terms_.empty(); }

    bool operator==(const VirtualRep&) const = default;
    auto operator<=>(const VirtualRep&) const = default;

private:
    std::map<IrredWR, long long> terms_;
};

// --- ring operations ---

// Induction of a C^x character to W_R. Splits into two characters of R^x
// exactly when mu == nu.
VirtualRep induce(GaussQ mu, GaussQ nu);

// Restriction of a C^x character to R^x. On t < 0, t = e^{i pi}|t| gives
// the sign contribution (-1)^(mu-nu), hence eps = (mu - nu) mod 2.
RealChar restrict_to_Rx(const CplxChar& chi);

VirtualRep tensor(const VirtualRep& x, const VirtualRep& y);

// Lambda^2 of a 2-dimensional irreducible: its determinant character.
RealChar ext2(const IrredWR& v);

// Determinant of a genuine (nonnegative) representation.
RealChar det_rep(const VirtualRep& v);

// Sym^k of a 2-dimensional representation, by the recurrence
// Sym^k = Sym^(k-1) (x) v - Sym^(k-2) (x) Lambda^2(v).
VirtualRep sym_power(long long k, const VirtualRep& v);

VirtualRep dual_rep(const VirtualRep& v);

enum class SelfdualType { Orthogonal, Symplectic, NotSelfdual };

SelfdualType selfdual_type(const IrredWR& x);

// Multiset of C^x-exponents: {s} per character, {mu, nu} per 2-dim summand.
std::vector<GaussQ> inf_char(const VirtualRep& v);

// All central exponents purely imaginary.
bool is_tempered(const VirtualRep& v);

} // namespace wr
