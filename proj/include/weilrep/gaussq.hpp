#pragma once

#include <compare>
#include <string>

#include "weilrep/errors.hpp"
#include "weilrep/rational.hpp"

namespace wr {

// Gaussian rational: exact real and imaginary parts. All exponents in the
// library live here; no floating point anywhere.
struct GaussQ {
    Rat re;
    Rat im;

    constexpr GaussQ() = default;
    constexpr GaussQ(Rat r) : re(r) {}
    constexpr GaussQ(long long r) : re(r) {}
    constexpr GaussQ(Rat r, Rat i) : re(r), im(i) {}

    constexpr bool is_real() const { return im.is_zero(); }

    constexpr GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
    constexpr GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
    constexpr GaussQ operator-() const { return {-re, -im}; }

    constexpr bool operator==(const GaussQ& o) const = default;
    // Structural order (re, then im); used only for canonical sorting,
    // not for the domain comparison real_compare below.
    constexpr std::strong_ordering operator<=>(const GaussQ& o) const {
        if (auto c = re <=> o.re; c != 0) return c;
        return im <=> o.im;
    }

    std::string str() const {
        if (im.is_zero()) return re.str();
        if (im > Rat(0)) return re.str() + "+" + im.str() + "*i";
        return re.str() + "-" + (-im).str() + "*i";
    }
};

// Classification of a difference x - y, the shape every criterion in the
// library dispatches on.
enum class DiffKind { NotRealIntegral, Integer, HalfIntegerOnly, OtherReal };

struct DiffClass {
    DiffKind kind;
    // Valid only for kind == Integer.
    long long k = 0;

    bool operator==(const DiffClass&) const = default;
};

inline DiffClass diff_class(const GaussQ& x, const GaussQ& y) {
    GaussQ d = x - y;
    if (!d.is_real()) return {DiffKind::NotRealIntegral};
    if (d.re.is_integer()) return {DiffKind::Integer, d.re.num()};
    if (d.re.is_strict_half_integer()) return {DiffKind::HalfIntegerOnly};
    return {DiffKind::OtherReal};
}

enum class Cmp { Less, Equal, Greater };

// Compare real parts; only defined when imaginary parts agree.
inline Cmp real_compare(const GaussQ& x, const GaussQ& y) {
    if (x.im != y.im) throw incomparable_imaginary_parts();
    auto c = x.re <=> y.re;
    if (c < 0) return Cmp::Less;
    if (c > 0) return Cmp::Greater;
    return Cmp::Equal;
}

} // namespace wr
