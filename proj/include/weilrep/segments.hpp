#pragma once

#include <optional>
#include <variant>

#include "weilrep/wr_reps.hpp"

namespace wr {

// Integer-step interval [low, high]. A point segment only determines a
// character on the positive reals; the optional parity resolves it.
struct Segment {
    GaussQ low;
    GaussQ high;
    std::optional<int> point_parity;

    Segment(GaussQ lo, GaussQ hi, std::optional<int> parity = std::nullopt);

    bool is_point() const { return low == high; }
    // high - low, a nonnegative integer.
    long long length() const { return (high - low).re.num(); }

    bool operator==(const Segment&) const = default;
};

// One factor of a parabolically induced representation: a character of
// GL_1(R) or essentially discrete series data on GL_2(R).
struct InducedFactor {
    struct Char {
        int eps = 0;
        GaussQ s;
        bool operator==(const Char&) const = default;
        auto operator<=>(const Char&) const = default;
    };
    struct DS {
        long long p = 1; // >= 1; the factor sits in nu^(p/2) x nu^(-p/2) w^(p+1)
        GaussQ s;        // twist
        bool operator==(const DS&) const = default;
        auto operator<=>(const DS&) const = default;
    };

    std::variant<Char, DS> data;

    InducedFactor(Char c) : data(c) {}
    InducedFactor(DS d) : data(d) {
        if (d.p < 1) throw domain_error("InducedFactor: DS requires p >= 1");
    }
    static InducedFactor character(int eps, GaussQ s) { return InducedFactor(Char{eps, s}); }
    static InducedFactor ds(long long p, GaussQ s) { return InducedFactor(DS{p, s}); }

    bool is_char() const { return std::holds_alternative<Char>(data); }
    const Char& as_char() const { return std::get<Char>(data); }
    const DS& as_ds() const { return std::get<DS>(data); }
    long long dim() const { return is_char() ? 1 : 2; }

    // Center exponent: s for both shapes.
    GaussQ center() const { return is_char() ? as_char().s : as_ds().s; }

    // Langlands parameter of the factor.
    VirtualRep param() const;

    bool operator==(const InducedFactor&) const = default;
    auto operator<=>(const InducedFactor&) const = default;
};

// DS(p, s) -> [s - p/2, s + p/2]; a character becomes a parity-carrying point.
Segment seg_of(const InducedFactor& f);

// Essentially discrete series attached to a segment of length >= 1.
IrredWR ds_of(const Segment& seg);

enum class PairClass { NotIntegral, Equal, Contained, Disjoint, Overlap };

// Relative position of two segments of length >= 1 on a common Z-line.
PairClass classify_pair(const Segment& s1, const Segment& s2);

} // namespace wr
