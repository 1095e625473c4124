#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wr {

// Exact rational number. Always stored in lowest terms with a positive
// denominator, so structural equality equals semantic equality.
class Rat {
    long long num_ = 0;
    long long den_ = 1;

    constexpr void reduce() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
    }

public:
    constexpr Rat() = default;
    constexpr Rat(long long n) : num_(n), den_(1) {}
    constexpr Rat(long long n, long long d) : num_(n), den_(d) { reduce(); }

    constexpr long long num() const { return num_; }
    constexpr long long den() const { return den_; }

    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_integer() const { return den_ == 1; }
    // In (1/2)Z but not Z.
    constexpr bool is_strict_half_integer() const { return den_ == 2; }
    constexpr bool is_half_integral() const { return den_ == 1 || den_ == 2; }

    constexpr Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    constexpr Rat operator+(const Rat& o) const {
        return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    constexpr Rat operator-(const Rat& o) const {
        return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    constexpr Rat operator*(const Rat& o) const {
        return Rat(num_ * o.num_, den_ * o.den_);
    }
    constexpr Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(num_ * o.den_, den_ * o.num_);
    }

    constexpr Rat& operator+=(const Rat& o) { return *this = *this + o; }
    constexpr Rat& operator-=(const Rat& o) { return *this = *this - o; }
    constexpr Rat& operator*=(const Rat& o) { return *this = *this * o; }

    constexpr bool operator==(const Rat& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    constexpr std::strong_ordering operator<=>(const Rat& o) const {
        long long lhs = num_ * o.den_;
        long long rhs = o.num_ * den_;
        return lhs <=> rhs;
    }

    constexpr Rat abs() const { return num_ < 0 ? -*this : *this; }

    // Parity of an integer-valued rational (0 or 1). Caller must ensure
    // is_integer().
    constexpr int parity() const {
        if (den_ != 1) throw std::domain_error("Rat: parity of non-integer");
        return static_cast<int>(((num_ % 2) + 2) % 2);
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }
};

inline Rat operator*(long long k, const Rat& r) { return Rat(k) * r; }

} // namespace wr
