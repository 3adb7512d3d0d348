#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cblock {

using Int = std::int64_t;

// Exact rational with a positive, reduced denominator. Intermediate products
// are taken in 128 bits; a result that does not fit back into 64 bits throws.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(Int n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(Int n, Int d) { assign(n, d); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    Int floor() const {
        Int q = num_ / den_;
        if ((num_ % den_ != 0) && (num_ < 0)) --q;
        return q;
    }
    // Fractional part in [0,1).
    Rational frac() const { return *this - Rational(floor()); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return from128(-static_cast<__int128>(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using W = __int128;
        return from128(W(a.num_) * b.den_ + W(b.num_) * a.den_, W(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        using W = __int128;
        return from128(W(a.num_) * b.num_, W(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        using W = __int128;
        return from128(W(a.num_) * b.den_, W(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        using W = __int128;
        W l = W(a.num_) * b.den_, r = W(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    Int num_ = 0;
    Int den_ = 1;

    void assign(Int n, Int d) { *this = from128(n, d); }

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rational: 64-bit overflow");
        Rational r;
        r.num_ = static_cast<Int>(n);
        r.den_ = static_cast<Int>(d);
        return r;
    }
};

inline Int lcm_checked(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
    if (l < 0) l = -l;
    if (l > INT64_MAX) throw std::overflow_error("lcm overflow");
    return static_cast<Int>(l);
}

}  // namespace cblock
