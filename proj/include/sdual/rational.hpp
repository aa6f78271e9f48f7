#pragma once

// Exact rationals with 64-bit storage. Intermediate products use __int128 and
// any result that no longer fits throws std::overflow_error.

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace sdual {

using i128 = __int128;

namespace detail {

inline i128 gcd128(i128 a, i128 b) noexcept {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational arithmetic overflow");
    return static_cast<long long>(v);
}

inline i128 mul128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational arithmetic overflow");
    return r;
}

inline i128 floor_div(i128 a, i128 b) noexcept {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string s;
    // work on negative values so INT128_MIN is safe
    if (!neg) v = -v;
    while (v != 0) {
        s.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

} // namespace detail

class Rat {
public:
    constexpr Rat() noexcept = default;
    constexpr Rat(long long n) noexcept : num_(n) {} // NOLINT: integers convert implicitly
    Rat(long long n, long long d) { set(n, d); }

    /// Reduces num/den given as wide integers; throws if the reduced value does not fit.
    static Rat from_wide(i128 n, i128 d) {
        Rat r;
        r.set(n, d);
        return r;
    }

    constexpr long long num() const noexcept { return num_; }
    constexpr long long den() const noexcept { return den_; }

    constexpr bool is_zero() const noexcept { return num_ == 0; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }
    constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    Rat operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

    friend Rat operator+(const Rat& x, const Rat& y) {
        return from_wide(static_cast<i128>(x.num_) * y.den_ + static_cast<i128>(y.num_) * x.den_,
                         static_cast<i128>(x.den_) * y.den_);
    }
    friend Rat operator-(const Rat& x, const Rat& y) {
        return from_wide(static_cast<i128>(x.num_) * y.den_ - static_cast<i128>(y.num_) * x.den_,
                         static_cast<i128>(x.den_) * y.den_);
    }
    friend Rat operator*(const Rat& x, const Rat& y) {
        return from_wide(static_cast<i128>(x.num_) * y.num_, static_cast<i128>(x.den_) * y.den_);
    }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num_ == 0) throw domain_error(ErrorKind::DivisionByZero, "rational division by zero");
        return from_wide(static_cast<i128>(x.num_) * y.den_, static_cast<i128>(x.den_) * y.num_);
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rat&, const Rat&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rat& x, const Rat& y) noexcept {
        i128 l = static_cast<i128>(x.num_) * y.den_;
        i128 r = static_cast<i128>(y.num_) * x.den_;
        return l <=> r;
    }

    long long floor() const noexcept { return static_cast<long long>(detail::floor_div(num_, den_)); }
    long double to_ld() const noexcept { return static_cast<long double>(num_) / static_cast<long double>(den_); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "n" or "n/d" with an optional leading sign.
    static Rat parse(std::string_view s) {
        auto slash = s.find('/');
        auto parse_int = [&](std::string_view t, std::size_t off) {
            if (t.empty()) throw parse_error("expected integer", off);
            std::size_t i = 0;
            bool neg = false;
            if (t[0] == '+' || t[0] == '-') {
                neg = t[0] == '-';
                i = 1;
            }
            if (i == t.size()) throw parse_error("expected digits", off + i);
            i128 v = 0;
            for (; i < t.size(); ++i) {
                if (t[i] < '0' || t[i] > '9') throw parse_error(std::string("unexpected '") + t[i] + "'", off + i);
                v = v * 10 + (t[i] - '0');
                if (v > INT64_MAX) throw parse_error("integer too large", off + i);
            }
            return static_cast<long long>(neg ? -v : v);
        };
        if (slash == std::string_view::npos) return Rat(parse_int(s, 0));
        long long d = parse_int(s.substr(slash + 1), slash + 1);
        if (d == 0) throw parse_error("zero denominator", slash + 1);
        return Rat(parse_int(s.substr(0, slash), 0), d);
    }

private:
    void set(i128 n, i128 d) {
        if (d == 0) throw domain_error(ErrorKind::DivisionByZero, "zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = detail::narrow(n);
        den_ = detail::narrow(d);
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

} // namespace sdual
