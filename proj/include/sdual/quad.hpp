#pragma once

// Elements p + q*sqrt(D) of a real quadratic field, D squarefree.
//
// A value with q = 0 is stored with D = 0 so that equality is structural. Binary
// operations promote rationals into the field of the other operand; mixing two
// different surds throws MixedField.

#include <cmath>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "rational.hpp"

namespace sdual {

namespace detail {

/// Writes n = k^2 * s with s squarefree; returns (k, s). n >= 0.
inline std::pair<long long, long long> split_square(long long n) {
    long long k = 1, s = 1;
    for (long long f = 2; f * f <= n; ++f) {
        int e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) k *= f;
        if (e % 2) s *= f;
    }
    s *= n;
    return {k, s};
}

/// floor(sqrt(n)) for n >= 0.
inline i128 isqrt(i128 n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// sign(a/b + (c/e) sqrt(D)) with b, e > 0, D > 0.
inline int surd_sign(long long a, long long b, long long c, long long e, long long D) {
    int sp = (a > 0) - (a < 0);
    int sq = (c > 0) - (c < 0);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // opposite signs: compare a^2 e^2 against c^2 D b^2
    std::strong_ordering cmp = std::strong_ordering::equal;
    try {
        i128 l = mul128(mul128(a, a), mul128(e, e));
        i128 r = mul128(mul128(mul128(c, c), D), mul128(b, b));
        cmp = l <=> r;
    } catch (const std::overflow_error&) {
        using boost::multiprecision::cpp_int;
        cpp_int l = cpp_int(a) * a * e * e;
        cpp_int r = cpp_int(c) * c * D * b * b;
        cmp = l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    if (cmp == 0) return 0; // only possible when D is a square, excluded by construction
    return cmp > 0 ? sp : sq;
}

} // namespace detail

class Quad {
public:
    Quad() = default;
    Quad(Rat p) : p_(p) {}                    // NOLINT
    Quad(long long n) : p_(n) {}              // NOLINT
    /// p + q*sqrt(d); d >= 0 need not be squarefree.
    Quad(Rat p, Rat q, long long d) : p_(p), q_(q), d_(d) {
        if (d < 0) throw domain_error(ErrorKind::BadArgument, "negative radicand");
        normalize();
    }

    static Quad sqrt_of(long long d) { return Quad(0, 1, d); }

    const Rat& p() const noexcept { return p_; }
    const Rat& q() const noexcept { return q_; }
    long long D() const noexcept { return d_; }

    bool is_rational() const noexcept { return q_.is_zero(); }
    bool is_zero() const noexcept { return p_.is_zero() && q_.is_zero(); }

    Quad star() const {
        Quad r = *this;
        r.q_ = -q_;
        return r;
    }

    /// x * star(x), a rational.
    Rat norm() const { return p_ * p_ - q_ * q_ * Rat(d_); }

    int sign() const {
        if (q_.is_zero()) return p_.sign();
        return detail::surd_sign(p_.num(), p_.den(), q_.num(), q_.den(), d_);
    }

    Quad operator-() const {
        Quad r;
        r.p_ = -p_;
        r.q_ = -q_;
        r.d_ = d_;
        return r;
    }

    friend Quad operator+(const Quad& x, const Quad& y) {
        long long d = common_d(x, y);
        return Quad(x.p_ + y.p_, x.q_ + y.q_, d);
    }
    friend Quad operator-(const Quad& x, const Quad& y) { return x + (-y); }
    friend Quad operator*(const Quad& x, const Quad& y) {
        long long d = common_d(x, y);
        return Quad(x.p_ * y.p_ + x.q_ * y.q_ * Rat(d), x.p_ * y.q_ + x.q_ * y.p_, d);
    }
    friend Quad operator/(const Quad& x, const Quad& y) {
        if (y.is_zero()) throw domain_error(ErrorKind::DivisionByZero, "division by zero in quadratic field");
        common_d(x, y);
        Rat n = y.norm();
        Quad t = x * y.star();
        return Quad(t.p_ / n, t.q_ / n, t.d_);
    }
    Quad& operator+=(const Quad& o) { return *this = *this + o; }
    Quad& operator-=(const Quad& o) { return *this = *this - o; }
    Quad& operator*=(const Quad& o) { return *this = *this * o; }
    Quad& operator/=(const Quad& o) { return *this = *this / o; }

    friend bool operator==(const Quad&, const Quad&) = default;
    friend std::strong_ordering operator<=>(const Quad& x, const Quad& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    long double to_ld() const noexcept {
        return p_.to_ld() + q_.to_ld() * std::sqrt(static_cast<long double>(d_));
    }

    long long floor() const {
        if (q_.is_zero()) return p_.floor();
        auto g = static_cast<long long>(std::floor(to_ld()));
        while (*this < Quad(g)) --g;
        while (*this >= Quad(g + 1)) ++g;
        return g;
    }

    /// Canonical text: "p", "q*sqrt(D)" or "p+q*sqrt(D)" / "p-q*sqrt(D)".
    std::string str() const {
        if (q_.is_zero()) return p_.str();
        std::string surd = "sqrt(" + std::to_string(d_) + ")";
        Rat aq = abs(q_);
        std::string qs = aq == Rat(1) ? surd : aq.str() + "*" + surd;
        if (p_.is_zero()) return (q_.sign() < 0 ? "-" : "") + qs;
        return p_.str() + (q_.sign() < 0 ? "-" : "+") + qs;
    }

    static Quad parse(std::string_view text);

private:
    static long long common_d(const Quad& x, const Quad& y) {
        if (x.q_.is_zero()) return y.d_;
        if (y.q_.is_zero()) return x.d_;
        if (x.d_ != y.d_)
            throw domain_error(ErrorKind::MixedField, "sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
                                                          std::to_string(y.d_) + ") in one expression");
        return x.d_;
    }

    void normalize() {
        if (d_ != 0 && !q_.is_zero()) {
            auto [k, s] = detail::split_square(d_);
            q_ = q_ * Rat(k);
            d_ = s;
            if (d_ == 1) {
                p_ += q_;
                q_ = 0;
            }
        }
        if (d_ == 0 || q_.is_zero()) {
            q_ = 0;
            d_ = 0;
        }
    }

    Rat p_;
    Rat q_;
    long long d_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Quad& x) { return os << x.str(); }

inline Quad star(const Quad& x) { return x.star(); }
inline Quad abs(const Quad& x) { return x.sign() < 0 ? -x : x; }
inline Quad min(const Quad& x, const Quad& y) { return y < x ? y : x; }
inline Quad max(const Quad& x, const Quad& y) { return x < y ? y : x; }

/// Accepts sums of terms  [+-] r  |  [+-] r*sqrt(D)  |  [+-] sqrt(D) [/ d]  where r is "n" or "n/d".
/// Whitespace is ignored.
inline Quad Quad::parse(std::string_view text) {
    std::string s;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] != ' ' && text[i] != '\t') {
            s.push_back(text[i]);
            pos.push_back(i);
        }
    auto at = [&](std::size_t i) { return i < pos.size() ? pos[i] : text.size(); };
    if (s.empty()) throw parse_error("empty number", 0);

    std::size_t i = 0;
    auto read_uint = [&]() {
        std::size_t start = i;
        i128 v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            v = v * 10 + (s[i] - '0');
            if (v > INT64_MAX) throw parse_error("integer too large", at(i));
            ++i;
        }
        if (i == start) throw parse_error("expected digits", at(i));
        return static_cast<long long>(v);
    };
    auto read_sqrt = [&]() {
        if (s.compare(i, 5, "sqrt(") != 0) throw parse_error("expected 'sqrt('", at(i));
        i += 5;
        long long d = read_uint();
        if (i >= s.size() || s[i] != ')') throw parse_error("expected ')'", at(i));
        ++i;
        return d;
    };

    Quad acc;
    bool first = true;
    while (i < s.size()) {
        int sgn = 1;
        if (s[i] == '+' || s[i] == '-') {
            sgn = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw parse_error(std::string("unexpected '") + s[i] + "'", at(i));
        }
        first = false;
        Quad term;
        if (i < s.size() && s[i] == 's') {
            long long d = read_sqrt();
            Rat coef(1);
            if (i < s.size() && s[i] == '/') {
                ++i;
                long long den = read_uint();
                if (den == 0) throw parse_error("zero denominator", at(i - 1));
                coef = Rat(1, den);
            }
            term = Quad(0, coef, d);
        } else {
            long long n = read_uint();
            Rat r(n);
            if (i < s.size() && s[i] == '/') {
                ++i;
                long long den = read_uint();
                if (den == 0) throw parse_error("zero denominator", at(i - 1));
                r = Rat(n, den);
            }
            if (i < s.size() && s[i] == '*') {
                ++i;
                term = Quad(0, r, read_sqrt());
            } else {
                term = Quad(r);
            }
        }
        acc = acc + (sgn < 0 ? -term : term);
    }
    return acc;
}

} // namespace sdual
