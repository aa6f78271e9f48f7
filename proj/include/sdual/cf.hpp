#pragma once

// Eventually periodic continued fractions of quadratic irrationals.
//
// Canonical form: the preperiod holds a0 and is as short as possible, the period
// is minimal and starts right after the preperiod. A rational has an empty period.
// Text form: [a0; a1, a2, (p1, p2, ...)].

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "quad.hpp"

namespace sdual {

struct CF {
    std::vector<long long> preperiod; // a0, a1, ..., never empty
    std::vector<long long> period;    // empty for rationals
    std::optional<Quad> value_hint;

    bool is_periodic() const noexcept { return !period.empty(); }

    friend bool operator==(const CF& x, const CF& y) noexcept {
        return x.preperiod == y.preperiod && x.period == y.period;
    }
};

namespace detail {

inline void check_cf(const CF& c) {
    if (c.preperiod.empty()) throw domain_error(ErrorKind::BadArgument, "continued fraction without a0");
    for (std::size_t i = 1; i < c.preperiod.size(); ++i)
        if (c.preperiod[i] < 1) throw domain_error(ErrorKind::BadArgument, "partial quotients after a0 must be >= 1");
    for (long long p : c.period)
        if (p < 1) throw domain_error(ErrorKind::BadArgument, "partial quotients after a0 must be >= 1");
}

inline void rotate_right(std::vector<long long>& v) {
    if (!v.empty()) std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
}

} // namespace detail

/// Brings c to canonical form (minimal period, shortest preperiod, finite tail not ending in 1).
inline CF canonical(CF c) {
    detail::check_cf(c);
    if (c.period.empty()) {
        auto& v = c.preperiod;
        if (v.size() > 1 && v.back() == 1) {
            v.pop_back();
            v.back() += 1;
        }
        return c;
    }
    std::size_t n = c.period.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = c.period[i] == c.period[i - d];
        if (ok) {
            c.period.resize(d);
            break;
        }
    }
    while (c.preperiod.size() > 1 && c.preperiod.back() == c.period.back()) {
        c.preperiod.pop_back();
        detail::rotate_right(c.period);
    }
    return c;
}

inline CF cf_expand(const Quad& x) {
    CF out;
    out.value_hint = x;
    if (x.is_rational()) {
        Rat r = x.p();
        for (;;) {
            long long a = r.floor();
            out.preperiod.push_back(a);
            Rat f = r - Rat(a);
            if (f.is_zero()) break;
            r = Rat(1) / f;
        }
        return out;
    }

    using detail::mul128;
    // x = (A + B sqrt(D)) / C with integers, then (P + sqrt(N)) / Q with Q | N - P^2
    i128 pd = x.p().den(), qd = x.q().den();
    i128 C = pd / detail::gcd128(pd, qd) * qd;
    i128 A = mul128(x.p().num(), C / pd);
    i128 B = mul128(x.q().num(), C / qd);
    if (B < 0) {
        A = -A;
        B = -B;
        C = -C;
    }
    i128 N = mul128(mul128(B, B), x.D());
    i128 absC = C < 0 ? -C : C;
    i128 P = mul128(A, absC);
    N = mul128(N, mul128(C, C));
    i128 Q = mul128(C, absC);
    const i128 s = detail::isqrt(N);

    std::vector<long long> quotients;
    std::map<std::pair<i128, i128>, std::size_t> seen;
    for (std::size_t step = 0;; ++step) {
        if (step > 200000) throw std::overflow_error("continued fraction period too long");
        auto [it, fresh] = seen.emplace(std::make_pair(P, Q), quotients.size());
        if (!fresh) {
            std::size_t start = it->second;
            out.preperiod.assign(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(start));
            out.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(start), quotients.end());
            if (out.preperiod.empty()) {
                out.preperiod.push_back(out.period.front());
                std::rotate(out.period.begin(), out.period.begin() + 1, out.period.end());
            }
            return out;
        }
        i128 a = Q > 0 ? detail::floor_div(P + s, Q) : detail::floor_div(P + s + 1, Q);
        quotients.push_back(detail::narrow(a));
        i128 P2 = mul128(a, Q) - P;
        i128 Q2 = (N - mul128(P2, P2)) / Q;
        P = P2;
        Q = Q2;
    }
}

namespace detail {

struct Mob {
    // x -> (a x + b) / (c x + d); long periods outgrow 128 bits before the content is divided out
    using Big = boost::multiprecision::cpp_int;
    Big a = 1, b = 0, c = 0, d = 1;

    void push(long long q) {
        // compose with x -> q + 1/x
        Big na = a * q + b, nc = c * q + d;
        b = std::move(a);
        d = std::move(c);
        a = std::move(na);
        c = std::move(nc);
    }
};

inline long long narrow_big(const Mob::Big& v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational arithmetic overflow");
    return static_cast<long long>(v);
}

} // namespace detail

inline Quad cf_value(const CF& c) {
    detail::check_cf(c);
    if (c.period.empty()) {
        Rat v(c.preperiod.back());
        for (auto it = c.preperiod.rbegin() + 1; it != c.preperiod.rend(); ++it) v = Rat(*it) + Rat(1) / v;
        return Quad(v);
    }
    detail::Mob per;
    for (long long q : c.period) per.push(q);
    // y = (A y + B) / (C y + D)  =>  C y^2 + (D - A) y - B = 0, positive root
    // divide out the content so the discriminant is that of the primitive form
    using Big = detail::Mob::Big;
    Big Cc = per.c, diff = per.a - per.d, B = per.b;
    const Big g = boost::multiprecision::gcd(boost::multiprecision::gcd(Cc, diff), B);
    Cc /= g;
    diff /= g;
    B /= g;
    const Big disc = diff * diff + 4 * B * Cc;
    const long long den2 = detail::narrow_big(2 * Cc);
    Quad y(Rat(detail::narrow_big(diff), den2), Rat(1, den2), detail::narrow_big(disc));
    detail::Mob pre;
    for (long long q : c.preperiod) pre.push(q);
    using detail::narrow_big;
    return (Quad(narrow_big(pre.a)) * y + Quad(narrow_big(pre.b))) / (Quad(narrow_big(pre.c)) * y + Quad(narrow_big(pre.d)));
}

namespace detail {

/// Writes a canonical alpha in (0,1) as [0; a1, (gamma)] with gamma purely periodic.
/// Returns false when the preperiod after a0 is longer than one term.
inline bool unroll_one(const CF& c, long long& a1, std::vector<long long>& gamma) {
    if (c.preperiod.size() == 1) {
        a1 = c.period.front();
        gamma.assign(c.period.begin() + 1, c.period.end());
        gamma.push_back(c.period.front());
        return true;
    }
    if (c.preperiod.size() == 2) {
        a1 = c.preperiod[1];
        gamma = c.period;
        return true;
    }
    return false;
}

inline bool is_palindrome(const std::vector<long long>& v) { return std::equal(v.begin(), v.end(), v.rbegin()); }

} // namespace detail

/// Continued fraction of the dual frequency, computed from the digits of alpha alone.
inline CF cf_dual_transform(const CF& input) {
    CF c = canonical(input);
    if (!c.is_periodic() || c.preperiod.front() != 0)
        throw domain_error(ErrorKind::NotSturmShape, "expected a periodic expansion [0; ...]");

    CF out;
    long long a1 = 0;
    std::vector<long long> g;
    if (detail::unroll_one(c, a1, g)) {
        // alpha = [0; a1, (c1..cm)]; beta = -1/gamma' has the reversed period
        const std::size_t m = g.size();
        std::vector<long long> rev(g.rbegin(), g.rend());
        long long d = rev[0] - (a1 - 1);
        if (d >= 1) {
            out.preperiod = {0, 1, d};
            out.preperiod.insert(out.preperiod.end(), rev.begin() + 1, rev.end());
            out.period = rev;
        } else if (d == 0) {
            auto at = [&](std::size_t k) { return rev[k % m]; };
            out.preperiod = {0, 1 + at(1)};
            for (std::size_t k = 2; k < m + 2; ++k) out.period.push_back(at(k));
        } else {
            throw domain_error(ErrorKind::NotSturmShape, "last period term smaller than a1 - 1");
        }
    } else if (c.preperiod.size() == 3 && c.preperiod[1] == 1) {
        // alpha = [0; 1, n2, (e1..em)]
        long long n2 = c.preperiod[2];
        std::vector<long long> rev(c.period.rbegin(), c.period.rend());
        long long d = rev[0] + 1 - n2;
        if (d < 1) throw domain_error(ErrorKind::NotSturmShape, "last period term smaller than n2");
        out.preperiod = {0, d};
        out.preperiod.insert(out.preperiod.end(), rev.begin() + 1, rev.end());
        out.period = rev;
    } else {
        throw domain_error(ErrorKind::NotSturmShape, "preperiod too long for a Sturm number");
    }
    return canonical(out);
}

/// alpha = [0; 1+n1, (n2..nk, n1)] or [0; 1, (n1..nk)] with (n1..nk) a palindrome.
inline bool is_selfdual_frequency(const CF& input) {
    CF c = canonical(input);
    if (!c.is_periodic() || c.preperiod.front() != 0) return false;
    long long a1 = 0;
    std::vector<long long> p;
    if (!detail::unroll_one(c, a1, p)) return false;
    if (a1 == 1) return detail::is_palindrome(p);
    if (p.back() != a1 - 1) return false;
    detail::rotate_right(p);
    return detail::is_palindrome(p);
}

inline std::string to_string(const CF& c) {
    std::string s = "[" + std::to_string(c.preperiod.front());
    std::vector<std::string> parts;
    for (std::size_t i = 1; i < c.preperiod.size(); ++i) parts.push_back(std::to_string(c.preperiod[i]));
    if (!c.period.empty()) {
        std::string p = "(";
        for (std::size_t i = 0; i < c.period.size(); ++i) p += (i ? ", " : "") + std::to_string(c.period[i]);
        parts.push_back(p + ")");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "; ") + parts[i];
    return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, const CF& c) { return os << to_string(c); }

inline CF parse_cf(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto expect = [&](char ch) {
        skip();
        if (i >= text.size() || text[i] != ch) throw parse_error(std::string("expected '") + ch + "'", i);
        ++i;
    };
    auto read_int = [&]() {
        skip();
        bool neg = false;
        if (i < text.size() && text[i] == '-') {
            neg = true;
            ++i;
        }
        std::size_t start = i;
        i128 v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            v = v * 10 + (text[i] - '0');
            if (v > INT64_MAX) throw parse_error("integer too large", i);
            ++i;
        }
        if (i == start) throw parse_error("expected integer", i);
        return static_cast<long long>(neg ? -v : v);
    };

    CF c;
    expect('[');
    c.preperiod.push_back(read_int());
    skip();
    if (i < text.size() && text[i] == ';') {
        ++i;
        for (;;) {
            skip();
            if (i < text.size() && text[i] == '(') {
                ++i;
                for (;;) {
                    c.period.push_back(read_int());
                    skip();
                    if (i < text.size() && text[i] == ',') {
                        ++i;
                        continue;
                    }
                    break;
                }
                expect(')');
                break;
            }
            c.preperiod.push_back(read_int());
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
    }
    expect(']');
    skip();
    if (i != text.size()) throw parse_error("trailing characters", i);
    try {
        return canonical(c);
    } catch (const domain_error& e) {
        throw parse_error(e.what(), 0);
    }
}

} // namespace sdual
