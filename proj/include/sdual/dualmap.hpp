#pragma once

// Unit segments in Z^2, the geometric extension E1 of a substitution, its dual
// E1*, strand codings, dual substitutions and the stepped line S_alpha.

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "invert.hpp"
#include "quad.hpp"
#include "spectral.hpp"
#include "subst.hpp"

namespace sdual {

/// A: W -> W+e_a, B: W -> W+e_b, Astar: vertical W -> W+e_b, Bstar: horizontal W -> W+e_a.
enum class SegKind { A, B, Astar, Bstar };

constexpr bool is_dual(SegKind k) noexcept { return k == SegKind::Astar || k == SegKind::Bstar; }

constexpr SegKind primal_kind(Letter x) noexcept { return x == Letter::a ? SegKind::A : SegKind::B; }
constexpr SegKind dual_kind(Letter x) noexcept { return x == Letter::a ? SegKind::Astar : SegKind::Bstar; }
constexpr Letter kind_letter(SegKind k) noexcept {
    return (k == SegKind::A || k == SegKind::Astar) ? Letter::a : Letter::b;
}

struct Point {
    long long x = 0;
    long long y = 0;

    friend Point operator+(Point p, Point q) noexcept { return {p.x + q.x, p.y + q.y}; }
    friend bool operator==(Point, Point) noexcept = default;
    friend auto operator<=>(Point, Point) noexcept = default;
};

inline Point to_point(AbelVec v) noexcept { return {v.na, v.nb}; }
inline AbelVec to_abel(Point p) noexcept { return {p.x, p.y}; }

struct Segment {
    Point origin;
    SegKind kind = SegKind::A;

    /// Start and end of the traversal. Dual strands run from upper left to lower
    /// right, so a vertical Astar segment is traversed downwards.
    Point start() const noexcept { return kind == SegKind::Astar ? origin + Point{0, 1} : origin; }
    Point end() const noexcept {
        switch (kind) {
        case SegKind::A: return origin + Point{1, 0};
        case SegKind::B: return origin + Point{0, 1};
        case SegKind::Astar: return origin;
        default: return origin + Point{1, 0};
        }
    }
    /// Position along the projection line: x+y for primal, x-y of the start for dual.
    long long key() const noexcept {
        Point s = start();
        return is_dual(kind) ? s.x - s.y : s.x + s.y;
    }

    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

inline std::string to_string(const Segment& s) {
    static const char* names[] = {"a", "b", "a*", "b*"};
    return "(" + std::to_string(s.origin.x) + "," + std::to_string(s.origin.y) + ";" +
           names[static_cast<int>(s.kind)] + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Segment& s) { return os << to_string(s); }

/// Parses "(x,y;a*)"; whitespace is ignored.
inline Segment parse_segment(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.size() < 7 || s.front() != '(' || s.back() != ')') throw parse_error("expected (x,y;k)", 0);
    auto comma = s.find(',');
    auto semi = s.find(';');
    if (comma == std::string::npos || semi == std::string::npos || semi < comma)
        throw parse_error("expected (x,y;k)", 0);
    Segment seg;
    try {
        std::size_t used = 0;
        seg.origin.x = std::stoll(s.substr(1, comma - 1), &used);
        if (used != comma - 1) throw parse_error("bad x coordinate", 1);
        seg.origin.y = std::stoll(s.substr(comma + 1, semi - comma - 1), &used);
        if (used != semi - comma - 1) throw parse_error("bad y coordinate", comma + 1);
    } catch (const std::logic_error&) {
        throw parse_error("bad coordinate", 1);
    }
    std::string k = s.substr(semi + 1, s.size() - semi - 2);
    if (k == "a")
        seg.kind = SegKind::A;
    else if (k == "b")
        seg.kind = SegKind::B;
    else if (k == "a*")
        seg.kind = SegKind::Astar;
    else if (k == "b*")
        seg.kind = SegKind::Bstar;
    else
        throw parse_error("unknown segment kind '" + k + "'", semi + 1);
    return seg;
}

/// Finite multiset of segments.
class StrandSum {
public:
    StrandSum() = default;
    StrandSum(std::initializer_list<Segment> segs) {
        for (const auto& s : segs) add(s);
    }

    void add(const Segment& s, long long mult = 1) {
        if (mult <= 0) return;
        mult_[s] += mult;
    }
    void add(const StrandSum& o) {
        for (const auto& [s, m] : o.mult_) add(s, m);
    }

    long long multiplicity(const Segment& s) const {
        auto it = mult_.find(s);
        return it == mult_.end() ? 0 : it->second;
    }
    long long total() const noexcept {
        long long n = 0;
        for (const auto& [s, m] : mult_) n += m;
        return n;
    }
    long long max_multiplicity() const noexcept {
        long long n = 0;
        for (const auto& [s, m] : mult_) n = std::max(n, m);
        return n;
    }
    std::size_t distinct() const noexcept { return mult_.size(); }
    bool empty() const noexcept { return mult_.empty(); }
    bool all_dual() const noexcept {
        return std::all_of(mult_.begin(), mult_.end(), [](const auto& e) { return is_dual(e.first.kind); });
    }
    bool all_primal() const noexcept {
        return std::none_of(mult_.begin(), mult_.end(), [](const auto& e) { return is_dual(e.first.kind); });
    }

    const std::map<Segment, long long>& entries() const noexcept { return mult_; }

    friend bool operator==(const StrandSum&, const StrandSum&) = default;

private:
    std::map<Segment, long long> mult_;
};

inline std::string to_string(const StrandSum& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& [seg, m] : s.entries()) {
        for (long long i = 0; i < m; ++i) {
            out += (first ? "" : ", ") + to_string(seg);
            first = false;
        }
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// E1 and E1*

/// E1(s)(W,i) = sum_k (M W + A(s(i)[0..k-1]), s(i)_k).
inline StrandSum e1_apply(const Substitution& sub, const StrandSum& in) {
    if (!in.all_primal()) throw domain_error(ErrorKind::BadArgument, "E1 acts on primal segments");
    const IntMat2 M = matrix(sub);
    StrandSum out;
    for (const auto& [seg, m] : in.entries()) {
        Point base = to_point(M.apply(to_abel(seg.origin)));
        const PosWord& img = sub.image(kind_letter(seg.kind));
        AbelVec pre;
        for (std::size_t k = 0; k < img.size(); ++k) {
            out.add({base + to_point(pre), primal_kind(img[k])}, m);
            pre = pre + (img[k] == Letter::a ? AbelVec{1, 0} : AbelVec{0, 1});
        }
    }
    return out;
}

/// E1*(s)(W,i*) = sum over s(j)_k = i of (M^-1 (W + A(suffix of s(j) after k)), j*).
inline StrandSum e1_star_apply(const Substitution& sub, const StrandSum& in) {
    if (!in.all_dual()) throw domain_error(ErrorKind::BadArgument, "E1* acts on dual segments");
    if (!is_unimodular(sub)) throw domain_error(ErrorKind::NotUnimodular, sub.str() + " is not unimodular");
    const IntMat2 Minv = matrix(sub).unimodular_inverse();
    StrandSum out;
    for (const auto& [seg, m] : in.entries()) {
        const Letter i = kind_letter(seg.kind);
        for (Letter j : {Letter::a, Letter::b}) {
            const PosWord& img = sub.image(j);
            AbelVec suffix;
            for (std::size_t k = img.size(); k-- > 0;) {
                if (img[k] == i) {
                    Point v = to_point(Minv.apply(to_abel(seg.origin) + suffix));
                    out.add({v, dual_kind(j)}, m);
                }
                suffix = suffix + (img[k] == Letter::a ? AbelVec{1, 0} : AbelVec{0, 1});
            }
        }
    }
    return out;
}

inline StrandSum e1_star_power(const Substitution& sub, StrandSum s, unsigned n) {
    for (unsigned i = 0; i < n; ++i) s = e1_star_apply(sub, s);
    return s;
}

// ---------------------------------------------------------------------------
// strands

namespace detail {

inline std::optional<std::vector<Segment>> chain(const StrandSum& s) {
    std::vector<Segment> v;
    for (const auto& [seg, m] : s.entries()) {
        if (m != 1) return std::nullopt;
        v.push_back(seg);
    }
    std::sort(v.begin(), v.end(), [](const Segment& x, const Segment& y) { return x.key() < y.key(); });
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1].end() != v[i].start()) return std::nullopt;
    return v;
}

} // namespace detail

inline bool is_strand(const StrandSum& s) { return s.all_primal() && detail::chain(s).has_value(); }
inline bool is_dual_strand(const StrandSum& s) { return s.all_dual() && detail::chain(s).has_value(); }

inline std::vector<Segment> sort_along(const StrandSum& s) {
    if (!s.all_primal() && !s.all_dual()) throw domain_error(ErrorKind::NotAStrand, "mixed primal and dual segments");
    auto v = detail::chain(s);
    if (!v) throw domain_error(ErrorKind::NotAStrand, to_string(s) + " is not a strand");
    return *v;
}

inline PosWord code_strand(const StrandSum& s) {
    if (!s.all_primal()) throw domain_error(ErrorKind::NotAStrand, "expected primal segments");
    PosWord w;
    for (const Segment& seg : sort_along(s)) w.push_back(kind_letter(seg.kind));
    return w;
}

/// Astar codes as a, Bstar as b, in traversal order.
inline PosWord code_dual_strand(const StrandSum& s) {
    if (!s.all_dual()) throw domain_error(ErrorKind::NotAStrand, "expected dual segments");
    PosWord w;
    for (const Segment& seg : sort_along(s)) w.push_back(kind_letter(seg.kind));
    return w;
}

/// Coding of E1*(s)(0, x*) for x = a, b, without the determinant guard.
inline Substitution dual_coding(const Substitution& sub) {
    PosWord ia = code_dual_strand(e1_star_apply(sub, StrandSum{{{0, 0}, SegKind::Astar}}));
    PosWord ib = code_dual_strand(e1_star_apply(sub, StrandSum{{{0, 0}, SegKind::Bstar}}));
    return {ia, ib};
}

inline Substitution dual_substitution(const Substitution& sub) {
    if (det(sub) == -1)
        throw domain_error(ErrorKind::DeterminantMinusOne, "dual substitution needs determinant +1; use the square of " + sub.str());
    if (!is_invertible(sub)) throw domain_error(ErrorKind::NotInvertible, sub.str() + " is not invertible");
    Substitution d = dual_coding(sub);
    if (matrix(d) != matrix(sub).transpose())
        throw std::logic_error("dual of " + sub.str() + " does not have the transposed matrix");
    if (!is_invertible(d)) throw std::logic_error("dual of " + sub.str() + " is not invertible");
    return d;
}

/// Dual of a single generator. E has determinant -1, so it bypasses the guard.
inline Substitution generator_dual(Generator g) { return dual_coding(generator_subst(g)); }

// ---------------------------------------------------------------------------
// stepped line S_alpha

/// (W, i*) lies in S_alpha iff 0 <= <W,v> < <e_i,v> with v = (1, ell).
inline bool in_S_alpha(const Segment& seg, const SpectralData& s) {
    if (!is_dual(seg.kind)) throw domain_error(ErrorKind::BadArgument, "S_alpha holds dual segments");
    Quad pairing = Quad(seg.origin.x) + Quad(seg.origin.y) * s.ell;
    Quad upper = seg.kind == SegKind::Astar ? Quad(1) : s.ell;
    return pairing.sign() >= 0 && pairing < upper;
}

/// All segments of S_alpha with |x|, |y| <= radius, in traversal order.
inline std::vector<Segment> s_alpha_window(const SpectralData& s, long long radius) {
    StrandSum acc;
    for (long long x = -radius; x <= radius; ++x)
        for (long long y = -radius; y <= radius; ++y)
            for (SegKind k : {SegKind::Astar, SegKind::Bstar}) {
                Segment seg{{x, y}, k};
                if (in_S_alpha(seg, s)) acc.add(seg);
            }
    std::vector<Segment> v(acc.entries().size());
    std::transform(acc.entries().begin(), acc.entries().end(), v.begin(), [](const auto& e) { return e.first; });
    std::sort(v.begin(), v.end(), [](const Segment& x, const Segment& y) { return x.key() < y.key(); });
    return v;
}

} // namespace sdual
