#pragma once

// Substitutions on {a,b} and endomorphisms of F2: application, composition,
// Abelianisation matrices, primitivity, fixed points and factor languages.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "words.hpp"

namespace sdual {

namespace detail {

inline long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in matrix product");
    return r;
}

inline long long checked_add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in matrix sum");
    return r;
}

} // namespace detail

/// 2x2 integer matrix. For a substitution, entry (i,j) counts letter i in the image of letter j.
struct IntMat2 {
    std::array<std::array<long long, 2>, 2> m{};

    constexpr long long operator()(int i, int j) const noexcept { return m[i][j]; }
    long long& operator()(int i, int j) noexcept { return m[i][j]; }

    static constexpr IntMat2 identity() noexcept { return {{{{1, 0}, {0, 1}}}}; }
    static constexpr IntMat2 of(long long a, long long b, long long c, long long d) noexcept {
        return {{{{a, b}, {c, d}}}};
    }

    long long det() const {
        long long r;
        if (__builtin_sub_overflow(detail::checked_mul(m[0][0], m[1][1]), detail::checked_mul(m[0][1], m[1][0]), &r))
            throw std::overflow_error("integer overflow in determinant");
        return r;
    }
    long long trace() const { return detail::checked_add(m[0][0], m[1][1]); }

    IntMat2 transpose() const noexcept { return of(m[0][0], m[1][0], m[0][1], m[1][1]); }

    /// Exact inverse of a unimodular matrix.
    IntMat2 unimodular_inverse() const {
        long long d = det();
        if (d != 1 && d != -1) throw domain_error(ErrorKind::NotUnimodular, "matrix is not unimodular");
        return of(d * m[1][1], -d * m[0][1], -d * m[1][0], d * m[0][0]);
    }

    friend IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
        IntMat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = detail::checked_add(detail::checked_mul(x.m[i][0], y.m[0][j]),
                                                detail::checked_mul(x.m[i][1], y.m[1][j]));
        return r;
    }

    AbelVec apply(AbelVec v) const {
        return {detail::checked_add(detail::checked_mul(m[0][0], v.na), detail::checked_mul(m[0][1], v.nb)),
                detail::checked_add(detail::checked_mul(m[1][0], v.na), detail::checked_mul(m[1][1], v.nb))};
    }

    bool positive() const noexcept { return m[0][0] > 0 && m[0][1] > 0 && m[1][0] > 0 && m[1][1] > 0; }
    bool nonnegative() const noexcept { return m[0][0] >= 0 && m[0][1] >= 0 && m[1][0] >= 0 && m[1][1] >= 0; }

    friend bool operator==(const IntMat2&, const IntMat2&) = default;
};

inline IntMat2 pow(const IntMat2& x, unsigned n) {
    IntMat2 r = IntMat2::identity();
    for (unsigned i = 0; i < n; ++i) r = r * x;
    return r;
}

inline std::string to_string(const IntMat2& x) {
    return "[[" + std::to_string(x(0, 0)) + "," + std::to_string(x(0, 1)) + "],[" + std::to_string(x(1, 0)) + "," +
           std::to_string(x(1, 1)) + "]]";
}

inline std::ostream& operator<<(std::ostream& os, const IntMat2& x) { return os << to_string(x); }

/// Primitive iff M^2 > 0 (Wielandt's bound for 2x2 nonnegative matrices).
inline bool is_primitive(const IntMat2& x) { return x.nonnegative() && (x * x).positive(); }

/// Non-erasing morphism of {a,b}*.
class Substitution {
public:
    Substitution(PosWord img_a, PosWord img_b) : img_{std::move(img_a), std::move(img_b)} {
        if (img_[0].empty() || img_[1].empty())
            throw domain_error(ErrorKind::BadArgument, "substitution images must be nonempty");
    }
    Substitution(std::string_view a, std::string_view b) : Substitution(PosWord(a), PosWord(b)) {}

    static Substitution identity() { return {"a", "b"}; }
    static Substitution E() { return {"b", "a"}; }
    static Substitution L() { return {"a", "ab"}; }
    static Substitution Ltilde() { return {"a", "ba"}; }

    const PosWord& image(Letter x) const noexcept { return img_[index(x)]; }
    const PosWord& img_a() const noexcept { return img_[0]; }
    const PosWord& img_b() const noexcept { return img_[1]; }

    std::size_t total_length() const noexcept { return img_[0].size() + img_[1].size(); }

    std::string str() const { return "a->" + img_[0].str() + ",b->" + img_[1].str(); }

    friend bool operator==(const Substitution&, const Substitution&) = default;
    friend auto operator<=>(const Substitution&, const Substitution&) = default;

private:
    std::array<PosWord, 2> img_;
};

inline std::ostream& operator<<(std::ostream& os, const Substitution& s) { return os << s.str(); }

/// Endomorphism of F2 given by the (reduced) images of a and b.
class FreeEndo {
public:
    FreeEndo(RedWord img_a, RedWord img_b) : img_{std::move(img_a), std::move(img_b)} {}
    FreeEndo(std::string_view a, std::string_view b) : FreeEndo(RedWord(a), RedWord(b)) {}
    FreeEndo(const Substitution& s) : img_{RedWord(s.img_a()), RedWord(s.img_b())} {} // NOLINT

    static FreeEndo identity() { return {"a", "b"}; }

    const RedWord& image(Letter x) const noexcept { return img_[index(x)]; }
    const RedWord& img_a() const noexcept { return img_[0]; }
    const RedWord& img_b() const noexcept { return img_[1]; }

    bool is_positive() const noexcept { return img_[0].is_positive() && img_[1].is_positive(); }
    /// Requires both images positive and nonempty.
    Substitution to_substitution() const { return {img_[0].to_positive(), img_[1].to_positive()}; }

    std::string str() const { return "a->" + img_[0].str() + ",b->" + img_[1].str(); }

    friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

private:
    std::array<RedWord, 2> img_;
};

inline std::ostream& operator<<(std::ostream& os, const FreeEndo& s) { return os << s.str(); }

// ---------------------------------------------------------------------------
// application and composition

inline PosWord apply(const Substitution& s, const PosWord& w) {
    PosWord out;
    for (std::size_t i = 0; i < w.size(); ++i) out += s.image(w[i]);
    return out;
}

inline RedWord apply(const FreeEndo& s, const RedWord& w) {
    RedWord out;
    for (char c : w.symbols()) {
        switch (c) {
        case 'a': out = out * s.img_a(); break;
        case 'b': out = out * s.img_b(); break;
        case 'A': out = out * invert_word(s.img_a()); break;
        default: out = out * invert_word(s.img_b()); break;
        }
    }
    return out;
}

inline RedWord apply(const Substitution& s, const RedWord& w) { return apply(FreeEndo(s), w); }

/// (s o t)(x) = s(t(x)).
inline Substitution compose(const Substitution& s, const Substitution& t) {
    return {apply(s, t.img_a()), apply(s, t.img_b())};
}

inline FreeEndo compose(const FreeEndo& s, const FreeEndo& t) { return {apply(s, t.img_a()), apply(s, t.img_b())}; }

inline Substitution power(const Substitution& s, unsigned n) {
    Substitution r = Substitution::identity();
    for (unsigned i = 0; i < n; ++i) r = compose(r, s);
    return r;
}

inline FreeEndo power(const FreeEndo& s, unsigned n) {
    FreeEndo r = FreeEndo::identity();
    for (unsigned i = 0; i < n; ++i) r = compose(r, s);
    return r;
}

// ---------------------------------------------------------------------------
// matrices

inline IntMat2 matrix(const FreeEndo& s) {
    AbelVec ca = abelianize(s.img_a());
    AbelVec cb = abelianize(s.img_b());
    return IntMat2::of(ca.na, cb.na, ca.nb, cb.nb);
}

inline IntMat2 matrix(const Substitution& s) {
    AbelVec ca = abelianize(s.img_a());
    AbelVec cb = abelianize(s.img_b());
    return IntMat2::of(ca.na, cb.na, ca.nb, cb.nb);
}

inline long long det(const Substitution& s) { return matrix(s).det(); }
inline bool is_unimodular(const Substitution& s) {
    long long d = det(s);
    return d == 1 || d == -1;
}
inline bool is_primitive(const Substitution& s) { return is_primitive(matrix(s)); }

// ---------------------------------------------------------------------------
// fixed points and factor languages

/// Smallest p <= 4 and letter x such that s^p(x) starts with x and is longer than x.
struct FixedPointSeed {
    unsigned power;
    Letter letter;
};

inline std::optional<FixedPointSeed> fixed_point_seed(const Substitution& s) {
    Substitution sp = s;
    for (unsigned p = 1; p <= 4; ++p) {
        for (Letter x : {Letter::a, Letter::b}) {
            const PosWord& img = sp.image(x);
            if (img.front() == x && img.size() > 1) return FixedPointSeed{p, x};
        }
        sp = compose(sp, s);
    }
    return std::nullopt;
}

/// Length-n prefix of a one-sided fixed point of some power s^p, p <= 4.
inline PosWord fixed_point_prefix(const Substitution& s, std::size_t n) {
    if (!is_primitive(s)) throw domain_error(ErrorKind::NotPrimitive, s.str() + " is not primitive");
    auto seed = fixed_point_seed(s);
    if (!seed) throw domain_error(ErrorKind::NoFixedPoint, "no power <= 4 of " + s.str() + " has a fixed letter");
    Substitution sp = power(s, seed->power);
    PosWord w{seed->letter};
    while (w.size() < n) w = apply(sp, w);
    return w.prefix(n);
}

namespace detail {

inline void add_windows(const std::string& text, std::size_t n, std::size_t max_start,
                        std::unordered_set<std::string>& out) {
    if (text.size() < n) return;
    std::size_t last = std::min(max_start, text.size() - n);
    for (std::size_t i = 0; i <= last; ++i) out.insert(text.substr(i, n));
}

/// Length-n factors of the language of s, as raw strings. Closure algorithm: seed
/// with the factors of s^K(a), s^K(b), then add every length-n window of s(f)
/// starting inside s(f[0]) until nothing new appears.
inline std::unordered_set<std::string> factor_strings(const Substitution& s, std::size_t n) {
    std::unordered_set<std::string> found;
    if (n == 0) {
        found.insert("");
        return found;
    }
    PosWord wa{Letter::a}, wb{Letter::b};
    unsigned k = 0;
    while (k < 2 || wa.size() < n || wb.size() < n) {
        wa = apply(s, wa);
        wb = apply(s, wb);
        ++k;
    }
    add_windows(wa.chars(), n, wa.size(), found);
    add_windows(wb.chars(), n, wb.size(), found);

    std::vector<std::string> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const std::string& f : frontier) {
            PosWord img = apply(s, PosWord(f));
            std::size_t first_len = s.image(f[0] == 'a' ? Letter::a : Letter::b).size();
            std::unordered_set<std::string> fresh;
            add_windows(img.chars(), n, first_len - 1, fresh);
            for (auto& g : fresh)
                if (found.insert(g).second) next.push_back(g);
        }
        frontier = std::move(next);
    }
    return found;
}

} // namespace detail

/// All length-n factors of words s^k(a), s^k(b).
inline std::set<PosWord> factor_set(const Substitution& s, std::size_t n) {
    if (!is_primitive(s)) throw domain_error(ErrorKind::NotPrimitive, s.str() + " is not primitive");
    std::set<PosWord> out;
    for (const auto& f : detail::factor_strings(s, n)) out.insert(PosWord(f));
    return out;
}

/// Factor sets of every length 1..n, derived from the length-n factors by taking
/// prefixes (every factor of a primitive language extends to the right).
inline std::vector<std::set<PosWord>> factor_sets_upto(const Substitution& s, std::size_t n) {
    std::set<PosWord> top = factor_set(s, n);
    std::vector<std::set<PosWord>> out(n + 1);
    for (const PosWord& f : top)
        for (std::size_t len = 0; len <= n; ++len) out[len].insert(f.prefix(len));
    return out;
}

/// p(n) = number of length-n factors, for n = 1..N (entry 0 holds p(1)).
inline std::vector<std::size_t> complexity_profile(const Substitution& s, std::size_t N) {
    std::vector<std::size_t> out;
    if (N == 0) return out;
    auto sets = factor_sets_upto(s, N);
    for (std::size_t n = 1; n <= N; ++n) out.push_back(sets[n].size());
    return out;
}

inline bool is_sturmian_language(const Substitution& s, std::size_t N) {
    auto p = complexity_profile(s, N);
    for (std::size_t n = 1; n <= N; ++n)
        if (p[n - 1] != n + 1) return false;
    return true;
}

/// Finite certificate: the languages agree on all lengths <= N. A false result
/// refutes hull equality; a true result is only evidence.
inline bool hulls_equal_upto(const Substitution& s, const Substitution& r, std::size_t N) {
    if (N == 0) return true;
    // equal length-N factor sets force equality on every shorter length
    return detail::factor_strings(s, N) == detail::factor_strings(r, N);
}

// ---------------------------------------------------------------------------
// text form:  a->W,b->W   (';' also separates, whitespace ignored)

namespace detail {

struct SubstText {
    std::string a, b;
};

inline SubstText split_subst_text(std::string_view text) {
    std::string s;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s.push_back(text[i]);
            pos.push_back(i);
        }
    auto at = [&](std::size_t i) { return i < pos.size() ? pos[i] : text.size(); };
    std::size_t sep = s.find_first_of(",;");
    if (sep == std::string::npos) throw parse_error("expected ',' or ';' between the two images", text.size());
    std::string left = s.substr(0, sep), right = s.substr(sep + 1);
    auto image = [&](const std::string& part, char letter, std::size_t offset) {
        if (part.size() < 3 || part[0] != letter || part[1] != '-' || part[2] != '>')
            throw parse_error(std::string("expected '") + letter + "->'", at(offset));
        return part.substr(3);
    };
    SubstText out{image(left, 'a', 0), image(right, 'b', sep + 1)};
    if (out.a.empty()) throw parse_error("empty image of a", at(3));
    if (out.b.empty()) throw parse_error("empty image of b", at(sep + 4));
    for (std::size_t i = 0; i < out.a.size(); ++i)
        if (!is_sym_char(out.a[i])) throw parse_error(std::string("invalid symbol '") + out.a[i] + "'", at(3 + i));
    for (std::size_t i = 0; i < out.b.size(); ++i)
        if (!is_sym_char(out.b[i]))
            throw parse_error(std::string("invalid symbol '") + out.b[i] + "'", at(sep + 4 + i));
    return out;
}

} // namespace detail

inline Substitution parse_substitution(std::string_view text) {
    auto t = detail::split_subst_text(text);
    auto check = [&](const std::string& w) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!detail::is_pos_char(w[i]))
                throw parse_error("substitution images must be positive words over [ab]", i);
    };
    check(t.a);
    check(t.b);
    return {t.a, t.b};
}

inline FreeEndo parse_free_endo(std::string_view text) {
    auto t = detail::split_subst_text(text);
    return {t.a, t.b};
}

} // namespace sdual
