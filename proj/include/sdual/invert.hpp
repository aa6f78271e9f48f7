#pragma once

// Invertible substitutions: factorisation over E, L, Lt, free-group inverses,
// reciprocal substitutions, conjugating words and selfduality.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "subst.hpp"
#include "words.hpp"

namespace sdual {

enum class Generator { E, L, Lt };

inline const char* to_string(Generator g) noexcept {
    switch (g) {
    case Generator::E: return "E";
    case Generator::L: return "L";
    case Generator::Lt: return "Lt";
    }
    return "?";
}

inline Substitution generator_subst(Generator g) {
    switch (g) {
    case Generator::E: return Substitution::E();
    case Generator::L: return Substitution::L();
    default: return Substitution::Ltilde();
    }
}

inline FreeEndo generator_inverse(Generator g) {
    switch (g) {
    case Generator::E: return {"b", "a"};
    case Generator::L: return {"a", "Ab"};
    default: return {"a", "bA"};
    }
}

/// sigma = factors[0] o factors[1] o ... ; empty means the identity.
struct Decomposition {
    std::vector<Generator> factors;

    std::string str() const {
        if (factors.empty()) return "id";
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "." : "") + std::string(to_string(factors[i]));
        return s;
    }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Decomposition& d) { return os << d.str(); }

/// Parses "L.E.Lt" (or "id").
inline Decomposition parse_decomposition(std::string_view text) {
    Decomposition d;
    if (text == "id" || text.empty()) return d;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t dot = text.find('.', start);
        std::string_view tok = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        if (tok == "E")
            d.factors.push_back(Generator::E);
        else if (tok == "L")
            d.factors.push_back(Generator::L);
        else if (tok == "Lt")
            d.factors.push_back(Generator::Lt);
        else
            throw parse_error("unknown generator '" + std::string(tok) + "'", start);
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return d;
}

inline Substitution recompose(const Decomposition& d) {
    Substitution s = Substitution::identity();
    for (Generator g : d.factors) s = compose(s, generator_subst(g));
    return s;
}

namespace detail {

/// Deletes the letter next to every b (offset -1: before, +1: after) if that letter
/// is always an a. Returns false when some b lacks the neighbour or there is no b.
inline bool peel(const std::string& img, int offset, std::string& out) {
    out.clear();
    std::vector<bool> drop(img.size(), false);
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (img[i] != 'b') continue;
        auto j = static_cast<std::ptrdiff_t>(i) + offset;
        if (j < 0 || j >= static_cast<std::ptrdiff_t>(img.size()) || img[static_cast<std::size_t>(j)] != 'a')
            return false;
        drop[static_cast<std::size_t>(j)] = true;
    }
    for (std::size_t i = 0; i < img.size(); ++i)
        if (!drop[i]) out.push_back(img[i]);
    return true;
}

inline bool try_peel(const Substitution& s, int offset, Substitution& rest) {
    if (s.img_a().count(Letter::b) + s.img_b().count(Letter::b) == 0) return false;
    std::string a, b;
    if (!peel(s.img_a().chars(), offset, a) || !peel(s.img_b().chars(), offset, b)) return false;
    rest = Substitution(a, b);
    return true;
}

} // namespace detail

/// Greedy left peeling; nullopt when s is not a product of E, L, Lt.
inline std::optional<Decomposition> try_decompose(const Substitution& s) {
    Decomposition d;
    Substitution cur = s;
    bool last_was_e = false;
    for (;;) {
        if (cur == Substitution::identity()) break;
        if (cur == Substitution::E()) {
            d.factors.push_back(Generator::E);
            break;
        }
        Substitution rest = cur;
        if (detail::try_peel(cur, -1, rest)) {
            d.factors.push_back(Generator::L);
            last_was_e = false;
        } else if (detail::try_peel(cur, +1, rest)) {
            d.factors.push_back(Generator::Lt);
            last_was_e = false;
        } else if (!last_was_e) {
            d.factors.push_back(Generator::E);
            rest = Substitution(swap_letters(cur.img_a()), swap_letters(cur.img_b()));
            last_was_e = true;
        } else {
            return std::nullopt;
        }
        cur = rest;
    }
    if (recompose(d) != s) throw std::logic_error("decomposition of " + s.str() + " does not recompose");
    return d;
}

inline Decomposition decompose(const Substitution& s) {
    auto d = try_decompose(s);
    if (!d) throw domain_error(ErrorKind::NotInvertible, s.str() + " is not a product of E, L, Lt");
    return *d;
}

inline bool is_invertible(const Substitution& s) { return try_decompose(s).has_value(); }

inline FreeEndo inverse(const Substitution& s) {
    Decomposition d = decompose(s);
    FreeEndo inv = FreeEndo::identity();
    for (Generator g : d.factors) inv = compose(generator_inverse(g), inv);
    return inv;
}

/// x -> flip_a(s^-1(flip_a(x))); requires det +1.
inline Substitution reciprocal(const Substitution& s) {
    if (det(s) == -1)
        throw domain_error(ErrorKind::DeterminantMinusOne, "reciprocal needs determinant +1; use the square of " + s.str());
    FreeEndo inv = inverse(s);
    RedWord ia = flip_a(invert_word(inv.img_a()));
    RedWord ib = flip_a(inv.img_b());
    if (!ia.is_positive() || !ib.is_positive() || ia.empty() || ib.empty())
        throw std::logic_error("reciprocal of " + s.str() + " is not positive");
    return {ia.to_positive(), ib.to_positive()};
}

/// Conjugation s(x) = w t(x) w^-1 for x = a, b.
inline bool is_conjugator(const Substitution& s, const Substitution& t, const RedWord& w) {
    RedWord wi = invert_word(w);
    return w * RedWord(t.img_a()) * wi == RedWord(s.img_a()) && w * RedWord(t.img_b()) * wi == RedWord(s.img_b());
}

/// Shortest w with s = gamma_w o t, w positive or the inverse of a positive word.
/// Positive w is a prefix of s(a)^inf; w = v^-1 has v a prefix of t(a)^inf.
inline std::optional<RedWord> find_conjugator(const Substitution& s, const Substitution& t) {
    if (s.img_a().size() != t.img_a().size() || s.img_b().size() != t.img_b().size()) return std::nullopt;
    if (s == t) return RedWord{};
    const std::size_t max_len = s.total_length();
    const std::string& sa = s.img_a().chars();
    const std::string& ta = t.img_a().chars();
    std::string pos, neg;
    for (std::size_t n = 1; n <= max_len; ++n) {
        pos.push_back(sa[(n - 1) % sa.size()]);
        neg.push_back(ta[(n - 1) % ta.size()]);
        RedWord wp{PosWord(pos)};
        if (is_conjugator(s, t, wp)) return wp;
        RedWord wn = invert_word(RedWord(PosWord(neg)));
        if (is_conjugator(s, t, wn)) return wn;
    }
    return std::nullopt;
}

/// Conjugacy of invertible substitutions is decided by the matrix; the witness is
/// then required to exist.
inline std::optional<RedWord> conjugacy_witness(const Substitution& s, const Substitution& t) {
    if (matrix(s) != matrix(t)) return std::nullopt;
    auto w = find_conjugator(s, t);
    if (!w && is_invertible(s) && is_invertible(t))
        throw std::logic_error("equal matrices but no conjugator for " + s.str() + " and " + t.str());
    return w;
}

inline bool are_conjugate(const Substitution& s, const Substitution& t) { return conjugacy_witness(s, t).has_value(); }

/// Returns (r, w) with s = gamma_w o r and r != s, rotating both images by one
/// letter; nullopt when the images share neither a first nor a last letter.
inline std::optional<std::pair<Substitution, RedWord>> inner_twist(const Substitution& s) {
    const std::string& a = s.img_a().chars();
    const std::string& b = s.img_b().chars();
    if (a.front() == b.front()) {
        char c = a.front();
        Substitution r(a.substr(1) + c, b.substr(1) + c);
        return std::make_pair(r, RedWord(std::string(1, c)));
    }
    if (a.back() == b.back()) {
        char c = a.back();
        Substitution r(c + a.substr(0, a.size() - 1), c + b.substr(0, b.size() - 1));
        return std::make_pair(r, invert_word(RedWord(std::string(1, c))));
    }
    return std::nullopt;
}

struct PowerConjugacy {
    unsigned k;
    unsigned m;
    RedWord witness;
};

/// Searches k, m <= kmax with s^k ~ t^m (matrix filter first, then a conjugator).
inline std::optional<PowerConjugacy> conjugate_power_search(const Substitution& s, const Substitution& t, unsigned kmax) {
    IntMat2 ms = matrix(s), mt = matrix(t);
    IntMat2 pk = IntMat2::identity();
    for (unsigned k = 1; k <= kmax; ++k) {
        pk = pk * ms;
        IntMat2 pm = IntMat2::identity();
        for (unsigned m = 1; m <= kmax; ++m) {
            pm = pm * mt;
            if (pk != pm) continue;
            if (auto w = find_conjugator(power(s, k), power(t, m))) return PowerConjugacy{k, m, *w};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// selfduality

enum class SelfdualKind { Direct, Mirror, NotSelfdual };

inline const char* to_string(SelfdualKind k) noexcept {
    switch (k) {
    case SelfdualKind::Direct: return "Direct";
    case SelfdualKind::Mirror: return "Mirror";
    case SelfdualKind::NotSelfdual: return "NotSelfdual";
    }
    return "?";
}

struct SelfdualClass {
    SelfdualKind kind = SelfdualKind::NotSelfdual;
    std::optional<RedWord> witness;

    friend bool operator==(const SelfdualClass&, const SelfdualClass&) = default;
};

/// Direct: s ~ reciprocal(s). Mirror: s ~ E o reciprocal(s) o E.
inline SelfdualClass selfdual_class(const Substitution& s) {
    Substitution r = reciprocal(s);
    if (auto w = conjugacy_witness(s, r)) return {SelfdualKind::Direct, w};
    Substitution mirror = compose(Substitution::E(), compose(r, Substitution::E()));
    if (auto w = conjugacy_witness(s, mirror)) return {SelfdualKind::Mirror, w};
    return {};
}

struct SelfdualForm {
    enum class Kind { FormM, FormMprime, None };
    Kind kind = Kind::None;
    long long m = 0;
    long long k = 0;

    friend bool operator==(const SelfdualForm&, const SelfdualForm&) = default;
};

inline const char* to_string(SelfdualForm::Kind k) noexcept {
    switch (k) {
    case SelfdualForm::Kind::FormM: return "M";
    case SelfdualForm::Kind::FormMprime: return "M'";
    case SelfdualForm::Kind::None: return "none";
    }
    return "?";
}

/// Matches [[m,k],[(m^2-1)/k, m]] or [[m,k],[k,(k^2+1)/m]]. The two conjugation
/// criteria (by Q and by P) are evaluated as well and must agree with the shape.
inline SelfdualForm matrix_selfdual_form(const IntMat2& M) {
    long long d = M.det();
    if (d == -1) throw domain_error(ErrorKind::DeterminantMinusOne, "selfdual forms need determinant +1");
    if (d != 1) throw domain_error(ErrorKind::NotUnimodular, "matrix " + to_string(M) + " is not unimodular");
    if (!is_primitive(M)) throw domain_error(ErrorKind::NotPrimitive, "matrix " + to_string(M) + " is not primitive");
    const long long p = M(0, 0), q = M(0, 1), r = M(1, 0), s = M(1, 1);

    const IntMat2 Minv = M.unimodular_inverse();
    const IntMat2 Qd = IntMat2::of(-1, 0, 0, 1);
    const IntMat2 Qr = IntMat2::of(0, -1, 1, 0);
    const IntMat2 E = IntMat2::of(0, 1, 1, 0);
    const bool q_diag = Qd.unimodular_inverse() * M * Qd == Minv;
    const bool q_rot = Qr.unimodular_inverse() * M * Qr == Minv;
    const bool p_swap = E.transpose() * M * E == M.transpose();
    const bool p_id = M == M.transpose();

    SelfdualForm f;
    if (p == s && q >= 1 && q * r == p * p - 1) {
        f = {SelfdualForm::Kind::FormM, p, q};
    } else if (q == r && p >= 1 && p * s == q * q + 1) {
        f = {SelfdualForm::Kind::FormMprime, p, q};
    }
    const bool as_m = f.kind == SelfdualForm::Kind::FormM;
    const bool as_mp = f.kind == SelfdualForm::Kind::FormMprime;
    if (as_m != q_diag || as_m != p_swap || as_mp != q_rot || as_mp != p_id)
        throw std::logic_error("selfdual matrix criteria disagree on " + to_string(M));
    return f;
}

/// L^(m-1) o E o L.
inline Substitution theta_substitution(unsigned m) {
    if (m < 1) throw domain_error(ErrorKind::BadArgument, "theta_m needs m >= 1");
    Substitution t = compose(Substitution::E(), Substitution::L());
    for (unsigned i = 1; i < m; ++i) t = compose(Substitution::L(), t);
    return t;
}

} // namespace sdual
