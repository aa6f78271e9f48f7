#pragma once

// Letters, positive words over {a,b} and freely reduced words in F2 = <a,b>.
//
// Text form: a, b are the letters, A and B their inverses. The empty word is
// printed as "e" (and "e" is accepted on input).

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace sdual {

enum class Letter : unsigned char { a = 0, b = 1 };

constexpr char to_char(Letter x) noexcept { return x == Letter::a ? 'a' : 'b'; }
constexpr Letter other(Letter x) noexcept { return x == Letter::a ? Letter::b : Letter::a; }
constexpr int index(Letter x) noexcept { return static_cast<int>(x); }
constexpr Letter letter_at(int i) noexcept { return i == 0 ? Letter::a : Letter::b; }

/// Signed occurrence counts (|w|_a, |w|_b).
struct AbelVec {
    long long na = 0;
    long long nb = 0;

    friend constexpr AbelVec operator+(AbelVec u, AbelVec v) noexcept { return {u.na + v.na, u.nb + v.nb}; }
    friend constexpr AbelVec operator-(AbelVec u, AbelVec v) noexcept { return {u.na - v.na, u.nb - v.nb}; }
    friend constexpr bool operator==(AbelVec, AbelVec) noexcept = default;
    friend constexpr auto operator<=>(AbelVec, AbelVec) noexcept = default;
};

namespace detail {

constexpr bool is_pos_char(char c) noexcept { return c == 'a' || c == 'b'; }
constexpr bool is_sym_char(char c) noexcept { return c == 'a' || c == 'b' || c == 'A' || c == 'B'; }
constexpr char inverse_sym(char c) noexcept {
    switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    default: return 'b';
    }
}

inline std::string_view strip_empty_marker(std::string_view s) {
    return s == "e" ? std::string_view{} : s;
}

} // namespace detail

/// Finite word over {a, b}; may be empty.
class PosWord {
public:
    PosWord() = default;

    /// Throws parse_error on any character outside [ab].
    explicit PosWord(std::string_view text) {
        text = detail::strip_empty_marker(text);
        for (std::size_t i = 0; i < text.size(); ++i)
            if (!detail::is_pos_char(text[i]))
                throw parse_error(std::string("invalid letter '") + text[i] + "' in positive word", i);
        s_.assign(text);
    }

    PosWord(std::initializer_list<Letter> ls) {
        for (Letter l : ls) s_.push_back(to_char(l));
    }

    static PosWord parse(std::string_view text) { return PosWord(text); }

    std::size_t size() const noexcept { return s_.size(); }
    bool empty() const noexcept { return s_.empty(); }
    Letter operator[](std::size_t i) const noexcept { return s_[i] == 'a' ? Letter::a : Letter::b; }
    Letter front() const noexcept { return (*this)[0]; }
    Letter back() const noexcept { return (*this)[size() - 1]; }

    void push_back(Letter x) { s_.push_back(to_char(x)); }
    PosWord& operator+=(const PosWord& o) {
        s_ += o.s_;
        return *this;
    }
    friend PosWord operator+(PosWord u, const PosWord& v) { return u += v; }

    PosWord substr(std::size_t pos, std::size_t len = std::string::npos) const {
        PosWord w;
        w.s_ = s_.substr(pos, len);
        return w;
    }
    PosWord prefix(std::size_t len) const { return substr(0, len); }

    std::size_t count(Letter x) const noexcept {
        std::size_t n = 0;
        for (char c : s_) n += (c == to_char(x));
        return n;
    }

    /// Raw characters, no empty marker.
    const std::string& chars() const noexcept { return s_; }
    std::string str() const { return s_.empty() ? std::string("e") : s_; }

    friend bool operator==(const PosWord&, const PosWord&) = default;
    friend auto operator<=>(const PosWord&, const PosWord&) = default;

private:
    std::string s_;
};

inline std::ostream& operator<<(std::ostream& os, const PosWord& w) { return os << w.str(); }

/// Freely reduced element of F2 stored over the symbols a, b, A = a^-1, B = b^-1.
class RedWord {
public:
    RedWord() = default;

    /// Accepts any word over [abAB] (or "e") and freely reduces it.
    explicit RedWord(std::string_view text) {
        text = detail::strip_empty_marker(text);
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (!detail::is_sym_char(c))
                throw parse_error(std::string("invalid symbol '") + c + "' in free-group word", i);
            push_reduced(c);
        }
    }

    RedWord(const PosWord& w) : s_(w.chars()) {} // NOLINT: positive words are reduced

    static RedWord parse(std::string_view text) { return RedWord(text); }

    /// Builds from symbols already known to be valid; still reduces.
    static RedWord from_symbols(std::string_view syms) {
        RedWord w;
        for (char c : syms) w.push_reduced(c);
        return w;
    }

    std::size_t size() const noexcept { return s_.size(); }
    bool empty() const noexcept { return s_.empty(); }
    char sym(std::size_t i) const noexcept { return s_[i]; }

    bool is_positive() const noexcept {
        for (char c : s_)
            if (!detail::is_pos_char(c)) return false;
        return true;
    }

    /// Precondition: is_positive().
    PosWord to_positive() const {
        if (!is_positive()) throw domain_error(ErrorKind::BadArgument, "word " + str() + " is not positive");
        return PosWord(s_);
    }

    /// Appends one symbol, cancelling against the last symbol when inverse.
    void push_reduced(char c) {
        if (!s_.empty() && s_.back() == detail::inverse_sym(c))
            s_.pop_back();
        else
            s_.push_back(c);
    }

    const std::string& symbols() const noexcept { return s_; }
    std::string str() const { return s_.empty() ? std::string("e") : s_; }

    friend bool operator==(const RedWord&, const RedWord&) = default;
    friend auto operator<=>(const RedWord&, const RedWord&) = default;

private:
    std::string s_;
};

inline std::ostream& operator<<(std::ostream& os, const RedWord& w) { return os << w.str(); }

/// Free reduction of u*v.
inline RedWord reduce_concat(const RedWord& u, const RedWord& v) {
    RedWord r = u;
    for (char c : v.symbols()) r.push_reduced(c);
    return r;
}

inline RedWord operator*(const RedWord& u, const RedWord& v) { return reduce_concat(u, v); }

inline RedWord invert_word(const RedWord& u) {
    std::string out;
    out.reserve(u.size());
    for (auto it = u.symbols().rbegin(); it != u.symbols().rend(); ++it) out.push_back(detail::inverse_sym(*it));
    return RedWord::from_symbols(out);
}

inline AbelVec abelianize(const RedWord& u) noexcept {
    AbelVec v;
    for (char c : u.symbols()) {
        switch (c) {
        case 'a': ++v.na; break;
        case 'A': --v.na; break;
        case 'b': ++v.nb; break;
        default: --v.nb; break;
        }
    }
    return v;
}

inline AbelVec abelianize(const PosWord& w) noexcept {
    auto na = static_cast<long long>(w.count(Letter::a));
    return {na, static_cast<long long>(w.size()) - na};
}

/// Exchanges a and b, keeping exponents.
inline RedWord swap_letters(const RedWord& u) {
    std::string out = u.symbols();
    for (char& c : out) {
        switch (c) {
        case 'a': c = 'b'; break;
        case 'b': c = 'a'; break;
        case 'A': c = 'B'; break;
        default: c = 'A'; break;
        }
    }
    return RedWord::from_symbols(out);
}

inline PosWord swap_letters(const PosWord& u) { return swap_letters(RedWord(u)).to_positive(); }

/// a -> a^-1, b -> b.
inline RedWord flip_a(const RedWord& u) {
    std::string out = u.symbols();
    for (char& c : out) {
        if (c == 'a')
            c = 'A';
        else if (c == 'A')
            c = 'a';
    }
    return RedWord::from_symbols(out);
}

} // namespace sdual

template <>
struct std::hash<sdual::PosWord> {
    std::size_t operator()(const sdual::PosWord& w) const noexcept { return std::hash<std::string>{}(w.chars()); }
};

template <>
struct std::hash<sdual::RedWord> {
    std::size_t operator()(const sdual::RedWord& w) const noexcept { return std::hash<std::string>{}(w.symbols()); }
};
