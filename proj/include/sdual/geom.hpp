#pragma once

// One-dimensional geometry of a substitution: digit-set matrices and
// tile-substitutions, star duals, Rauzy windows, cut-and-project sets and
// Sturmian rotation words. All endpoints are exact elements of Q(sqrt(D)).

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "invert.hpp"
#include "quad.hpp"
#include "spectral.hpp"
#include "subst.hpp"

namespace sdual {

struct Interval {
    Quad lo;
    Quad hi;

    Quad length() const { return hi - lo; }
    bool contains(const Quad& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

inline std::string to_string(const Interval& iv) { return "[" + iv.lo.str() + ", " + iv.hi.str() + "]"; }

/// d[i][j]: translations placing tile i inside the inflated tile j. Sets are kept sorted.
struct DigitSetMatrix {
    std::array<std::array<std::vector<Quad>, 2>, 2> d;

    std::vector<Quad>& operator()(int i, int j) { return d[i][j]; }
    const std::vector<Quad>& operator()(int i, int j) const { return d[i][j]; }

    void normalize() {
        for (auto& row : d)
            for (auto& cell : row) {
                std::sort(cell.begin(), cell.end());
                cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
            }
    }

    IntMat2 cardinality() const {
        return IntMat2::of(static_cast<long long>(d[0][0].size()), static_cast<long long>(d[0][1].size()),
                           static_cast<long long>(d[1][0].size()), static_cast<long long>(d[1][1].size()));
    }

    /// (D^T)^star.
    DigitSetMatrix transpose_star() const {
        DigitSetMatrix r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (const Quad& x : d[j][i]) r.d[i][j].push_back(x.star());
        r.normalize();
        return r;
    }

    DigitSetMatrix scaled(const Quad& s) const {
        DigitSetMatrix r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (const Quad& x : d[i][j]) r.d[i][j].push_back(s * x);
        r.normalize();
        return r;
    }

    friend bool operator==(const DigitSetMatrix&, const DigitSetMatrix&) = default;
};

inline std::string to_string(const DigitSetMatrix& m) {
    auto cell = [](const std::vector<Quad>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
        return s + "}";
    };
    return "[[" + cell(m(0, 0)) + ", " + cell(m(0, 1)) + "], [" + cell(m(1, 0)) + ", " + cell(m(1, 1)) + "]]";
}

inline std::ostream& operator<<(std::ostream& os, const DigitSetMatrix& m) { return os << to_string(m); }

/// Prototile j is [offsets[j], offsets[j] + lengths[j]] and
/// inflation * T_j = union over i, d in digits(i,j) of T_i + d.
struct TileSubst {
    std::array<Quad, 2> lengths;
    Quad inflation;
    DigitSetMatrix digits;
    std::array<Quad, 2> offsets;

    Interval prototile(Letter x) const {
        int j = index(x);
        return {offsets[j], offsets[j] + lengths[j]};
    }
};

namespace detail {

struct Piece {
    int tile;
    Quad digit;
};

inline std::vector<Piece> pieces_of(const DigitSetMatrix& D, int j) {
    std::vector<Piece> out;
    for (int i = 0; i < 2; ++i)
        for (const Quad& d : D(i, j)) out.push_back({i, d});
    return out;
}

/// Solves x_j = c * x_{sel[j]} + b_j, j = 0, 1.
inline std::array<Quad, 2> solve_affine(const Quad& c, std::array<int, 2> sel, std::array<Quad, 2> b) {
    Quad m00 = Quad(1) - (sel[0] == 0 ? c : Quad(0));
    Quad m01 = sel[0] == 1 ? -c : Quad(0);
    Quad m10 = sel[1] == 0 ? -c : Quad(0);
    Quad m11 = Quad(1) - (sel[1] == 1 ? c : Quad(0));
    Quad det = m00 * m11 - m01 * m10;
    return {(b[0] * m11 - m01 * b[1]) / det, (m00 * b[1] - m10 * b[0]) / det};
}

/// Every inflated tile is tiled, without gaps or overlaps, by its pieces.
inline bool covers(const Quad& lambda, const std::array<Quad, 2>& lo, const std::array<Quad, 2>& hi,
                   const DigitSetMatrix& D) {
    for (int j = 0; j < 2; ++j) {
        if (!(lo[j] < hi[j])) return false;
        std::vector<Interval> parts;
        for (const Piece& p : pieces_of(D, j)) parts.push_back({lo[p.tile] + p.digit, hi[p.tile] + p.digit});
        if (parts.empty()) return false;
        std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
        if (parts.front().lo != lambda * lo[j] || parts.back().hi != lambda * hi[j]) return false;
        for (std::size_t k = 1; k < parts.size(); ++k)
            if (parts[k - 1].hi != parts[k].lo) return false;
    }
    return true;
}

/// Exact endpoints x_j with lambda x_j = best over pieces of (x_i + d), best = min
/// for left ends and max for right ends. A floating-point fixed-point iteration
/// selects the extremal pieces; the caller verifies the exact result.
inline std::array<Quad, 2> extremal_endpoints(const Quad& lambda, const DigitSetMatrix& D, bool left,
                                              const std::array<int, 2>* forced_sel = nullptr,
                                              const std::array<Quad, 2>* forced_b = nullptr) {
    Quad inv = Quad(1) / lambda;
    if (forced_sel) return solve_affine(inv, *forced_sel, {inv * (*forced_b)[0], inv * (*forced_b)[1]});
    const long double lf = lambda.to_ld();
    std::array<long double, 2> x{0, 0};
    std::array<std::vector<Piece>, 2> ps{pieces_of(D, 0), pieces_of(D, 1)};
    std::array<std::size_t, 2> arg{0, 0};
    for (int it = 0; it < 400; ++it) {
        std::array<long double, 2> nx{};
        for (int j = 0; j < 2; ++j) {
            long double best = 0;
            for (std::size_t k = 0; k < ps[j].size(); ++k) {
                long double v = x[ps[j][k].tile] + ps[j][k].digit.to_ld();
                if (k == 0 || (left ? v < best : v > best)) {
                    best = v;
                    arg[j] = k;
                }
            }
            nx[j] = best / lf;
        }
        x = nx;
    }
    std::array<int, 2> sel{ps[0][arg[0]].tile, ps[1][arg[1]].tile};
    return solve_affine(inv, sel, {inv * ps[0][arg[0]].digit, inv * ps[1][arg[1]].digit});
}

} // namespace detail

/// Tile-substitution determined by a digit-set matrix: inflation from the
/// cardinality matrix, prototiles as the unique interval solution of the set
/// equation. Throws CoveringFailure when the digits do not tile.
inline TileSubst tile_subst_from_digits(DigitSetMatrix D) {
    D.normalize();
    const IntMat2 M = D.cardinality();
    if (!is_primitive(M))
        throw domain_error(ErrorKind::NotPrimitive, "digit cardinalities " + to_string(M) + " are not primitive");
    const Perron pf = perron(M);

    std::optional<std::array<Quad, 2>> lo, hi;
    auto lo0 = detail::extremal_endpoints(pf.lambda, D, true);
    auto hi0 = detail::extremal_endpoints(pf.lambda, D, false);
    if (detail::covers(pf.lambda, lo0, hi0, D)) {
        lo = lo0;
        hi = hi0;
    } else {
        // exhaustive choice of the extremal pieces
        auto p0 = detail::pieces_of(D, 0), p1 = detail::pieces_of(D, 1);
        std::vector<std::array<Quad, 2>> cands;
        for (const auto& x : p0)
            for (const auto& y : p1) {
                std::array<int, 2> sel{x.tile, y.tile};
                std::array<Quad, 2> b{x.digit, y.digit};
                cands.push_back(detail::extremal_endpoints(pf.lambda, D, true, &sel, &b));
            }
        for (std::size_t u = 0; u < cands.size() && !lo; ++u)
            for (std::size_t v = 0; v < cands.size() && !lo; ++v)
                if (detail::covers(pf.lambda, cands[u], cands[v], D)) {
                    lo = cands[u];
                    hi = cands[v];
                }
    }
    if (!lo) throw domain_error(ErrorKind::CoveringFailure, "digits " + to_string(D) + " do not tile");

    TileSubst t;
    t.inflation = pf.lambda;
    t.digits = D;
    t.offsets = *lo;
    t.lengths = {(*hi)[0] - (*lo)[0], (*hi)[1] - (*lo)[1]};
    if (t.lengths[1] != pf.ell * t.lengths[0])
        throw domain_error(ErrorKind::CoveringFailure, "prototile lengths are not a left Perron vector");
    return t;
}

namespace detail {

inline Quad weigh(AbelVec v, const Quad& ell) { return Quad(v.na) + Quad(v.nb) * ell; }

inline AbelVec unit(Letter x) noexcept { return x == Letter::a ? AbelVec{1, 0} : AbelVec{0, 1}; }

/// d[i][j] = { weight(s(j)[0..k-1]) : s(j)_k = i }, scaled by `scale`.
inline DigitSetMatrix prefix_digits(const Substitution& s, const Quad& ell, const Quad& scale = Quad(1)) {
    DigitSetMatrix D;
    for (Letter j : {Letter::a, Letter::b}) {
        const PosWord& img = s.image(j);
        AbelVec pre;
        for (std::size_t k = 0; k < img.size(); ++k) {
            D(index(img[k]), index(j)).push_back(scale * weigh(pre, ell));
            pre = pre + unit(img[k]);
        }
    }
    D.normalize();
    return D;
}

inline void require_primitive_unimodular(const Substitution& s) {
    if (!is_primitive(s)) throw domain_error(ErrorKind::NotPrimitive, s.str() + " is not primitive");
    if (!is_unimodular(s)) throw domain_error(ErrorKind::NotUnimodular, s.str() + " is not unimodular");
}

} // namespace detail

/// Digits delta(s(j)[0..k-1]) with delta(w) = |w|_a + |w|_b ell; prototiles [0,1], [0,ell].
inline TileSubst tile_subst_from(const Substitution& s) {
    detail::require_primitive_unimodular(s);
    const SpectralData sp = spectral(s);
    DigitSetMatrix D = detail::prefix_digits(s, sp.ell);
    if (D.cardinality() != matrix(s)) throw std::logic_error("digit cardinalities differ from the matrix");
    TileSubst t = tile_subst_from_digits(D);
    if (t.offsets[0] != Quad(0) || t.offsets[1] != Quad(0) || t.lengths[0] != Quad(1) || t.lengths[1] != sp.ell)
        throw std::logic_error("unexpected prototiles for " + s.str());
    return t;
}

/// Tile-substitution of (D^T)^star.
inline TileSubst star_dual(const TileSubst& t) { return tile_subst_from_digits(t.digits.transpose_star()); }

struct PatchTile {
    Letter type;
    Quad left;
    Quad right;
};

/// Level-n patch of the inflated prototile `start` placed at its own offset.
inline std::vector<PatchTile> iterate_patch(const TileSubst& t, Letter start, unsigned n) {
    struct Placed {
        int tile;
        Quad shift;
    };
    std::vector<Placed> cur{{index(start), Quad(0)}};
    for (unsigned level = 0; level < n; ++level) {
        std::vector<Placed> next;
        for (const Placed& p : cur)
            for (int i = 0; i < 2; ++i)
                for (const Quad& d : t.digits(i, p.tile)) next.push_back({i, t.inflation * p.shift + d});
        cur = std::move(next);
    }
    std::vector<PatchTile> out;
    out.reserve(cur.size());
    for (const Placed& p : cur)
        out.push_back({letter_at(p.tile), t.offsets[p.tile] + p.shift, t.offsets[p.tile] + t.lengths[p.tile] + p.shift});
    std::sort(out.begin(), out.end(), [](const PatchTile& x, const PatchTile& y) { return x.left < y.left; });
    for (std::size_t k = 1; k < out.size(); ++k)
        if (out[k - 1].right != out[k].left) throw std::logic_error("patch tiles do not abut");
    return out;
}

// ---------------------------------------------------------------------------
// Rauzy windows

struct RauzyDecomposition {
    Interval Ra;
    Interval Rb;
    unsigned depth = 0; // substitution levels of the certified prefix
    unsigned power = 1; // the fixed point is taken for s^power

    const Interval& window(Letter x) const { return x == Letter::a ? Ra : Rb; }
    Interval hull() const { return {min(Ra.lo, Rb.lo), max(Ra.hi, Rb.hi)}; }
};

namespace detail {

struct RauzyPiece {
    int from;  // j
    Quad shift;
};

/// R_i = union over tau(j)_k = i of contraction * R_j + Delta(tau(j)[0..k-1]).
inline std::array<std::vector<RauzyPiece>, 2> rauzy_pieces(const Substitution& tau, const Quad& ell_conj) {
    std::array<std::vector<RauzyPiece>, 2> out;
    for (Letter j : {Letter::a, Letter::b}) {
        const PosWord& img = tau.image(j);
        AbelVec pre;
        for (std::size_t k = 0; k < img.size(); ++k) {
            out[index(img[k])].push_back({index(j), weigh(pre, ell_conj)});
            pre = pre + unit(img[k]);
        }
    }
    return out;
}

/// Candidate endpoints from the data extremes, solved exactly and accepted only
/// if the set equation holds on the nose.
inline std::optional<std::array<Interval, 2>> certify_windows(const std::array<std::vector<RauzyPiece>, 2>& pieces,
                                                              const Quad& c, const std::array<Quad, 2>& dlo,
                                                              const std::array<Quad, 2>& dhi) {
    auto pick = [&](bool low) {
        std::array<int, 2> sel{};
        std::array<Quad, 2> b;
        for (int i = 0; i < 2; ++i) {
            std::optional<Quad> best;
            for (const RauzyPiece& p : pieces[i]) {
                Quad v = c * (low ? dlo[p.from] : dhi[p.from]) + p.shift;
                if (!best || (low ? v < *best : v > *best)) {
                    best = v;
                    sel[i] = p.from;
                    b[i] = p.shift;
                }
            }
        }
        return solve_affine(c, sel, b);
    };
    std::array<Quad, 2> lo = pick(true), hi = pick(false);
    for (int i = 0; i < 2; ++i) {
        if (!(lo[i] < hi[i])) return std::nullopt;
        std::vector<Interval> parts;
        for (const RauzyPiece& p : pieces[i]) parts.push_back({c * lo[p.from] + p.shift, c * hi[p.from] + p.shift});
        std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
        if (parts.front().lo != lo[i] || parts.back().hi != hi[i]) return std::nullopt;
        for (std::size_t k = 1; k < parts.size(); ++k)
            if (parts[k - 1].hi != parts[k].lo) return std::nullopt;
        if (dlo[i] < lo[i] || dhi[i] > hi[i]) return std::nullopt;
    }
    return std::array<Interval, 2>{Interval{lo[0], hi[0]}, Interval{lo[1], hi[1]}};
}

/// Running extremes of Delta over prefixes of a fixed point, bucketed by the next letter.
struct DeltaScan {
    Quad ell_conj;
    Quad cur;
    std::size_t pos = 0;
    std::array<std::optional<Quad>, 2> lo, hi;

    void extend(const PosWord& u, std::size_t n) {
        for (; pos < n; ++pos) {
            int i = index(u[pos]);
            if (!lo[i] || cur < *lo[i]) lo[i] = cur;
            if (!hi[i] || cur > *hi[i]) hi[i] = cur;
            cur += u[pos] == Letter::a ? Quad(1) : ell_conj;
        }
    }
    bool ready() const { return lo[0] && lo[1]; }
};

} // namespace detail

inline constexpr std::size_t kRauzyPrefixCap = std::size_t{1} << 16;

/// Windows R_a, R_b with exact endpoints. depth is the first substitution level tried.
inline RauzyDecomposition rauzy_decomposition(const Substitution& s, unsigned depth = 1,
                                              std::size_t cap = kRauzyPrefixCap) {
    detail::require_primitive_unimodular(s);
    if (det(s) == -1)
        throw domain_error(ErrorKind::DeterminantMinusOne, "Rauzy windows need determinant +1; use the square of " + s.str());
    const SpectralData sp = spectral(s);
    auto seed = fixed_point_seed(s);
    if (!seed) throw domain_error(ErrorKind::NoFixedPoint, "no letter-fixed power of " + s.str());
    const Substitution tau = power(s, seed->power);
    Quad c(1);
    for (unsigned k = 0; k < seed->power; ++k) c *= sp.lambda_conj;
    const auto pieces = detail::rauzy_pieces(tau, sp.ell_conj);

    PosWord u{seed->letter};
    unsigned level = 0;
    for (; level < depth; ++level) u = apply(tau, u);
    detail::DeltaScan scan;
    scan.ell_conj = sp.ell_conj;

    auto attempt = [&](std::size_t n) -> std::optional<std::array<Interval, 2>> {
        scan.extend(u, n);
        if (!scan.ready()) return std::nullopt;
        return detail::certify_windows(pieces, c, {*scan.lo[0], *scan.lo[1]}, {*scan.hi[0], *scan.hi[1]});
    };

    for (;;) {
        std::size_t n = std::min(u.size(), cap);
        if (auto w = attempt(n)) {
            // one more level must reproduce the same certificate
            PosWord next = apply(tau, u.size() >= cap ? u.prefix(cap) : u);
            u = next;
            auto again = attempt(std::min(u.size(), cap));
            if (!again || (*again)[0] != (*w)[0] || (*again)[1] != (*w)[1])
                throw domain_error(ErrorKind::StabilizationFailure, "Rauzy endpoints moved at the next level");
            RauzyDecomposition r{(*w)[0], (*w)[1], level, seed->power};
            if (r.Ra.hi != r.Rb.lo && r.Rb.hi != r.Ra.lo)
                throw domain_error(ErrorKind::NonIntervalWindow, "R_a and R_b are not adjacent");
            return r;
        }
        if (n >= cap) break;
        u = apply(tau, u);
        ++level;
    }
    if (!is_invertible(s))
        throw domain_error(ErrorKind::NonIntervalWindow, s.str() + " is not invertible; its windows are not intervals");
    throw domain_error(ErrorKind::StabilizationFailure, "no certified windows within " + std::to_string(cap) + " letters");
}

/// E[j][i] = { lambda * Delta(s(j)[0..k-1]) : s(j)_k = i }.
inline DigitSetMatrix e_matrix(const Substitution& s) {
    detail::require_primitive_unimodular(s);
    const SpectralData sp = spectral(s);
    DigitSetMatrix P = detail::prefix_digits(s, sp.ell_conj, sp.lambda); // P[i][j]
    DigitSetMatrix E;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) E(j, i) = P(i, j);
    return E;
}

/// (D^star)^T = lambda^-1 E, entry by entry.
inline bool star_relation_check(const Substitution& s) {
    const TileSubst t = tile_subst_from(s);
    const DigitSetMatrix lhs = t.digits.transpose_star();
    const DigitSetMatrix rhs = e_matrix(s).scaled(Quad(1) / t.inflation);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// cut and project

/// Lattice spanned by (1,1) and (ell, ell'); pi1 / pi2 are the two coordinates.
struct Lattice {
    Quad ell;
    Quad ell_conj;

    static Lattice of(const SpectralData& s) { return {s.ell, s.ell_conj}; }
};

/// Which window endpoints count as inside. The default is [lo, hi).
struct WindowEnds {
    bool lo_closed = true;
    bool hi_closed = false;
};

/// pi1 of all lattice points with pi2 in the window and pi1 in [range.lo, range.hi], sorted.
inline std::vector<Quad> cut_project_points(const Lattice& lat, const Interval& window, const Interval& range,
                                            WindowEnds ends = {}) {
    std::vector<Quad> out;
    if (!(window.lo < window.hi) || range.hi < range.lo) return out;
    // pi1 - pi2 = beta (ell - ell')
    const Quad gap = lat.ell - lat.ell_conj;
    Quad b0 = (range.lo - window.hi) / gap, b1 = (range.hi - window.lo) / gap;
    if (b1 < b0) std::swap(b0, b1);
    for (long long beta = b0.floor(); beta <= b1.floor() + 1; ++beta) {
        const Quad x1 = Quad(beta) * lat.ell, x2 = Quad(beta) * lat.ell_conj;
        Quad a0 = max(range.lo - x1, window.lo - x2), a1 = min(range.hi - x1, window.hi - x2);
        if (a1 < a0) continue;
        for (long long alpha = a0.floor() - 1; Quad(alpha) <= a1; ++alpha) {
            Quad p1 = Quad(alpha) + x1, p2 = Quad(alpha) + x2;
            const bool above = ends.lo_closed ? window.lo <= p2 : window.lo < p2;
            const bool below = ends.hi_closed ? p2 <= window.hi : p2 < window.hi;
            if (range.lo <= p1 && p1 <= range.hi && above && below) out.push_back(p1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/// Is x = Delta(p) for a prefix p of the fixed point? Delta is injective on Z + Z ell', so at most one
/// candidate (|p|_a, |p|_b) exists.
inline bool delta_of_prefix(const Substitution& s, const Quad& ell_conj, const Quad& x) {
    if (!x.is_rational() && x.D() != ell_conj.D()) return false;
    const Rat beta = x.is_rational() ? Rat(0) : x.q() / ell_conj.q();
    if (!beta.is_integer()) return false;
    const Rat alpha = x.p() - beta * ell_conj.p();
    if (!alpha.is_integer() || alpha.num() < 0 || beta.num() < 0) return false;
    const PosWord u = fixed_point_prefix(s, static_cast<std::size_t>(alpha.num() + beta.num()));
    return static_cast<long long>(u.count(Letter::a)) == alpha.num();
}

} // namespace detail

/// The window closed exactly at the endpoints some prefix of the fixed point reaches; the others are limits only.
inline WindowEnds attained_ends(const Substitution& s, const Interval& window) {
    const Quad ell_conj = spectral(s).ell_conj;
    return {detail::delta_of_prefix(s, ell_conj, window.lo), detail::delta_of_prefix(s, ell_conj, window.hi)};
}

/// Left endpoints |w|_a + |w|_b ell of the fixed-point tiling that fall in range.
inline std::vector<Quad> vertex_set(const Substitution& s, const Interval& range) {
    const SpectralData sp = spectral(s);
    std::size_t n = 64;
    for (;;) {
        PosWord u = fixed_point_prefix(s, n);
        std::vector<Quad> out;
        Quad x(0);
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (x > range.hi) return out;
            if (x >= range.lo) out.push_back(x);
            x += u[k] == Letter::a ? Quad(1) : sp.ell;
        }
        n *= 2;
    }
}

inline bool cut_project_verify(const Substitution& s, unsigned depth, const Interval& range) {
    const RauzyDecomposition r = rauzy_decomposition(s, depth);
    const auto points = cut_project_points(Lattice::of(spectral(s)), r.hull(), range, attained_ends(s, r.hull()));
    return points == vertex_set(s, range);
}

// ---------------------------------------------------------------------------
// Sturmian words

enum class SturmConvention { lower, upper };

/// Letter k codes rho + k alpha mod 1: lower uses [0, 1-alpha) -> a, upper (0, 1-alpha] -> a.
inline PosWord sturmian_word(const Quad& alpha, const Quad& rho, SturmConvention conv, std::size_t n) {
    if (alpha.is_rational()) throw domain_error(ErrorKind::RationalInput, "slope " + alpha.str() + " is rational");
    if (alpha.sign() <= 0 || alpha >= Quad(1)) throw domain_error(ErrorKind::BadArgument, "slope must lie in (0,1)");
    const Quad cut = Quad(1) - alpha;
    PosWord w;
    Quad x = rho;
    for (std::size_t k = 0; k < n; ++k) {
        Quad f = x - Quad(x.floor());
        bool is_a = conv == SturmConvention::lower ? f < cut : (f.sign() > 0 && f <= cut);
        w.push_back(is_a ? Letter::a : Letter::b);
        x += alpha;
    }
    return w;
}

inline PosWord characteristic_word(const Quad& alpha, std::size_t n) {
    return sturmian_word(alpha, alpha, SturmConvention::lower, n);
}

} // namespace sdual
