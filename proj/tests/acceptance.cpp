// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace sdual;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

const Substitution rho("aba", "ab");
const Substitution ex56("abaab", "ababaab");
const Substitution krieger_s("ab", "baabbaabbaabba");
const Substitution krieger_r("abbaab", "baabbaabba");
const Quad tau = oracle::tau();
const Quad itau = Quad(1) / tau;

Substitution conj_E(const Substitution& s) { return compose(Substitution::E(), compose(s, Substitution::E())); }

DigitSetMatrix dsm(std::vector<Quad> aa, std::vector<Quad> ab, std::vector<Quad> ba, std::vector<Quad> bb) {
    DigitSetMatrix D;
    D(0, 0) = std::move(aa);
    D(0, 1) = std::move(ab);
    D(1, 0) = std::move(ba);
    D(1, 1) = std::move(bb);
    D.normalize();
    return D;
}

const std::vector<Substitution>& corpus() {
    static const std::vector<Substitution> c = [] {
        std::vector<Substitution> v;
        for (const auto& e : enumerate_corpus(8)) v.push_back(e.sub);
        return v;
    }();
    return c;
}

const std::vector<Substitution>& corpus_prim_det1() {
    static const std::vector<Substitution> c = [] {
        std::vector<Substitution> v;
        for (const auto& s : corpus())
            if (is_primitive(s) && det(s) == 1) v.push_back(s);
        return v;
    }();
    return c;
}

Quad dual_of(const Quad& a) { return (a.star() - Quad(1)) / (Quad(2) * a.star() - Quad(1)); }

void c1(Check& c) {
    c.expect(dual_substitution(rho) == Substitution("baa", "ba"), "rho*");
    c.expect(generator_dual(Generator::L) == Substitution("ba", "b"), "L*");
    c.expect(generator_dual(Generator::E) == Substitution::E(), "E*");
}

void c2(Check& c) {
    const Substitution rb = reciprocal(rho);
    c.expect(rb == Substitution("ab", "abb"), "reciprocal of rho");
    auto w = find_conjugator(rho, conj_E(rb));
    c.expect(w && *w == RedWord("a") && is_conjugator(rho, conj_E(rb), *w), "witness a for rho ~ E rho-bar E");
    const Substitution sb = reciprocal(ex56);
    c.expect(sb == Substitution("baaba", "baababa"), "reciprocal of (abaab, ababaab)");
    auto v = find_conjugator(ex56, sb);
    c.expect(v && *v == RedWord("BAAB") && is_conjugator(ex56, sb, *v), "witness b^-1a^-1a^-1b^-1");
}

void c3(Check& c) {
    const TileSubst t = tile_subst_from(rho);
    c.expect(t.digits == dsm({Quad(0), tau}, {Quad(0)}, {Quad(1)}, {Quad(1)}), "D(rho)");
    c.expect(t.digits.transpose_star() == dsm({Quad(0), -itau}, {Quad(1)}, {Quad(0)}, {Quad(1)}), "(D^T)*");
    c.expect(e_matrix(rho) == dsm({Quad(0), -tau}, {tau * tau}, {Quad(0)}, {tau * tau}), "E-matrix");
    c.expect(star_relation_check(rho), "star relation for rho");
    std::size_t n = 0;
    for (const auto& s : corpus())
        if (is_primitive(s)) {
            ++n;
            c.expect(star_relation_check(s), "star relation for " + s.str());
        }
    c.expect(n > 0, "empty corpus");
}

void c4(Check& c) {
    const RauzyDecomposition r = rauzy_decomposition(rho);
    c.expect(r.Ra == Interval{Quad(-1), itau}, "R_a");
    c.expect(r.Rb == Interval{itau, tau}, "R_b");
    // the set equation holds exactly: lambda' R_j is tiled by pieces R_i + lambda' Delta(prefix)
    const SpectralData sp = spectral(rho);
    const TileSubst star = star_dual(tile_subst_from(rho));
    c.expect(star.prototile(Letter::a).lo * sp.lambda == r.Ra.lo && star.prototile(Letter::b).hi * sp.lambda == r.Rb.hi,
             "windows agree with the star-dual prototiles");
}

void c5(Check& c) {
    std::size_t selfdual = 0;
    for (const auto& s : corpus_prim_det1()) {
        const bool cls = selfdual_class(s).kind != SelfdualKind::NotSelfdual;
        const bool form = matrix_selfdual_form(matrix(s)).kind != SelfdualForm::Kind::None;
        selfdual += cls;
        c.expect(cls == form, "discrepancy at " + s.str());
    }
    c.expect(selfdual > 0, "no selfdual members found");
}

void c6(Check& c) {
    for (const auto& s : corpus_prim_det1()) {
        const SpectralData sp = spectral(s);
        const Quad star = dual_frequency(sp);
        c.expect(star == spectral(matrix(s).transpose()).alpha, "dual frequency vs transpose at " + s.str());
        const bool fixed = sp.alpha == star;
        c.expect((Quad(2) * sp.alpha * sp.alpha_conj == sp.alpha + sp.alpha_conj - Quad(1)) == fixed, "quadric test at " + s.str());
        c.expect(is_selfdual_frequency(cf_expand(sp.alpha)) == fixed, "palindrome test at " + s.str());
    }
    // Sturm continued fractions: [0; a1, (c)] with c_m >= a1 - 1 and [0; 1, n2, (e)] with e_m >= n2 - 1
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dig(1, 6), len(1, 5);
    std::size_t checked = 0;
    while (checked < 60) {
        CF f;
        if (rng() % 2) {
            long long a1 = dig(rng);
            f.preperiod = {0, a1};
            for (int k = len(rng); k > 0; --k) f.period.push_back(dig(rng));
            f.period.back() = std::max(f.period.back(), a1 - 1);
        } else {
            long long n2 = dig(rng);
            f.preperiod = {0, 1, n2};
            for (int k = len(rng); k > 0; --k) f.period.push_back(dig(rng));
            f.period.back() = std::max(f.period.back(), n2 - 1);
        }
        const Quad a = cf_value(f);
        if (!is_sturm_number(a)) continue;
        ++checked;
        const CF d = cf_dual_transform(f);
        c.expect(cf_value(d) == dual_of(a) && d == cf_expand(dual_of(a)), "cf_dual_transform at " + to_string(f));
    }
    c.expect(checked >= 30, "fewer than 30 Sturm CFs");
}

void c7(Check& c) {
    for (const auto& s : corpus())
        if (is_primitive(s) && is_invertible(s)) {
            const auto p = complexity_profile(s, 30);
            for (std::size_t n = 1; n <= 30; ++n) c.expect(p[n - 1] == n + 1, "p(n) != n+1 for " + s.str());
        }
    c.expect(!is_sturmian_language(krieger_s, 30), "Krieger substitution looks Sturmian");
    const Quad alpha(Rat(3, 2), Rat(-1, 2), 5);
    c.expect(characteristic_word(alpha, 5) == PosWord("abaab"), "characteristic word");
    c.expect(fixed_point_prefix(rho, 5) == PosWord("abaab"), "fixed point prefix");
}

void c8(Check& c) {
    c.expect(hulls_equal_upto(krieger_s, krieger_r, 50), "Krieger factor sets differ");
    c.expect(!conjugate_power_search(krieger_s, krieger_r, 6), "Krieger pair conjugate up to powers");
    std::size_t twisted = 0, untwistable = 0;
    for (const auto& s : corpus()) {
        auto tw = inner_twist(s);
        if (!tw) {
            ++untwistable;
            continue;
        }
        ++twisted;
        auto r = conjugate_power_search(s, tw->first, 1);
        c.expect(r && r->k == 1 && r->m == 1 && is_conjugator(s, tw->first, r->witness), "inner twist of " + s.str());
    }
    c.expect(twisted > 0, "no twisted members");
    std::cerr << "  criterion 8: " << twisted << " twisted members, " << untwistable << " without a one-letter twist\n";
}

void c9(Check& c) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> co(-6, 6);
    for (int t = 0; t < 100; ++t) {
        const Substitution s = oracle::random_generator_product(rng, 1 + rng() % 7);
        const Substitution u = oracle::random_generator_product(rng, 1 + rng() % 7);
        StrandSum x;
        for (int k = 0, n = 1 + rng() % 4; k < n; ++k) x.add({{co(rng), co(rng)}, rng() % 2 ? SegKind::Astar : SegKind::Bstar});
        c.expect(e1_star_apply(compose(s, u), x) == e1_star_apply(u, e1_star_apply(s, x)),
                 "contravariance for " + s.str() + ", " + u.str());
    }
    for (const auto& s : corpus())
        if (is_primitive(s)) {
            const SpectralData sp = spectral(s);
            StrandSum window;
            for (const auto& g : s_alpha_window(sp, 10)) window.add(g);
            const StrandSum img = e1_star_apply(s, window);
            c.expect(img.max_multiplicity() == 1, "duplicate in the image for " + s.str());
            for (const auto& [g, m] : img.entries()) c.expect(in_S_alpha(g, sp), "image leaves S_alpha for " + s.str());
            const auto w = s_alpha_window(sp, 6);
            for (std::size_t len = 1; len <= 6; ++len)
                for (std::size_t i = 0; i + len <= w.size(); ++i) {
                    StrandSum piece;
                    for (std::size_t k = i; k < i + len; ++k) piece.add(w[k]);
                    c.expect(is_dual_strand(e1_star_apply(s, piece)), "disconnected image for " + s.str());
                }
        }
}

void c10(Check& c) {
    const Interval range{Quad(0), Quad(30)};
    c.expect(cut_project_verify(rho, 1, range), "rho");
    for (const auto& s : corpus_prim_det1()) c.expect(cut_project_verify(s, 1, range), "cut and project for " + s.str());
}

void c11(Check& c) {
    auto swapped = [](const std::set<PosWord>& f) {
        std::set<PosWord> out;
        for (const auto& w : f) out.insert(swap_letters(w));
        return out;
    };
    for (const auto& s : corpus_prim_det1()) {
        const Substitution r = reciprocal(s), d = dual_substitution(s);
        for (std::size_t n = 1; n <= 20; ++n)
            c.expect(factor_set(r, n) == swapped(factor_set(d, n)), "languages differ for " + s.str() + " at n=" + std::to_string(n));
    }
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
        {"dual substitutions", c1},
        {"reciprocals and conjugation witnesses", c2},
        {"digit matrices and the star relation", c3},
        {"Rauzy windows of rho", c4},
        {"selfduality versus matrix forms", c5},
        {"dual frequency and palindromic expansions", c6},
        {"Sturmian complexity", c7},
        {"rigidity of the Krieger pair and inner twists", c8},
        {"E1* contravariance, stability and connectivity", c9},
        {"cut and project", c10},
        {"reciprocal and dual languages", c11},
    };
    std::cerr << "corpus: " << corpus().size() << " substitutions, " << corpus_prim_det1().size() << " primitive with det +1\n";
    int failed = 0, k = 0;
    for (const auto& [name, fn] : criteria) {
        ++k;
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.why << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %s (%.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", k, name, secs, c.ok ? "" : ": ", c.ok ? "" : c.why.str().c_str());
        failed += !c.ok;
    }
    return failed == 0 ? 0 : 1;
}
