#pragma once

// Property suites behind `sdual verify ID`. Each returns pass/fail with the
// first counterexample.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <sdual/sdual.hpp>

namespace sdual::cli {

struct VerifyParams {
    unsigned max_len = 8;         // corpus generator length
    std::size_t n = 30;           // factor length
    long long radius = 10;        // S_alpha window
    std::optional<Substitution> sub;
    unsigned seed = 1;
};

struct VerifyResult {
    std::string id;
    bool passed = true;
    std::size_t checked = 0;
    std::string counterexample;
};

namespace detail {

inline std::vector<Substitution> corpus_where(const VerifyParams& p, const std::function<bool(const Substitution&)>& keep) {
    std::vector<Substitution> out;
    if (p.sub) {
        if (keep(*p.sub)) out.push_back(*p.sub);
        return out;
    }
    for (const auto& e : enumerate_corpus(p.max_len))
        if (keep(e.sub)) out.push_back(e.sub);
    return out;
}

inline bool prim_det1(const Substitution& s) { return is_primitive(s) && det(s) == 1; }

inline void fail(VerifyResult& r, const std::string& why) {
    if (r.passed) r.counterexample = why;
    r.passed = false;
}

inline std::set<PosWord> swapped(const std::set<PosWord>& f) {
    std::set<PosWord> out;
    for (const auto& w : f) out.insert(swap_letters(w));
    return out;
}

inline Substitution random_unimodular(std::mt19937& rng) {
    std::uniform_int_distribution<int> g(0, 2), len(1, 6);
    const Generator gens[] = {Generator::E, Generator::L, Generator::Lt};
    Substitution s = Substitution::identity();
    for (int k = len(rng); k > 0; --k) s = compose(s, generator_subst(gens[g(rng)]));
    return s;
}

} // namespace detail

inline VerifyResult verify_sturmian_complexity(const VerifyParams& p) {
    VerifyResult r{"sturmian-complexity"};
    for (const auto& s : detail::corpus_where(p, [](const Substitution& s) { return is_primitive(s) && is_invertible(s); })) {
        ++r.checked;
        if (!is_sturmian_language(s, p.n)) detail::fail(r, s.str() + " has p(n) != n+1 for some n <= " + std::to_string(p.n));
    }
    const Substitution krieger("ab", "baabbaabbaabba");
    if (is_sturmian_language(krieger, p.n)) detail::fail(r, "Krieger substitution passes the complexity test");
    return r;
}

inline VerifyResult verify_hull_powers(const VerifyParams& p) {
    VerifyResult r{"hull-powers"};
    const std::size_t n = std::min<std::size_t>(p.n, 12);
    for (const auto& s : detail::corpus_where(p, [](const Substitution& s) { return is_primitive(s); })) {
        ++r.checked;
        if (!hulls_equal_upto(s, power(s, 2), n)) detail::fail(r, s.str() + " and its square differ in factors");
    }
    return r;
}

inline VerifyResult verify_conjugacy_matrix(const VerifyParams& p) {
    VerifyResult r{"conjugacy-matrix"};
    std::map<std::array<long long, 4>, std::vector<Substitution>> groups;
    for (const auto& s : detail::corpus_where(p, [](const Substitution&) { return true; })) {
        IntMat2 M = matrix(s);
        groups[{M(0, 0), M(0, 1), M(1, 0), M(1, 1)}].push_back(s);
    }
    for (const auto& [key, members] : groups)
        for (std::size_t i = 1; i < members.size(); ++i) {
            ++r.checked;
            auto w = find_conjugator(members[0], members[i]);
            if (!w || !is_conjugator(members[0], members[i], *w))
                detail::fail(r, members[0].str() + " and " + members[i].str() + " share a matrix but no conjugator was found");
        }
    return r;
}

inline VerifyResult verify_rigidity(const VerifyParams& p) {
    VerifyResult r{"rigidity"};
    const Substitution ks("ab", "baabbaabbaabba"), kr("abbaab", "baabbaabba");
    ++r.checked;
    if (!hulls_equal_upto(ks, kr, 50)) detail::fail(r, "Krieger pair factor sets differ below length 50");
    if (conjugate_power_search(ks, kr, 6)) detail::fail(r, "Krieger pair is conjugate up to powers");
    for (const auto& s : detail::corpus_where(p, [](const Substitution& s) { return is_primitive(s); })) {
        auto tw = inner_twist(s);
        if (!tw) continue;
        ++r.checked;
        auto found = conjugate_power_search(s, tw->first, 1);
        if (!found || found->k != 1 || found->m != 1) detail::fail(r, s.str() + " is not found conjugate to its inner twist");
    }
    return r;
}

inline VerifyResult verify_dual_contravariance(const VerifyParams& p) {
    VerifyResult r{"dual-contravariance"};
    std::mt19937 rng(p.seed);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int t = 0; t < 100; ++t) {
        Substitution s = detail::random_unimodular(rng), u = detail::random_unimodular(rng);
        StrandSum x;
        for (int k = 0; k < 3; ++k) x.add({{c(rng), c(rng)}, rng() % 2 ? SegKind::Astar : SegKind::Bstar});
        ++r.checked;
        if (e1_star_apply(compose(s, u), x) != e1_star_apply(u, e1_star_apply(s, x)))
            detail::fail(r, "E1* of " + s.str() + " and " + u.str() + " on " + to_string(x));
    }
    return r;
}

inline VerifyResult verify_dual_stability(const VerifyParams& p) {
    VerifyResult r{"dual-stability"};
    for (const auto& s : detail::corpus_where(p, detail::prim_det1)) {
        ++r.checked;
        const SpectralData sp = spectral(s);
        StrandSum window;
        for (const auto& g : s_alpha_window(sp, p.radius)) window.add(g);
        StrandSum img = e1_star_apply(s, window);
        if (img.max_multiplicity() > 1) detail::fail(r, s.str() + ": E1* image of the stairs has a repeated segment");
        for (const auto& [g, m] : img.entries())
            if (!in_S_alpha(g, sp)) detail::fail(r, s.str() + ": " + to_string(g) + " leaves the stairs");
        // substrands of length <= 6 map to dual strands
        auto w = s_alpha_window(sp, 6);
        for (std::size_t len = 1; len <= 6; ++len)
            for (std::size_t i = 0; i + len <= w.size(); ++i) {
                StrandSum piece;
                for (std::size_t k = i; k < i + len; ++k) piece.add(w[k]);
                if (!is_dual_strand(e1_star_apply(s, piece))) detail::fail(r, s.str() + ": image of " + to_string(piece) + " is disconnected");
            }
    }
    return r;
}

inline VerifyResult verify_dual_frequency(const VerifyParams& p) {
    VerifyResult r{"dual-frequency"};
    for (const auto& s : detail::corpus_where(p, detail::prim_det1)) {
        ++r.checked;
        const SpectralData sp = spectral(s);
        if (dual_frequency(sp) != spectral(matrix(s).transpose()).alpha)
            detail::fail(r, s.str() + ": dual frequency formula differs from the transpose");
        if (is_invertible(s) && spectral(dual_substitution(s)).alpha != dual_frequency(sp))
            detail::fail(r, s.str() + ": frequency of the dual substitution differs");
    }
    return r;
}

inline VerifyResult verify_dual_equivalence(const VerifyParams& p) {
    VerifyResult r{"dual-equivalence"};
    const std::size_t n = std::min<std::size_t>(p.n, 20);
    for (const auto& s : detail::corpus_where(p, [](const Substitution& s) { return det(s) == 1 && is_invertible(s) && is_primitive(s); })) {
        ++r.checked;
        if (factor_set(reciprocal(s), n) != detail::swapped(factor_set(dual_substitution(s), n)))
            detail::fail(r, s.str() + ": reciprocal and dual languages differ at length " + std::to_string(n));
    }
    return r;
}

inline VerifyResult verify_selfdual_matrix(const VerifyParams& p) {
    VerifyResult r{"selfdual-matrix"};
    for (const auto& s : detail::corpus_where(p, [](const Substitution& s) { return detail::prim_det1(s) && is_invertible(s); })) {
        ++r.checked;
        const bool cls = selfdual_class(s).kind != SelfdualKind::NotSelfdual;
        const bool form = matrix_selfdual_form(matrix(s)).kind != SelfdualForm::Kind::None;
        if (cls != form) detail::fail(r, s.str() + ": selfdual class and matrix form disagree");
    }
    return r;
}

inline VerifyResult verify_selfdual_frequency(const VerifyParams& p) {
    VerifyResult r{"selfdual-frequency"};
    for (const auto& s : detail::corpus_where(p, detail::prim_det1)) {
        ++r.checked;
        const SpectralData sp = spectral(s);
        const bool fixed = sp.alpha == dual_frequency(sp);
        const bool quadric = Quad(2) * sp.alpha * sp.alpha_conj == sp.alpha + sp.alpha_conj - Quad(1);
        const bool pal = is_selfdual_frequency(cf_expand(sp.alpha));
        if (fixed != quadric || fixed != pal) detail::fail(r, s.str() + ": selfdual frequency tests disagree");
    }
    return r;
}

inline VerifyResult verify_cf_dual_transform(const VerifyParams& p) {
    VerifyResult r{"cf-dual-transform"};
    for (const auto& s : detail::corpus_where(p, detail::prim_det1)) {
        const SpectralData sp = spectral(s);
        const CF c = cf_expand(sp.alpha);
        CF d;
        try {
            d = cf_dual_transform(c);
        } catch (const domain_error&) {
            continue; // not in the two Sturm shapes
        }
        ++r.checked;
        if (cf_value(d) != dual_frequency(sp)) detail::fail(r, s.str() + ": " + to_string(c) + " maps to " + to_string(d));
    }
    return r;
}

inline const std::vector<std::pair<std::string, std::function<VerifyResult(const VerifyParams&)>>>& verify_suites() {
    static const std::vector<std::pair<std::string, std::function<VerifyResult(const VerifyParams&)>>> suites{
        {"sturmian-complexity", verify_sturmian_complexity},
        {"hull-powers", verify_hull_powers},
        {"conjugacy-matrix", verify_conjugacy_matrix},
        {"rigidity", verify_rigidity},
        {"dual-contravariance", verify_dual_contravariance},
        {"dual-stability", verify_dual_stability},
        {"dual-frequency", verify_dual_frequency},
        {"dual-equivalence", verify_dual_equivalence},
        {"selfdual-matrix", verify_selfdual_matrix},
        {"selfdual-frequency", verify_selfdual_frequency},
        {"cf-dual-transform", verify_cf_dual_transform},
    };
    return suites;
}

} // namespace sdual::cli
