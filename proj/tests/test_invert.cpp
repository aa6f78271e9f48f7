#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"

using namespace sdual;

namespace {
const Substitution fib("ab", "a");
const Substitution rho("aba", "ab");
const Substitution ex56("abaab", "ababaab");
const Substitution krieger_s("ab", "baabbaabbaabba");
const Substitution krieger_r("abbaab", "baabbaabba");

std::vector<RedWord> reduced_words_upto(std::size_t n) {
    std::vector<RedWord> out{RedWord()};
    std::vector<std::string> layer{""};
    for (std::size_t len = 1; len <= n; ++len) {
        std::vector<std::string> next;
        for (const auto& w : layer)
            for (char c : {'a', 'b', 'A', 'B'}) {
                std::string s = w + c;
                if (oracle::reduce_by_scanning(s).size() != s.size()) continue;
                next.push_back(s);
                out.push_back(RedWord(s));
            }
        layer = std::move(next);
    }
    return out;
}

// t(x) = w^-1 s(x) w when both images stay positive
std::optional<Substitution> untwist(const Substitution& s, const RedWord& w) {
    RedWord wi = invert_word(w);
    RedWord a = wi * RedWord(s.img_a()) * w, b = wi * RedWord(s.img_b()) * w;
    if (!a.is_positive() || !b.is_positive() || a.empty() || b.empty()) return std::nullopt;
    return Substitution(a.to_positive(), b.to_positive());
}
} // namespace

TEST(Invert, DecomposeExamples) {
    EXPECT_EQ(decompose(fib).str(), "L.E");
    EXPECT_EQ(decompose(rho).str(), "L.E.L.E");
    EXPECT_EQ(recompose(decompose(rho)), rho);
    EXPECT_EQ(decompose(Substitution::identity()).str(), "id");
    try {
        decompose(krieger_s);
        FAIL();
    } catch (const domain_error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
    }
    EXPECT_EQ(parse_decomposition("L.E.L.E"), decompose(rho));
    EXPECT_THROW(parse_decomposition("L.X"), parse_error);
}

TEST(Invert, IsInvertible) {
    EXPECT_TRUE(is_invertible(rho));
    EXPECT_FALSE(is_invertible(Substitution("ab", "ba")));
    EXPECT_TRUE(is_invertible(Substitution::E()));
    EXPECT_FALSE(is_invertible(krieger_s));
}

TEST(Invert, InverseExamples) {
    EXPECT_EQ(inverse(rho), FreeEndo("Ba", "Abb"));
    EXPECT_EQ(inverse(fib), FreeEndo("b", "Ba"));
    EXPECT_EQ(inverse(Substitution::E()), FreeEndo("b", "a"));
}

TEST(Invert, ReciprocalExamples) {
    EXPECT_EQ(reciprocal(rho), Substitution("ab", "abb"));
    EXPECT_EQ(reciprocal(ex56), Substitution("baaba", "baababa"));
    try {
        reciprocal(fib);
        FAIL();
    } catch (const domain_error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DeterminantMinusOne);
    }
}

TEST(Invert, ConjugatorExamples) {
    Substitution mirror = compose(Substitution::E(), compose(reciprocal(rho), Substitution::E()));
    EXPECT_EQ(find_conjugator(rho, mirror), RedWord("a"));
    EXPECT_EQ(find_conjugator(ex56, reciprocal(ex56)), RedWord("BAAB"));
    EXPECT_EQ(find_conjugator(rho, rho), RedWord());
    // conjugator longer than rho(a)
    auto t = untwist(rho, RedWord("aba"));
    ASSERT_TRUE(t);
    auto w = find_conjugator(rho, *t);
    ASSERT_TRUE(w);
    EXPECT_TRUE(is_conjugator(rho, *t, *w));
}

TEST(Invert, AreConjugate) {
    auto tw = inner_twist(rho);
    ASSERT_TRUE(tw);
    EXPECT_TRUE(are_conjugate(rho, tw->first));
    EXPECT_FALSE(are_conjugate(rho, compose(Substitution::E(), compose(rho, Substitution::E()))));
    EXPECT_FALSE(are_conjugate(krieger_s, krieger_r));
}

TEST(Invert, PowerSearch) {
    auto tw = inner_twist(rho);
    ASSERT_TRUE(tw);
    auto r = conjugate_power_search(rho, tw->first, 1);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->k, 1u);
    EXPECT_EQ(r->m, 1u);
    EXPECT_EQ(r->witness, tw->second);
    auto p = conjugate_power_search(rho, power(rho, 2), 2);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->k, 2u);
    EXPECT_EQ(p->m, 1u);
    EXPECT_TRUE(p->witness.empty());
    EXPECT_FALSE(conjugate_power_search(krieger_s, krieger_r, 6));
}

TEST(Invert, SelfdualClassExamples) {
    auto c = selfdual_class(rho);
    EXPECT_EQ(c.kind, SelfdualKind::Mirror);
    EXPECT_EQ(c.witness, RedWord("a"));
    auto d = selfdual_class(ex56);
    EXPECT_EQ(d.kind, SelfdualKind::Direct);
    EXPECT_EQ(d.witness, RedWord("BAAB"));
    // L o rho has matrix [[3,2],[1,1]], in neither form
    Substitution t = compose(Substitution::L(), rho);
    EXPECT_EQ(matrix_selfdual_form(matrix(t)).kind, SelfdualForm::Kind::None);
    EXPECT_EQ(selfdual_class(t).kind, SelfdualKind::NotSelfdual);
    // rho o L has matrix [[2,3],[1,2]] = M_{2,3}
    EXPECT_EQ(selfdual_class(compose(rho, Substitution::L())).kind, SelfdualKind::Direct);
}

TEST(Invert, MatrixForms) {
    EXPECT_EQ(matrix_selfdual_form(IntMat2::of(2, 1, 1, 1)), (SelfdualForm{SelfdualForm::Kind::FormMprime, 2, 1}));
    EXPECT_EQ(matrix_selfdual_form(IntMat2::of(3, 4, 2, 3)), (SelfdualForm{SelfdualForm::Kind::FormM, 3, 4}));
    EXPECT_EQ(matrix_selfdual_form(IntMat2::of(2, 3, 1, 2)), (SelfdualForm{SelfdualForm::Kind::FormM, 2, 3}));
    EXPECT_EQ(matrix_selfdual_form(IntMat2::of(3, 1, 2, 1)).kind, SelfdualForm::Kind::None);
    EXPECT_THROW(matrix_selfdual_form(IntMat2::of(1, 1, 1, 0)), domain_error);
}

TEST(Invert, Theta) {
    EXPECT_EQ(theta_substitution(1), Substitution("b", "ba"));
    EXPECT_EQ(theta_substitution(2), compose(Substitution::L(), compose(Substitution::E(), Substitution::L())));
    EXPECT_THROW(theta_substitution(0), domain_error);
}

TEST(InvertProperty, DecompositionRoundTrips) {
    std::mt19937 rng(11);
    for (int t = 0; t < 500; ++t) {
        Substitution s = oracle::random_generator_product(rng, rng() % 12);
        auto d = try_decompose(s);
        ASSERT_TRUE(d) << s;
        EXPECT_EQ(recompose(*d), s);
        for (std::size_t i = 0; i + 1 < d->factors.size(); ++i)
            EXPECT_FALSE(d->factors[i] == Generator::E && d->factors[i + 1] == Generator::E);
    }
}

TEST(InvertProperty, InverseComposesToIdentity) {
    std::mt19937 rng(12);
    for (int t = 0; t < 300; ++t) {
        Substitution s = oracle::random_generator_product(rng, rng() % 10);
        FreeEndo inv = inverse(s);
        EXPECT_EQ(compose(FreeEndo(s), inv), FreeEndo::identity()) << s;
        EXPECT_EQ(compose(inv, FreeEndo(s)), FreeEndo::identity()) << s;
        EXPECT_EQ(matrix(inv) * matrix(s), IntMat2::identity());
    }
}

TEST(InvertProperty, ReciprocalIsInvolutiveWithSwappedTransposedMatrix) {
    for (const auto& e : enumerate_corpus(7)) {
        if (det(e.sub) != 1) continue;
        Substitution r = reciprocal(e.sub);
        const IntMat2 E = matrix(Substitution::E());
        EXPECT_EQ(E * matrix(r) * E, matrix(e.sub).transpose()) << e.sub;
        EXPECT_EQ(reciprocal(r), e.sub) << e.sub;
    }
}

TEST(InvertProperty, ConjugatorSearchIsComplete) {
    // Every conjugator of length <= 4 is seen by the search (possibly a shorter one).
    const auto words = reduced_words_upto(4);
    for (const auto& e : enumerate_corpus(5)) {
        for (const RedWord& w : words) {
            auto t = untwist(e.sub, w);
            if (!t) continue;
            auto got = find_conjugator(e.sub, *t);
            ASSERT_TRUE(got) << e.sub << " w=" << w;
            EXPECT_TRUE(is_conjugator(e.sub, *t, *got));
            EXPECT_LE(got->size(), w.size());
        }
    }
}

TEST(InvertProperty, ConjugacyMatchesBruteForceOnSameMatrix) {
    const auto words = reduced_words_upto(4);
    std::map<IntMat2, std::vector<Substitution>, decltype([](const IntMat2& x, const IntMat2& y) { return x.m < y.m; })>
        groups;
    for (const auto& e : enumerate_corpus(6))
        if (e.sub.total_length() <= 6) groups[matrix(e.sub)].push_back(e.sub);
    std::size_t pairs = 0;
    for (const auto& [M, members] : groups)
        for (const auto& s : members)
            for (const auto& t : members) {
                bool brute = false;
                for (const auto& w : words) brute = brute || is_conjugator(s, t, w);
                // invertible with equal matrices: always conjugate, and short
                EXPECT_TRUE(brute) << s << " " << t;
                EXPECT_TRUE(find_conjugator(s, t)) << s << " " << t;
                ++pairs;
            }
    EXPECT_GT(pairs, 50u);
}

TEST(InvertProperty, SelfdualClassMatchesMatrixForms) {
    for (const auto& e : primitive_det1_corpus(7)) {
        auto c = selfdual_class(e.sub);
        auto f = matrix_selfdual_form(matrix(e.sub));
        EXPECT_EQ(c.kind == SelfdualKind::Direct, f.kind == SelfdualForm::Kind::FormM) << e.sub;
        EXPECT_EQ(c.kind == SelfdualKind::Mirror, f.kind == SelfdualForm::Kind::FormMprime) << e.sub;
        if (c.witness) {
            Substitution r = reciprocal(e.sub);
            Substitution target = c.kind == SelfdualKind::Direct
                                      ? r
                                      : compose(Substitution::E(), compose(r, Substitution::E()));
            EXPECT_TRUE(is_conjugator(e.sub, target, *c.witness));
        }
    }
}

TEST(InvertProperty, InnerTwistIsConjugate) {
    std::size_t twisted = 0, without = 0;
    for (const auto& e : enumerate_corpus(7)) {
        if (!is_primitive(e.sub)) continue;
        auto tw = inner_twist(e.sub);
        if (!tw) {
            ++without;
            continue;
        }
        ++twisted;
        EXPECT_TRUE(is_conjugator(e.sub, tw->first, tw->second));
        EXPECT_NE(tw->first, e.sub);
        EXPECT_TRUE(is_invertible(tw->first));
    }
    EXPECT_GT(twisted, 100u);
    EXPECT_LT(without, twisted);
}
