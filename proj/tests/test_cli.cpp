#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <sstream>

#include "app.hpp"

using namespace sdual;
using namespace sdual::cli;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

// Runs the real binary; returns exit status and stdout.
std::pair<int, std::string> shell(const std::string& args) {
    std::string cmd = std::string(SDUAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(Cli, AnalyzeRho) {
    auto r = call({"analyze", "a->aba,b->ab", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["matrix"], nlohmann::json::parse("[[2,1],[1,1]]"));
    EXPECT_EQ(j["selfdual_class"], "Mirror");
    EXPECT_EQ(j["witness"], "a");
    EXPECT_EQ(j["decomposition"], "L.E.L.E");
    EXPECT_EQ(Quad::parse(j["lambda"]["exact"].get<std::string>()), Quad(Rat(3, 2), Rat(1, 2), 5));
    EXPECT_NEAR(j["lambda"]["approx"].get<double>(), 2.6180339887, 1e-9);
    EXPECT_EQ(j["cf_alpha"], "[0; 2, (1)]");
}

TEST(Cli, AnalyzeDirectAndKrieger) {
    auto j = nlohmann::json::parse(call({"analyze", "a->abaab,b->ababaab", "--json"}).out);
    EXPECT_EQ(j["selfdual_class"], "Direct");
    EXPECT_EQ(j["witness"], "BAAB");
    EXPECT_EQ(j["matrix_form"], "M(3,4)");
    auto k = nlohmann::json::parse(call({"analyze", "a->ab,b->baabbaabbaabba", "--json"}).out);
    EXPECT_EQ(k["invertible"], false);
    EXPECT_EQ(k["det"], 0);
    EXPECT_TRUE(k["alpha"].is_null());
    EXPECT_TRUE(k["selfdual_class"].is_null());
    auto t = call({"analyze", "a->aba,b->ab"});
    EXPECT_NE(t.out.find("Mirror"), std::string::npos);
}

TEST(Cli, ReportRoundTrip) {
    for (const auto& e : enumerate_corpus(5)) {
        AnalysisReport r = analyze(e.sub);
        EXPECT_EQ(report_from_json(nlohmann::json::parse(to_json(r).dump())), r) << e.sub;
        if (r.selfdual_class && r.matrix_form) EXPECT_EQ(*r.selfdual_class == "NotSelfdual", *r.matrix_form == "none") << e.sub;
    }
}

TEST(Cli, DualReciprocalInverse) {
    EXPECT_EQ(call({"dual", "a->aba,b->ab"}).out, "a->baa,b->ba\n");
    EXPECT_EQ(call({"reciprocal", "a->aba,b->ab"}).out, "a->ab,b->abb\n");
    EXPECT_EQ(call({"inverse", "a->aba,b->ab"}).out, "a->Ba,b->Abb\n");
    EXPECT_EQ(call({"decompose", "a->ab,b->a"}).out, "L.E\n");
}

TEST(Cli, DeterminantMinusOneAndSquare) {
    auto r = call({"dual", "a->ab,b->a"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("--square"), std::string::npos);
    auto s = call({"dual", "a->ab,b->a", "--square"});
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(s.out, "a->baa,b->ba\n");
}

TEST(Cli, ErrorsAndExitCodes) {
    auto p = call({"analyze", "a->abx,b->a"});
    EXPECT_EQ(p.code, 2);
    EXPECT_NE(p.err.find("position 5"), std::string::npos);
    EXPECT_EQ(call({"decompose", "a->ab,b->baabbaabbaabba"}).code, 1);
    EXPECT_EQ(call({"bogus"}).code, 2);
    EXPECT_EQ(call({"verify", "no-such-suite"}).code, 2);
    EXPECT_EQ(call({"enumerate", "--max-len", "11"}).code, 1);
}

TEST(Cli, ConjugateAndSelfdual) {
    EXPECT_EQ(call({"conjugate", "a->abaab,b->ababaab", "a->baaba,b->baababa"}).out, "conjugate, witness BAAB\n");
    EXPECT_EQ(call({"conjugate", "a->ab,b->baabbaabbaabba", "a->abbaab,b->baabbaabba", "--kmax", "6"}).out,
              "not conjugate\n");
    EXPECT_EQ(call({"selfdual", "a->aba,b->ab"}).out, "Mirror, witness a, matrix form M'(2,1)\n");
}

TEST(Cli, RauzyTilingCutProject) {
    auto r = call({"rauzy", "a->aba,b->ab", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(Quad::parse(j["Ra"]["lo"]["exact"].get<std::string>()), Quad(-1));
    EXPECT_EQ(Quad::parse(j["Rb"]["hi"]["exact"].get<std::string>()), Quad(Rat(1, 2), Rat(1, 2), 5));
    auto t = nlohmann::json::parse(call({"tiling", "a->aba,b->ab", "--depth", "1", "--json"}).out);
    EXPECT_EQ(t["patch"].size(), 3u);
    EXPECT_EQ(t["patch"][1]["type"], "b");
    auto c = nlohmann::json::parse(call({"cutproject", "a->aba,b->ab", "--json"}).out);
    EXPECT_EQ(c["matches_tiling"], true);
    EXPECT_EQ(call({"stardual", "a->aba,b->ab"}).code, 0);
}

TEST(Cli, SturmianAndCf) {
    EXPECT_EQ(call({"sturmian", "3/2-1/2*sqrt(5)", "--start", "alpha", "-n", "5"}).out, "abaab\n");
    EXPECT_EQ(call({"sturmian", "3/2-1/2*sqrt(5)", "-n", "3"}).out, "aab\n");
    auto c = nlohmann::json::parse(call({"cf", "sqrt(2)-1", "--json"}).out);
    EXPECT_EQ(c["cf"], "[0; (2)]");
    auto d = nlohmann::json::parse(call({"cf", "[0; (2)]", "--dual", "--json"}).out);
    EXPECT_EQ(Quad::parse(d["value"]["exact"].get<std::string>()), Quad(2) - Quad::sqrt_of(2));
    EXPECT_EQ(call({"cf", "[0; 2, (1)]", "--json"}).out.find("\"selfdual\":true") != std::string::npos, true);
}

TEST(Cli, Enumerate) {
    auto all = call({"enumerate", "--max-len", "3"});
    std::size_t lines = std::count(all.out.begin(), all.out.end(), '\n');
    EXPECT_EQ(lines, enumerate_corpus(3).size());
    EXPECT_EQ(all.out, call({"enumerate", "--max-len", "3"}).out);
    auto sd = call({"enumerate", "--max-len", "4", "--filter", "selfdual"});
    EXPECT_NE(sd.out.find("L.E.L.E\ta->aba,b->ab"), std::string::npos);
    auto pr = call({"enumerate", "--max-len", "2", "--filter", "primitive"});
    EXPECT_EQ(pr.out.find("\ta->a,b->ab\n"), std::string::npos);
    EXPECT_EQ(pr.out.find("\ta->b,b->a\n"), std::string::npos);
    auto j = nlohmann::json::parse(call({"enumerate", "--max-len", "3", "--json"}).out);
    EXPECT_EQ(j.size(), lines);
}

TEST(Cli, EnumerationCountsMatchBruteForce) {
    // every generator word of length 1..n, recomposed and deduplicated
    auto brute = [](unsigned n) {
        std::set<Substitution> seen;
        std::vector<Substitution> layer{Substitution::identity()};
        for (unsigned len = 1; len <= n; ++len) {
            std::vector<Substitution> next;
            for (const auto& s : layer)
                for (const auto& g : {Substitution::E(), Substitution::L(), Substitution::Ltilde()}) {
                    next.push_back(compose(s, g));
                    seen.insert(next.back());
                }
            layer = std::move(next);
        }
        return seen.size();
    };
    for (unsigned n : {1u, 2u, 3u, 8u}) EXPECT_EQ(enumerate_corpus(n).size(), brute(n)) << n;
    auto a = enumerate_corpus(6), b = enumerate_corpus(6);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].sub, b[i].sub);
}

TEST(Cli, Verify) {
    auto r = call({"verify", "dual-equivalence", "--sub", "a->aba,b->ab", "-n", "20"});
    EXPECT_EQ(r.out, "PASS dual-equivalence (1 checked)\n");
    auto f = call({"verify", "dual-frequency", "--max-len", "6"});
    EXPECT_EQ(f.out.rfind("PASS dual-frequency", 0), 0u) << f.out;
    auto m = call({"verify", "selfdual-matrix", "--max-len", "6"});
    EXPECT_EQ(m.out.rfind("PASS selfdual-matrix", 0), 0u) << m.out;
    EXPECT_EQ(m.code, 0);
    // one-letter factors cannot tell the Krieger word apart, so the suite must fail
    auto k = call({"verify", "sturmian-complexity", "--sub", "a->aba,b->ab", "-n", "1"});
    EXPECT_EQ(k.out.rfind("FAIL sturmian-complexity", 0), 0u) << k.out;
    EXPECT_EQ(k.code, 1);
}

TEST(Cli, RenderIsDeterministic) {
    auto a = call({"render", "a->aba,b->ab", "--target", "dual_strand", "--iterations", "2"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, call({"render", "a->aba,b->ab", "--target", "dual_strand", "--iterations", "2"}).out);
    // points = segments + 1; segments = column sum of (M^T)^2 for a*, here 5 + 3 = 8
    auto pts = a.out.substr(a.out.find("points=\"") + 8);
    pts = pts.substr(0, pts.find('"'));
    EXPECT_EQ(std::count(pts.begin(), pts.end(), ' ') + 1, 9);
    auto t = call({"render", "a->aba,b->ab", "--target", "tiling", "--iterations", "3"});
    std::size_t rects = 0;
    for (std::size_t at = 0; (at = t.out.find("<rect", at)) != std::string::npos; ++at) ++rects;
    EXPECT_EQ(rects, fixed_point_prefix(Substitution("aba", "ab"), 21).size());
    auto z = call({"render", "a->aba,b->ab", "--target", "strand", "--iterations", "0"});
    pts = z.out.substr(z.out.find("points=\"") + 8);
    pts = pts.substr(0, pts.find('"'));
    EXPECT_EQ(std::count(pts.begin(), pts.end(), ' '), 1);
    EXPECT_EQ(call({"render", "a->aba,b->ab", "--target", "blob"}).code, 2);
}

TEST(Cli, BinaryExitCodes) {
    auto ok = shell("dual 'a->aba,b->ab'");
    EXPECT_EQ(ok.first, 0);
    EXPECT_EQ(ok.second, "a->baa,b->ba\n");
    EXPECT_EQ(shell("analyze 'a->ab;b->q'").first, 2);
    EXPECT_EQ(shell("reciprocal 'a->ab,b->a'").first, 1);
}
