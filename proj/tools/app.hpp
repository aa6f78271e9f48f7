#pragma once

// Command-line driver; `run` is the whole program minus process setup.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <sdual/sdual.hpp>

#include "render.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace sdual::cli {

enum ExitCode { kOk = 0, kDomain = 1, kParse = 2, kInternal = 3 };

namespace detail {

struct Options {
    std::string spec, spec2, value, id, target = "strand", svg_file, filter, range_hi = "30", start = "0";
    bool json = false, square = false, upper = false, dual = false;
    unsigned depth = 1, max_len = 8, kmax = 0, iterations = 1;
    std::size_t n = 30, length = 20;
    long long radius = 10;
    double scale = 20.0;
};

/// Parses a substitution and applies --square to determinant -1 inputs.
inline Substitution load(const std::string& text, bool square, std::ostream& err) {
    Substitution s = parse_substitution(text);
    if (square && det(s) == -1) {
        s = power(s, 2);
        err << "note: using the square " << s.str() << '\n';
    }
    return s;
}

inline void emit_svg(const Options& o, const std::string& svg, std::ostream& out) {
    if (o.svg_file.empty() || o.svg_file == "-") {
        out << svg;
        return;
    }
    std::ofstream f(o.svg_file, std::ios::binary);
    if (!f) throw domain_error(ErrorKind::BadArgument, "cannot write " + o.svg_file);
    f << svg;
}

inline std::string quad_text(const Quad& q) { return q.str() + "  (" + approx(q) + ")"; }

inline nlohmann::json quad_json(const Quad& q) { return {{"exact", q.str()}, {"approx", static_cast<double>(q.to_ld())}}; }

inline nlohmann::json interval_json(const Interval& iv) { return {{"lo", quad_json(iv.lo)}, {"hi", quad_json(iv.hi)}}; }

inline nlohmann::json digits_json(const DigitSetMatrix& D) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 2; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 2; ++j) {
            nlohmann::json cell = nlohmann::json::array();
            for (const Quad& q : D(i, j)) cell.push_back(q.str());
            row.push_back(cell);
        }
        rows.push_back(row);
    }
    return rows;
}

inline bool passes_filter(const CorpusEntry& e, const std::string& filter) {
    if (filter.empty()) return true;
    if (filter == "primitive") return is_primitive(e.sub);
    if (filter == "det1") return det(e.sub) == 1;
    if (filter == "selfdual")
        return is_primitive(e.sub) && det(e.sub) == 1 && selfdual_class(e.sub).kind != SelfdualKind::NotSelfdual;
    throw parse_error("unknown filter '" + filter + "' (primitive, det1, selfdual)", 0);
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Options;
    Options o;
    CLI::App app{"Duality of two-letter substitutions: exact analysis and verification"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto with_spec = [&](CLI::App* c) {
        c->add_option("spec", o.spec, "substitution, e.g. a->aba,b->ab")->required();
        c->add_flag("--json", o.json, "JSON output");
        return c;
    };
    auto square = [&](CLI::App* c) {
        c->add_flag("--square", o.square, "use the square of a determinant -1 input");
        return c;
    };

    auto* analyze = with_spec(app.add_subcommand("analyze", "full report for one substitution"));
    auto* dual = square(with_spec(app.add_subcommand("dual", "dual substitution via E1*")));
    auto* recip = square(with_spec(app.add_subcommand("reciprocal", "reciprocal substitution")));
    auto* inverse = with_spec(app.add_subcommand("inverse", "inverse automorphism of the free group"));
    auto* decomp = with_spec(app.add_subcommand("decompose", "factorization over E, L, Lt"));
    auto* conj = with_spec(app.add_subcommand("conjugate", "conjugacy witness between two substitutions"));
    conj->add_option("other", o.spec2, "second substitution")->required();
    conj->add_option("--kmax", o.kmax, "also search powers up to this exponent");
    auto* selfdual = square(with_spec(app.add_subcommand("selfdual", "selfduality class and matrix form")));
    auto* rauzy = square(with_spec(app.add_subcommand("rauzy", "certified Rauzy windows")));
    rauzy->add_option("--depth", o.depth, "first substitution level tried");
    auto* tiling = with_spec(app.add_subcommand("tiling", "tile-substitution and a level-n patch"));
    tiling->add_option("--depth", o.depth, "patch level");
    tiling->add_option("--svg", o.svg_file, "write the patch as SVG");
    auto* stardual = with_spec(app.add_subcommand("stardual", "star-dual tile-substitution"));
    auto* cutproj = square(with_spec(app.add_subcommand("cutproject", "compare the model set with the tiling vertices")));
    cutproj->add_option("--depth", o.depth, "Rauzy depth");
    cutproj->add_option("--range", o.range_hi, "upper end of the range [0, R]");
    auto* sturm = app.add_subcommand("sturmian", "rotation word of slope alpha");
    sturm->add_option("alpha", o.value, "slope, e.g. 3/2-1/2*sqrt(5)")->required();
    sturm->add_option("--start", o.start, "intercept rho (default 0; 'alpha' gives the characteristic word)");
    sturm->add_option("-n,--length", o.length, "number of letters");
    sturm->add_flag("--upper", o.upper, "upper mechanical word");
    auto* cf = app.add_subcommand("cf", "continued fractions: expand a surd or evaluate [a0; ..., (p)]");
    cf->add_option("value", o.value, "quadratic number or continued fraction")->required();
    cf->add_flag("--dual", o.dual, "apply the dual transform");
    cf->add_flag("--json", o.json, "JSON output");
    auto* enumerate = app.add_subcommand("enumerate", "products of E, L, Lt up to a length");
    enumerate->add_option("--max-len", o.max_len, "generator word length");
    enumerate->add_option("--filter", o.filter, "primitive | det1 | selfdual");
    enumerate->add_flag("--json", o.json, "JSON array of reports");
    auto* verify = app.add_subcommand("verify", "run a property suite (or 'all')");
    verify->add_option("id", o.id, "suite id")->required();
    verify->add_option("--max-len", o.max_len, "corpus generator length");
    verify->add_option("-n", o.n, "factor length");
    verify->add_option("--radius", o.radius, "S_alpha window radius");
    verify->add_option("--sub", o.spec, "check a single substitution");
    verify->add_flag("--json", o.json, "JSON output");
    auto* render = with_spec(app.add_subcommand("render", "SVG of a strand, dual strand, tiling or Rauzy windows"));
    render->add_option("--target", o.target, "strand | dual_strand | tiling | rauzy");
    render->add_option("--iterations", o.iterations, "substitution levels");
    render->add_option("--scale", o.scale, "pixels per unit");
    render->add_option("--svg", o.svg_file, "output file (default stdout)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParse;
    }

    try {
        if (analyze->parsed()) {
            auto r = cli::analyze(parse_substitution(o.spec));
            if (o.json)
                out << to_json(r).dump(2) << '\n';
            else
                print_table(out, r);
        } else if (dual->parsed()) {
            auto d = dual_substitution(detail::load(o.spec, o.square, err));
            out << (o.json ? nlohmann::json{{"dual", d.str()}}.dump() : d.str()) << '\n';
        } else if (recip->parsed()) {
            auto d = reciprocal(detail::load(o.spec, o.square, err));
            out << (o.json ? nlohmann::json{{"reciprocal", d.str()}}.dump() : d.str()) << '\n';
        } else if (inverse->parsed()) {
            auto d = sdual::inverse(parse_substitution(o.spec));
            out << (o.json ? nlohmann::json{{"inverse", d.str()}}.dump() : d.str()) << '\n';
        } else if (decomp->parsed()) {
            auto d = decompose(parse_substitution(o.spec));
            out << (o.json ? nlohmann::json{{"decomposition", d.str()}}.dump() : d.str()) << '\n';
        } else if (conj->parsed()) {
            Substitution s = parse_substitution(o.spec), t = parse_substitution(o.spec2);
            nlohmann::json j;
            if (o.kmax > 0) {
                auto p = conjugate_power_search(s, t, o.kmax);
                j = p ? nlohmann::json{{"conjugate", true}, {"k", p->k}, {"m", p->m}, {"witness", p->witness.str()}}
                      : nlohmann::json{{"conjugate", false}};
            } else {
                auto w = conjugacy_witness(s, t);
                j = w ? nlohmann::json{{"conjugate", true}, {"witness", w->str()}} : nlohmann::json{{"conjugate", false}};
            }
            if (o.json) {
                out << j.dump() << '\n';
            } else if (!j["conjugate"].get<bool>()) {
                out << "not conjugate\n";
            } else {
                out << "conjugate, witness " << j["witness"].get<std::string>();
                if (j.contains("k")) out << " (powers " << j["k"] << ", " << j["m"] << ")";
                out << '\n';
            }
        } else if (selfdual->parsed()) {
            Substitution s = detail::load(o.spec, o.square, err);
            if (det(s) == -1)
                throw domain_error(ErrorKind::DeterminantMinusOne, "selfduality needs determinant +1 (rerun with --square)");
            auto c = selfdual_class(s);
            auto f = matrix_selfdual_form(matrix(s));
            std::string form = f.kind == SelfdualForm::Kind::None
                                   ? "none"
                                   : std::string(to_string(f.kind)) + "(" + std::to_string(f.m) + "," + std::to_string(f.k) + ")";
            if (o.json)
                out << nlohmann::json{{"class", to_string(c.kind)},
                                      {"witness", c.witness ? nlohmann::json(c.witness->str()) : nlohmann::json(nullptr)},
                                      {"matrix_form", form}}
                           .dump()
                    << '\n';
            else
                out << to_string(c.kind) << (c.witness ? ", witness " + c.witness->str() : std::string()) << ", matrix form "
                    << form << '\n';
        } else if (rauzy->parsed()) {
            auto r = rauzy_decomposition(detail::load(o.spec, o.square, err), o.depth);
            if (o.json)
                out << nlohmann::json{{"Ra", detail::interval_json(r.Ra)}, {"Rb", detail::interval_json(r.Rb)},
                                      {"depth", r.depth}, {"power", r.power}}
                           .dump()
                    << '\n';
            else
                out << "R_a = " << to_string(r.Ra) << "  ~ [" << approx(r.Ra.lo) << ", " << approx(r.Ra.hi) << "]\n"
                    << "R_b = " << to_string(r.Rb) << "  ~ [" << approx(r.Rb.lo) << ", " << approx(r.Rb.hi) << "]\n";
        } else if (tiling->parsed()) {
            const TileSubst t = tile_subst_from(parse_substitution(o.spec));
            const auto patch = iterate_patch(t, Letter::a, o.depth);
            if (!o.svg_file.empty()) {
                RenderSpec rs{RenderTarget::tiling, o.depth, 20.0};
                detail::emit_svg(o, render_svg(parse_substitution(o.spec), rs), out);
                if (o.svg_file == "-") return kOk;
            }
            if (o.json) {
                nlohmann::json tiles = nlohmann::json::array();
                for (const auto& p : patch) tiles.push_back({{"type", std::string(1, to_char(p.type))}, {"left", p.left.str()}});
                out << nlohmann::json{{"inflation", detail::quad_json(t.inflation)},
                                      {"lengths", {t.lengths[0].str(), t.lengths[1].str()}},
                                      {"digits", detail::digits_json(t.digits)},
                                      {"patch", tiles}}
                           .dump()
                    << '\n';
            } else {
                out << "inflation " << detail::quad_text(t.inflation) << '\n'
                    << "lengths   " << t.lengths[0] << ", " << t.lengths[1] << '\n'
                    << "digits    " << t.digits << '\n';
                for (const auto& p : patch) out << to_char(p.type) << " @ " << p.left << '\n';
            }
        } else if (stardual->parsed()) {
            const TileSubst s = star_dual(tile_subst_from(parse_substitution(o.spec)));
            if (o.json)
                out << nlohmann::json{{"inflation", detail::quad_json(s.inflation)},
                                      {"prototiles", {detail::interval_json(s.prototile(Letter::a)), detail::interval_json(s.prototile(Letter::b))}},
                                      {"digits", detail::digits_json(s.digits)}}
                           .dump()
                    << '\n';
            else
                out << "inflation " << detail::quad_text(s.inflation) << '\n'
                    << "T_a       " << to_string(s.prototile(Letter::a)) << '\n'
                    << "T_b       " << to_string(s.prototile(Letter::b)) << '\n'
                    << "digits    " << s.digits << '\n';
        } else if (cutproj->parsed()) {
            Substitution s = detail::load(o.spec, o.square, err);
            Interval range{Quad(0), Quad::parse(o.range_hi)};
            const auto r = rauzy_decomposition(s, o.depth);
            const WindowEnds ends = attained_ends(s, r.hull());
            const auto pts = cut_project_points(Lattice::of(spectral(s)), r.hull(), range, ends);
            const bool ok = pts == vertex_set(s, range);
            if (o.json) {
                nlohmann::json p = nlohmann::json::array();
                for (const auto& q : pts) p.push_back(q.str());
                out << nlohmann::json{{"window", detail::interval_json(r.hull())},
                                      {"lo_closed", ends.lo_closed},
                                      {"hi_closed", ends.hi_closed},
                                      {"points", p}, {"matches_tiling", ok}}.dump()
                    << '\n';
            } else {
                out << "window " << (ends.lo_closed ? "[" : "(") << r.hull().lo.str() << ", " << r.hull().hi.str()
                    << (ends.hi_closed ? "]" : ")") << '\n' << pts.size() << " points in " << to_string(range) << ", "
                    << (ok ? "equal to" : "DIFFERENT from") << " the tiling vertices\n";
            }
        } else if (sturm->parsed()) {
            Quad alpha = Quad::parse(o.value);
            Quad rho = o.start == "alpha" ? alpha : Quad::parse(o.start);
            out << sturmian_word(alpha, rho, o.upper ? SturmConvention::upper : SturmConvention::lower, o.length) << '\n';
        } else if (cf->parsed()) {
            const bool is_cf = o.value.find('[') != std::string::npos;
            CF c = is_cf ? parse_cf(o.value) : cf_expand(Quad::parse(o.value));
            if (o.dual) c = cf_dual_transform(c);
            Quad v = cf_value(c);
            if (o.json)
                out << nlohmann::json{{"cf", to_string(c)}, {"value", detail::quad_json(v)},
                                      {"selfdual", c.is_periodic() && is_selfdual_frequency(c)}}
                           .dump()
                    << '\n';
            else
                out << to_string(c) << " = " << detail::quad_text(v) << '\n';
        } else if (enumerate->parsed()) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& e : enumerate_corpus(o.max_len)) {
                if (!detail::passes_filter(e, o.filter)) continue;
                if (o.json) {
                    auto j = to_json(cli::analyze(e.sub));
                    j["word"] = e.word.str();
                    arr.push_back(std::move(j));
                } else {
                    out << e.word.str() << '\t' << e.sub.str() << '\n';
                }
            }
            if (o.json) out << arr.dump(1) << '\n';
        } else if (verify->parsed()) {
            VerifyParams p;
            p.max_len = o.max_len;
            p.n = o.n;
            p.radius = o.radius;
            if (!o.spec.empty()) p.sub = parse_substitution(o.spec);
            bool known = false, all_passed = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [id, fn] : verify_suites()) {
                if (o.id != "all" && o.id != id) continue;
                known = true;
                VerifyResult r = fn(p);
                all_passed = all_passed && r.passed;
                if (o.json)
                    arr.push_back({{"id", r.id}, {"passed", r.passed}, {"checked", r.checked}, {"counterexample", r.counterexample}});
                else
                    out << (r.passed ? "PASS " : "FAIL ") << r.id << " (" << r.checked << " checked)"
                        << (r.passed ? "" : ": " + r.counterexample) << '\n';
            }
            if (!known) {
                std::string ids;
                for (const auto& s : verify_suites()) ids += " " + s.first;
                throw parse_error("unknown suite '" + o.id + "'; known:" + ids + " all", 0);
            }
            if (o.json) out << arr.dump(1) << '\n';
            if (!all_passed) return kDomain;
            if (!all_passed) return kDomain;
        } else if (render->parsed()) {
            RenderSpec rs{parse_render_target(o.target), o.iterations, o.scale};
            detail::emit_svg(o, render_svg(parse_substitution(o.spec), rs), out);
        }
    } catch (const parse_error& e) {
        err << "parse error at position " << e.position() << ": " << e.what() << '\n';
        return kParse;
    } catch (const domain_error& e) {
        err << to_string(e.kind()) << ": " << e.what();
        if (e.kind() == ErrorKind::DeterminantMinusOne && !o.square) err << " (rerun with --square)";
        err << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kOk;
}

} // namespace sdual::cli
