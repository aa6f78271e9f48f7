#pragma once

// Analysis report for one substitution, with JSON in both directions.

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include <sdual/sdual.hpp>

namespace sdual::cli {

inline constexpr int kSchemaVersion = 1;

struct AnalysisReport {
    std::string substitution;
    IntMat2 matrix;
    long long det = 0;
    bool primitive = false;
    bool invertible = false;
    std::optional<std::string> decomposition;
    std::optional<Quad> lambda;
    std::optional<Quad> alpha;
    std::optional<Quad> alpha_conj;
    std::optional<Quad> alpha_star;
    std::optional<std::string> cf_alpha;
    std::optional<std::string> selfdual_class;
    std::optional<std::string> witness;
    std::optional<std::string> matrix_form;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

inline AnalysisReport analyze(const Substitution& s) {
    AnalysisReport r;
    r.substitution = s.str();
    r.matrix = sdual::matrix(s);
    r.det = r.matrix.det();
    r.primitive = is_primitive(s);
    auto d = try_decompose(s);
    r.invertible = d.has_value();
    if (d) r.decomposition = d->str();
    if (r.primitive) r.lambda = perron(r.matrix).lambda;
    if (r.primitive && (r.det == 1 || r.det == -1)) {
        SpectralData sp = spectral(r.matrix);
        r.alpha = sp.alpha;
        r.alpha_conj = sp.alpha_conj;
        r.cf_alpha = to_string(cf_expand(sp.alpha));
        if (r.det == 1) r.alpha_star = dual_frequency(sp);
    }
    if (r.det == 1) {
        if (r.primitive) {
            const SelfdualForm f = matrix_selfdual_form(r.matrix);
            r.matrix_form = f.kind == SelfdualForm::Kind::None
                                ? std::string("none")
                                : std::string(to_string(f.kind)) + "(" + std::to_string(f.m) + "," + std::to_string(f.k) + ")";
        }
        if (r.invertible) {
            const SelfdualClass c = selfdual_class(s);
            r.selfdual_class = to_string(c.kind);
            if (c.witness) r.witness = c.witness->str();
        }
    }
    return r;
}

namespace detail {

inline nlohmann::json quad_json(const std::optional<Quad>& q) {
    if (!q) return nullptr;
    return {{"exact", q->str()}, {"approx", static_cast<double>(q->to_ld())}};
}

inline nlohmann::json opt_json(const std::optional<std::string>& s) {
    if (!s) return nullptr;
    return *s;
}

inline std::optional<Quad> quad_from(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return Quad::parse(j.at("exact").get<std::string>());
}

inline std::optional<std::string> opt_from(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::string>();
}

} // namespace detail

inline nlohmann::json to_json(const AnalysisReport& r) {
    using nlohmann::json;
    json m = json::array({json::array({r.matrix(0, 0), r.matrix(0, 1)}), json::array({r.matrix(1, 0), r.matrix(1, 1)})});
    return {
        {"schema_version", kSchemaVersion},
        {"substitution", r.substitution},
        {"matrix", m},
        {"det", r.det},
        {"primitive", r.primitive},
        {"invertible", r.invertible},
        {"decomposition", detail::opt_json(r.decomposition)},
        {"lambda", detail::quad_json(r.lambda)},
        {"alpha", detail::quad_json(r.alpha)},
        {"alpha_conj", detail::quad_json(r.alpha_conj)},
        {"alpha_star", detail::quad_json(r.alpha_star)},
        {"cf_alpha", detail::opt_json(r.cf_alpha)},
        {"selfdual_class", detail::opt_json(r.selfdual_class)},
        {"witness", detail::opt_json(r.witness)},
        {"matrix_form", detail::opt_json(r.matrix_form)},
    };
}

inline AnalysisReport report_from_json(const nlohmann::json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw parse_error("unsupported schema_version " + j.at("schema_version").dump(), 0);
    AnalysisReport r;
    r.substitution = j.at("substitution").get<std::string>();
    const auto& m = j.at("matrix");
    r.matrix = IntMat2::of(m.at(0).at(0).get<long long>(), m.at(0).at(1).get<long long>(), m.at(1).at(0).get<long long>(),
                           m.at(1).at(1).get<long long>());
    r.det = j.at("det").get<long long>();
    r.primitive = j.at("primitive").get<bool>();
    r.invertible = j.at("invertible").get<bool>();
    r.decomposition = detail::opt_from(j.at("decomposition"));
    r.lambda = detail::quad_from(j.at("lambda"));
    r.alpha = detail::quad_from(j.at("alpha"));
    r.alpha_conj = detail::quad_from(j.at("alpha_conj"));
    r.alpha_star = detail::quad_from(j.at("alpha_star"));
    r.cf_alpha = detail::opt_from(j.at("cf_alpha"));
    r.selfdual_class = detail::opt_from(j.at("selfdual_class"));
    r.witness = detail::opt_from(j.at("witness"));
    r.matrix_form = detail::opt_from(j.at("matrix_form"));
    return r;
}

inline std::string approx(const Quad& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", q.to_ld());
    return buf;
}

inline void print_table(std::ostream& os, const AnalysisReport& r) {
    auto line = [&](const char* k, const std::string& v) { os << k << std::string(16 - std::string(k).size(), ' ') << v << '\n'; };
    auto quad = [&](const std::optional<Quad>& q) { return q ? q->str() + "  (" + approx(*q) + ")" : std::string("-"); };
    auto opt = [](const std::optional<std::string>& s) { return s ? *s : std::string("-"); };
    line("substitution", r.substitution);
    line("matrix", to_string(r.matrix));
    line("det", std::to_string(r.det));
    line("primitive", r.primitive ? "yes" : "no");
    line("invertible", r.invertible ? "yes" : "no");
    line("decomposition", opt(r.decomposition));
    line("lambda", quad(r.lambda));
    line("alpha", quad(r.alpha));
    line("alpha'", quad(r.alpha_conj));
    line("alpha*", quad(r.alpha_star));
    line("cf(alpha)", opt(r.cf_alpha));
    line("matrix form", opt(r.matrix_form));
    line("selfdual", opt(r.selfdual_class));
    line("witness", opt(r.witness));
}

} // namespace sdual::cli
