#pragma once

// Deterministic SVG output for strands, dual strands, tilings and Rauzy windows.

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <sdual/sdual.hpp>

namespace sdual::cli {

enum class RenderTarget { strand, dual_strand, tiling, rauzy };

struct RenderSpec {
    RenderTarget target = RenderTarget::strand;
    unsigned iterations = 1;
    double scale = 20.0;
};

inline RenderTarget parse_render_target(const std::string& s) {
    if (s == "strand") return RenderTarget::strand;
    if (s == "dual_strand") return RenderTarget::dual_strand;
    if (s == "tiling") return RenderTarget::tiling;
    if (s == "rauzy") return RenderTarget::rauzy;
    throw parse_error("unknown render target '" + s + "'", 0);
}

namespace detail {

inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

struct Svg {
    double minx = 0, miny = 0, maxx = 0, maxy = 0;
    std::ostringstream body;

    void grow(double x, double y) {
        minx = std::min(minx, x);
        miny = std::min(miny, y);
        maxx = std::max(maxx, x);
        maxy = std::max(maxy, y);
    }

    std::string finish() const {
        const double pad = 10;
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(minx - pad) << ' ' << num(miny - pad) << ' '
           << num(maxx - minx + 2 * pad) << ' ' << num(maxy - miny + 2 * pad) << "\">\n"
           << body.str() << "</svg>\n";
        return os.str();
    }
};

inline std::string polyline(const std::vector<Segment>& path, double scale, const char* color) {
    Svg svg;
    std::ostringstream pts;
    auto put = [&](Point p, bool first) {
        double x = p.x * scale, y = -p.y * scale; // y grows downwards in SVG
        svg.grow(x, y);
        pts << (first ? "" : " ") << num(x) << ',' << num(y);
    };
    put(path.front().start(), true);
    for (const auto& g : path) put(g.end(), false);
    svg.body << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"" << pts.str() << "\"/>\n";
    return svg.finish();
}

} // namespace detail

inline std::string render_svg(const Substitution& s, const RenderSpec& spec) {
    if (spec.scale <= 0) throw domain_error(ErrorKind::BadArgument, "scale must be positive");
    switch (spec.target) {
    case RenderTarget::strand: {
        StrandSum x{{{0, 0}, SegKind::A}};
        for (unsigned k = 0; k < spec.iterations; ++k) x = e1_apply(s, x);
        return detail::polyline(sort_along(x), spec.scale, "#1f4e79");
    }
    case RenderTarget::dual_strand: {
        StrandSum x = e1_star_power(s, StrandSum{{{0, 0}, SegKind::Astar}}, spec.iterations);
        return detail::polyline(sort_along(x), spec.scale, "#9c2a00");
    }
    case RenderTarget::tiling: {
        const TileSubst t = tile_subst_from(s);
        detail::Svg svg;
        for (const auto& tile : iterate_patch(t, Letter::a, spec.iterations)) {
            double x0 = static_cast<double>(tile.left.to_ld()) * spec.scale;
            double w = static_cast<double>((tile.right - tile.left).to_ld()) * spec.scale;
            svg.grow(x0, 0);
            svg.grow(x0 + w, spec.scale);
            svg.body << "<rect x=\"" << detail::num(x0) << "\" y=\"0\" width=\"" << detail::num(w) << "\" height=\""
                     << detail::num(spec.scale) << "\" fill=\"" << (tile.type == Letter::a ? "#8fb3d9" : "#e3a857")
                     << "\" stroke=\"black\"/>\n";
        }
        return svg.finish();
    }
    case RenderTarget::rauzy: {
        const RauzyDecomposition r = rauzy_decomposition(s, std::max(1u, spec.iterations));
        detail::Svg svg;
        for (auto [iv, color] : {std::pair{r.Ra, "#8fb3d9"}, std::pair{r.Rb, "#e3a857"}}) {
            double x0 = static_cast<double>(iv.lo.to_ld()) * spec.scale;
            double w = static_cast<double>(iv.length().to_ld()) * spec.scale;
            svg.grow(x0, 0);
            svg.grow(x0 + w, spec.scale);
            svg.body << "<rect x=\"" << detail::num(x0) << "\" y=\"0\" width=\"" << detail::num(w) << "\" height=\""
                     << detail::num(spec.scale) << "\" fill=\"" << color << "\" fill-opacity=\"0.6\"/>\n";
        }
        return svg.finish();
    }
    }
    return {};
}

} // namespace sdual::cli
