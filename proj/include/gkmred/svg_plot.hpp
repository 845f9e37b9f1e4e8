// Deterministic SVG rendering of rank-2 moment images: polytope hull, GKM
// edges, wall segments, fixed-point dots with labels, an optional mu marker
// with hyperplanes through mu parallel to the walls, and optional per-vertex
// restriction labels for a chosen class.

#pragma once

#include "gkmred/cohomology.hpp"
#include "gkmred/walls.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gkm {

struct PlotSpec {
    bool draw_walls = true;
    bool draw_edges = true;
    bool draw_mu_hyperplanes = false;
    std::optional<RatVec> mu;
    std::optional<EquivariantClass> label_class;
};

namespace detail {

struct Frame {
    double min_x, min_y, scale, side = 600.0, margin = 50.0;
    double px(const Rational& x) const { return margin + (x.to_double() - min_x) * scale; }
    double py(const Rational& y) const { return side - margin - (y.to_double() - min_y) * scale; }
};

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Andrew's monotone chain on exact coordinates.
inline std::vector<RatVec> convex_hull_2d(std::vector<RatVec> pts) {
    std::sort(pts.begin(), pts.end(), [](const RatVec& a, const RatVec& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](const RatVec& o, const RatVec& a, const RatVec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<RatVec> h;
    for (const auto& p : pts) {
        while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p).sign() <= 0) h.pop_back();
        h.push_back(p);
    }
    size_t lower = h.size() + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (h.size() >= lower && cross(h[h.size() - 2], h.back(), *it).sign() <= 0) h.pop_back();
        h.push_back(*it);
    }
    h.pop_back();
    return h;
}

}  // namespace detail

inline std::string render_svg(const SpacePtr& space, const PlotSpec& spec) {
    if (space->rank() != 2)
        throw std::domain_error("plot: only rank-2 spaces are supported");
    using detail::fmt;

    std::vector<RatVec> pts;
    for (const auto& p : space->points) pts.push_back(p.moment);
    if (spec.mu) pts.push_back(*spec.mu);

    Rational min_x = pts[0][0], max_x = pts[0][0], min_y = pts[0][1], max_y = pts[0][1];
    for (const auto& p : pts) {
        min_x = std::min(min_x, p[0]);
        max_x = std::max(max_x, p[0]);
        min_y = std::min(min_y, p[1]);
        max_y = std::max(max_y, p[1]);
    }
    double span_x = (max_x - min_x).to_double();
    double span_y = (max_y - min_y).to_double();
    double span = std::max({span_x, span_y, 1e-9});

    detail::Frame fr;
    fr.min_x = min_x.to_double();
    fr.min_y = min_y.to_double();
    fr.scale = (fr.side - 2 * fr.margin) / span;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";

    auto hull = detail::convex_hull_2d(
        [&] {
            std::vector<RatVec> m;
            for (const auto& p : space->points) m.push_back(p.moment);
            return m;
        }());
    if (hull.size() >= 3) {
        svg << "<polygon class=\"hull\" points=\"";
        for (size_t i = 0; i < hull.size(); ++i) {
            if (i) svg << " ";
            svg << fmt(fr.px(hull[i][0])) << "," << fmt(fr.py(hull[i][1]));
        }
        svg << "\" fill=\"#f4f4f8\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    }

    if (spec.draw_edges) {
        for (const auto& e : space->edges) {
            const auto& a = space->point(e.from).moment;
            const auto& b = space->point(e.to).moment;
            svg << "<line class=\"edge\" x1=\"" << fmt(fr.px(a[0])) << "\" y1=\"" << fmt(fr.py(a[1]))
                << "\" x2=\"" << fmt(fr.px(b[0])) << "\" y2=\"" << fmt(fr.py(b[1]))
                << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        }
    }

    if (spec.draw_walls) {
        for (const auto& w : walls(*space)) {
            // support images are collinear; draw between the extreme ones
            std::vector<RatVec> sup;
            for (const auto& n : w.support) sup.push_back(space->point(n).moment);
            std::sort(sup.begin(), sup.end(), [](const RatVec& a, const RatVec& b) {
                if (a[0] != b[0]) return a[0] < b[0];
                return a[1] < b[1];
            });
            const auto& a = sup.front();
            const auto& b = sup.back();
            svg << "<line class=\"wall\" x1=\"" << fmt(fr.px(a[0])) << "\" y1=\"" << fmt(fr.py(a[1]))
                << "\" x2=\"" << fmt(fr.px(b[0])) << "\" y2=\"" << fmt(fr.py(b[1]))
                << "\" stroke=\"#3355bb\" stroke-width=\"2\"/>\n";
        }
    }

    if (spec.mu && spec.draw_mu_hyperplanes) {
        // one dashed line through mu per wall-normal direction
        std::vector<IntVec> dirs;
        for (const auto& n : wall_normals(*space)) {
            IntVec d = primitive(n);
            if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
        }
        std::sort(dirs.begin(), dirs.end());
        const RatVec& mu = *spec.mu;
        double ext = 2.0 * span;
        for (const auto& n : dirs) {
            // direction orthogonal to the normal
            double dx = -static_cast<double>(n[1]), dy = static_cast<double>(n[0]);
            double norm = std::max(std::sqrt(dx * dx + dy * dy), 1e-12);
            dx /= norm;
            dy /= norm;
            double cx = mu[0].to_double(), cy = mu[1].to_double();
            svg << "<line class=\"mu-hyperplane\" x1=\""
                << fmt(fr.margin + (cx - ext * dx - fr.min_x) * fr.scale) << "\" y1=\""
                << fmt(fr.side - fr.margin - (cy - ext * dy - fr.min_y) * fr.scale) << "\" x2=\""
                << fmt(fr.margin + (cx + ext * dx - fr.min_x) * fr.scale) << "\" y2=\""
                << fmt(fr.side - fr.margin - (cy + ext * dy - fr.min_y) * fr.scale)
                << "\" stroke=\"#bb4444\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
        }
    }

    for (const auto& p : space->points) {
        double x = fr.px(p.moment[0]), y = fr.py(p.moment[1]);
        svg << "<circle class=\"fixed-point\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
            << "\" r=\"4\" fill=\"#222222\"/>\n";
        svg << "<text class=\"point-label\" x=\"" << fmt(x + 7) << "\" y=\"" << fmt(y - 7)
            << "\" font-size=\"12\" font-family=\"monospace\">" << p.name << "</text>\n";
        if (spec.label_class) {
            svg << "<text class=\"restriction-label\" x=\"" << fmt(x + 7) << "\" y=\""
                << fmt(y + 14) << "\" font-size=\"11\" font-family=\"monospace\" fill=\"#006600\">"
                << spec.label_class->at(p.name).str(space->action.names) << "</text>\n";
        }
    }

    if (spec.mu) {
        double x = fr.px((*spec.mu)[0]), y = fr.py((*spec.mu)[1]);
        svg << "<path class=\"mu-marker\" d=\"M " << fmt(x - 6) << " " << fmt(y) << " L "
            << fmt(x + 6) << " " << fmt(y) << " M " << fmt(x) << " " << fmt(y - 6) << " L "
            << fmt(x) << " " << fmt(y + 6)
            << "\" stroke=\"#bb0000\" stroke-width=\"2\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace gkm
