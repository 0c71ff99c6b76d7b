#include "pmcut/svg.hpp"

#include <sstream>
#include <stdexcept>

#include "pmcut/io.hpp"

namespace pmcut {

namespace {

struct Window {
    ParamPoint lo, hi;
};

bool contains(const Window& outer, const Window& inner) {
    return leq_componentwise(outer.lo, inner.lo) && leq_componentwise(inner.hi, outer.hi);
}

ConvexPolygon clip_to_window(const ConvexPolygon& poly, const Window& w) {
    // half-planes g <= 0 for the four window edges
    ConvexPolygon out = poly;
    out = out.clip({Rational(-1), Rational(0), w.lo.lambda});
    out = out.clip({Rational(1), Rational(0), -w.hi.lambda});
    out = out.clip({Rational(0), Rational(-1), w.lo.mu});
    out = out.clip({Rational(0), Rational(1), -w.hi.mu});
    return out;
}

} // namespace

std::string render_svg(const CellDiagram& diagram, const std::vector<Certificate>& certs,
                       const Viewport& viewport) {
    if (viewport.size_px < 16) throw std::invalid_argument("viewport size too small");
    if (viewport.margin_px < 0) throw std::invalid_argument("negative margin");
    std::vector<Window> panels;
    panels.push_back({viewport.window_lo, viewport.window_hi});
    for (const auto& [lo, hi] : viewport.zooms) panels.push_back({lo, hi});
    for (const Window& w : panels)
        if (!(w.lo.lambda < w.hi.lambda) || !(w.lo.mu < w.hi.mu))
            throw std::invalid_argument("window must have positive width and height");

    const long size = viewport.size_px;
    const long margin = viewport.margin_px;
    const long width = margin + static_cast<long>(panels.size()) * (size + margin);
    const long height = size + 2 * margin;

    // stable color per cut, by enumeration order
    std::map<CutSet, int> color_index;
    for (const auto& [cut, poly] : diagram.cells)
        color_index.emplace(cut, static_cast<int>(color_index.size()));

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";

    for (std::size_t pi = 0; pi < panels.size(); ++pi) {
        const Window& w = panels[pi];
        const long ox = margin + static_cast<long>(pi) * (size + margin);
        Rational wl = w.hi.lambda - w.lo.lambda;
        Rational wm = w.hi.mu - w.lo.mu;
        auto px = [&](const Rational& v) {
            return decimal_string(Rational(ox) + (v - w.lo.lambda) / wl * Rational(size));
        };
        auto py = [&](const Rational& v) {
            return decimal_string(Rational(margin) + (w.hi.mu - v) / wm * Rational(size));
        };

        svg << "<g>\n";
        for (const auto& [cut, poly] : diagram.cells) {
            ConvexPolygon clipped = clip_to_window(poly, w);
            if (!clipped.has_interior()) continue;
            int hue = (137 * color_index.at(cut)) % 360;
            svg << "<polygon points=\"";
            const auto& vs = clipped.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (i) svg << ' ';
                svg << px(vs[i].lambda) << ',' << py(vs[i].mu);
            }
            svg << "\" fill=\"hsl(" << hue << ",65%,78%)\" stroke=\"#333333\" stroke-width=\"0.6\">"
                << "<title>cut " << cut.str() << "</title></polygon>\n";
        }

        // red outlines for any other panel window nested inside this one
        for (std::size_t pj = 0; pj < panels.size(); ++pj) {
            if (pj == pi) continue;
            const Window& z = panels[pj];
            if (!contains(w, z) || (z.lo == w.lo && z.hi == w.hi)) continue;
            svg << "<rect x=\"" << px(z.lo.lambda) << "\" y=\"" << py(z.hi.mu) << "\" width=\""
                << decimal_string((z.hi.lambda - z.lo.lambda) / wl * Rational(size))
                << "\" height=\"" << decimal_string((z.hi.mu - z.lo.mu) / wm * Rational(size))
                << "\" fill=\"none\" stroke=\"#cc0000\" stroke-width=\"1.2\"/>\n";
        }

        for (const Certificate& cert : certs) {
            const ParamPoint& p = cert.point;
            if (!leq_componentwise(w.lo, p) || !leq_componentwise(p, w.hi)) continue;
            svg << "<circle cx=\"" << px(p.lambda) << "\" cy=\"" << py(p.mu)
                << "\" r=\"3\" fill=\"#111111\" stroke=\"#ffffff\" stroke-width=\"1\">"
                << "<title>cut " << cert.cut.str() << "</title></circle>\n";
        }

        svg << "<rect x=\"" << ox << "\" y=\"" << margin << "\" width=\"" << size
            << "\" height=\"" << size << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << ox << "\" y=\"" << (margin + size + 14)
            << "\" font-family=\"monospace\" font-size=\"10\">(" << decimal_string(w.lo.lambda)
            << ", " << decimal_string(w.lo.mu) << ")</text>\n";
        svg << "<text x=\"" << (ox + size) << "\" y=\"" << (margin - 6)
            << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\">("
            << decimal_string(w.hi.lambda) << ", " << decimal_string(w.hi.mu) << ")</text>\n";
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace pmcut
