#include "slopes/render.hpp"

#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

#include "slopes/even_path.hpp"
#include "slopes/minimal.hpp"

namespace slopes {

namespace {

constexpr double kWidth = 1000.0, kHeight = 620.0;
constexpr double kAxisY = 560.0, kTopY = 40.0;
constexpr double kLeftX = 60.0, kSpanX = 880.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

double xpos(const Fraction& f) {
    return kLeftX + kSpanX * f.num().convert_to<double>() / f.den().convert_to<double>();
}

// Semicircle over the real axis between two finite vertices, or a vertical
// ray for an edge through 1/0, as an SVG path fragment continuing from the
// first endpoint.
std::string arc_to(const Fraction& a, const Fraction& b) {
    if (a.is_infinity() || b.is_infinity()) {
        const Fraction& fin = a.is_infinity() ? b : a;
        double x = xpos(fin);
        if (a.is_infinity()) return "M " + fmt(x) + "," + fmt(kTopY) + " L " + fmt(x) + "," + fmt(kAxisY);
        return "M " + fmt(x) + "," + fmt(kAxisY) + " L " + fmt(x) + "," + fmt(kTopY);
    }
    double xa = xpos(a), xb = xpos(b);
    double r = (xa < xb ? xb - xa : xa - xb) / 2.0;
    int sweep = xa < xb ? 1 : 0;  // the arc bulging away from the axis
    return "M " + fmt(xa) + "," + fmt(kAxisY) + " A " + fmt(r) + "," + fmt(r) + " 0 0," +
           std::to_string(sweep) + " " + fmt(xb) + "," + fmt(kAxisY);
}

// Same arc but as a continuation (no leading move-to), for filled regions.
std::string arc_cont(const Fraction& a, const Fraction& b) {
    if (a.is_infinity() || b.is_infinity()) {
        const Fraction& fin = a.is_infinity() ? b : a;
        double y = a.is_infinity() ? kAxisY : kTopY;
        return " L " + fmt(xpos(fin)) + "," + fmt(y);
    }
    double xa = xpos(a), xb = xpos(b);
    double r = (xa < xb ? xb - xa : xa - xb) / 2.0;
    int sweep = xa < xb ? 1 : 0;
    return " A " + fmt(r) + "," + fmt(r) + " 0 0," + std::to_string(sweep) + " " +
           fmt(xb) + "," + fmt(kAxisY);
}

std::string quad_fill(const Quad& q) {
    std::string d;
    if (q.has_corner(Fraction::infinity())) {
        // the fundamental quad: two vertical sides joined across the top
        d = "M " + fmt(xpos(q.corners[1])) + "," + fmt(kTopY);
        d += " L " + fmt(xpos(q.corners[1])) + "," + fmt(kAxisY);
        d += arc_cont(q.corners[1], q.corners[2]);
        d += arc_cont(q.corners[2], q.corners[3]);
        d += " L " + fmt(xpos(q.corners[3])) + "," + fmt(kTopY);
        d += " Z";
        return d;
    }
    d = "M " + fmt(xpos(q.corners[0])) + "," + fmt(kAxisY);
    for (int i = 0; i < 4; ++i) d += arc_cont(q.corners[i], q.corners[(i + 1) % 4]);
    d += " Z";
    return d;
}

void draw_path(std::ostringstream& svg, const EdgePath& path, const std::string& color,
               const std::string& label) {
    svg << "  <g stroke=\"" << color << "\" stroke-width=\"2.5\" fill=\"none\" opacity=\"0.85\">"
        << "<!-- " << label << " -->\n";
    const auto& vs = path.vertices();
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        svg << "    <path d=\"" << arc_to(vs[i], vs[i + 1]) << "\"/>\n";
    svg << "  </g>\n";
}

}  // namespace

std::string render_svg(const Fraction& target, RenderPaths mode) {
    if (target.is_infinity() || target.num() <= 0 || target.num() >= target.den())
        throw bad_fraction("render needs a fraction strictly between 0 and 1");
    QuadChain chain = quad_chain(target);

    std::vector<EdgePath> overlay;
    std::vector<std::string> labels;
    if (mode == RenderPaths::extremes) {
        overlay.push_back(lower_minimal_path(chain));
        labels.push_back("lower");
        overlay.push_back(upper_minimal_path(chain));
        labels.push_back("upper");
    } else if (mode == RenderPaths::even) {
        if (target.is_knot()) {
            overlay.push_back(even_path_knot(target));
            labels.push_back("even");
        } else {
            auto [e0, e1] = even_paths_link(target);
            overlay.push_back(e0);
            labels.push_back("even-0");
            overlay.push_back(e1);
            labels.push_back("even-1");
        }
    } else {
        overlay = enumerate_minimal_paths(target);
        for (std::size_t i = 0; i < overlay.size(); ++i)
            labels.push_back("path-" + std::to_string(i));
    }

    static const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth)
        << "\" height=\"" << fmt(kHeight) << "\" viewBox=\"0 0 " << fmt(kWidth) << " "
        << fmt(kHeight) << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "  <line x1=\"" << fmt(kLeftX - 20) << "\" y1=\"" << fmt(kAxisY) << "\" x2=\""
        << fmt(kLeftX + kSpanX + 20) << "\" y2=\"" << fmt(kAxisY)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    for (const Quad& q : chain.quads)
        svg << "  <path d=\"" << quad_fill(q)
            << "\" fill=\"#c8d8f0\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";

    svg << "  <g stroke=\"#555555\" stroke-width=\"1\" fill=\"none\">\n";
    std::set<std::pair<std::string, std::string>> drawn;
    for (const Quad& q : chain.quads) {
        for (int i = 0; i < 4; ++i) {
            const Fraction& a = q.corners[i];
            const Fraction& b = q.corners[(i + 1) % 4];
            auto key = a < b ? std::make_pair(a.str(), b.str())
                             : std::make_pair(b.str(), a.str());
            if (!drawn.insert(key).second) continue;
            svg << "    <path d=\"" << arc_to(a, b) << "\"/>\n";
        }
        svg << "    <path d=\"" << arc_to(q.diag_a(), q.diag_b())
            << "\" stroke-dasharray=\"5,4\"/>\n";
    }
    svg << "  </g>\n";

    for (std::size_t i = 0; i < overlay.size(); ++i)
        draw_path(svg, overlay[i], kPalette[i % (sizeof kPalette / sizeof *kPalette)],
                  labels[i]);

    svg << "  <g font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">\n";
    std::set<std::string> labeled;
    for (const Fraction& v : chain.vertex_set()) {
        if (v.is_infinity()) continue;
        if (!labeled.insert(v.str()).second) continue;
        svg << "    <text x=\"" << fmt(xpos(v)) << "\" y=\"" << fmt(kAxisY + 22) << "\">"
            << v.str() << "</text>\n";
    }
    svg << "  </g>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace slopes
