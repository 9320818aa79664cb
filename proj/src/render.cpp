#include "tg/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace tg {

namespace {

Point map_point(const NumericIsometry& g, Point x) {
    return {x[0] * g.mat[0][0] + x[1] * g.mat[1][0] + g.vec[0],
            x[0] * g.mat[0][1] + x[1] * g.mat[1][1] + g.vec[1]};
}

// vertices of the base triangle: edge i is tangent to the unit incircle
// at the unit normal v_i; vertex A_i is the intersection of edges j,k
std::array<Point, 3> base_triangle(const TriangleShape& s) {
    const Point v1{0, -1};
    const Point v2{std::sin(s.alpha3), std::cos(s.alpha3)};
    const Point v3{-std::sin(s.alpha2), std::cos(s.alpha2)};
    auto meet = [](Point a, Point b) {
        // solve x.a = 1, x.b = 1
        const double det = a[0] * b[1] - a[1] * b[0];
        return Point{(b[1] - a[1]) / det, (a[0] - b[0]) / det};
    };
    return {meet(v2, v3), meet(v1, v3), meet(v1, v2)};
}

}  // namespace

Chain unfold(const Word& w, const TriangleShape& s) {
    Chain ch;
    const std::array<Point, 3> base = base_triangle(s);
    const size_t n = w.size();
    ch.triangles.reserve(n + 1);
    ch.incenters.reserve(n + 1);
    // triangle k is the base triangle moved by the composite of the last
    // k letters; consecutive triangles share the reflected edge and the
    // final one realizes from_word(w)
    SymIsometry g;  // identity
    std::vector<NumericIsometry> maps(n + 1);
    maps[0] = evaluate(g, s);
    for (size_t k = 1; k <= n; ++k) {
        g = compose(generator(w[n - k]), g);
        maps[k] = evaluate(g, s);
    }
    for (size_t k = 0; k <= n; ++k) {
        ch.triangles.push_back({{map_point(maps[k], base[0]), map_point(maps[k], base[1]),
                                 map_point(maps[k], base[2])}});
        ch.incenters.push_back({maps[k].vec[0], maps[k].vec[1]});
        if (k > 0) ch.displacements.push_back({{ch.incenters[k - 1], ch.incenters[k]}});
    }
    // C(t1)-decomposition arrows for stable words, head to tail
    if (is_stable(w)) {
        const LatticeMap tc = t_coordinates(from_word(w));
        Point at{0, 0};
        for (auto& [k, c] : tc.entries()) {
            const auto uv = evaluate_uvec(t_basis_uform(k), s);
            const int64_t reps = c < 0 ? -c : c;
            const double sgn = c < 0 ? -1.0 : 1.0;
            for (int64_t r = 0; r < reps; ++r) {
                Point to{at[0] + sgn * uv[0], at[1] + sgn * uv[1]};
                ch.t_vectors.push_back({{at, to}});
                at = to;
            }
        }
    }
    return ch;
}

namespace {

void fmt(std::string& out, const char* f, double a, double b) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a, b);
    out += buf;
}

}  // namespace

std::string to_svg(const Chain& chain, const SvgStyle& style) {
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    auto see = [&](const Point& p) {
        xlo = std::min(xlo, p[0]);
        xhi = std::max(xhi, p[0]);
        ylo = std::min(ylo, p[1]);
        yhi = std::max(yhi, p[1]);
    };
    for (auto& t : chain.triangles)
        for (auto& p : t) see(p);
    for (auto& p : chain.incenters) see(p);
    for (auto& seg : chain.t_vectors) {
        see(seg[0]);
        see(seg[1]);
    }
    if (chain.triangles.empty()) {
        xlo = ylo = -1;
        xhi = yhi = 1;
    }
    const double m = style.margin_fraction * std::max(xhi - xlo, yhi - ylo);
    xlo -= m, xhi += m, ylo -= m, yhi += m;
    const double w = xhi - xlo, h = yhi - ylo;
    const int width = style.width_px;
    const int height = static_cast<int>(std::lround(width * h / w));
    const double sc = width / w;

    std::string svg;
    char head[256];
    std::snprintf(head, sizeof head,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                  "width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  width, height, width, height);
    svg += head;
    auto X = [&](double x) { return (x - xlo) * sc; };
    auto Y = [&](double y) { return (yhi - y) * sc; };  // SVG y grows downward

    svg += "<g fill=\"none\" stroke=\"" + style.triangle_color + "\" stroke-width=\"" +
           std::to_string(style.stroke_width * sc) + "\">\n";
    for (auto& t : chain.triangles) {
        svg += "<polygon points=\"";
        for (int i = 0; i < 3; ++i) {
            if (i) svg += ' ';
            fmt(svg, "%.6f,%.6f", X(t[i][0]), Y(t[i][1]));
        }
        svg += "\"/>\n";
    }
    svg += "</g>\n";

    if (chain.incenters.size() > 1) {
        svg += "<polyline fill=\"none\" stroke=\"" + style.incenter_color + "\" stroke-width=\"" +
               std::to_string(style.stroke_width * sc) + "\" points=\"";
        for (size_t i = 0; i < chain.incenters.size(); ++i) {
            if (i) svg += ' ';
            fmt(svg, "%.6f,%.6f", X(chain.incenters[i][0]), Y(chain.incenters[i][1]));
        }
        svg += "\"/>\n";
    }

    svg += "<g stroke=\"" + style.displacement_color + "\" stroke-width=\"" +
           std::to_string(style.stroke_width * sc * 0.6) + "\">\n";
    for (auto& seg : chain.displacements) {
        svg += "<line ";
        fmt(svg, "x1=\"%.6f\" y1=\"%.6f\" ", X(seg[0][0]), Y(seg[0][1]));
        fmt(svg, "x2=\"%.6f\" y2=\"%.6f\"/>\n", X(seg[1][0]), Y(seg[1][1]));
    }
    svg += "</g>\n<g stroke=\"" + style.tvector_color + "\" stroke-width=\"" +
           std::to_string(style.stroke_width * sc * 1.5) + "\">\n";
    for (auto& seg : chain.t_vectors) {
        svg += "<line ";
        fmt(svg, "x1=\"%.6f\" y1=\"%.6f\" ", X(seg[0][0]), Y(seg[0][1]));
        fmt(svg, "x2=\"%.6f\" y2=\"%.6f\"/>\n", X(seg[1][0]), Y(seg[1][1]));
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace tg
