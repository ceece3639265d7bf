#include "currentlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace currentlab {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::fabs(v) < 5e-3 ? 0.0 : v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else if (c == '"') out += "&quot;";
        else out += c;
    }
    return out;
}

const char* kArrowDefs =
    "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
    "orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n";

}  // namespace

std::vector<Complex> layout_skeleton(const DualComplex& cx, unsigned seed) {
    const size_t n = cx.vertices.size();
    std::vector<Complex> pos(n);
    if (n == 0) return pos;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0, 1);
    for (auto& p : pos) p = {u(rng), u(rng)};
    if (n == 1) return {Complex(0.5, 0.5)};
    std::vector<double> rest;
    double longest = 0;
    for (auto [a, b] : cx.edges) {
        rest.push_back(to_double(metric_d(cx.vertices[a], cx.vertices[b])));
        longest = std::max(longest, rest.back());
    }
    for (auto& r : rest) r = longest > 0 ? r / longest : 1;
    const double repel = 0.05 / double(n);
    for (int iter = 0; iter < 400; ++iter) {
        double step = 0.1 * (1 - iter / 400.0) + 0.005;
        std::vector<Complex> force(n);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a + 1; b < n; ++b) {
                Complex d = pos[a] - pos[b];
                double r2 = std::max(std::norm(d), 1e-6);
                force[a] += repel * d / r2;
                force[b] -= repel * d / r2;
            }
        for (size_t e = 0; e < cx.edges.size(); ++e) {
            auto [a, b] = cx.edges[e];
            Complex d = pos[b] - pos[a];
            double r = std::max(std::abs(d), 1e-9);
            Complex f = (r - rest[e]) * d / r;
            force[a] += f;
            force[b] -= f;
        }
        for (size_t a = 0; a < n; ++a) {
            double m = std::abs(force[a]);
            if (m > 1) force[a] /= m;
            pos[a] += step * force[a];
        }
    }
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& p : pos) x0 = std::min(x0, p.real()), x1 = std::max(x1, p.real()), y0 = std::min(y0, p.imag()), y1 = std::max(y1, p.imag());
    double span = std::max({x1 - x0, y1 - y0, 1e-9});
    double dx = (span - (x1 - x0)) / 2, dy = (span - (y1 - y0)) / 2;
    for (auto& p : pos) p = Complex((p.real() - x0 + dx) / span, (p.imag() - y0 + dy) / span);
    return pos;
}

std::string render_current_svg(const NamedCurrent& named, const DualComplex* cx, unsigned seed) {
    const double R = 160, cx0 = 200, cy0 = 200;
    const int width = cx ? 800 : 400;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"400\" viewBox=\"0 0 " << width
      << " 400\">\n"
      << kArrowDefs;
    s << "<circle cx=\"" << num(cx0) << "\" cy=\"" << num(cy0) << "\" r=\"" << num(R)
      << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    auto at = [&](const BoundaryPoint& p, double radius) {
        double th = 2 * M_PI * to_double(p.angle());
        return Complex(cx0 + radius * std::cos(th), cy0 - radius * std::sin(th));
    };
    const auto& mu = named.mu;
    for (const auto& p : mu.endpoints()) {
        Complex a = at(p, R), l = at(p, R + 14);
        s << "<circle cx=\"" << num(a.real()) << "\" cy=\"" << num(a.imag()) << "\" r=\"2.5\" fill=\"#000\"/>\n";
        s << "<text x=\"" << num(l.real()) << "\" y=\"" << num(l.imag()) << "\" font-size=\"11\" text-anchor=\"middle\">"
          << escape(named.name_of(p)) << "</text>\n";
    }
    for (size_t i = 0; i < mu.size(); ++i) {
        Complex a = at(mu.chord(i).src(), R), b = at(mu.chord(i).dst(), R);
        Complex mid = (a + b) / 2.0, d = b - a;
        // bend to the right of travel so opposite orientations separate
        Complex ctrl = mid + 0.08 * d * Complex(0, 1);
        Complex label = 0.25 * a + 0.5 * ctrl + 0.25 * b;
        s << "<path d=\"M" << num(a.real()) << "," << num(a.imag()) << " Q" << num(ctrl.real()) << "," << num(ctrl.imag())
          << " " << num(b.real()) << "," << num(b.imag())
          << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.2\" marker-end=\"url(#arrow)\"/>\n";
        s << "<text x=\"" << num(label.real()) << "\" y=\"" << num(label.imag())
          << "\" font-size=\"10\" fill=\"#1f4e9c\">" << escape(to_string(mu.weight(i))) << "</text>\n";
    }
    if (cx) {
        auto pos = layout_skeleton(*cx, seed);
        auto place = [&](const Complex& p) { return Complex(440 + 320 * p.real(), 40 + 320 * p.imag()); };
        for (auto [a, b] : cx->edges) {
            Complex p = place(pos[a]), q = place(pos[b]);
            s << "<line x1=\"" << num(p.real()) << "\" y1=\"" << num(p.imag()) << "\" x2=\"" << num(q.real()) << "\" y2=\""
              << num(q.imag()) << "\" stroke=\"#9c1f1f\" stroke-width=\"1.5\"/>\n";
            Complex m = (p + q) / 2.0;
            s << "<text x=\"" << num(m.real()) << "\" y=\"" << num(m.imag() - 4)
              << "\" font-size=\"10\" fill=\"#9c1f1f\">" << escape(to_string(metric_d(cx->vertices[a], cx->vertices[b])))
              << "</text>\n";
        }
        for (const auto& p0 : pos) {
            Complex p = place(p0);
            s << "<circle cx=\"" << num(p.real()) << "\" cy=\"" << num(p.imag()) << "\" r=\"3\" fill=\"#9c1f1f\"/>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

std::string render_finsler_svg(const std::vector<Ray>& rays, const Polyline* path) {
    std::vector<Complex> pts{cube_root(0) * -1.0, -cube_root(1), -cube_root(2)};
    std::vector<std::pair<Complex, Complex>> segs;
    for (const auto& r : rays) {
        double n = finsler_norm(r.dir);
        Complex u = n > 0 ? r.dir / n : Complex(0, 0);
        segs.emplace_back(r.base - 3.0 * u, r.base + 3.0 * u);
        pts.push_back(segs.back().first);
        pts.push_back(segs.back().second);
    }
    if (path) pts.insert(pts.end(), path->begin(), path->end());
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& p : pts) x0 = std::min(x0, p.real()), x1 = std::max(x1, p.real()), y0 = std::min(y0, p.imag()), y1 = std::max(y1, p.imag());
    double span = std::max({x1 - x0, y1 - y0, 1e-9});
    auto place = [&](const Complex& p) {
        return Complex(20 + 360 * (p.real() - x0) / span, 380 - 360 * (p.imag() - y0) / span);
    };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n" << kArrowDefs;
    s << "<polygon points=\"";
    for (int k = 0; k < 3; ++k) {
        Complex v = place(pts[size_t(k)]);
        s << (k ? " " : "") << num(v.real()) << "," << num(v.imag());
    }
    s << "\" fill=\"#e8eef8\" stroke=\"#1f4e9c\" stroke-width=\"1.2\"/>\n";
    for (const auto& [a0, b0] : segs) {
        Complex a = place(a0), b = place(b0);
        s << "<line x1=\"" << num(a.real()) << "\" y1=\"" << num(a.imag()) << "\" x2=\"" << num(b.real()) << "\" y2=\""
          << num(b.imag()) << "\" stroke=\"#333\" stroke-width=\"1.2\" marker-end=\"url(#arrow)\"/>\n";
    }
    if (path && !path->empty()) {
        s << "<polyline points=\"";
        for (size_t i = 0; i < path->size(); ++i) {
            Complex v = place((*path)[i]);
            s << (i ? " " : "") << num(v.real()) << "," << num(v.imag());
        }
        s << "\" fill=\"none\" stroke=\"#9c1f1f\" stroke-width=\"1.5\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace currentlab
