#include "homext/svg.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace homext {

namespace {

constexpr double kSize = 560.0;
constexpr double kCx = 280.0, kCy = 280.0;
constexpr double kOuter = 240.0, kInner = 95.0;
constexpr double kPi = 3.14159265358979323846;

const char* kPalette[] = {"#1630e2", "#d0021b", "#9013fe", "#417505",
                          "#f5a623", "#50b7c1", "#8b572a", "#222222"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double angle_of(double x, int n) { return 2.0 * kPi * (x - 1.0) / n - kPi / 2.0; }

std::string point_at(double x, double radius, int n) {
    const double th = angle_of(x, n);
    return fmt(kCx + radius * std::cos(th)) + "," + fmt(kCy + radius * std::sin(th));
}

std::string arc_path(const MarkedAnnulus& a, const Arc& arc) {
    const LiftedArc l = lift_arc(a, arc);
    const double rs = l.start_outer ? kOuter : kInner;
    const double re = l.end_outer ? kOuter : kInner;
    const double span = static_cast<double>(l.xe - l.xs);
    const int steps = std::max(24, static_cast<int>(span * 14));
    const bool exterior = l.start_outer == l.end_outer;
    // exterior arcs bow away from their boundary, deeper for longer spans
    const double frac = span / (span + a.n());
    const double bow = (kOuter - kInner) * (0.25 + 0.6 * frac);
    std::string path = "M" + point_at(static_cast<double>(l.xs), rs, a.n());
    for (int s = 1; s <= steps; ++s) {
        const double t = static_cast<double>(s) / steps;
        const double x = static_cast<double>(l.xs) + t * span;
        double rho = rs + (re - rs) * t;
        if (exterior) rho += (l.start_outer ? -1.0 : 1.0) * bow * std::sin(kPi * t);
        path += " L" + point_at(x, rho, a.n());
    }
    return path;
}

}  // namespace

std::string render_svg(const ArcDiagram& d, std::optional<ClosedCurve> curve) {
    const MarkedAnnulus& a = d.annulus;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kSize) + "\" height=\"" +
           fmt(kSize) + "\" viewBox=\"0 0 " + fmt(kSize) + " " + fmt(kSize) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<circle cx=\"" + fmt(kCx) + "\" cy=\"" + fmt(kCy) + "\" r=\"" + fmt(kOuter) +
           "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
    svg += "<circle cx=\"" + fmt(kCx) + "\" cy=\"" + fmt(kCy) + "\" r=\"" + fmt(kInner) +
           "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";

    std::set<Arc> heart_arcs;
    if (static_cast<int>(d.arcs.size()) == a.n()) {
        try {
            for (const Arc& h : heart(d)) heart_arcs.insert(h);
        } catch (const Error&) {
        }
    }

    for (size_t t = 0; t < d.arcs.size(); ++t) {
        const bool in_heart = heart_arcs.count(d.arcs[t]) > 0;
        const char* color = kPalette[t % (sizeof kPalette / sizeof kPalette[0])];
        svg += "<path d=\"" + arc_path(a, d.arcs[t]) + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"" + (in_heart ? std::string("3.2") : std::string("1.6")) +
               "\"" + (in_heart ? " stroke-dasharray=\"none\"" : "") + "/>\n";
    }

    if (curve) {
        const int w = curve->winding;
        const int steps = 160 * w;
        std::string path;
        for (int s = 0; s <= steps; ++s) {
            const double u = static_cast<double>(s) / steps;
            const double th = 2.0 * kPi * w * u - kPi / 2.0;
            const double rho = (kInner + kOuter) / 2.0 +
                               0.42 * (kOuter - kInner) * (u - 0.5) *
                                   std::cos(th + kPi / 2.0) / (w > 0 ? w : 1);
            const double px = kCx + rho * std::cos(th);
            const double py = kCy + rho * std::sin(th);
            path += (s == 0 ? "M" : " L") + fmt(px) + "," + fmt(py);
        }
        svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#0b7a3e\" stroke-width=\"1.4\"/>\n";
    }

    for (int p = 1; p <= a.n(); ++p) {
        const double rho = a.outer(p) ? kOuter : kInner;
        const double th = angle_of(p, a.n());
        const double px = kCx + rho * std::cos(th);
        const double py = kCy + rho * std::sin(th);
        svg += "<circle cx=\"" + fmt(px) + "\" cy=\"" + fmt(py) +
               "\" r=\"4\" fill=\"#000\"/>\n";
        const double lx = kCx + (rho + (a.outer(p) ? 16.0 : -18.0)) * std::cos(th);
        const double ly = kCy + (rho + (a.outer(p) ? 16.0 : -18.0)) * std::sin(th);
        svg += "<text x=\"" + fmt(lx) + "\" y=\"" + fmt(ly) +
               "\" font-size=\"15\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
               std::to_string(p) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace homext
