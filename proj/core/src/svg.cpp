#include "lamina/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

namespace lamina {

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

// SVG y axis points down, so flip it
struct Pt {
    double x, y;
};
Pt point(const Angle& a) {
    double t = 2 * std::numbers::pi * a.approx();
    return {std::cos(t), -std::sin(t)};
}

}  // namespace

std::string render_svg(const Lamination& lam, const RenderStyle& style) {
    if (style.image_size < 64) throw Error("image size must be at least 64 pixels");
    const std::string sw = num(style.stroke_width);
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(style.image_size) +
           "\" height=\"" + std::to_string(style.image_size) + "\" viewBox=\"-1.200000 -1.200000 2.400000 2.400000\">\n";
    out += "<circle cx=\"0.000000\" cy=\"0.000000\" r=\"1.000000\" fill=\"none\" stroke=\"black\" stroke-width=\"" + sw +
           "\"/>\n";
    for (const auto& c : lam.leaves()) {
        Rational span = arc_length(c.lo(), c.hi());
        if (style.geodesic == RenderStyle::Geodesic::straight || span == Rational(1, 2)) {
            Pt p = point(c.lo()), q = point(c.hi());
            out += "<line x1=\"" + num(p.x) + "\" y1=\"" + num(p.y) + "\" x2=\"" + num(q.x) + "\" y2=\"" + num(q.y) +
                   "\" stroke=\"black\" stroke-width=\"" + sw + "\"/>\n";
            continue;
        }
        // start where the other end is less than half a turn counterclockwise;
        // the geodesic then turns clockwise, which is sweep 1 once y is flipped
        bool forward = span < Rational(1, 2);
        const Angle& s = forward ? c.lo() : c.hi();
        const Angle& e = forward ? c.hi() : c.lo();
        double short_span = forward ? span.convert_to<double>() : 1 - span.convert_to<double>();
        double r = std::tan(std::numbers::pi * short_span);
        Pt p = point(s), q = point(e);
        out += "<path d=\"M " + num(p.x) + " " + num(p.y) + " A " + num(r) + " " + num(r) + " 0 0 1 " + num(q.x) + " " +
               num(q.y) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + sw + "\"/>\n";
    }
    if (style.label_angles) {
        std::set<Angle> ends;
        for (const auto& c : lam.leaves()) {
            ends.insert(c.lo());
            ends.insert(c.hi());
        }
        for (const auto& a : ends) {
            Pt p = point(a);
            out += "<text x=\"" + num(1.08 * p.x) + "\" y=\"" + num(1.08 * p.y) +
                   "\" font-size=\"0.050000\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + a.str() +
                   "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace lamina
