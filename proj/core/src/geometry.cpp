#include "lamina/geometry.hpp"

#include <algorithm>
#include <set>

namespace lamina {

Chord::Chord(Angle a, Angle b) {
    if (b < a) std::swap(a, b);
    lo_ = std::move(a);
    hi_ = std::move(b);
}

std::string Chord::str() const { return "{" + lo_.str() + "," + hi_.str() + "}"; }

Rational Arc::length() const {
    if (full) return Rational(1);
    return arc_length(from, to);
}

std::string Arc::str() const { return "(" + from.str() + "," + to.str() + ")"; }

Polygon::Polygon(std::vector<Angle> vertices) : v_(std::move(vertices)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

Polygon::Polygon(const Chord& c) {
    v_.push_back(c.lo());
    if (!c.degenerate()) v_.push_back(c.hi());
}

bool Polygon::contains_vertex(const Angle& a) const { return std::binary_search(v_.begin(), v_.end(), a); }

Chord Polygon::as_chord() const {
    if (v_.empty() || v_.size() > 2) throw Error("polygon is not a chord");
    return Chord(v_.front(), v_.back());
}

std::vector<Chord> Polygon::edges() const {
    std::vector<Chord> out;
    if (v_.size() < 2) return out;
    if (v_.size() == 2) {
        out.emplace_back(v_[0], v_[1]);
        return out;
    }
    for (std::size_t i = 0; i < v_.size(); ++i) out.emplace_back(v_[i], v_[(i + 1) % v_.size()]);
    return out;
}

std::string Polygon::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ",";
        s += v_[i].str();
    }
    return s + "]";
}

std::string to_string(PairRelation r) {
    switch (r) {
        case PairRelation::equal: return "equal";
        case PairRelation::disjoint: return "disjoint";
        case PairRelation::touching: return "touching";
        case PairRelation::linked: return "linked";
    }
    return "?";
}

Angle sigma(Degree d, const Angle& a) { return a.times(d.value()); }

Chord sigma(Degree d, const Chord& c) { return Chord(sigma(d, c.lo()), sigma(d, c.hi())); }

Angle sigma_iter(Degree d, const Angle& a, int k) {
    Angle x = a;
    for (int i = 0; i < k; ++i) x = sigma(d, x);
    return x;
}

Chord sigma_iter(Degree d, const Chord& c, int k) {
    Chord x = c;
    for (int i = 0; i < k; ++i) x = sigma(d, x);
    return x;
}

bool between(const Angle& a, const Angle& x, const Angle& b) {
    if (a < b) return a < x && x < b;
    if (a == b) return x != a;
    return x > a || x < b;
}

bool between_closed(const Angle& a, const Angle& x, const Angle& b) {
    return x == a || x == b || between(a, x, b);
}

bool positively_ordered(const Angle& a, const Angle& b, const Angle& c) {
    if (a == b || b == c || a == c) return false;
    return between(a, b, c);
}

bool in_arc(const Arc& arc, const Angle& x) {
    if (arc.full) return x != arc.from;
    if (arc.from == arc.to) throw Error("arc endpoints coincide");
    return between(arc.from, x, arc.to);
}

PairRelation classify_pair(const Chord& c1, const Chord& c2) {
    if (c1.degenerate() || c2.degenerate()) throw Error("degenerate chord");
    if (c1 == c2) return PairRelation::equal;
    if (c1.has_endpoint(c2.lo()) || c1.has_endpoint(c2.hi())) return PairRelation::touching;
    return linked(c1, c2) ? PairRelation::linked : PairRelation::disjoint;
}

bool linked(const Chord& c1, const Chord& c2) {
    if (c1.degenerate() || c2.degenerate()) return false;
    const Angle& a = c1.lo();
    const Angle& b = c1.hi();
    const Angle& x = c2.lo();
    const Angle& y = c2.hi();
    if (x == a || x == b || y == a || y == b) return false;
    bool xin = a < x && x < b;
    bool yin = a < y && y < b;
    return xin != yin;
}

bool is_critical(Degree d, const Chord& c) { return !c.degenerate() && sigma(d, c.lo()) == sigma(d, c.hi()); }

Rational leaf_length(const Chord& c) {
    Rational r = c.hi().value() - c.lo().value();
    Rational s = 1 - r;
    return r < s ? r : s;
}

Polygon convex_hull(const std::vector<Angle>& points) {
    if (points.empty()) throw Error("convex hull of an empty set");
    return Polygon(points);
}

Polygon sigma_hull(Degree d, const Polygon& p) {
    std::vector<Angle> img;
    img.reserve(p.size());
    for (const auto& v : p.vertices()) img.push_back(sigma(d, v));
    return Polygon(std::move(img));
}

bool strongly_linked(const Polygon& p, const Polygon& q) {
    auto ok = [](std::size_t n) { return n == 2 || n == 4; };
    if (!ok(p.size()) || !ok(q.size())) throw Error("strongly_linked needs quadrilaterals or leaves");
    if (p.size() != q.size()) return false;
    std::vector<std::pair<Angle, int>> merged;
    for (const auto& v : p.vertices()) merged.emplace_back(v, 0);
    for (const auto& v : q.vertices()) merged.emplace_back(v, 1);
    std::sort(merged.begin(), merged.end());
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        if (merged[i].first == merged[i + 1].first) return false;
        if (merged[i].second == merged[i + 1].second) return false;
    }
    return true;
}

std::vector<Arc> holes(const Polygon& p) {
    if (p.size() < 2) throw Error("a point has no holes");
    std::vector<Arc> out;
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(Arc{v[i], v[(i + 1) % v.size()]});
    return out;
}

Arc hole_containing(const Chord& c, const Angle& x) {
    if (c.has_endpoint(x)) throw Error("point is an endpoint of the chord");
    if (between(c.lo(), x, c.hi())) return Arc{c.lo(), c.hi()};
    return Arc{c.hi(), c.lo()};
}

bool hulls_intersect(const Polygon& p, const Polygon& q) {
    for (const auto& v : p.vertices())
        if (q.contains_vertex(v)) return true;
    auto pe = p.edges();
    auto qe = q.edges();
    for (const auto& a : pe)
        for (const auto& b : qe)
            if (linked(a, b)) return true;
    return false;
}

bool lies_beyond_edge(const Polygon& p, const Polygon& q) {
    if (p.size() < 2) return false;
    auto all_in = [&](const Angle& from, const Angle& to) {
        for (const auto& v : q.vertices())
            if (!between_closed(from, v, to)) return false;
        return true;
    };
    const auto& v = p.vertices();
    if (v.size() == 2) return all_in(v[0], v[1]) || all_in(v[1], v[0]);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (all_in(v[i], v[(i + 1) % v.size()])) return true;
    return false;
}

bool interiors_disjoint(const Polygon& p, const Polygon& q) {
    if (p == q) return false;
    if (p.is_point() || q.is_point()) return true;
    return lies_beyond_edge(p, q) || lies_beyond_edge(q, p);
}

bool order_preserving(Degree d, const std::vector<Angle>& increasing) {
    const std::size_t n = increasing.size();
    if (n <= 1) return true;
    std::vector<Angle> img;
    img.reserve(n);
    for (const auto& a : increasing) img.push_back(sigma(d, a));
    int descents = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Angle& x = img[i];
        const Angle& y = img[(i + 1) % n];
        if (x == y) return false;
        if (y < x) ++descents;
    }
    if (descents != 1) return false;
    // one cyclic descent and no equal neighbours forces all images distinct
    return true;
}

std::optional<std::vector<Angle>> order_violation(Degree d, const std::vector<Angle>& points) {
    std::vector<Angle> pts(points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (order_preserving(d, pts)) return std::nullopt;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Angle a = sigma(d, pts[i]), b = sigma(d, pts[j]), c = sigma(d, pts[k]);
                if (!positively_ordered(a, b, c)) return std::vector<Angle>{pts[i], pts[j], pts[k]};
            }
    // only non-injectivity on a 2-point set is left
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (sigma(d, pts[i]) == sigma(d, pts[i + 1])) return std::vector<Angle>{pts[i], pts[i + 1]};
    return std::vector<Angle>(pts);
}

Rational hausdorff_distance(const std::vector<Angle>& a, const std::vector<Angle>& b) {
    if (a.empty() || b.empty()) throw Error("Hausdorff distance of an empty set");
    auto directed = [](const std::vector<Angle>& x, const std::vector<Angle>& y) {
        Rational worst = 0;
        for (const auto& p : x) {
            Rational best = 1;
            for (const auto& q : y) {
                Rational dd = circle_distance(p, q);
                if (dd < best) best = dd;
            }
            if (best > worst) worst = best;
        }
        return worst;
    };
    Rational r1 = directed(a, b);
    Rational r2 = directed(b, a);
    return r1 > r2 ? r1 : r2;
}

}  // namespace lamina
