#include "lamina/gaps.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace lamina {

namespace {

struct Node {
    Chord chord;
    std::vector<std::size_t> children;
};

Gap face_between(const Chord* own, const std::vector<Node>& nodes, const std::vector<std::size_t>& kids) {
    Gap g;
    std::vector<Angle> verts;
    std::optional<Angle> cursor;
    if (own) {
        g.incident_leaves.push_back(*own);
        verts.push_back(own->lo());
        verts.push_back(own->hi());
        cursor = own->lo();
    }
    for (std::size_t k : kids) {
        const Chord& c = nodes[k].chord;
        g.incident_leaves.push_back(c);
        verts.push_back(c.lo());
        verts.push_back(c.hi());
        if (cursor && *cursor != c.lo()) g.arcs.push_back(Arc{*cursor, c.lo()});
        cursor = c.hi();
    }
    if (own) {
        if (*cursor != own->hi()) g.arcs.push_back(Arc{*cursor, own->hi()});
    } else {
        // outermost face: the arc through 0 closes the walk
        g.arcs.push_back(Arc{nodes[kids.back()].chord.hi(), nodes[kids.front()].chord.lo()});
    }
    g.boundary = Polygon(std::move(verts));
    std::sort(g.incident_leaves.begin(), g.incident_leaves.end());
    std::sort(g.arcs.begin(), g.arcs.end(), [](const Arc& a, const Arc& b) { return a.from < b.from; });
    return g;
}

}  // namespace

std::vector<Gap> gaps(const Lamination& lam) {
    std::vector<Gap> out;
    if (lam.empty()) {
        Gap g;
        g.arcs.push_back(Arc{Angle(), Angle(), true});
        out.push_back(std::move(g));
        return out;
    }

    std::vector<Node> nodes;
    nodes.reserve(lam.size());
    for (const auto& c : lam.leaves()) nodes.push_back(Node{c, {}});
    // containment order: lo ascending, hi descending
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
        if (a.chord.lo() != b.chord.lo()) return a.chord.lo() < b.chord.lo();
        return a.chord.hi() > b.chord.hi();
    });
    std::vector<std::size_t> roots;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Chord& c = nodes[i].chord;
        while (!stack.empty() && nodes[stack.back()].chord.hi() <= c.lo()) stack.pop_back();
        if (stack.empty())
            roots.push_back(i);
        else
            nodes[stack.back()].children.push_back(i);
        stack.push_back(i);
    }

    for (const auto& n : nodes) out.push_back(face_between(&n.chord, nodes, n.children));
    out.push_back(face_between(nullptr, nodes, roots));

    if (lam.depth_truncation()) {
        std::set<Polygon> boundaries;
        for (const auto& g : out)
            if (g.boundary.size() >= 3) boundaries.insert(g.boundary);
        for (auto& g : out) {
            Polygon img = sigma_hull(lam.degree(), g.boundary);
            bool ok = img.is_point() || (img.is_chord() && lam.contains(img.as_chord())) || boundaries.count(img);
            g.is_outer_truncation_artifact = !ok;
        }
    }

    std::sort(out.begin(), out.end(), [](const Gap& a, const Gap& b) {
        if (a.boundary != b.boundary) return a.boundary < b.boundary;
        if (a.arcs.empty() || b.arcs.empty()) return a.arcs.size() < b.arcs.size();
        return a.arcs.front().from < b.arcs.front().from;
    });
    return out;
}

int gap_degree(Degree d, const Polygon& boundary) {
    const auto& v = boundary.vertices();
    if (v.empty()) return d.value();
    Polygon img = sigma_hull(d, boundary);
    if (img.is_point()) return static_cast<int>(v.size());
    Rational total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Angle a = sigma(d, v[i]);
        Angle b = sigma(d, v[(i + 1) % v.size()]);
        if (a != b) total += arc_length(a, b);
    }
    // total is an integer: the image cycle wraps this many times
    return static_cast<int>(boost::multiprecision::numerator(total) / boost::multiprecision::denominator(total));
}

int gap_degree(Degree d, const Gap& g) { return gap_degree(d, g.boundary); }

}  // namespace lamina
