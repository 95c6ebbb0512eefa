#include "lamina/accordion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace lamina {

std::vector<Angle> Accordion::vertices() const {
    std::vector<Angle> v;
    for (const auto& c : members) {
        v.push_back(c.lo());
        v.push_back(c.hi());
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Accordion accordion_vs_lamination(const Lamination& lam2, const Chord& axis) {
    if (axis.degenerate()) throw Error("accordion axis must be non-degenerate");
    Accordion acc{axis, lam2.crossings(axis)};
    acc.members.push_back(axis);
    std::sort(acc.members.begin(), acc.members.end());
    return acc;
}

Accordion orbit_accordion(const LeafOrbit& orbit2, const Chord& axis) {
    if (axis.degenerate()) throw Error("accordion axis must be non-degenerate");
    Accordion acc{axis, {axis}};
    for (std::size_t k = 0; k < orbit2.distinct(); ++k)
        if (linked(orbit2.orbit[k], axis)) acc.members.push_back(orbit2.orbit[k]);
    std::sort(acc.members.begin(), acc.members.end());
    acc.members.erase(std::unique(acc.members.begin(), acc.members.end()), acc.members.end());
    return acc;
}

Accordion orbit_accordion(Degree d, const Chord& l2, const Chord& axis) {
    if (l2.degenerate()) throw Error("accordion needs a non-degenerate leaf");
    return orbit_accordion(leaf_orbit(d, l2), axis);
}

OrderPreservingResult has_order_preserving_accordions(Degree d, const LeafOrbit& o1, const LeafOrbit& o2) {
    OrderPreservingResult r;
    if (o1.collapse_step || o2.collapse_step) {
        r.ok = false;
        r.reason = "precritical axis";
        return r;
    }
    const Chord& l1 = o1.orbit.front();
    bool crosses = false;
    for (std::size_t k = 0; k < o2.distinct() && !crosses; ++k) crosses = linked(o2.orbit[k], l1);
    if (!crosses) {
        r.ok = false;
        r.reason = "accordion is just the axis";
        r.step = 0;
        return r;
    }
    for (std::size_t k = 0; k < o1.distinct(); ++k) {
        Accordion acc = orbit_accordion(o2, o1.orbit[k]);
        auto verts = acc.vertices();
        if (!order_preserving(d, verts)) {
            r.ok = false;
            r.reason = "order violated";
            r.step = static_cast<int>(k);
            r.vertex_set = verts;
            if (auto w = order_violation(d, verts)) r.witness = *w;
            return r;
        }
    }
    return r;
}

OrderPreservingResult mutually_order_preserving(Degree d, const LeafOrbit& o1, const LeafOrbit& o2) {
    OrderPreservingResult r = has_order_preserving_accordions(d, o1, o2);
    if (!r.ok) {
        r.direction = 1;
        return r;
    }
    r = has_order_preserving_accordions(d, o2, o1);
    if (!r.ok) r.direction = 2;
    return r;
}

OrderPreservingResult mutually_order_preserving(Degree d, const Chord& l1, const Chord& l2) {
    if (l1.degenerate() || l2.degenerate()) {
        OrderPreservingResult r;
        r.ok = false;
        r.reason = "precritical axis";
        return r;
    }
    return mutually_order_preserving(d, leaf_orbit(d, l1), leaf_orbit(d, l2));
}

bool circular_chain(const std::vector<Angle>& pts, const std::vector<bool>& weak) {
    const std::size_t n = pts.size();
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Angle& p = pts[i];
        const Angle& q = pts[(i + 1) % n];
        if (p == q) {
            if (!weak[i]) return false;
            continue;
        }
        total += arc_length(p, q);
    }
    return total == 1;
}

int chord_circular_order(const std::vector<Chord>& chords) {
    const std::size_t n = chords.size();
    std::vector<Angle> mids;
    for (std::size_t i = 0; i < n; ++i) {
        const Chord& c = chords[i];
        // the outward hole is the side holding none of the other chords
        bool inner_lo_hi = true, inner_hi_lo = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (linked(c, chords[j]) || c == chords[j]) return 0;
            for (const Angle& p : {chords[j].lo(), chords[j].hi()}) {
                if (c.has_endpoint(p)) continue;
                if (between(c.lo(), p, c.hi()))
                    inner_hi_lo = false;
                else
                    inner_lo_hi = false;
            }
        }
        Arc hole;
        if (inner_hi_lo && !inner_lo_hi)
            hole = Arc{c.lo(), c.hi()};
        else if (inner_lo_hi && !inner_hi_lo)
            hole = Arc{c.hi(), c.lo()};
        else if (n == 1)
            hole = Arc{c.lo(), c.hi()};
        else
            return 0;
        mids.push_back(hole.from.plus(Angle::from_rational(hole.length() / 2)));
    }
    if (n <= 2) return 1;
    auto descents = [&](bool reverse) {
        int cnt = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Angle& p = mids[i];
            const Angle& q = mids[(i + 1) % n];
            if (reverse ? p < q : q < p) ++cnt;
        }
        return cnt;
    };
    if (descents(false) == 1) return 1;
    if (descents(true) == 1) return -1;
    return 0;
}

std::string AccordionCase::str() const {
    std::string s = "case " + std::to_string(case_id);
    if (case_id == 2) s += " (j=" + std::to_string(flip_power) + ", " + flip_subcase + ")";
    if (case_id == 3) s += " (period " + std::to_string(period) + ")";
    if (case_id == 4) s += " (i=" + std::to_string(other_index) + ", pattern " + pattern + ")";
    return s;
}

namespace {

int eventual_period(Degree d, const Angle& a) { return angle_orbit(d, a).period; }

bool same_orbit(Degree d, const Angle& p, const Angle& q) {
    auto o = angle_orbit(d, p);
    return std::find(o.orbit.begin(), o.orbit.end(), q) != o.orbit.end();
}

}  // namespace

AccordionCase classify_accordion_unchecked(Degree d, const Chord& la, const Chord& lx, const LeafOrbit& ox) {
    AccordionCase out;
    out.a = la.lo();
    out.b = la.hi();
    if (between(out.b, lx.lo(), out.a)) {
        out.x = lx.lo();
        out.y = lx.hi();
    } else {
        out.x = lx.hi();
        out.y = lx.lo();
    }
    const Angle &a = out.a, &b = out.b, &x = out.x, &y = out.y;

    std::vector<std::size_t> crossing;
    for (std::size_t k = 0; k < ox.distinct(); ++k)
        if (linked(ox.orbit[k], la)) crossing.push_back(k);
    if (crossing.size() > 2) throw Error("classification impossible: three orbit images cross the axis");

    if (crossing.size() == 2) {
        int i = static_cast<int>(crossing[1]);
        Angle xi = sigma_iter(d, x, i), yi = sigma_iter(d, y, i);
        out.case_id = 4;
        out.other_index = i;
        if (circular_chain({x, a, y, xi, b, yi}, {false, false, true, false, false, true}))
            out.pattern = "A";
        else if (circular_chain({x, yi, a, xi, y, b}, {true, false, false, true, false, false}))
            out.pattern = "B";
        else
            throw Error("classification impossible: two crossing images without the interleave pattern");
        return out;
    }

    if (!ox.periodic()) {
        out.case_id = 1;
        return out;
    }

    auto xo = angle_orbit(d, x);
    auto it = std::find(xo.orbit.begin(), xo.orbit.begin() + static_cast<long>(xo.distinct()), y);
    if (it != xo.orbit.begin() + static_cast<long>(xo.distinct())) {
        int j = static_cast<int>(it - xo.orbit.begin());
        if (sigma_iter(d, y, j) != x) throw Error("classification impossible: sigma^j does not flip the crossing leaf");
        Angle aj = sigma_iter(d, a, j), bj = sigma_iter(d, b, j);
        out.case_id = 2;
        out.flip_power = j;
        if (aj == b && bj == a) {
            out.flip_subcase = "swap";
        } else {
            bool ok = aj != b && bj != a && !lx.has_endpoint(aj) && !lx.has_endpoint(bj);
            auto side = [&](const Angle& p) { return between(x, p, y); };
            ok = ok && side(a) == side(bj) && side(b) == side(aj) && side(a) != side(b);
            if (!ok) throw Error("classification impossible: flip without the separation pattern");
            out.flip_subcase = "separated";
        }
        if (sigma_iter(d, a, 2 * j) != a || sigma_iter(d, b, 2 * j) != b)
            throw Error("classification impossible: sigma^2j moves an endpoint of the axis");
        return out;
    }

    auto pa = angle_orbit(d, a), pb = angle_orbit(d, b), py = angle_orbit(d, y);
    bool ok = pa.periodic() && pb.periodic() && xo.periodic() && py.periodic() && pa.period == pb.period &&
              pa.period == xo.period && pa.period == py.period && !same_orbit(d, a, b);
    if (!ok) throw Error("classification impossible: no case matches");
    out.case_id = 3;
    out.period = pa.period;
    return out;
}

AccordionCase classify_accordion(Degree d, const Chord& la, const Chord& lx) {
    if (la.degenerate() || lx.degenerate() || !linked(la, lx)) throw Error("not linked");
    auto oa = leaf_orbit(d, la);
    auto ox = leaf_orbit(d, lx);
    auto op = mutually_order_preserving(d, oa, ox);
    if (!op.ok) throw Error("precondition violated: accordions not mutually order preserving (" + op.reason + ")");
    return classify_accordion_unchecked(d, la, lx, ox);
}

JointOrbitStructure joint_orbit_structure_unchecked(Degree d, const Chord& la, const Chord& lx) {
    JointOrbitStructure js;
    Polygon b0({la.lo(), la.hi(), lx.lo(), lx.hi()});
    auto orb = polygon_orbit(d, b0);
    js.preperiod_of_b = orb.preperiod;
    const long n = static_cast<long>(orb.distinct());
    for (long i = 0; i < n && js.r < 0; ++i)
        for (long j = i + 1; j <= i + n; ++j)
            if (!interiors_disjoint(orb.at(i), orb.at(j))) {
                js.r = static_cast<int>(i);
                break;
            }
    if (js.r < 0) return js;
    js.verdict = JointOrbitStructure::Verdict::periodic_structure;

    // X: images from r on, grouped into connected components
    std::vector<Polygon> polys;
    for (long i = js.r; i < n; ++i) polys.push_back(orb.at(i));
    std::vector<std::size_t> parent(polys.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (hulls_intersect(polys[i], polys[j])) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < polys.size(); ++i) groups[find(i)].push_back(i);

    std::vector<std::vector<Angle>> comp_pts;
    std::vector<std::size_t> comp_of(polys.size());
    for (auto& [_, g] : groups) {
        std::vector<Angle> pts;
        for (auto i : g) {
            comp_of[i] = comp_pts.size();
            for (const auto& v : polys[i].vertices()) pts.push_back(v);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (!order_preserving(d, pts)) throw Error("joint orbit check failed: sigma not order preserving on a component");
        comp_pts.push_back(pts);
        js.components.emplace_back(pts);
    }

    const auto& br = polys.front().vertices();
    std::set<int> periods;
    for (const auto& v : br) {
        auto o = angle_orbit(d, v);
        if (!o.periodic()) throw Error("joint orbit check failed: vertex of sigma^r(B) is not periodic");
        periods.insert(o.period);
    }
    if (periods.size() != 1) throw Error("joint orbit check failed: vertex periods differ");
    js.vertex_period = *periods.begin();
    int orbits = 0;
    for (std::size_t i = 0; i < br.size(); ++i) {
        bool fresh = true;
        for (std::size_t j = 0; j < i && fresh; ++j)
            if (same_orbit(d, br[j], br[i])) fresh = false;
        orbits += fresh;
    }
    js.vertex_orbits = orbits;
    if (orbits < 2 || orbits > 4) throw Error("joint orbit check failed: vertex orbit count out of range");

    // first return to the component of sigma^r(B)
    const auto& home = comp_pts[comp_of[0]];
    int m = 0;
    std::vector<Angle> cur = home;
    do {
        for (auto& v : cur) v = sigma(d, v);
        std::sort(cur.begin(), cur.end());
        ++m;
    } while (cur != home && m <= static_cast<int>(polys.size()) * js.vertex_period + 1);
    if (cur != home) throw Error("joint orbit check failed: component does not return");
    bool identity = std::all_of(home.begin(), home.end(), [&](const Angle& v) { return sigma_iter(d, v, m) == v; });
    if (identity && !(groups.at(find(0)).size() == 1 && home.size() == 4))
        throw Error("joint orbit check failed: identity return map on a component that is not a single quadrilateral");

    std::set<int> eventual;
    for (const Angle& v : {la.lo(), la.hi(), lx.lo(), lx.hi()}) eventual.insert(eventual_period(d, v));
    if (eventual.size() != 1) throw Error("joint orbit check failed: eventual endpoint periods differ");
    return js;
}

JointOrbitStructure joint_orbit_structure(Degree d, const Chord& la, const Chord& lx) {
    if (la.degenerate() || lx.degenerate() || !linked(la, lx)) throw Error("not linked");
    auto op = mutually_order_preserving(d, la, lx);
    if (!op.ok) throw Error("precondition violated: accordions not mutually order preserving (" + op.reason + ")");
    return joint_orbit_structure_unchecked(d, la, lx);
}

}  // namespace lamina
