#include "lamina/orbit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace lamina {

namespace {

template <class T, class Step>
OrbitInfo<T> generic_orbit(const T& start, Step step) {
    OrbitInfo<T> info;
    std::map<T, int> seen;
    T x = start;
    for (int k = 0;; ++k) {
        auto [it, fresh] = seen.emplace(x, k);
        info.orbit.push_back(x);
        if (!fresh) {
            info.preperiod = it->second;
            info.period = k - it->second;
            return info;
        }
        x = step(x);
    }
}

}  // namespace

OrbitInfo<Angle> angle_orbit(Degree d, const Angle& a) {
    return generic_orbit(a, [d](const Angle& x) { return sigma(d, x); });
}

OrbitInfo<Polygon> polygon_orbit(Degree d, const Polygon& p) {
    return generic_orbit(p, [d](const Polygon& x) { return sigma_hull(d, x); });
}

LeafOrbit leaf_orbit(Degree d, const Chord& c) {
    if (c.degenerate()) throw Error("leaf_orbit needs a non-degenerate chord");
    LeafOrbit out;
    static_cast<OrbitInfo<Chord>&>(out) = generic_orbit(c, [d](const Chord& x) { return sigma(d, x); });
    Lamination seen(d);
    for (std::size_t k = 0; k < out.distinct(); ++k) {
        const Chord& x = out.orbit[k];
        if (x.degenerate()) {
            if (!out.collapse_step) out.collapse_step = static_cast<int>(k);
            continue;
        }
        if (!out.self_link_step && seen.first_crossing(x)) out.self_link_step = static_cast<int>(k);
        seen.insert(x);
    }
    out.pairwise_unlinked = !out.self_link_step.has_value();
    return out;
}

std::vector<Polygon> periodic_components(Degree d, const Chord& c) {
    LeafOrbit lo = leaf_orbit(d, c);
    if (!lo.periodic() || lo.collapse_step)
        throw Error("precondition violated: leaf is not periodic");
    if (!lo.pairwise_unlinked) throw Error("precondition violated: orbit leaves cross");
    auto pa = angle_orbit(d, c.lo());
    auto pb = angle_orbit(d, c.hi());
    if (!pa.periodic() || !pb.periodic() || pa.period != pb.period)
        throw Error("precondition violated: endpoint periods differ");

    std::vector<Chord> leaves(lo.orbit.begin(), lo.orbit.begin() + static_cast<long>(lo.distinct()));
    std::sort(leaves.begin(), leaves.end());
    std::vector<std::size_t> parent(leaves.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < leaves.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (leaves[i].has_endpoint(leaves[j].lo()) || leaves[i].has_endpoint(leaves[j].hi()))
                parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < leaves.size(); ++i) groups[find(i)].push_back(i);

    std::vector<Polygon> comps;
    std::vector<std::vector<Chord>> comp_edges;
    for (auto& [_, g] : groups) {
        std::vector<Angle> pts;
        std::vector<Chord> es;
        for (auto i : g) {
            pts.push_back(leaves[i].lo());
            pts.push_back(leaves[i].hi());
            es.push_back(leaves[i]);
        }
        Polygon p(pts);
        auto pe = p.edges();
        std::sort(pe.begin(), pe.end());
        std::sort(es.begin(), es.end());
        if (pe != es) throw Error("orbit leaves in a component do not bound a polygon");
        comps.push_back(p);
        comp_edges.push_back(es);
    }

    // components are permuted; the return map rotates each polygon's edges
    const std::size_t n = comps.size();
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polygon img = sigma_hull(d, comps[i]);
        auto it = std::find(comps.begin(), comps.end(), img);
        if (it == comps.end()) throw Error("component image is not a component");
        image[i] = static_cast<std::size_t>(it - comps.begin());
    }
    for (std::size_t i = 0; i < n; ++i) {
        int m = 1;
        for (std::size_t j = image[i]; j != i; j = image[j]) ++m;
        if (comps[i].size() < 3) continue;
        const auto& es = comp_edges[i];
        Chord e = es.front();
        std::size_t seen = 0;
        do {
            e = sigma_iter(d, e, m);
            ++seen;
        } while (e != es.front() && seen <= es.size());
        if (seen != es.size()) throw Error("return map does not rotate the edges transitively");
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

GapTransitivity check_gap_transitivity(Degree d, const Polygon& g) {
    if (g.size() < 3) throw Error("a gap needs at least three vertices");
    auto orb = polygon_orbit(d, g);
    if (!orb.periodic()) throw Error("gap is not periodic");
    for (std::size_t i = 0; i < orb.distinct(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!interiors_disjoint(orb.orbit[i], orb.orbit[j]))
                throw Error("images " + std::to_string(j) + " and " + std::to_string(i) + " of the gap overlap");
    GapTransitivity r;
    r.period = orb.period;
    std::vector<bool> done(g.size(), false);
    const auto& v = g.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (done[i]) continue;
        std::vector<Angle> cyc;
        Angle x = v[i];
        do {
            auto idx = static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
            done[idx] = true;
            cyc.push_back(x);
            x = sigma_iter(d, x, r.period);
        } while (x != v[i]);
        std::sort(cyc.begin(), cyc.end());
        r.orbits.push_back(std::move(cyc));
    }
    std::sort(r.orbits.begin(), r.orbits.end());
    r.fixed_dgon = static_cast<int>(g.size()) == d.value() && r.orbits.size() == g.size();
    r.consistent = r.fixed_dgon || static_cast<int>(r.orbits.size()) <= d.value() - 1;
    return r;
}

std::string WanderingVerdict::str() const {
    if (kind == Kind::collision) return "collision at " + std::to_string(step);
    return "periodic from " + std::to_string(step);
}

WanderingVerdict wandering_check(Degree d, const Polygon& p) {
    if (p.size() < 2) throw Error("wandering_check needs a non-degenerate polygon");
    std::vector<Polygon> imgs{p};
    for (int k = 1;; ++k) {
        Polygon x = sigma_hull(d, imgs.back());
        if (x.size() < p.size()) return WanderingVerdict{WanderingVerdict::Kind::collision, k, 0, -1};
        for (int j = 0; j < k; ++j) {
            if (imgs[j] == x) return WanderingVerdict{WanderingVerdict::Kind::periodic, j, k - j, j};
            if (hulls_intersect(imgs[j], x)) return WanderingVerdict{WanderingVerdict::Kind::collision, k, 0, j};
        }
        imgs.push_back(std::move(x));
    }
}

std::optional<std::pair<Chord, Chord>> wedge_order_violation(const Lamination& lam) {
    const Degree d = lam.degree();
    for (const auto& v : lam.endpoints()) {
        auto ps = lam.partners(v);
        if (ps.size() < 2) continue;
        Angle sv = sigma(d, v);
        std::vector<Angle> img;
        for (const auto& w : ps) img.push_back(sigma(d, w));
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                if (img[i] == img[j] || img[i] == sv || img[j] == sv) continue;
                if (positively_ordered(v, ps[i], ps[j]) != positively_ordered(sv, img[i], img[j]))
                    return std::make_pair(Chord(v, ps[i]), Chord(v, ps[j]));
            }
    }
    return std::nullopt;
}

}  // namespace lamina
