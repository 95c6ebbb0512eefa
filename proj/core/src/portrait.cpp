#include "lamina/portrait.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace lamina {

std::vector<Chord> CriticalItem::critical_chords() const {
    const auto& v = set.vertices();
    if (v.size() == 2) return {Chord(v[0], v[1])};
    if (v.size() == 4) {
        std::vector<Chord> out{Chord(v[0], v[2]), Chord(v[1], v[3])};
        std::sort(out.begin(), out.end());
        return out;
    }
    throw Error("critical set must be a leaf or a quadrilateral: " + set.str());
}

std::string CriticalItem::str() const { return (is_quad() ? "quad " : "leaf ") + set.str(); }

bool is_collapsing_quad(Degree d, const Polygon& p) {
    if (p.size() != 4) throw Error("collapsing quadrilateral needs 4 vertices, got " + std::to_string(p.size()));
    const auto& v = p.vertices();
    Angle a = sigma(d, v[0]), b = sigma(d, v[1]);
    return a == sigma(d, v[2]) && b == sigma(d, v[3]) && a != b;
}

PortraitReport validate_portrait(const QCPortrait& p) {
    PortraitReport r;
    auto fail = [&](std::string msg) {
        r.valid = false;
        r.problems.push_back(std::move(msg));
    };
    const int n = p.degree.value();
    if (static_cast<int>(p.items.size()) != n - 1)
        fail("expected " + std::to_string(n - 1) + " critical sets, got " + std::to_string(p.items.size()));
    for (const auto& it : p.items) {
        if (it.is_leaf()) {
            if (!is_critical(p.degree, it.set.as_chord())) fail("leaf " + it.set.str() + " is not critical");
        } else if (it.is_quad()) {
            if (!is_collapsing_quad(p.degree, it.set)) fail("quad " + it.set.str() + " does not collapse to a leaf");
        } else {
            fail("critical set " + it.set.str() + " is neither a leaf nor a quadrilateral");
        }
    }
    for (std::size_t i = 0; i < p.items.size(); ++i)
        for (std::size_t j = i + 1; j < p.items.size(); ++j) {
            const auto& a = p.items[i].set;
            const auto& b = p.items[j].set;
            if (a == b)
                fail("critical set " + a.str() + " repeated");
            else if (a.size() >= 2 && b.size() >= 2 && !interiors_disjoint(a, b))
                fail("critical sets " + a.str() + " and " + b.str() + " are linked");
        }

    // loops among critical leaves
    std::map<Angle, Angle> parent;
    auto find = [&](Angle x) {
        while (parent.at(x) != x) x = parent.at(x);
        return x;
    };
    for (const auto& it : p.items) {
        if (!it.is_leaf()) continue;
        Chord c = it.set.as_chord();
        parent.try_emplace(c.lo(), c.lo());
        parent.try_emplace(c.hi(), c.hi());
        Angle a = find(c.lo()), b = find(c.hi());
        if (a == b) {
            fail("critical leaves form a loop through " + c.str());
            continue;
        }
        parent[a] = b;
    }
    r.warnings.push_back("standalone portrait: lamination-edge condition on critical components not checked");
    return r;
}

std::vector<FullCriticalCollection> full_collections(const QCPortrait& p) {
    std::vector<std::vector<Chord>> choices{{}};
    for (const auto& it : p.items) {
        std::vector<std::vector<Chord>> next;
        for (const auto& partial : choices)
            for (const auto& c : it.critical_chords()) {
                next.push_back(partial);
                next.back().push_back(c);
            }
        choices = std::move(next);
    }
    std::vector<FullCriticalCollection> out;
    for (auto& ch : choices) out.emplace_back(p.degree, std::move(ch));
    return out;
}

bool compatible(const CriticalItem& a, const CriticalItem& b) {
    if (a == b) return true;
    auto ca = a.critical_chords();
    for (const auto& c : b.critical_chords())
        if (std::find(ca.begin(), ca.end(), c) != ca.end()) return true;
    return false;
}

std::string to_string(IndexRelation r) {
    switch (r) {
        case IndexRelation::strongly_linked: return "strongly-linked";
        case IndexRelation::compatible: return "compatible";
        case IndexRelation::incompatible: return "incompatible";
    }
    return "?";
}

std::string to_string(Linkage l) {
    switch (l) {
        case Linkage::linked: return "linked";
        case Linkage::essentially_equal: return "essentially-equal";
        case Linkage::neither: return "neither";
    }
    return "?";
}

LinkageVerdict linkage_verdict(const QCPortrait& p1, const QCPortrait& p2) {
    if (p1.degree != p2.degree) throw Error("degree mismatch");
    if (p1.items.size() != p2.items.size()) throw Error("portraits have different numbers of critical sets");
    LinkageVerdict v;
    bool all_compatible = true, any_strong = false, any_bad = false;
    for (std::size_t i = 0; i < p1.items.size(); ++i) {
        const auto& a = p1.items[i];
        const auto& b = p2.items[i];
        IndexRelation r;
        if (compatible(a, b))
            r = IndexRelation::compatible;
        else if (a.is_quad() && b.is_quad() && strongly_linked(a.set, b.set))
            r = IndexRelation::strongly_linked;
        else
            r = IndexRelation::incompatible;
        all_compatible = all_compatible && r == IndexRelation::compatible;
        any_strong = any_strong || r == IndexRelation::strongly_linked;
        any_bad = any_bad || r == IndexRelation::incompatible;
        v.per_index.push_back(r);
    }
    if (all_compatible)
        v.relation = Linkage::essentially_equal;
    else if (!any_bad && any_strong)
        v.relation = Linkage::linked;
    return v;
}

FullCriticalCollection smart_critical_collection(const Chord& leaf, const QCPortrait* p1, const QCPortrait& p2,
                                                 std::optional<Angle> avoid) {
    const Polygon lp(leaf);
    auto selected_leaf = [&](const QCPortrait& p) {
        for (const auto& it : p.items)
            if (it.is_leaf() && it.set == lp) return true;
        return false;
    };
    if (p1) {
        if (linkage_verdict(*p1, p2).relation == Linkage::neither)
            throw Error("precondition violated: portraits are neither linked nor essentially equal");
        if (selected_leaf(*p1)) throw Error("precondition violated: leaf is a selected critical leaf");
        for (const auto& it : p1->items)
            if (!interiors_disjoint(it.set, lp))
                throw Error("precondition violated: leaf " + leaf.str() + " crosses " + it.str());
    }
    if (selected_leaf(p2)) throw Error("precondition violated: leaf is a selected critical leaf");

    std::vector<Chord> chosen;
    for (const auto& it : p2.items) {
        if (it.is_leaf()) {
            Chord c = it.set.as_chord();
            if (linked(c, leaf)) throw Error("precondition violated: leaf crosses critical leaf " + c.str());
            chosen.push_back(c);
            continue;
        }
        std::vector<Chord> ok;
        for (const auto& c : it.critical_chords())
            if (!linked(c, leaf)) ok.push_back(c);
        if (ok.empty()) throw Error("precondition violated: leaf crosses both diagonals");
        if (avoid) {
            std::vector<Chord> away;
            for (const auto& c : ok)
                if (!c.has_endpoint(*avoid)) away.push_back(c);
            if (!away.empty()) ok = std::move(away);
        }
        chosen.push_back(*std::min_element(ok.begin(), ok.end(),
                                           [](const Chord& a, const Chord& b) { return a.str() < b.str(); }));
    }
    return FullCriticalCollection(p2.degree, std::move(chosen));
}

std::optional<std::vector<Chord>> critical_chain(const FullCriticalCollection& fcc, const Angle& a, const Angle& x) {
    const Degree d = fcc.degree();
    if (sigma(d, a) != sigma(d, x)) throw Error("image mismatch: " + a.str() + " and " + x.str());
    if (a == x) return std::vector<Chord>{};
    // breadth-first search over endpoints inside [a,x]; the endpoint graph is a forest
    std::map<Angle, std::optional<Chord>> via{{a, std::nullopt}};
    std::deque<Angle> queue{a};
    while (!queue.empty()) {
        Angle v = queue.front();
        queue.pop_front();
        for (const auto& c : fcc.chords()) {
            if (!c.has_endpoint(v)) continue;
            const Angle& w = c.other(v);
            if (!between_closed(a, w, x) || via.count(w)) continue;
            via[w] = c;
            queue.push_back(w);
        }
    }
    if (!via.count(x)) return std::nullopt;
    std::vector<Chord> chain;
    for (Angle v = x; via[v]; v = via[v]->other(v)) chain.push_back(*via[v]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<Chord> portrait_seed(const QCPortrait& p) {
    std::set<Chord> out;
    for (const auto& it : p.items) {
        if (it.is_leaf()) {
            out.insert(it.set.as_chord());
            continue;
        }
        for (const auto& e : it.set.edges()) out.insert(e);
        Chord img = sigma(p.degree, it.set.edges().front());
        while (!img.degenerate() && out.insert(img).second) img = sigma(p.degree, img);
    }
    return {out.begin(), out.end()};
}

bool portrait_consistent(const QCPortrait& p) {
    if (!validate_portrait(p).valid) return false;
    Lamination lam(p.degree);
    for (const auto& c : portrait_seed(p)) {
        if (lam.first_crossing(c)) return false;
        lam.insert(c);
    }
    for (const auto& it : p.items)
        if (it.is_quad())
            for (const auto& c : it.critical_chords())
                if (lam.first_crossing(c)) return false;
    return true;
}

Lamination portrait_lamination(const QCPortrait& p, int depth, PullbackLog* log) {
    auto colls = full_collections(p);
    Lamination seed(p.degree, portrait_seed(p));
    PullbackOptions opts;
    opts.include_critical_chords = false;
    return pullback_generate(colls.front(), seed, depth, opts, log);
}

namespace {

std::vector<Angle> sorted_unique(std::vector<Angle> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

bool leaves_room_for_arcs(Degree d, const std::vector<Angle>& points) {
    auto v = sorted_unique(points);
    if (v.size() <= 1) return true;
    BigInt room = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational g = arc_length(v[i], v[(i + 1) % v.size()]) * d.value();
        room += numerator(g) / denominator(g);
    }
    return room >= d.value() - 1;
}

bool weakly_monotone(Degree d, const std::vector<Angle>& points) {
    auto v = sorted_unique(points);
    std::vector<Angle> img;
    for (const auto& a : v) {
        Angle s = sigma(d, a);
        if (img.empty() || img.back() != s) img.push_back(s);
    }
    while (img.size() > 1 && img.front() == img.back()) img.pop_back();
    if (sorted_unique(img).size() != img.size()) return false;
    int descents = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
        if (img[(i + 1) % img.size()] < img[i]) ++descents;
    return descents <= 1;
}

bool in_one_closed_region(const FullCriticalCollection& fcc, const std::vector<Angle>& points) {
    // one interior point per region: midpoints of the arcs between chord endpoints
    std::vector<Angle> cuts;
    for (const auto& c : fcc.chords()) {
        cuts.push_back(c.lo());
        cuts.push_back(c.hi());
    }
    cuts = sorted_unique(cuts);
    std::map<int, Angle> inner;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        Rational len = arc_length(cuts[i], cuts[(i + 1) % cuts.size()]);
        Angle mid = cuts[i].plus(Angle::from_rational(len / 2));
        inner.try_emplace(fcc.branch_of(mid), mid);
    }
    // closure of a region = intersection of the closed sides of all chords facing it
    auto in_closure = [&](const Angle& inside, const Angle& p) {
        for (const auto& c : fcc.chords()) {
            bool left = between(c.lo(), inside, c.hi());
            if (left ? !between_closed(c.lo(), p, c.hi()) : !between_closed(c.hi(), p, c.lo())) return false;
        }
        return true;
    };
    for (const auto& [b, inside] : inner)
        if (std::all_of(points.begin(), points.end(), [&](const Angle& p) { return in_closure(inside, p); }))
            return true;
    return false;
}

}  // namespace lamina
