#include "lamina/cotag.hpp"

#include <algorithm>
#include <map>

#include "lamina/gaps.hpp"

namespace lamina {

namespace {

const Degree kCubic(3);

// outside preimages, or the failure reason
std::vector<Angle> outside_preimages(const Polygon& c, std::string* why) {
    std::map<Angle, int> hits;
    for (const auto& v : c.vertices()) ++hits[sigma(kCubic, v)];
    std::vector<Angle> out;
    for (const auto& [img, n] : hits) {
        if (n != 2) {
            if (why) *why = "image " + img.str() + " has " + std::to_string(n) + " preimages in the set, expected 2";
            return {};
        }
        for (int i = 0; i < 3; ++i) {
            Angle p = img.preimage(3, i);
            if (!c.contains_vertex(p)) out.push_back(p);
        }
    }
    return out;
}

bool subset(const Polygon& p, const Polygon& q) {
    return std::all_of(p.vertices().begin(), p.vertices().end(), [&](const Angle& a) { return q.contains_vertex(a); });
}

}  // namespace

AdmissibilityReport check_admissible(const Polygon& c) {
    auto fail = [](std::string why) { return AdmissibilityReport{false, std::move(why)}; };
    if (c.size() < 2) return fail("a critical set needs at least 2 vertices");
    if (c.size() == 2) {
        if (!is_critical(kCubic, c.as_chord())) return fail("leaf " + c.str() + " is not critical");
    } else if (gap_degree(kCubic, c) != 2) {
        return fail("degree of " + c.str() + " is not 2");
    }
    std::string why;
    auto pts = outside_preimages(c, &why);
    if (!why.empty()) return fail(why);
    Polygon coc = convex_hull(pts);
    if (!interiors_disjoint(coc, c)) return fail("co-critical set " + coc.str() + " is linked with " + c.str());
    return {};
}

Polygon cocritical_set(const Polygon& c) {
    auto rep = check_admissible(c);
    if (!rep.ok) throw Error("inadmissible critical set: " + rep.failure);
    return convex_hull(outside_preimages(c, nullptr));
}

Polygon rotate_third(const Polygon& p, int k) {
    Angle shift(((k % 3) + 3) % 3, 3);
    std::vector<Angle> v;
    for (const auto& a : p.vertices()) v.push_back(a.plus(shift));
    return Polygon(std::move(v));
}

Polygon reconstruct_from_cocritical(const Polygon& s) {
    std::vector<Angle> v = rotate_third(s, 1).vertices();
    const Polygon r2 = rotate_third(s, 2);
    v.insert(v.end(), r2.vertices().begin(), r2.vertices().end());
    return convex_hull(v);
}

std::string CoTag::str() const { return first.str() + " x " + second.str(); }

CoTag cotag(const Polygon& c1, const Polygon& c2) {
    if (c1 == c2) throw Error("critical sets must be distinct");
    if (!interiors_disjoint(c1, c2)) throw Error("critical sets " + c1.str() + " and " + c2.str() + " are linked");
    return CoTag{cocritical_set(c1), cocritical_set(c2)};
}

std::string to_string(TagRelation r) {
    switch (r) {
        case TagRelation::disjoint: return "disjoint";
        case TagRelation::equal: return "equal";
        case TagRelation::overlap: return "overlap";
    }
    return "?";
}

TagRelation tags_relation(const CoTag& t1, const CoTag& t2) {
    if (t1 == t2) return TagRelation::equal;
    if (!hulls_intersect(t1.first, t2.first) || !hulls_intersect(t1.second, t2.second)) return TagRelation::disjoint;
    return TagRelation::overlap;
}

UscReport usc_witness_check(const std::vector<CoTag>& sequence, const CoTag& limit, const CoTag& target,
                            const Rational& tolerance) {
    UscReport r;
    for (const auto& t : sequence) {
        r.first_distances.push_back(hausdorff_distance(t.first.vertices(), limit.first.vertices()));
        r.second_distances.push_back(hausdorff_distance(t.second.vertices(), limit.second.vertices()));
    }
    if (!sequence.empty() &&
        std::max(r.first_distances.back(), r.second_distances.back()) > tolerance) {
        std::string trace;
        for (std::size_t i = 0; i < sequence.size(); ++i)
            trace += (i ? " " : "") + r.first_distances[i].str() + "," + r.second_distances[i].str();
        throw Error("sequence does not converge to the limit; distances: " + trace);
    }
    r.limit_meets_target =
        hulls_intersect(limit.first, target.first) && hulls_intersect(limit.second, target.second);
    if (r.limit_meets_target && !(subset(limit.first, target.first) && subset(limit.second, target.second))) {
        r.pass = false;
        r.message = "USC violation: limit " + limit.str() + " meets but is not inside " + target.str();
    }
    return r;
}

}  // namespace lamina
