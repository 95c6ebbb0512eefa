#include "fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lamina/gaps.hpp"
#include "lamina/orbit.hpp"

namespace fixtures {

Angle ang(const char* s) { return parse_angle(s); }
Chord ch(const char* a, const char* b) { return Chord(ang(a), ang(b)); }
Polygon poly(std::initializer_list<const char*> vs) {
    std::vector<Angle> v;
    for (auto s : vs) v.push_back(ang(s));
    return Polygon(std::move(v));
}

Lamination orbit_seed(Degree d, const std::vector<Polygon>& polys) {
    Lamination lam(d);
    for (const auto& p : polys)
        for (const auto& e : p.edges()) {
            auto o = leaf_orbit(d, e);
            for (std::size_t k = 0; k < o.distinct(); ++k)
                if (!o.orbit[k].degenerate()) lam.insert(o.orbit[k]);
        }
    return lam;
}

namespace {

BigInt lcm_of_denominators(const Lamination& lam) {
    BigInt l = 1;
    for (const auto& c : lam.leaves())
        for (const auto& a : {c.lo(), c.hi()}) {
            BigInt q = a.denominator();
            l = l / boost::multiprecision::gcd(l, q) * q;
        }
    return l;
}

bool clear_of_seed(const Chord& c, const Lamination& seed, const std::set<Angle>& ends) {
    return !ends.count(c.lo()) && !ends.count(c.hi()) && !seed.first_crossing(c);
}

bool clean_pullback(const FullCriticalCollection& fcc, const Lamination& seed) {
    PullbackLog log;
    pullback_generate(fcc, seed, 3, {}, &log);
    return log.discards.empty();
}

}  // namespace

PullbackFixture make_fixture(std::string name, Degree d, const std::vector<Polygon>& polys) {
    Lamination seed = orbit_seed(d, polys);
    auto ends_v = seed.endpoints();
    std::set<Angle> ends(ends_v.begin(), ends_v.end());
    const int m = static_cast<int>(lcm_of_denominators(seed)) * 2 * d.value();
    // every critical chord {c, c + 1/d} on the grid
    std::vector<Chord> candidates;
    for (int k = 0; k < m; ++k) {
        Angle c(k, m);
        Chord chord(c, c.plus(Angle(1, d.value())));
        if (clear_of_seed(chord, seed, ends)) candidates.push_back(chord);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // d-1 pairwise disjoint chords, searched depth first in canonical order
    std::vector<Chord> pick;
    std::function<bool(std::size_t)> search = [&](std::size_t from) -> bool {
        if (static_cast<int>(pick.size()) == d.value() - 1) {
            try {
                FullCriticalCollection fcc(d, pick);
                return clean_pullback(fcc, seed);
            } catch (const Error&) {
                return false;
            }
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            bool ok = true;
            for (const auto& p : pick)
                if (!chords_disjoint(p, candidates[i])) ok = false;
            if (!ok) continue;
            pick.push_back(candidates[i]);
            if (search(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!search(0)) throw Error("fixture " + name + ": no clean critical data found");
    return {std::move(name), FullCriticalCollection(d, pick), std::move(seed)};
}

const std::vector<PullbackFixture>& quadratic_fixtures() {
    static const std::vector<PullbackFixture> all = [] {
        const Degree two(2);
        std::vector<PullbackFixture> v;
        v.push_back(make_fixture("fixed-leaf", two, {poly({"1/3", "2/3"})}));
        v.push_back(make_fixture("rabbit", two, {poly({"1/7", "2/7", "4/7"})}));
        v.push_back(make_fixture("antirabbit", two, {poly({"3/7", "5/7", "6/7"})}));
        v.push_back(make_fixture("airplane", two, {poly({"3/7", "4/7"})}));
        v.push_back(make_fixture("quad-1/4", two, {poly({"1/15", "2/15", "4/15", "8/15"})}));
        v.push_back(make_fixture("quad-3/4", two, {poly({"7/15", "11/15", "13/15", "14/15"})}));
        v.push_back(make_fixture("pentagon-1/5", two, {poly({"1/31", "2/31", "4/31", "8/31", "16/31"})}));
        v.push_back(make_fixture("pentagon-2/5", two, {poly({"5/31", "9/31", "10/31", "18/31", "20/31"})}));
        v.push_back(make_fixture("hexagon-1/6", two, {poly({"1/63", "2/63", "4/63", "8/63", "16/63", "32/63"})}));
        v.push_back(make_fixture("flip-2/5", two, {poly({"1/5", "4/5"})}));
        return v;
    }();
    return all;
}

const std::vector<PullbackFixture>& cubic_fixtures() {
    static const std::vector<PullbackFixture> all = [] {
        const Degree three(3);
        std::vector<PullbackFixture> v;
        v.push_back(make_fixture("flip-1/4", three, {poly({"1/4", "3/4"})}));
        v.push_back(make_fixture("flip-1/8", three, {poly({"1/8", "3/8"})}));
        v.push_back(make_fixture("flip-5/8", three, {poly({"5/8", "7/8"})}));
        v.push_back(make_fixture("flip-1/10", three, {poly({"1/10", "9/10"})}));
        v.push_back(make_fixture("fixed-diameter", three, {poly({"0/1", "1/2"})}));
        v.push_back(make_fixture("triangle-1/26", three, {poly({"1/26", "3/26", "9/26"})}));
        v.push_back(make_fixture("triangle-5/26", three, {poly({"5/26", "15/26", "19/26"})}));
        v.push_back(make_fixture("triangle-7/26", three, {poly({"7/26", "11/26", "21/26"})}));
        v.push_back(make_fixture("triangle-1/13", three, {poly({"1/13", "3/13", "9/13"})}));
        v.push_back(make_fixture("two-flips", three, {poly({"1/8", "3/8"}), poly({"5/8", "7/8"})}));
        return v;
    }();
    return all;
}

std::vector<CriticalItem> cubic_items(int n) {
    const Degree three(3);
    std::vector<CriticalItem> items;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int e = c + 1; e < n; ++e) {
                    Polygon q({Angle(a, n), Angle(b, n), Angle(c, n), Angle(e, n)});
                    if (q.size() == 4 && is_collapsing_quad(three, q)) items.push_back({q});
                }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Chord c(Angle(i, n), Angle(j, n));
            if (is_critical(three, c)) items.push_back({Polygon(c)});
        }
    return items;
}

std::vector<QCPortrait> cubic_portraits(int n) {
    auto items = cubic_items(n);
    std::vector<QCPortrait> out;
    for (const auto& x : items)
        for (const auto& y : items) {
            QCPortrait p{Degree(3), {x, y}};
            if (portrait_consistent(p)) out.push_back(std::move(p));
        }
    return out;
}

std::vector<std::pair<QCPortrait, QCPortrait>> linked_cubic_pairs(int n, std::size_t count) {
    auto ps = cubic_portraits(n);
    std::vector<std::pair<QCPortrait, QCPortrait>> out;
    for (std::size_t i = 0; i < ps.size() && out.size() < count; ++i)
        for (std::size_t j = i + 1; j < ps.size() && out.size() < count; ++j) {
            if (!ps[i].items[0].is_quad() || !ps[j].items[0].is_quad()) continue;
            if (linkage_verdict(ps[i], ps[j]).relation == Linkage::linked) out.emplace_back(ps[i], ps[j]);
        }
    return out;
}

std::vector<TaggedPortrait> bicritical_candidates(int n) {
    std::vector<TaggedPortrait> out;
    for (auto& p : cubic_portraits(n)) {
        const auto& c1 = p.items[0].set;
        const auto& c2 = p.items[1].set;
        if (hulls_intersect(c1, c2)) continue;
        if (!is_proper(portrait_lamination(p, 2)).proper) continue;
        if (!check_admissible(c1).ok || !check_admissible(c2).ok) continue;
        CoTag t = cotag(c1, c2);
        out.push_back({std::move(p), std::move(t)});
    }
    return out;
}

std::vector<TaggedPortrait> one_per_lamination(const std::vector<TaggedPortrait>& candidates) {
    std::vector<TaggedPortrait> kept;
    for (const auto& c : candidates) {
        bool fresh = true;
        for (const auto& k : kept)
            if (linkage_verdict(c.portrait, k.portrait).relation != Linkage::neither) fresh = false;
        if (fresh) kept.push_back(c);
    }
    return kept;
}

std::vector<Polygon> admissible_sets(int n) {
    // images on the (1/n) grid; pick two of the three preimages of each
    const Degree three(3);
    std::set<Polygon> out;
    auto pairs_of = [&](const Angle& y) {
        std::vector<std::vector<Angle>> v;
        for (int drop = 0; drop < 3; ++drop) {
            std::vector<Angle> two;
            for (int i = 0; i < 3; ++i)
                if (i != drop) two.push_back(y.preimage(3, i));
            v.push_back(two);
        }
        return v;
    };
    auto consider = [&](const std::vector<Angle>& images) {
        std::vector<std::vector<Angle>> acc{{}};
        for (const auto& y : images) {
            std::vector<std::vector<Angle>> next;
            for (const auto& base : acc)
                for (const auto& two : pairs_of(y)) {
                    auto v = base;
                    v.insert(v.end(), two.begin(), two.end());
                    next.push_back(std::move(v));
                }
            acc = std::move(next);
        }
        for (auto& v : acc) {
            Polygon c(std::move(v));
            if (check_admissible(c).ok) out.insert(c);
        }
    };
    for (int a = 0; a < n; ++a) {
        consider({Angle(a, n)});
        for (int b = a + 1; b < n; ++b) {
            consider({Angle(a, n), Angle(b, n)});
            for (int c = b + 1; c < n; ++c) consider({Angle(a, n), Angle(b, n), Angle(c, n)});
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace fixtures
