#include "lamina/lamination.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace lamina {

Lamination::Lamination(Degree d, const std::vector<Chord>& leaves, std::optional<int> depth)
    : degree_(d), depth_(depth) {
    for (const auto& c : leaves) insert(c);
}

int Lamination::generation(const Chord& c) const {
    auto it = generation_.find(c);
    return it == generation_.end() ? 0 : it->second;
}

void Lamination::set_generation(const Chord& c, int g) { generation_[c] = g; }

bool Lamination::insert(const Chord& c) {
    if (c.degenerate()) throw Error("degenerate chord " + c.str() + " cannot be a leaf");
    if (!leaves_.insert(c).second) return false;
    auto add = [&](const Angle& v, const Angle& w) {
        auto& list = star_[v];
        list.insert(std::upper_bound(list.begin(), list.end(), w), w);
    };
    add(c.lo(), c.hi());
    add(c.hi(), c.lo());
    return true;
}

template <class F>
void Lamination::scan_crossings(const Chord& c, F&& f) const {
    if (c.degenerate() || star_.empty()) return;
    // scan the shorter of the two open arcs cut out by c
    Angle from = c.lo(), to = c.hi();
    if (arc_length(c.lo(), c.hi()) > Rational(1, 2)) std::swap(from, to);
    auto visit = [&](auto first, auto last) {
        for (auto it = first; it != last; ++it)
            for (const auto& q : it->second)
                if (!between_closed(from, q, to))
                    if (!f(Chord(it->first, q))) return false;
        return true;
    };
    if (from < to) {
        visit(star_.upper_bound(from), star_.lower_bound(to));
    } else {
        if (visit(star_.upper_bound(from), star_.end())) visit(star_.begin(), star_.lower_bound(to));
    }
}

std::optional<Chord> Lamination::first_crossing(const Chord& c) const {
    std::optional<Chord> hit;
    scan_crossings(c, [&](const Chord& x) {
        if (!hit || x < *hit) hit = x;
        return true;
    });
    return hit;
}

std::vector<Chord> Lamination::crossings(const Chord& c) const {
    std::vector<Chord> out;
    scan_crossings(c, [&](const Chord& x) {
        out.push_back(x);
        return true;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Angle> Lamination::partners(const Angle& v) const {
    auto it = star_.find(v);
    if (it == star_.end()) return {};
    return it->second;
}

std::vector<Angle> Lamination::endpoints() const {
    std::vector<Angle> out;
    out.reserve(star_.size());
    for (const auto& [v, _] : star_) out.push_back(v);
    return out;
}

ValidationReport validate(const Lamination& lam) {
    ValidationReport r;
    for (const auto& c : lam.leaves()) {
        if (auto x = lam.first_crossing(c)) {
            r.valid = false;
            r.crossing = std::make_pair(c, *x);
            break;
        }
    }
    const Degree d = lam.degree();
    for (const auto& c : lam.leaves()) {
        Chord img = sigma(d, c);
        if (!img.degenerate() && !lam.contains(img)) r.missing_images.push_back(c);
    }
    if (!r.missing_images.empty()) r.valid = false;
    return r;
}

bool chords_disjoint(const Chord& a, const Chord& b) {
    if (a.has_endpoint(b.lo()) || a.has_endpoint(b.hi())) return false;
    return !linked(a, b);
}

std::set<Chord> sibling_candidates(Degree d, const Chord& c) {
    if (c.degenerate()) throw Error("degenerate chord");
    if (is_critical(d, c)) throw Error("critical leaf has degenerate image");
    Chord img = sigma(d, c);
    std::set<Chord> out;
    for (int i = 0; i < d.value(); ++i)
        for (int j = 0; j < d.value(); ++j)
            out.emplace(img.lo().preimage(d.value(), i), img.hi().preimage(d.value(), j));
    return out;
}

namespace {

// all d-element pairwise disjoint subsets of `pool` containing `must`
std::vector<std::vector<Chord>> disjoint_completions(int d, const Chord& must, const std::vector<Chord>& pool) {
    std::vector<Chord> rest;
    for (const auto& x : pool)
        if (x != must && chords_disjoint(x, must)) rest.push_back(x);
    std::sort(rest.begin(), rest.end());
    std::vector<std::vector<Chord>> out;
    std::vector<Chord> cur{must};
    std::function<void(std::size_t)> go = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == d) {
            std::vector<Chord> s(cur);
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            return;
        }
        for (std::size_t i = start; i < rest.size(); ++i) {
            bool ok = true;
            for (std::size_t k = 1; k < cur.size() && ok; ++k) ok = chords_disjoint(cur[k], rest[i]);
            if (!ok) continue;
            cur.push_back(rest[i]);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<Chord>> disjoint_sibling_collections(Degree d, const Chord& c) {
    auto cands = sibling_candidates(d, c);
    return disjoint_completions(d.value(), c, std::vector<Chord>(cands.begin(), cands.end()));
}

std::optional<std::vector<Chord>> realized_sibling_collection(const Lamination& lam, const Chord& c) {
    const Degree d = lam.degree();
    std::vector<Chord> present;
    for (const auto& x : sibling_candidates(d, c))
        if (lam.contains(x)) present.push_back(x);
    auto all = disjoint_completions(d.value(), c, present);
    if (all.empty()) return std::nullopt;
    return all.front();
}

SiblingReport check_sibling_invariance(const Lamination& lam) {
    SiblingReport r;
    const Degree d = lam.degree();
    const auto depth = lam.depth_truncation();
    std::set<Chord> has_pullback;
    for (const auto& c : lam.leaves()) {
        Chord img = sigma(d, c);
        if (img.degenerate()) continue;
        if (lam.contains(img))
            has_pullback.insert(img);
        else
            r.missing_images.push_back(c);
    }
    for (const auto& c : lam.leaves()) {
        if (depth && lam.generation(c) >= *depth) {
            ++r.waived;
            continue;
        }
        if (!has_pullback.count(c)) r.missing_pullbacks.push_back(c);
        if (!is_critical(d, c) && !realized_sibling_collection(lam, c)) r.missing_siblings.push_back(c);
    }
    r.ok = r.missing_images.empty() && r.missing_pullbacks.empty() && r.missing_siblings.empty();
    return r;
}

EquivalencePartition equiv_classes(const Lamination& lam) {
    auto pts = lam.endpoints();
    std::vector<std::size_t> parent(pts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index = [&](const Angle& a) {
        return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), a) - pts.begin());
    };
    for (const auto& c : lam.leaves()) {
        std::size_t a = find(index(c.lo())), b = find(index(c.hi()));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::vector<Angle>> groups;
    for (std::size_t i = 0; i < pts.size(); ++i) groups[find(i)].push_back(pts[i]);
    EquivalencePartition out;
    for (auto& [_, g] : groups) out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Angle> endpoint_star(const Lamination& lam, const Angle& v) { return lam.partners(v); }

bool is_periodic_angle(Degree d, const Angle& a) {
    BigInt q = a.denominator();
    return boost::multiprecision::gcd(q, BigInt(d.value())) == 1;
}

ProperReport is_proper(const Lamination& lam) {
    ProperReport r;
    const Degree d = lam.degree();
    for (const auto& c : lam.leaves()) {
        if (!is_critical(d, c)) continue;
        for (const Angle& v : {c.lo(), c.hi()})
            if (is_periodic_angle(d, v)) {
                r.proper = false;
                r.witness = ProperWitness{ProperWitness::Kind::critical_leaf, v, {c}};
                return r;
            }
    }
    for (const auto& v : lam.endpoints()) {
        if (!is_periodic_angle(d, v)) continue;
        auto ps = lam.partners(v);
        std::map<Angle, Angle> seen;
        for (const auto& w : ps) {
            Angle img = sigma(d, w);
            auto [it, fresh] = seen.emplace(img, w);
            if (!fresh) {
                r.proper = false;
                r.witness = ProperWitness{ProperWitness::Kind::critical_wedge, v, {Chord(v, it->second), Chord(v, w)}};
                return r;
            }
        }
    }
    return r;
}

std::string to_string(IsolationClass c) {
    switch (c) {
        case IsolationClass::two_sided: return "two-sided-approximated";
        case IsolationClass::one_sided: return "one-sided";
        case IsolationClass::isolated: return "isolated-at-this-depth";
    }
    return "?";
}

IsolationClass isolated_leaf_diagnostic(const Lamination& lam, const Chord& leaf, const Rational& eps) {
    if (!lam.contains(leaf)) throw Error("leaf " + leaf.str() + " is not in the lamination");
    std::vector<Angle> mine{leaf.lo(), leaf.hi()};
    bool inside = false, outside = false;
    for (const auto& m : lam.leaves()) {
        if (m == leaf) continue;
        if (hausdorff_distance(mine, {m.lo(), m.hi()}) > eps) continue;
        // side = hole (lo,hi) or (hi,lo) holding the endpoints of m
        bool in = between_closed(leaf.lo(), m.lo(), leaf.hi()) && between_closed(leaf.lo(), m.hi(), leaf.hi());
        (in ? inside : outside) = true;
        if (inside && outside) break;
    }
    if (inside && outside) return IsolationClass::two_sided;
    if (inside || outside) return IsolationClass::one_sided;
    return IsolationClass::isolated;
}

}  // namespace lamina
