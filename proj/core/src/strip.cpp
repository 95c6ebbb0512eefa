#include "lamina/strip.hpp"

#include <numeric>
#include <set>

#include "lamina/lamination.hpp"
#include "lamina/orbit.hpp"

namespace lamina {

Strip make_strip(const Chord& a, const Chord& b) {
    if (!chords_disjoint(a, b)) throw Error("strip needs two disjoint chords");
    Arc ha = hole_containing(a, b.lo());
    Arc hb = hole_containing(b, a.lo());
    return Strip{a, b, {Arc{ha.from, hb.to}, Arc{hb.from, ha.to}}};
}

StripPosition strip_position(const Strip& s, const Chord& c) {
    if (c == s.a || c == s.b) return StripPosition::boundary;
    auto arc_of = [&](const Angle& x) -> int {
        for (int i = 0; i < 2; ++i)
            if (between_closed(s.arcs[i].from, x, s.arcs[i].to)) return i;
        return -1;
    };
    int i = arc_of(c.lo()), j = arc_of(c.hi());
    if (i < 0 || j < 0) return StripPosition::outside;
    if (s.is_corner(c.lo()) || s.is_corner(c.hi())) return StripPosition::corner;
    return i == j ? StripPosition::inside_same : StripPosition::inside_split;
}

std::string to_string(StripPosition p) {
    switch (p) {
        case StripPosition::outside: return "outside";
        case StripPosition::boundary: return "boundary";
        case StripPosition::corner: return "corner";
        case StripPosition::inside_same: return "inside-same-arc";
        case StripPosition::inside_split: return "inside-separating";
    }
    return "?";
}

CentralStrip central_strip(const Chord& leaf) {
    Rational len = leaf_length(leaf);
    if (len < Rational(1, 3) || len >= Rational(1, 2)) throw Error("length out of range");
    Angle half(1, 2);
    Chord sib(leaf.lo().plus(half), leaf.hi().plus(half));
    Strip s = make_strip(leaf, sib);
    return CentralStrip{leaf, sib, s.arcs};
}

std::string StripVerdict::str() const {
    switch (kind) {
        case Kind::never_enters: return "never-enters";
        case Kind::boundary_hit: return "boundary-hit at " + std::to_string(step);
        case Kind::enters:
            return "enters at " + std::to_string(step) + (separates ? " (separates)" : " (does not separate)");
    }
    return "?";
}

StripVerdict central_strip_analyze(const Chord& leaf) {
    CentralStrip cs = central_strip(leaf);
    Strip s{cs.leaf, cs.sibling, cs.strip_arcs};
    const Degree two(2);
    std::set<Chord> seen{leaf};
    Chord x = leaf;
    StripVerdict v;
    for (int k = 1;; ++k) {
        x = sigma(two, x);
        if (x.degenerate() || !seen.insert(x).second) return v;
        switch (strip_position(s, x)) {
            case StripPosition::outside: break;
            case StripPosition::boundary:
                if (x == cs.leaf) return v;
                [[fallthrough]];
            case StripPosition::corner:
                return StripVerdict{StripVerdict::Kind::boundary_hit, k, false, x};
            case StripPosition::inside_same:
                return StripVerdict{StripVerdict::Kind::enters, k, false, x};
            case StripPosition::inside_split:
                return StripVerdict{StripVerdict::Kind::enters, k, true, x};
        }
    }
}

bool central_strip_admissible(const Chord& leaf) {
    CentralStrip cs = central_strip(leaf);
    const Degree two(2);
    Lamination lam(two);
    lam.insert(cs.sibling);
    std::set<Chord> seen;
    Chord x = leaf;
    while (!x.degenerate() && seen.insert(x).second) {
        if (lam.first_crossing(x)) return false;
        lam.insert(x);
        x = sigma(two, x);
    }
    return true;
}

CentralStripSweep central_strip_sweep(int max_den) {
    CentralStripSweep r;
    r.max_denominator = max_den;
    for (int q = 2; q <= max_den; ++q) {
        for (int i = 0; i < q; ++i) {
            for (int j = i + 1; j < q; ++j) {
                if (std::gcd(std::gcd(i, j), q) != 1) continue;
                int gap = std::min(j - i, q - (j - i));
                if (3 * gap < q || 2 * gap >= q) continue;
                Chord c(Angle(i, q), Angle(j, q));
                ++r.leaves;
                StripVerdict v = central_strip_analyze(c);
                switch (v.kind) {
                    case StripVerdict::Kind::never_enters: ++r.never_enters; break;
                    case StripVerdict::Kind::boundary_hit: ++r.boundary_hits; break;
                    case StripVerdict::Kind::enters:
                        if (v.separates) {
                            ++r.separating;
                            break;
                        }
                        ++r.non_separating_raw;
                        if (!r.first_raw_non_separating) r.first_raw_non_separating = c;
                        if (central_strip_admissible(c)) {
                            ++r.counterexamples;
                            if (!r.first_counterexample) r.first_counterexample = c;
                        }
                        break;
                }
            }
        }
    }
    return r;
}

Chord narrowest_strip_sibling(Degree d, const Chord& c) {
    std::optional<Chord> best;
    Rational best_w;
    for (const auto& coll : disjoint_sibling_collections(d, c))
        for (const auto& s : coll) {
            if (s == c) continue;
            Rational w = make_strip(c, s).width();
            if (!best || w < best_w || (w == best_w && s < *best)) {
                best = s;
                best_w = w;
            }
        }
    if (!best) throw Error("no disjoint sibling for " + c.str());
    return *best;
}

CubicStripExample cubic_strip_example() {
    const Degree three(3);
    CubicStripExample f;
    f.m = Chord(Angle(342, 728), Angle(579, 728));
    f.period = leaf_orbit(three, f.m).period;
    f.steps_m_to_n = 4;
    f.n = sigma_iter(three, f.m, f.steps_m_to_n);
    f.m_sibling = narrowest_strip_sibling(three, f.m);
    f.n_sibling = narrowest_strip_sibling(three, f.n);
    f.image_of_m = sigma(three, f.m);
    Strip narrow = make_strip(f.m, f.m_sibling);
    Strip wide = make_strip(f.n, f.n_sibling);
    f.narrow_width = narrow.width();
    f.wide_width = wide.width();
    f.image_in_wide = strip_position(wide, f.image_of_m);
    f.image_in_narrow = strip_position(narrow, f.image_of_m);
    return f;
}

}  // namespace lamina
