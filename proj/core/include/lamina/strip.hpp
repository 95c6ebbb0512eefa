#pragma once

#include <array>
#include <optional>
#include <string>

#include "lamina/geometry.hpp"

namespace lamina {

// Closed region between two disjoint chords: the chords plus the two circle
// arcs joining them.
struct Strip {
    Chord a;
    Chord b;
    std::array<Arc, 2> arcs;  // closed arcs [from, to]

    Rational width() const { return arcs[0].length() + arcs[1].length(); }
    bool is_corner(const Angle& x) const { return a.has_endpoint(x) || b.has_endpoint(x); }
};
Strip make_strip(const Chord& a, const Chord& b);

enum class StripPosition {
    outside,
    boundary,      // one of the two bounding chords
    corner,        // inside the closed strip with an endpoint at a corner
    inside_same,   // both endpoints inside one open arc
    inside_split,  // endpoints in different open arcs: separates a from b
};
StripPosition strip_position(const Strip& s, const Chord& c);
std::string to_string(StripPosition p);

struct CentralStrip {
    Chord leaf;
    Chord sibling;
    std::array<Arc, 2> strip_arcs;
};
// leaf and its translate by 1/2; needs 1/3 <= length < 1/2
CentralStrip central_strip(const Chord& leaf);

struct StripVerdict {
    enum class Kind { never_enters, enters, boundary_hit } kind = Kind::never_enters;
    int step = 0;
    bool separates = false;  // for enters
    std::optional<Chord> image;
    std::string str() const;
};
StripVerdict central_strip_analyze(const Chord& leaf);

// The forward orbit of the leaf together with the sibling is pairwise unlinked,
// as it is for any leaf of a quadratic invariant lamination.
bool central_strip_admissible(const Chord& leaf);

struct CentralStripSweep {
    int max_denominator = 0;
    std::size_t leaves = 0;
    std::size_t never_enters = 0;
    std::size_t boundary_hits = 0;
    std::size_t separating = 0;
    std::size_t non_separating_raw = 0;   // before the admissibility filter
    std::size_t counterexamples = 0;      // admissible and non-separating
    std::optional<Chord> first_counterexample;
    std::optional<Chord> first_raw_non_separating;
};
// every chord {i/q, j/q}, q <= max_den, counted once by its reduced form
CentralStripSweep central_strip_sweep(int max_den);

// The cubic configuration where a periodic leaf enters a strip without
// separating its boundary chords.
struct CubicStripExample {
    Chord m, m_sibling, n, n_sibling, image_of_m;
    int period = 0;
    int steps_m_to_n = 0;
    Rational narrow_width, wide_width;
    StripPosition image_in_wide;
    StripPosition image_in_narrow;
};
// sibling of c with the narrowest strip among its disjoint sibling collections
Chord narrowest_strip_sibling(Degree d, const Chord& c);
CubicStripExample cubic_strip_example();

}  // namespace lamina
