#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/lamination.hpp"
#include "lamina/orbit.hpp"

namespace lamina {

struct Accordion {
    Chord axis;
    std::vector<Chord> members;  // sorted, includes the axis
    std::vector<Angle> vertices() const;
};

Accordion accordion_vs_lamination(const Lamination& lam2, const Chord& axis);
Accordion orbit_accordion(Degree d, const Chord& l2, const Chord& axis);
// same, with the forward orbit of l2 already computed
Accordion orbit_accordion(const LeafOrbit& orbit2, const Chord& axis);

struct OrderPreservingResult {
    bool ok = true;
    std::string reason;                 // empty when ok
    int direction = 0;                  // 1: accordions of l1 wrt l2; 2: the reverse
    std::optional<int> step;            // k of the offending accordion
    std::vector<Angle> vertex_set;      // its vertices
    std::vector<Angle> witness;         // triple (or pair) whose order breaks
};

// l1 has order preserving accordions with respect to the orbit of l2
OrderPreservingResult has_order_preserving_accordions(Degree d, const LeafOrbit& o1, const LeafOrbit& o2);
OrderPreservingResult mutually_order_preserving(Degree d, const Chord& l1, const Chord& l2);
OrderPreservingResult mutually_order_preserving(Degree d, const LeafOrbit& o1, const LeafOrbit& o2);

struct AccordionCase {
    int case_id = 0;
    // case 2
    int flip_power = 0;
    std::string flip_subcase;  // "swap" or "separated"
    // case 3
    int period = 0;
    // case 4
    int other_index = 0;
    std::string pattern;       // "A": x<a<y<=x'<b<y'<=x, "B": x<=y'<a<x'<=y<b
    // endpoints relabelled so that x < a < y < b
    Angle a, b, x, y;
    std::string str() const;
};
AccordionCase classify_accordion(Degree d, const Chord& la, const Chord& lx);
// skips the mutual order check (callers that already ran it)
AccordionCase classify_accordion_unchecked(Degree d, const Chord& la, const Chord& lx, const LeafOrbit& ox);

struct JointOrbitStructure {
    enum class Verdict { all_disjoint, periodic_structure } verdict = Verdict::all_disjoint;
    int r = -1;
    std::vector<Polygon> components;
    int vertex_orbits = 0;  // distinct vertex orbits of sigma^r(B)
    int vertex_period = 0;
    int preperiod_of_b = 0;
};
JointOrbitStructure joint_orbit_structure(Degree d, const Chord& la, const Chord& lx);
JointOrbitStructure joint_orbit_structure_unchecked(Degree d, const Chord& la, const Chord& lx);

// The points occur in this cyclic order going once around the circle.
// weak[i] allows pts[i] == pts[i+1] (indices taken cyclically).
bool circular_chain(const std::vector<Angle>& pts, const std::vector<bool>& weak);

// Chords on the boundary of one common face, ordered by the midpoints of
// their outward holes: +1 positively, -1 negatively circularly ordered, 0
// otherwise (or when they do not bound a common face).
int chord_circular_order(const std::vector<Chord>& chords);

}  // namespace lamina
