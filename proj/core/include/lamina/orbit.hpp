#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/lamination.hpp"

namespace lamina {

// orbit holds preperiod + period + 1 entries; the last repeats orbit[preperiod]
template <class T>
struct OrbitInfo {
    int preperiod = 0;
    int period = 1;
    std::vector<T> orbit;

    bool periodic() const { return preperiod == 0; }
    std::size_t distinct() const { return static_cast<std::size_t>(preperiod + period); }
    // k-th iterate, following the cycle past the stored range
    const T& at(long k) const {
        if (k < preperiod + period) return orbit[static_cast<std::size_t>(k)];
        return orbit[static_cast<std::size_t>(preperiod + (k - preperiod) % period)];
    }
};

OrbitInfo<Angle> angle_orbit(Degree d, const Angle& a);
OrbitInfo<Polygon> polygon_orbit(Degree d, const Polygon& p);

struct LeafOrbit : OrbitInfo<Chord> {
    std::optional<int> self_link_step;  // first k with orbit[k] linked to an earlier image
    std::optional<int> collapse_step;   // first k with a degenerate image
    bool pairwise_unlinked = true;
};
LeafOrbit leaf_orbit(Degree d, const Chord& c);

// Components of the union of a periodic leaf orbit.
std::vector<Polygon> periodic_components(Degree d, const Chord& c);

struct GapTransitivity {
    int period = 0;                            // of the gap under sigma_hull
    std::vector<std::vector<Angle>> orbits;    // vertex orbits of the remap
    bool fixed_dgon = false;                   // d-gon whose remap fixes every vertex
    bool transitive() const { return orbits.size() == 1; }
    // at most d-1 orbits, or the fixed d-gon exception
    bool consistent = true;
};
GapTransitivity check_gap_transitivity(Degree d, const Polygon& g);

struct WanderingVerdict {
    enum class Kind { collision, periodic } kind;
    int step = 0;     // collision index, or start of the cycle
    int period = 0;   // cycle length for periodic
    int met = -1;     // earlier image hit by the collision (-1 for a collapse)
    std::string str() const;
};
WanderingVerdict wandering_check(Degree d, const Polygon& p);

// Wedges of leaves at a common vertex whose three endpoint images are distinct
// must keep their circular order. Returns the first offending pair.
std::optional<std::pair<Chord, Chord>> wedge_order_violation(const Lamination& lam);

}  // namespace lamina
