#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lamina/cotag.hpp"
#include "lamina/portrait.hpp"
#include "lamina/pullback.hpp"

namespace fixtures {

using namespace lamina;

Angle ang(const char* s);
Chord ch(const char* a, const char* b);
Polygon poly(std::initializer_list<const char*> vs);

// forward orbits of every edge of every polygon, as a lamination
Lamination orbit_seed(Degree d, const std::vector<Polygon>& polys);

struct PullbackFixture {
    std::string name;
    FullCriticalCollection fcc;
    Lamination seed;
};

// Critical data is searched for, not hand-typed: the first critical chords on
// a fine grid that avoid the seed and give a discard-free depth-3 pullback.
PullbackFixture make_fixture(std::string name, Degree d, const std::vector<Polygon>& polys);

// seeded by the invariant leaf {1/3,2/3}, the rabbit and airplane orbits,
// rotation gaps of periods 4..6, ...
const std::vector<PullbackFixture>& quadratic_fixtures();
// flipping leaves and rotating triangles of sigma_3
const std::vector<PullbackFixture>& cubic_fixtures();

// all cubic critical leaves and collapsing quadrilaterals with vertices in (1/n)Z,
// quadrilaterals first
std::vector<CriticalItem> cubic_items(int n);
// ordered pairs of those items forming a consistent portrait
std::vector<QCPortrait> cubic_portraits(int n);

// linked pairs whose index-0 sets are both quadrilaterals, in enumeration order
std::vector<std::pair<QCPortrait, QCPortrait>> linked_cubic_pairs(int n, std::size_t count);

// Bicritical portfolio: disjoint critical sets, proper portrait lamination,
// one portrait per lamination (greedy, pairwise neither linked nor
// essentially equal).
struct TaggedPortrait {
    QCPortrait portrait;
    CoTag tag;
};
std::vector<TaggedPortrait> bicritical_candidates(int n);
std::vector<TaggedPortrait> one_per_lamination(const std::vector<TaggedPortrait>& candidates);

// every admissible cubic critical set with vertices in (1/n)Z
std::vector<Polygon> admissible_sets(int n);

}  // namespace fixtures
