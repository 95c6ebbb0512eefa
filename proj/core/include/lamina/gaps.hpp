#pragma once

#include <vector>

#include "lamina/lamination.hpp"

namespace lamina {

// One face of the disk cut along the leaves. `boundary` is the hull of the
// vertices; `arcs` are the open circle arcs on the face boundary.
struct Gap {
    Polygon boundary;
    std::vector<Chord> incident_leaves;
    std::vector<Arc> arcs;
    bool is_outer_truncation_artifact = false;

    bool whole_disk() const { return boundary.empty(); }
};

// faces ordered by boundary polygon, then by first arc
std::vector<Gap> gaps(const Lamination& lam);

int gap_degree(Degree d, const Polygon& boundary);
int gap_degree(Degree d, const Gap& g);

}  // namespace lamina
