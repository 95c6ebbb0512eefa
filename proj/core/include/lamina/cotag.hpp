#pragma once

#include <string>
#include <vector>

#include "lamina/geometry.hpp"

namespace lamina {

// Cubic critical sets of degree two: a critical leaf or a polygon mapping
// two-to-one onto its image.

struct AdmissibilityReport {
    bool ok = true;
    std::string failure;  // first failed condition
};
AdmissibilityReport check_admissible(const Polygon& critical_set);

// hull of the points outside the set whose images are images of its vertices
Polygon cocritical_set(const Polygon& critical_set);

// add k/3 to every vertex
Polygon rotate_third(const Polygon& p, int k);
Polygon reconstruct_from_cocritical(const Polygon& s);

struct CoTag {
    Polygon first;
    Polygon second;
    std::string str() const;
    friend bool operator==(const CoTag&, const CoTag&) = default;
};
CoTag cotag(const Polygon& c1, const Polygon& c2);

enum class TagRelation { disjoint, equal, overlap };
std::string to_string(TagRelation r);
TagRelation tags_relation(const CoTag& t1, const CoTag& t2);

struct UscReport {
    bool pass = true;
    bool limit_meets_target = false;
    std::string message;
    std::vector<Rational> first_distances;   // Hausdorff distance of each term to the limit
    std::vector<Rational> second_distances;
};
// tolerance bounds the distance of the last term to the limit
UscReport usc_witness_check(const std::vector<CoTag>& sequence, const CoTag& limit, const CoTag& target,
                            const Rational& tolerance);

}  // namespace lamina
