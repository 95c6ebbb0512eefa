#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/accordion.hpp"
#include "lamina/pullback.hpp"

namespace lamina {

// A critical set of a portrait: a critical leaf (2 vertices) or a collapsing
// quadrilateral (4 vertices).
struct CriticalItem {
    Polygon set;

    bool is_quad() const { return set.size() == 4; }
    bool is_leaf() const { return set.size() == 2; }
    // the leaf itself, or both critical diagonals of the quad
    std::vector<Chord> critical_chords() const;
    std::string str() const;
    friend bool operator==(const CriticalItem&, const CriticalItem&) = default;
};

bool is_collapsing_quad(Degree d, const Polygon& p);

struct QCPortrait {
    Degree degree;
    std::vector<CriticalItem> items;
};

struct PortraitReport {
    bool valid = true;
    std::vector<std::string> problems;
    std::vector<std::string> warnings;
};
PortraitReport validate_portrait(const QCPortrait& p);

std::vector<FullCriticalCollection> full_collections(const QCPortrait& p);

bool compatible(const CriticalItem& a, const CriticalItem& b);

enum class IndexRelation { strongly_linked, compatible, incompatible };
enum class Linkage { linked, essentially_equal, neither };
std::string to_string(IndexRelation r);
std::string to_string(Linkage l);

struct LinkageVerdict {
    Linkage relation = Linkage::neither;
    std::vector<IndexRelation> per_index;
};
LinkageVerdict linkage_verdict(const QCPortrait& p1, const QCPortrait& p2);

// Picks one critical chord of each set of p2 unlinked with `leaf`.
// With `avoid`, chords ending at that endpoint of the leaf are skipped when
// another admissible choice exists.
FullCriticalCollection smart_critical_collection(const Chord& leaf, const QCPortrait* p1, const QCPortrait& p2,
                                                 std::optional<Angle> avoid = std::nullopt);

// chords of fcc joining a to x, all endpoints inside the positive arc [a,x]
std::optional<std::vector<Chord>> critical_chain(const FullCriticalCollection& fcc, const Angle& a, const Angle& x);

// Leaves forced by the portrait: quad edges, critical leaves, and the forward
// orbits of their images.
std::vector<Chord> portrait_seed(const QCPortrait& p);
// seed leaves pairwise unlinked and unlinked with every quad diagonal
bool portrait_consistent(const QCPortrait& p);
// depth-n pullback of the portrait seed; quads stay gaps (no diagonals)
Lamination portrait_lamination(const QCPortrait& p, int depth, PullbackLog* log = nullptr);

// d-1 disjoint open arcs of length 1/d fit in the complement of the points
bool leaves_room_for_arcs(Degree d, const std::vector<Angle>& points);
// sigma is monotone (repeats allowed only between neighbours) on the points
bool weakly_monotone(Degree d, const std::vector<Angle>& points);
// all points lie in the closure of a single complementary region of fcc
bool in_one_closed_region(const FullCriticalCollection& fcc, const std::vector<Angle>& points);

}  // namespace lamina
