#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/angle.hpp"

namespace lamina {

// Unordered pair of angles, stored lesser endpoint first.
class Chord {
public:
    Chord() = default;
    Chord(Angle a, Angle b);

    const Angle& lo() const { return lo_; }
    const Angle& hi() const { return hi_; }
    bool degenerate() const { return lo_ == hi_; }
    bool has_endpoint(const Angle& x) const { return lo_ == x || hi_ == x; }
    // endpoint other than x; x must be an endpoint
    const Angle& other(const Angle& x) const { return lo_ == x ? hi_ : lo_; }
    std::string str() const;

    friend bool operator==(const Chord&, const Chord&) = default;
    friend auto operator<=>(const Chord&, const Chord&) = default;

private:
    Angle lo_;
    Angle hi_;
};

// Open positively oriented arc (from, to). With full set, the whole circle
// minus the point `from`.
struct Arc {
    Angle from;
    Angle to;
    bool full = false;

    Rational length() const;
    std::string str() const;
    friend bool operator==(const Arc&, const Arc&) = default;
};

// Convex hull of finitely many distinct angles, listed increasingly.
class Polygon {
public:
    Polygon() = default;
    explicit Polygon(std::vector<Angle> vertices);  // hull of the given points
    explicit Polygon(const Chord& c);

    const std::vector<Angle>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    bool is_point() const { return v_.size() == 1; }
    bool is_chord() const { return v_.size() == 2; }
    bool contains_vertex(const Angle& a) const;
    Chord as_chord() const;
    // cyclic edges; a 2-gon has the single edge, a point has none
    std::vector<Chord> edges() const;
    std::string str() const;

    friend bool operator==(const Polygon&, const Polygon&) = default;
    friend auto operator<=>(const Polygon&, const Polygon&) = default;

private:
    std::vector<Angle> v_;
};

enum class PairRelation { equal, disjoint, touching, linked };
std::string to_string(PairRelation r);

Angle sigma(Degree d, const Angle& a);
Chord sigma(Degree d, const Chord& c);
Angle sigma_iter(Degree d, const Angle& a, int k);
Chord sigma_iter(Degree d, const Chord& c, int k);

bool in_arc(const Arc& arc, const Angle& x);
// x strictly inside the open positive arc (a,b); a == b means circle minus a
bool between(const Angle& a, const Angle& x, const Angle& b);
// x in the closed arc [a,b]
bool between_closed(const Angle& a, const Angle& x, const Angle& b);
// a, b, c distinct and positively ordered
bool positively_ordered(const Angle& a, const Angle& b, const Angle& c);

PairRelation classify_pair(const Chord& c1, const Chord& c2);
// total predicate: degenerate chords are never linked
bool linked(const Chord& c1, const Chord& c2);
bool is_critical(Degree d, const Chord& c);
Rational leaf_length(const Chord& c);

Polygon convex_hull(const std::vector<Angle>& points);
Polygon sigma_hull(Degree d, const Polygon& p);
bool strongly_linked(const Polygon& p, const Polygon& q);
std::vector<Arc> holes(const Polygon& p);
// hole of the chord c that contains x (x must not be an endpoint)
Arc hole_containing(const Chord& c, const Angle& x);

// Closed convex sets meet: shared vertex, crossing edges, or a vertex of one
// inside the other.
bool hulls_intersect(const Polygon& p, const Polygon& q);
// Relative interiors are disjoint (points count as their own interior).
bool interiors_disjoint(const Polygon& p, const Polygon& q);
// every vertex of q lies in the closed arc on the far side of some edge of p
// (or of p itself when p is a chord)
bool lies_beyond_edge(const Polygon& p, const Polygon& q);

// Descent count of the images of an increasing list: a map on a finite set
// is circular-order preserving iff it is injective with at most one descent.
bool order_preserving(Degree d, const std::vector<Angle>& increasing);
// first triple (a,b,c) positively ordered whose images are not, if any
std::optional<std::vector<Angle>> order_violation(Degree d, const std::vector<Angle>& points);

// Hausdorff distance between finite vertex sets in the arc metric.
Rational hausdorff_distance(const std::vector<Angle>& a, const std::vector<Angle>& b);

}  // namespace lamina

template <>
struct std::hash<lamina::Chord> {
    std::size_t operator()(const lamina::Chord& c) const noexcept {
        std::size_t h = c.lo().hash();
        return h ^ (c.hi().hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
