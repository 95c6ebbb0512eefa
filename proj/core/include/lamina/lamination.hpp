#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lamina/geometry.hpp"

namespace lamina {

// Finite set of non-degenerate chords. Leaves are kept in canonical order and
// indexed by endpoint so crossing queries only scan the shorter side.
class Lamination {
public:
    explicit Lamination(Degree d) : degree_(d) {}
    Lamination(Degree d, const std::vector<Chord>& leaves, std::optional<int> depth = std::nullopt);

    Degree degree() const { return degree_; }
    const std::set<Chord>& leaves() const { return leaves_; }
    std::size_t size() const { return leaves_.size(); }
    bool empty() const { return leaves_.empty(); }
    bool contains(const Chord& c) const { return leaves_.count(c) > 0; }

    std::optional<int> depth_truncation() const { return depth_; }
    void set_depth_truncation(std::optional<int> n) { depth_ = n; }

    // step at which a leaf first appeared; 0 for seed data or when unknown
    int generation(const Chord& c) const;
    bool has_generation_data() const { return !generation_.empty(); }
    void set_generation(const Chord& c, int g);

    // returns false if already present; does not check crossings
    bool insert(const Chord& c);
    // some leaf linked with c, if any
    std::optional<Chord> first_crossing(const Chord& c) const;
    std::vector<Chord> crossings(const Chord& c) const;
    // sorted second endpoints of leaves at v
    std::vector<Angle> partners(const Angle& v) const;
    std::vector<Angle> endpoints() const;

    friend bool operator==(const Lamination& a, const Lamination& b) {
        return a.degree_ == b.degree_ && a.leaves_ == b.leaves_ && a.depth_ == b.depth_;
    }

private:
    Degree degree_;
    std::set<Chord> leaves_;
    std::map<Angle, std::vector<Angle>> star_;
    std::map<Chord, int> generation_;
    std::optional<int> depth_;

    template <class F>
    void scan_crossings(const Chord& c, F&& f) const;
};

struct ValidationReport {
    bool valid = true;
    std::optional<std::pair<Chord, Chord>> crossing;
    std::vector<Chord> degenerate;
    std::vector<Chord> missing_images;
};
ValidationReport validate(const Lamination& lam);

std::set<Chord> sibling_candidates(Degree d, const Chord& c);
std::vector<std::vector<Chord>> disjoint_sibling_collections(Degree d, const Chord& c);
// two chords are disjoint in the closed disk
bool chords_disjoint(const Chord& a, const Chord& b);

struct SiblingReport {
    bool ok = true;
    std::vector<Chord> missing_images;     // condition (1)
    std::vector<Chord> missing_pullbacks;  // condition (2)
    std::vector<Chord> missing_siblings;   // condition (3)
    std::size_t waived = 0;                // leaves from the last generation
};
SiblingReport check_sibling_invariance(const Lamination& lam);
// lexicographically first full disjoint sibling collection of c inside lam
std::optional<std::vector<Chord>> realized_sibling_collection(const Lamination& lam, const Chord& c);

using EquivalencePartition = std::vector<std::vector<Angle>>;
EquivalencePartition equiv_classes(const Lamination& lam);

std::vector<Angle> endpoint_star(const Lamination& lam, const Angle& v);

bool is_periodic_angle(Degree d, const Angle& a);

struct ProperWitness {
    enum class Kind { critical_leaf, critical_wedge } kind;
    Angle vertex;
    std::vector<Chord> leaves;
};
struct ProperReport {
    bool proper = true;
    std::optional<ProperWitness> witness;
};
ProperReport is_proper(const Lamination& lam);

enum class IsolationClass { two_sided, one_sided, isolated };
std::string to_string(IsolationClass c);
IsolationClass isolated_leaf_diagnostic(const Lamination& lam, const Chord& leaf, const Rational& eps);

}  // namespace lamina
