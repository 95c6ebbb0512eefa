#pragma once

#include <utility>
#include <vector>

#include "lamina/lamination.hpp"

namespace lamina {

// d-1 pairwise unlinked critical chords with no loops.
class FullCriticalCollection {
public:
    FullCriticalCollection(Degree d, std::vector<Chord> chords);

    Degree degree() const { return degree_; }
    const std::vector<Chord>& chords() const { return chords_; }

    // Branch of a point: the complementary region owning the half-open arc
    // [e_i, e_{i+1}) between consecutive chord endpoints that contains it.
    int branch_of(const Angle& a) const;
    // the d preimages of a sorted by branch id, one per branch
    std::vector<std::pair<int, Angle>> branch_inverse(const Angle& a) const;
    // chord joining the branch-b preimages of both endpoints, for each b
    std::vector<Chord> branch_pullbacks(const Chord& c) const;

private:
    Degree degree_;
    std::vector<Chord> chords_;
    std::vector<Angle> cuts_;     // sorted distinct endpoints
    std::vector<int> arc_branch_; // branch owning [cuts_[i], cuts_[i+1])
};

std::vector<std::pair<int, Angle>> branch_inverse(const FullCriticalCollection& fcc, const Angle& a);

struct PullbackOptions {
    // put the critical chords in the output as leaves
    bool include_critical_chords = true;
};

struct PullbackDiscard {
    int step;
    Chord candidate;
    Chord blocker;
};

struct PullbackLog {
    std::vector<PullbackDiscard> discards;
    std::vector<std::size_t> added_per_step;
};

Lamination pullback_generate(const FullCriticalCollection& fcc, const Lamination& seed, int depth,
                             const PullbackOptions& opts = {}, PullbackLog* log = nullptr);

}  // namespace lamina
