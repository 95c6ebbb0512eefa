#include "lamina/pullback.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace lamina {

FullCriticalCollection::FullCriticalCollection(Degree d, std::vector<Chord> chords)
    : degree_(d), chords_(std::move(chords)) {
    const int n = d.value();
    if (static_cast<int>(chords_.size()) != n - 1)
        throw Error("a full critical collection for degree " + std::to_string(n) + " needs " + std::to_string(n - 1) +
                    " chords");
    std::sort(chords_.begin(), chords_.end());
    for (std::size_t i = 0; i < chords_.size(); ++i) {
        if (!is_critical(d, chords_[i])) throw Error("chord " + chords_[i].str() + " is not critical");
        if (i && chords_[i] == chords_[i - 1]) throw Error("repeated critical chord " + chords_[i].str());
        for (std::size_t j = 0; j < i; ++j)
            if (linked(chords_[i], chords_[j]))
                throw Error("critical chords " + chords_[j].str() + " and " + chords_[i].str() + " cross");
    }

    for (const auto& c : chords_) {
        cuts_.push_back(c.lo());
        cuts_.push_back(c.hi());
    }
    std::sort(cuts_.begin(), cuts_.end());
    cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());

    // loops: union-find over endpoints
    std::vector<std::size_t> parent(cuts_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto idx = [&](const Angle& a) {
        return static_cast<std::size_t>(std::lower_bound(cuts_.begin(), cuts_.end(), a) - cuts_.begin());
    };
    for (const auto& c : chords_) {
        std::size_t a = find(idx(c.lo())), b = find(idx(c.hi()));
        if (a == b) throw Error("critical chords form a loop");
        parent[a] = b;
    }

    // elementary arcs [cuts_i, cuts_{i+1}) grouped by the chords separating them
    const std::size_t m = cuts_.size();
    std::vector<Angle> mids;
    for (std::size_t i = 0; i < m; ++i) {
        const Angle& a = cuts_[i];
        const Angle& b = cuts_[(i + 1) % m];
        Rational len = arc_length(a, b);
        if (m == 1) len = 1;
        mids.push_back(a.plus(Angle::from_rational(len / 2)));
    }
    std::vector<int> region(m, -1);
    int regions = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (region[i] >= 0) continue;
        for (std::size_t j = i; j < m; ++j) {
            if (region[j] >= 0) continue;
            bool same = true;
            for (const auto& c : chords_)
                if (between(c.lo(), mids[i], c.hi()) != between(c.lo(), mids[j], c.hi())) {
                    same = false;
                    break;
                }
            if (same) region[j] = regions;
        }
        ++regions;
    }
    if (regions != n) throw Error("critical chords do not cut the disk into " + std::to_string(n) + " regions");

    // number regions by least angle; the arc holding 0 gives its region least angle 0
    std::vector<std::optional<Angle>> least(regions);
    for (std::size_t i = 0; i < m; ++i) {
        bool holds_zero = i + 1 == m && !cuts_.front().is_zero();
        Angle key = holds_zero ? Angle() : cuts_[i];
        auto& slot = least[region[i]];
        if (!slot || key < *slot) slot = key;
    }
    std::vector<int> order(regions);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return *least[a] < *least[b]; });
    std::vector<int> rank(regions);
    for (int r = 0; r < regions; ++r) rank[order[r]] = r;
    arc_branch_.resize(m);
    for (std::size_t i = 0; i < m; ++i) arc_branch_[i] = rank[region[i]];
}

int FullCriticalCollection::branch_of(const Angle& a) const {
    // last cut <= a; wrap to the final arc when a precedes every cut
    auto it = std::upper_bound(cuts_.begin(), cuts_.end(), a);
    std::size_t i = it == cuts_.begin() ? cuts_.size() - 1 : static_cast<std::size_t>(it - cuts_.begin()) - 1;
    return arc_branch_[i];
}

std::vector<std::pair<int, Angle>> FullCriticalCollection::branch_inverse(const Angle& a) const {
    const int n = degree_.value();
    std::vector<std::pair<int, Angle>> out;
    for (int i = 0; i < n; ++i) {
        Angle p = a.preimage(n, i);
        out.emplace_back(branch_of(p), p);
    }
    std::sort(out.begin(), out.end());
    for (int i = 0; i < n; ++i)
        if (out[i].first != i) throw Error("preimages of " + a.str() + " do not split one per branch");
    return out;
}

std::vector<Chord> FullCriticalCollection::branch_pullbacks(const Chord& c) const {
    auto a = branch_inverse(c.lo());
    auto b = branch_inverse(c.hi());
    std::vector<Chord> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(a[i].second, b[i].second);
    return out;
}

std::vector<std::pair<int, Angle>> branch_inverse(const FullCriticalCollection& fcc, const Angle& a) {
    return fcc.branch_inverse(a);
}

Lamination pullback_generate(const FullCriticalCollection& fcc, const Lamination& seed, int depth,
                             const PullbackOptions& opts, PullbackLog* log) {
    if (depth < 0) throw Error("negative depth");
    if (seed.degree() != fcc.degree()) throw Error("seed and critical data have different degrees");
    for (const auto& c : fcc.chords())
        if (seed.first_crossing(c)) throw Error("seed incompatible with critical data");

    Lamination lam(fcc.degree());
    std::vector<Chord> frontier;
    for (const auto& c : seed.leaves())
        if (lam.insert(c)) frontier.push_back(c);
    if (opts.include_critical_chords)
        for (const auto& c : fcc.chords())
            if (lam.insert(c)) frontier.push_back(c);
    for (const auto& c : frontier) lam.set_generation(c, 0);
    std::sort(frontier.begin(), frontier.end());

    for (int step = 1; step <= depth; ++step) {
        std::vector<Chord> next;
        for (const auto& leaf : frontier) {
            for (const auto& cand : fcc.branch_pullbacks(leaf)) {
                if (lam.contains(cand)) continue;
                if (auto blocker = lam.first_crossing(cand)) {
                    if (log) log->discards.push_back({step, cand, *blocker});
                    continue;
                }
                lam.insert(cand);
                lam.set_generation(cand, step);
                next.push_back(cand);
            }
        }
        if (log) log->added_per_step.push_back(next.size());
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    lam.set_depth_truncation(depth);
    return lam;
}

}  // namespace lamina
