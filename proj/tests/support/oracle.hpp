#pragma once

// Brute-force reference implementations. They share nothing with the library
// except boost::multiprecision, so a bug in lamina's fast paths cannot hide
// behind an identical bug here.

#include <algorithm>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;

inline Q frac(const Q& x) {
    Z n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
    Z r = n % d;
    if (r < 0) r += d;
    return Q(r, d);
}

inline Q sigma(int d, const Q& x) { return frac(x * d); }

inline Q sigma_iter(int d, Q x, int k) {
    while (k-- > 0) x = sigma(d, x);
    return x;
}

// exact period of x, or 0 when x is strictly preperiodic
inline int period(int d, const Q& x) {
    std::vector<Q> seen{x};
    Q y = x;
    for (;;) {
        y = sigma(d, y);
        if (y == x) return static_cast<int>(seen.size());
        if (std::find(seen.begin(), seen.end(), y) != seen.end()) return 0;
        seen.push_back(y);
    }
}

inline std::vector<Q> preimages(int d, const Q& x) {
    std::vector<Q> out;
    for (int i = 0; i < d; ++i) out.push_back((x + i) / d);
    return out;
}

// strictly inside the open arc running counterclockwise from a to b
inline bool inside(const Q& a, const Q& x, const Q& b) {
    if (a < b) return a < x && x < b;
    return x > a || x < b;
}

// endpoints strictly alternate
inline bool linked(const Q& a, const Q& b, const Q& c, const Q& e) {
    if (a == c || a == e || b == c || b == e) return false;
    return inside(a, c, b) != inside(a, e, b);
}

inline bool critical(int d, const Q& a, const Q& b) { return a != b && sigma(d, a) == sigma(d, b); }

// closed convex hulls of two finite circle sets meet
inline bool hulls_meet(const std::vector<Q>& p, const std::vector<Q>& q) {
    std::set<Q> sp(p.begin(), p.end());
    for (const auto& x : q)
        if (sp.count(x)) return true;
    // hulls meet iff some edges cross or one vertex set is not contained in a
    // single hole of the other
    auto in_one_hole = [](std::vector<Q> a, const std::vector<Q>& b) {
        std::sort(a.begin(), a.end());
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Q& lo = a[i];
            const Q& hi = a[(i + 1) % a.size()];
            bool all = true;
            for (const auto& x : b)
                if (a.size() == 1 ? x == lo : !inside(lo, x, hi)) all = false;
            if (all) return true;
        }
        return false;
    };
    if (p.size() == 1 && q.size() == 1) return false;
    if (p.size() == 1) return !in_one_hole(q, p);
    if (q.size() == 1) return !in_one_hole(p, q);
    return !in_one_hole(p, q) || !in_one_hole(q, p);
}

// distance on R/Z
inline Q circle_dist(const Q& a, const Q& b) {
    Q t = frac(a - b);
    return t > Q(1, 2) ? 1 - t : t;
}

// Hausdorff distance of two finite point sets on the circle
inline Q hausdorff(const std::vector<Q>& p, const std::vector<Q>& q) {
    auto one_way = [](const std::vector<Q>& a, const std::vector<Q>& b) {
        Q worst = 0;
        for (const auto& x : a) {
            Q best = 1;
            for (const auto& y : b) best = std::min(best, circle_dist(x, y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_way(p, q), one_way(q, p));
}

// Relative interiors of the hulls are disjoint: equal sets never are;
// otherwise q sits in one closed arc between neighbouring vertices of p.
inline bool interiors_apart(std::vector<Q> p, std::vector<Q> q) {
    std::sort(p.begin(), p.end());
    std::sort(q.begin(), q.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    if (p == q) return false;
    if (p.size() == 1 || q.size() == 1) return true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Q& lo = p[i];
        const Q& hi = p[(i + 1) % p.size()];
        bool all = true;
        for (const auto& x : q)
            if (!(x == lo || x == hi || inside(lo, x, hi))) all = false;
        if (all) return true;
    }
    return false;
}

}  // namespace oracle
