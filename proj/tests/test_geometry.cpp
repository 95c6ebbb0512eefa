#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "lamina/geometry.hpp"
#include "oracle.hpp"

using namespace lamina;
using fixtures::ang;
using fixtures::ch;
using fixtures::poly;

TEST_CASE("angles are reduced mod 1") {
    CHECK(ang("2/6") == ang("1/3"));
    CHECK(ang("5/4") == ang("1/4"));
    CHECK(ang("-1/4") == ang("3/4"));
    CHECK(ang("0/7").str() == "0/1");
    CHECK(ang("728/728").is_zero());
    CHECK_THROWS_AS(parse_angle("0.5"), Error);
    CHECK_THROWS_AS(parse_angle("1/0"), Error);
    CHECK_THROWS_AS(parse_angle("1"), Error);
}

TEST_CASE("big angles fall back to arbitrary precision") {
    Angle a = Angle::from_big(BigInt(1), BigInt(1) << 80);
    CHECK_FALSE(a.is_small());
    CHECK(a.times(2) == Angle::from_big(BigInt(1), BigInt(1) << 79));
    Angle x = Angle::from_big(BigInt(1), BigInt(3) << 70);
    CHECK(x.times(3) == Angle::from_big(BigInt(1), BigInt(1) << 70));
    // arithmetic that leaves the small range and comes back
    Angle big = Angle::from_big(BigInt(7), BigInt(3) << 62);
    CHECK(big.plus(big.minus(big)) == big);
    CHECK(ang("1/3").plus(Angle::from_big(BigInt(2), BigInt(3))).is_zero());
}

TEST_CASE("sigma") {
    CHECK(sigma(Degree(2), ang("0/1")) == ang("0/1"));
    CHECK(sigma(Degree(3), ang("1/3")) == ang("0/1"));
    // 3 * 342 - 728 = 298, and 298/728 = 149/364
    CHECK(sigma(Degree(3), ang("342/728")) == ang("149/364"));
    CHECK(3 * 342 - 728 == 298);
    CHECK_THROWS_AS(Degree(1), Error);
}

TEST_CASE("arcs") {
    CHECK(in_arc({ang("0/1"), ang("1/2")}, ang("1/4")));
    CHECK_FALSE(in_arc({ang("1/2"), ang("0/1")}, ang("1/4")));
    CHECK(in_arc({ang("3/4"), ang("1/4")}, ang("0/1")));
    CHECK_FALSE(in_arc({ang("0/1"), ang("1/2")}, ang("1/2")));  // open
    CHECK(arc_length(ang("3/4"), ang("1/4")) == Rational(1, 2));
    CHECK(circle_distance(ang("1/8"), ang("7/8")) == Rational(1, 4));
}

TEST_CASE("classify_pair") {
    CHECK(classify_pair(ch("0/1", "1/2"), ch("1/4", "3/4")) == PairRelation::linked);
    CHECK(classify_pair(ch("0/1", "1/4"), ch("1/4", "1/2")) == PairRelation::touching);
    CHECK(classify_pair(ch("342/728", "579/728"), ch("298/728", "281/728")) == PairRelation::disjoint);
    CHECK(classify_pair(ch("1/3", "2/3"), ch("2/3", "1/3")) == PairRelation::equal);
    CHECK_THROWS_WITH_AS(classify_pair(ch("1/3", "1/3"), ch("0/1", "1/2")), "degenerate chord", Error);
    CHECK_FALSE(linked(ch("1/3", "1/3"), ch("0/1", "1/2")));
}

TEST_CASE("critical chords and lengths") {
    CHECK(is_critical(Degree(3), ch("0/1", "1/3")));
    CHECK(is_critical(Degree(2), ch("0/1", "1/2")));
    CHECK_FALSE(is_critical(Degree(3), ch("0/1", "1/2")));
    CHECK(leaf_length(ch("7/20", "3/4")) == Rational(2, 5));
    CHECK(leaf_length(ch("0/1", "1/2")) == Rational(1, 2));
    CHECK(leaf_length(ch("342/728", "579/728")) == Rational(237, 728));
}

TEST_CASE("convex hulls and images") {
    CHECK(convex_hull({ang("1/4"), ang("0/1"), ang("1/2")}).str() == "[0/1,1/4,1/2]");
    CHECK(convex_hull({ang("1/7"), ang("2/7"), ang("4/7")}).str() == "[1/7,2/7,4/7]");
    CHECK(convex_hull({ang("2/3")}).is_point());
    CHECK_THROWS_AS(convex_hull({}), Error);
    CHECK(sigma_hull(Degree(3), poly({"0/1", "1/6", "1/3", "1/2"})) == poly({"0/1", "1/2"}));
    CHECK(sigma_hull(Degree(3), poly({"0/1", "1/3", "2/3"})) == poly({"0/1"}));
    CHECK(sigma_hull(Degree(2), poly({"1/7", "2/7", "4/7"})) == poly({"1/7", "2/7", "4/7"}));
}

TEST_CASE("strongly linked") {
    CHECK(strongly_linked(poly({"0/1", "1/4", "1/2", "3/4"}), poly({"1/8", "3/8", "5/8", "7/8"})));
    CHECK_FALSE(strongly_linked(poly({"0/1", "1/6", "1/3", "1/2"}), poly({"0/1", "1/6", "1/3", "1/2"})));
    CHECK(strongly_linked(poly({"0/1", "1/6", "1/3", "1/2"}), poly({"1/12", "1/4", "5/12", "7/12"})));
    CHECK_FALSE(strongly_linked(poly({"0/1", "1/2"}), poly({"1/8", "3/8", "5/8", "7/8"})));
    CHECK_THROWS_AS(strongly_linked(poly({"0/1", "1/3", "2/3"}), poly({"1/8", "3/8", "5/8"})), Error);
}

TEST_CASE("holes") {
    auto h = holes(poly({"0/1", "1/2"}));
    REQUIRE(h.size() == 2);
    CHECK(h[0] == Arc{ang("0/1"), ang("1/2")});
    CHECK(h[1] == Arc{ang("1/2"), ang("0/1")});
    auto t = holes(poly({"1/7", "2/7", "4/7"}));
    REQUIRE(t.size() == 3);
    CHECK(t[2] == Arc{ang("4/7"), ang("1/7")});
    auto q = holes(poly({"0/1", "1/6", "1/3", "1/2"}));
    REQUIRE(q.size() == 4);
    Rational longest = 0;
    for (auto& a : q) longest = std::max(longest, a.length());
    CHECK(longest == Rational(1, 2));
    CHECK(q.back() == Arc{ang("1/2"), ang("0/1")});
    CHECK_THROWS_AS(holes(poly({"1/3"})), Error);
}

TEST_CASE("hull intersection") {
    CHECK(hulls_intersect(poly({"2/3"}), poly({"2/3", "5/6"})));
    CHECK_FALSE(hulls_intersect(poly({"1/6"}), poly({"1/4"})));
    CHECK(hulls_intersect(poly({"0/1", "1/2"}), poly({"1/4", "3/4"})));
    CHECK_FALSE(hulls_intersect(poly({"0/1", "1/8"}), poly({"1/4", "3/4"})));
    CHECK(interiors_disjoint(poly({"0/1", "1/4"}), poly({"1/4", "1/2"})));
    CHECK_FALSE(interiors_disjoint(poly({"0/1", "1/2"}), poly({"1/4", "3/4"})));
}

TEST_CASE("order preservation on finite sets") {
    CHECK(order_preserving(Degree(2), {ang("1/7"), ang("2/7"), ang("4/7")}));
    CHECK_FALSE(order_preserving(Degree(2), {ang("0/1"), ang("1/4"), ang("1/2"), ang("3/4")}));
    CHECK(order_violation(Degree(2), {ang("0/1"), ang("1/8"), ang("5/8")}));
}

TEST_CASE("hausdorff distance on vertex sets") {
    CHECK(hausdorff_distance({ang("0/1")}, {ang("0/1")}) == 0);
    CHECK(hausdorff_distance({ang("0/1"), ang("1/4")}, {ang("0/1")}) == Rational(1, 4));
    CHECK(hausdorff_distance({ang("1/16")}, {ang("15/16")}) == Rational(1, 8));
}

// --- exhaustive properties --------------------------------------------------

namespace {
std::vector<Angle> all_angles(int max_den) {
    std::set<Angle> s;
    for (int q = 1; q <= max_den; ++q)
        for (int p = 0; p < q; ++p) s.insert(Angle(p, q));
    return {s.begin(), s.end()};
}
}  // namespace

TEST_CASE("classify_pair is symmetric and agrees with the alternation oracle") {
    auto pts = all_angles(12);
    std::vector<Chord> chords;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) chords.emplace_back(pts[i], pts[j]);
    std::size_t mismatches = 0, asym = 0, hole_failures = 0;
    for (const auto& a : chords)
        for (const auto& b : chords) {
            auto r = classify_pair(a, b);
            if (r != classify_pair(b, a)) ++asym;
            bool ref = oracle::linked(a.lo().value(), a.hi().value(), b.lo().value(), b.hi().value());
            if ((r == PairRelation::linked) != ref) ++mismatches;
            if (r == PairRelation::linked) {
                auto h = holes(Polygon(a));
                int in0 = in_arc(h[0], b.lo()) + in_arc(h[0], b.hi());
                int in1 = in_arc(h[1], b.lo()) + in_arc(h[1], b.hi());
                if (in0 != 1 || in1 != 1) ++hole_failures;
            }
        }
    CHECK(asym == 0);
    CHECK(mismatches == 0);
    CHECK(hole_failures == 0);
}

TEST_CASE("classify_pair on every common grid up to denominator 64") {
    // chords {i/q, j/q}: integer alternation is the reference
    std::size_t asym = 0, mismatches = 0, hole_failures = 0;
    for (int q = 2; q <= 64; ++q) {
        std::vector<std::pair<int, int>> ij;
        std::vector<Chord> chords;
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) {
                ij.emplace_back(i, j);
                chords.emplace_back(Angle(i, q), Angle(j, q));
            }
        for (std::size_t u = 0; u < chords.size(); ++u) {
            auto h = holes(Polygon(chords[u]));
            auto [i, j] = ij[u];
            for (std::size_t v = u + 1; v < chords.size(); ++v) {
                auto r = classify_pair(chords[u], chords[v]);
                if (r != classify_pair(chords[v], chords[u])) ++asym;
                auto [k, l] = ij[v];
                bool shared = k == i || k == j || l == i || l == j;
                bool ref = !shared && ((i < k && k < j) != (i < l && l < j));
                if ((r == PairRelation::linked) != ref) ++mismatches;
                if (ref) {
                    int in0 = in_arc(h[0], chords[v].lo()) + in_arc(h[0], chords[v].hi());
                    if (in0 != 1) ++hole_failures;
                }
            }
        }
    }
    CHECK(asym == 0);
    CHECK(mismatches == 0);
    CHECK(hole_failures == 0);
}

TEST_CASE("sigma is d-to-1 between denominators q and dq") {
    for (int d : {2, 3}) {
        Degree deg(d);
        for (int q = 1; q <= 30; ++q) {
            if (std::gcd(q, d) != 1) continue;
            std::map<Angle, int> count;
            for (int p = 0; p < d * q; ++p) {
                Angle a(p, d * q);
                Angle y = sigma(deg, a);
                CHECK(y.value() == oracle::sigma(d, a.value()));
                ++count[y];
            }
            CHECK(count.size() == static_cast<std::size_t>(q));
            for (auto& [y, n] : count) CHECK(n == d);
        }
    }
}

TEST_CASE("critical chords collapse and holes partition the circle") {
    auto pts = all_angles(18);
    for (int d : {2, 3, 4})
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                Chord c(pts[i], pts[j]);
                if (is_critical(Degree(d), c)) CHECK(sigma_hull(Degree(d), Polygon(c)).is_point());
                CHECK(is_critical(Degree(d), c) == oracle::critical(d, c.lo().value(), c.hi().value()));
            }
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Angle> v;
        int k = 2 + static_cast<int>(rng() % 6);
        for (int i = 0; i < k; ++i) v.push_back(pts[rng() % pts.size()]);
        Polygon p(v);
        if (p.size() < 2) continue;
        Rational total = 0;
        for (auto& h : holes(p)) total += h.length();
        CHECK(total == 1);
    }
}
