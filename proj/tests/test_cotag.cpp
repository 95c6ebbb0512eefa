#include <doctest.h>

#include <functional>
#include <set>

#include "fixtures.hpp"
#include "lamina/cotag.hpp"
#include "oracle.hpp"

using namespace lamina;
using fixtures::ang;
using fixtures::poly;
using oracle::Q;

namespace {

Polygon pt(const char* a) { return Polygon(std::vector<Angle>{ang(a)}); }

std::vector<Q> qs(const Polygon& p) {
    std::vector<Q> v;
    for (const auto& a : p.vertices()) v.push_back(a.value());
    return v;
}

// Reference admissibility: sorted vertices v_0..v_{2m-1} with sigma(v_i) =
// sigma(v_{i+m}), m distinct images met in positive order, and the outside
// preimages in one closed complementary arc of the set.
bool admissible_ref(const std::vector<Q>& v) {
    const std::size_t n = v.size();
    if (n < 2 || n % 2) return false;
    const std::size_t m = n / 2;
    std::set<Q> imgs;
    for (std::size_t i = 0; i < m; ++i) {
        if (oracle::sigma(3, v[i]) != oracle::sigma(3, v[i + m])) return false;
        imgs.insert(oracle::sigma(3, v[i]));
    }
    if (imgs.size() != m) return false;
    for (std::size_t i = 0; m >= 3 && i < m; ++i)
        if (!oracle::inside(oracle::sigma(3, v[i]), oracle::sigma(3, v[(i + 1) % m]), oracle::sigma(3, v[(i + 2) % m])))
            return false;
    std::vector<Q> out;
    std::set<Q> in(v.begin(), v.end());
    for (const auto& y : imgs)
        for (const auto& p : oracle::preimages(3, y))
            if (!in.count(p)) out.push_back(p);
    return oracle::interiors_apart(v, out);
}

}  // namespace

TEST_CASE("co-critical sets") {
    CHECK(cocritical_set(poly({"0/1", "1/3"})) == pt("2/3"));
    CHECK(cocritical_set(poly({"0/1", "1/6", "1/3", "1/2"})) == poly({"2/3", "5/6"}));
    CHECK(cocritical_set(poly({"1/2", "5/6"})) == pt("1/6"));

    CHECK_THROWS_WITH_AS(cocritical_set(poly({"0/1", "1/4"})), doctest::Contains("not critical"), Error);
    CHECK_THROWS_WITH_AS(cocritical_set(poly({"0/1", "1/3", "1/2", "5/6"})), doctest::Contains("inadmissible"), Error);
    CHECK_THROWS_AS(cocritical_set(poly({"0/1", "1/3", "2/3"})), Error);
}

TEST_CASE("admissibility against the reference on the 1/18 grid") {
    const int n = 18;
    std::size_t checked = 0, admissible = 0;
    std::vector<int> idx;
    auto visit = [&]() {
        std::vector<Q> v;
        std::vector<Angle> a;
        for (int i : idx) {
            v.emplace_back(i, n);
            a.emplace_back(i, n);
        }
        Polygon p(a);
        bool want = admissible_ref(v);
        bool got = check_admissible(p).ok;
        if (got != want) FAIL_CHECK(p.str() << " library " << got << " reference " << want);
        if (got) {
            ++admissible;
            // outside preimages, as an independent set
            std::set<Q> in(v.begin(), v.end()), out;
            for (const auto& x : v)
                for (const auto& y : oracle::preimages(3, oracle::sigma(3, x)))
                    if (!in.count(y)) out.insert(y);
            auto coc = qs(cocritical_set(p));
            CHECK(std::set<Q>(coc.begin(), coc.end()) == out);
            CHECK(coc.size() == v.size() / 2);
        }
        ++checked;
    };
    std::function<void(int, int)> rec = [&](int from, int left) {
        if (left == 0) return visit();
        for (int i = from; i <= n - left; ++i) {
            idx.push_back(i);
            rec(i + 1, left - 1);
            idx.pop_back();
        }
    };
    for (int k : {2, 4, 6}) rec(0, k);
    CHECK(checked == 153 + 3060 + 18564);
    CHECK(admissible > 0);
}

TEST_CASE("rotation by thirds") {
    CHECK(rotate_third(pt("2/3"), 1) == pt("0/1"));
    CHECK(rotate_third(poly({"2/3", "5/6"}), 1) == poly({"0/1", "1/6"}));
    CHECK(rotate_third(poly({"2/3", "5/6"}), 2) == poly({"1/3", "1/2"}));
    for (const auto& p : fixtures::admissible_sets(12)) {
        CHECK(rotate_third(rotate_third(p, 1), 1) == rotate_third(p, 2));
        CHECK(rotate_third(rotate_third(rotate_third(p, 1), 1), 1) == p);
    }
}

TEST_CASE("reconstruction from co-critical sets") {
    CHECK(reconstruct_from_cocritical(pt("2/3")) == poly({"0/1", "1/3"}));
    CHECK(reconstruct_from_cocritical(poly({"2/3", "5/6"})) == poly({"0/1", "1/6", "1/3", "1/2"}));
    CHECK(reconstruct_from_cocritical(pt("1/6")) == poly({"1/2", "5/6"}));

    auto sets = fixtures::admissible_sets(12);
    REQUIRE(sets.size() >= 100);
    for (const auto& c : sets) {
        auto coc = cocritical_set(c);
        CHECK(reconstruct_from_cocritical(coc) == c);
        if (c.size() == 2) CHECK(coc.size() == 1);
        if (c.size() == 4) {
            // a chord through the two preimages missing from the quad
            REQUIRE(coc.size() == 2);
            for (const auto& a : coc.vertices()) {
                CHECK_FALSE(c.contains_vertex(a));
                bool shares_image = false;
                for (const auto& b : c.vertices()) shares_image = shares_image || sigma(Degree(3), a) == sigma(Degree(3), b);
                CHECK(shares_image);
            }
        }
    }
}

TEST_CASE("co-critical tags") {
    auto t = cotag(poly({"0/1", "1/3"}), poly({"1/2", "5/6"}));
    CHECK(t.first == pt("2/3"));
    CHECK(t.second == pt("1/6"));

    auto q = cotag(poly({"0/1", "1/6", "1/3", "1/2"}), poly({"7/12", "11/12"}));
    CHECK(q.first == poly({"2/3", "5/6"}));
    CHECK(q.second == pt("1/4"));

    auto swapped = cotag(poly({"7/12", "11/12"}), poly({"0/1", "1/6", "1/3", "1/2"}));
    CHECK(swapped.first == q.second);
    CHECK(swapped.second == q.first);

    CHECK_THROWS_WITH_AS(cotag(poly({"0/1", "1/3"}), poly({"1/6", "1/2"})), doctest::Contains("linked"), Error);
    CHECK_THROWS_AS(cotag(poly({"0/1", "1/3"}), poly({"0/1", "1/3"})), Error);
}

TEST_CASE("tag relations") {
    CoTag a{pt("2/3"), pt("1/6")};
    CoTag b{poly({"2/3", "5/6"}), pt("1/4")};
    CHECK(tags_relation(a, a) == TagRelation::equal);
    CHECK(tags_relation(a, b) == TagRelation::disjoint);
    CHECK(tags_relation(b, a) == TagRelation::disjoint);
    // nested factors: both pairs meet, tags differ
    CoTag c{pt("2/3"), pt("1/4")};
    CHECK(tags_relation(b, c) == TagRelation::overlap);
    CHECK(tags_relation(c, b) == TagRelation::overlap);
    // chords meeting only at an endpoint still intersect
    CoTag d{poly({"5/6", "0/1"}), poly({"1/4", "1/3"})};
    CHECK(tags_relation(b, d) == TagRelation::overlap);

    // factor-wise decision against the reference on small tags
    std::vector<Polygon> f;
    auto sets = fixtures::admissible_sets(6);
    for (std::size_t i = 0; i < sets.size(); i += 12) f.push_back(cocritical_set(sets[i]));
    REQUIRE(f.size() >= 20);
    std::size_t mismatches = 0, counts[3] = {0, 0, 0};
    for (const auto& x1 : f)
        for (const auto& x2 : f)
            for (const auto& y1 : f)
                for (const auto& y2 : f) {
                    CoTag s{x1, y1}, u{x2, y2};
                    TagRelation want = s == u ? TagRelation::equal
                                       : (oracle::hulls_meet(qs(x1), qs(x2)) && oracle::hulls_meet(qs(y1), qs(y2)))
                                           ? TagRelation::overlap
                                           : TagRelation::disjoint;
                    auto got = tags_relation(s, u);
                    mismatches += got != want;
                    ++counts[static_cast<int>(got)];
                }
    CHECK(mismatches == 0);
    for (auto c : counts) CHECK(c > 0);
}

TEST_CASE("upper semicontinuity witnesses") {
    CoTag target{poly({"2/3", "5/6"}), pt("1/4")};
    std::vector<CoTag> constant(5, target);
    auto r = usc_witness_check(constant, target, target, Rational(0));
    CHECK(r.pass);
    CHECK(r.limit_meets_target);

    // second factors shrink onto the point 1/4
    std::vector<CoTag> shrinking;
    for (int k = 2; k <= 9; ++k) {
        Angle e(1, 1 << k);
        shrinking.push_back({poly({"2/3", "5/6"}), Polygon(std::vector<Angle>{Angle(1, 4).minus(e), Angle(1, 4).plus(e)})});
    }
    auto s = usc_witness_check(shrinking, target, target, Rational(1, 512));
    CHECK(s.pass);
    REQUIRE(s.second_distances.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(s.second_distances[i] == Rational(1, 4 << i));
    for (std::size_t i = 1; i < 8; ++i) CHECK(s.second_distances[i] < s.second_distances[i - 1]);

    // limit meets the target without lying inside it
    CoTag small{pt("2/3"), pt("1/4")};
    auto v = usc_witness_check({target}, target, small, Rational(0));
    CHECK_FALSE(v.pass);
    CHECK(v.message.find("USC violation") != std::string::npos);

    // a limit away from the target is not a violation
    CoTag far{pt("1/3"), pt("1/2")};
    CHECK(usc_witness_check({far}, far, target, Rational(0)).pass);
    CHECK_FALSE(usc_witness_check({far}, far, target, Rational(0)).limit_meets_target);

    CHECK_THROWS_WITH_AS(usc_witness_check(constant, far, target, Rational(1, 100)),
                         doctest::Contains("does not converge"), Error);
}

TEST_CASE("limits of critical sets are not periodic") {
    // ten convergent sequences of admissible sets: critical leaves and
    // collapsing quads with vertices approaching a limit from one side
    struct Seq {
        Q a, b;  // limit: {a, a+1/3} if b < 0, else quad [a, b, a+1/3, b+1/3]
    };
    std::vector<Seq> seqs = {{Q(0), -1},          {Q(1, 7), -1},        {Q(1, 8), -1},       {Q(2, 9), -1},
                             {Q(1, 26), -1},      {Q(0), Q(1, 6)},      {Q(1, 7), Q(2, 7)},  {Q(1, 13), Q(4, 13)},
                             {Q(1, 8), Q(1, 4)},  {Q(1, 26), Q(7, 26)}};
    auto set_of = [](const Q& a, const Q& b) {
        std::vector<Q> v{oracle::frac(a), oracle::frac(a + Q(1, 3))};
        if (b >= 0) {
            v.push_back(oracle::frac(b));
            v.push_back(oracle::frac(b + Q(1, 3)));
        }
        std::sort(v.begin(), v.end());
        return v;
    };
    auto poly_of = [](const std::vector<Q>& v) {
        std::vector<Angle> a;
        for (const auto& x : v) a.push_back(Angle::from_rational(x));
        return Polygon(a);
    };
    for (const auto& s : seqs) {
        auto lim = set_of(s.a, s.b);
        REQUIRE(check_admissible(poly_of(lim)).ok);
        Q prev = 1;
        for (int k = 4; k <= 14; ++k) {
            Q eps(1, 1 << k);
            auto term = set_of(s.a + eps, s.b >= 0 ? s.b + eps / 2 : s.b);
            CHECK(check_admissible(poly_of(term)).ok);
            Q dist = oracle::hausdorff(term, lim);
            CHECK(dist <= eps);
            CHECK(dist < prev);
            prev = dist;
        }
        // no forward image returns to the limit set
        std::set<Q> start(lim.begin(), lim.end());
        for (int k = 1; k <= 24; ++k) {
            std::set<Q> img;
            for (const auto& x : lim) img.insert(oracle::sigma_iter(3, x, k));
            CHECK(img != start);
            CHECK(img.size() < start.size());
        }
    }
}
