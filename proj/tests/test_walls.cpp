#include "gkmred/catalog.hpp"
#include "gkmred/walls.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace gkm;

namespace {

std::set<std::pair<IntVec, std::string>> wall_keys(const std::vector<Wall>& ws) {
    std::set<std::pair<IntVec, std::string>> keys;
    for (const auto& w : ws) keys.insert({w.normal, w.offset.str()});
    return keys;
}

}  // namespace

TEST_CASE("cp2 walls are the three facets") {
    auto ws = walls(*make_cp2());
    REQUIRE(ws.size() == 3);
    auto keys = wall_keys(ws);
    CHECK(keys.count({{1, 0}, "0"}));
    CHECK(keys.count({{0, 1}, "0"}));
    CHECK(keys.count({{1, 1}, "1"}));
    for (const auto& w : ws) CHECK(w.boundary);
}

TEST_CASE("cp2xcp2-k3 walls") {
    auto ws = walls(*make_cp2xcp2_k3());
    REQUIRE(ws.size() == 9);
    auto keys = wall_keys(ws);
    for (const char* off : {"0", "1", "3"}) {
        CHECK(keys.count({{1, 0}, off}));
        CHECK(keys.count({{0, 1}, off}));
    }
    for (const char* off : {"1", "3", "4"}) CHECK(keys.count({{1, 1}, off}));
    // the x = 0 wall carries four fixed points joined by in-wall edges
    for (const auto& w : ws)
        if (w.normal == IntVec{1, 0} && w.offset == Rational(0)) CHECK(w.support.size() == 4);
}

TEST_CASE("hexagon walls: nine total, six on the boundary, three directions") {
    auto ws = walls(*make_su3_hexagon());
    REQUIRE(ws.size() == 9);
    int boundary = 0;
    std::set<IntVec> dirs;
    for (const auto& w : ws) {
        if (w.boundary) ++boundary;
        dirs.insert(w.normal);
    }
    CHECK(boundary == 6);
    CHECK(dirs.size() == 3);
}

TEST_CASE("wall support points satisfy the hyperplane equation exactly") {
    for (const auto& name : {"cp2", "cp2xcp2-k3", "su3-hexagon"}) {
        auto sp = builtin_space(name);
        for (const auto& w : walls(*sp)) {
            CHECK(w.support.size() >= 2);
            for (const auto& pn : w.support)
                CHECK(dot(sp->point(pn).moment, w.normal) == w.offset);
        }
    }
}

TEST_CASE("edges lying in a wall are orthogonal to its normal") {
    auto sp = make_cp2xcp2_k3();
    for (const auto& w : walls(*sp)) {
        std::set<std::string> sup(w.support.begin(), w.support.end());
        for (const auto& e : sp->edges) {
            if (!sup.count(e.from) || !sup.count(e.to)) continue;
            const auto& a = sp->point(e.from).moment;
            const auto& b = sp->point(e.to).moment;
            Rational pairing;
            for (size_t i = 0; i < a.size(); ++i)
                pairing += (b[i] - a[i]) * Rational(static_cast<long>(w.normal[i]));
            CHECK(pairing.is_zero());
        }
    }
}

TEST_CASE("wall normals") {
    auto cp2 = make_cp2();
    auto n2 = wall_normals(*cp2);
    std::set<IntVec> s2(n2.begin(), n2.end());
    CHECK(s2 == std::set<IntVec>{{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}});

    auto n1 = wall_normals(*make_cp1());
    std::set<IntVec> s1(n1.begin(), n1.end());
    CHECK(s1 == std::set<IntVec>{{-1}, {1}});

    auto np = wall_normals(*make_cp2xcp2_k3());
    std::set<IntVec> sp(np.begin(), np.end());
    CHECK(sp == s2);
}

TEST_CASE("wall normals are invariant under relabeling and translation") {
    auto sp = make_cp2xcp2_k3();
    auto base = wall_normals(*sp);

    GKMSpace moved = *sp;
    RatVec shift{Rational(7, 3), Rational(-2)};
    for (auto& p : moved.points)
        for (size_t i = 0; i < 2; ++i) p.moment[i] += shift[i];
    moved.rebuild_index();
    CHECK(wall_normals(moved) == base);
    // offsets shift by the pairing of the translation with the normal
    auto before = walls(*sp);
    auto after = walls(moved);
    REQUIRE(before.size() == after.size());
    for (size_t i = 0; i < before.size(); ++i) {
        CHECK(before[i].normal == after[i].normal);
        CHECK(after[i].offset == before[i].offset + dot(shift, before[i].normal));
    }

    GKMSpace renamed = *sp;
    for (auto& p : renamed.points) p.name = "z" + p.name;
    for (auto& e : renamed.edges) {
        e.from = "z" + e.from;
        e.to = "z" + e.to;
    }
    std::reverse(renamed.points.begin(), renamed.points.end());
    renamed.rebuild_index();
    CHECK(wall_normals(renamed) == base);
}

TEST_CASE("regular values") {
    auto prod = make_cp2xcp2_k3();
    Subtorus full = Subtorus::full(2);
    CHECK(is_regular_value(prod, {Rational(5, 4), Rational(5, 4)}, full));
    CHECK_FALSE(is_regular_value(prod, {Rational(3, 2), Rational(3, 2)}, full));
    CHECK_FALSE(is_regular_value(prod, {Rational(1), Rational(1, 2)}, full));  // on the x=1 wall
    CHECK_FALSE(is_regular_value(prod, {Rational(4), Rational(0)}, full));     // a vertex
    // on the x=3 line but beyond that wall's support hull: off every stratum
    CHECK(is_regular_value(prod, {Rational(3), Rational(5, 2)}, full));

    auto cp1 = make_cp1();
    Subtorus s1 = Subtorus::full(1);
    CHECK(is_regular_value(cp1, {Rational(1, 2)}, s1));
    CHECK_FALSE(is_regular_value(cp1, {Rational(0)}, s1));
    CHECK_FALSE(is_regular_value(cp1, {Rational(1)}, s1));
    CHECK(is_regular_value(cp1, {Rational(7)}, s1));  // outside the polytope
    CHECK_FALSE(mu_in_moment_polytope(cp1, {Rational(7)}, s1));

    // restriction to a circle: critical values are the projected vertices
    auto cp2 = make_cp2();
    Subtorus gen;
    gen.columns = {IntVec{1, 2}};
    CHECK(is_regular_value(cp2, {Rational(3, 2)}, gen));
    CHECK_FALSE(is_regular_value(cp2, {Rational(1)}, gen));
}
