#include "gkmred/catalog.hpp"
#include "gkmred/space.hpp"

#include <catch_amalgamated.hpp>

using namespace gkm;

namespace {

bool mentions(const std::vector<std::string>& msgs, const std::string& needle) {
    for (const auto& m : msgs)
        if (m.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("builtin cp2 data") {
    auto cp2 = make_cp2();
    CHECK(cp2->point_count() == 3);
    CHECK(cp2->edges.size() == 3);
    CHECK(cp2->point("p0").moment == RatVec{Rational(0), Rational(0)});
    CHECK(cp2->point("p1").moment == RatVec{Rational(1), Rational(0)});
    CHECK(cp2->point("p2").moment == RatVec{Rational(0), Rational(1)});
    CHECK(cp2->point("p0").weights == std::vector<IntVec>{{1, 0}, {0, 1}});
    CHECK(cp2->point("p1").weights == std::vector<IntVec>{{-1, 0}, {-1, 1}});
    CHECK(cp2->point("p2").weights == std::vector<IntVec>{{0, -1}, {1, -1}});
    CHECK(validate(*cp2).ok());
    CHECK(validate(*cp2).warnings.empty());
    CHECK(cp2->is_strictly_gkm());
}

TEST_CASE("every builtin passes validation") {
    for (const auto& name : {"point", "cp1", "cp2", "cp2xcp2-k3", "su3-hexagon"}) {
        auto sp = builtin_space(name);
        CHECK(validate(*sp).ok());
    }
    CHECK(validate(*make_cpn(4)).ok());
}

TEST_CASE("validation violations") {
    auto base = make_cp2();

    GKMSpace zero_weight = *base;
    zero_weight.points[0].weights[0] = {0, 0};
    zero_weight.rebuild_index();
    CHECK(mentions(validate(zero_weight).violations, "zero weight at 'p0'"));

    GKMSpace skew = *base;
    skew.points[1].moment = {Rational(1), Rational(1, 2)};
    skew.rebuild_index();
    CHECK(mentions(validate(skew).violations, "not parallel"));

    GKMSpace dup = *base;
    dup.points[1].name = "p0";
    dup.rebuild_index();
    CHECK(mentions(validate(dup).violations, "duplicate fixed point name"));

    GKMSpace dangling = *base;
    dangling.edges[0].to = "nope";
    dangling.rebuild_index();
    CHECK(mentions(validate(dangling).violations, "unknown point"));

    GKMSpace badw = *base;
    badw.edges[0].weight = {1, 1};
    badw.rebuild_index();
    CHECK(mentions(validate(badw).violations, "does not occur"));
}

TEST_CASE("product of cp2 with itself, dilation 3") {
    auto cp2 = make_cp2();
    auto prod = product(cp2, cp2, Rational(3));
    CHECK(prod->point_count() == 9);
    CHECK(prod->edges.size() == 18);
    for (const auto& p : prod->points) CHECK(p.weights.size() == 4);
    CHECK(prod->point("p1.p2").moment == RatVec{Rational(1), Rational(3)});
    CHECK(validate(*prod).ok());
    // the diagonal action repeats weights, so the product is not strictly GKM
    CHECK_FALSE(prod->is_strictly_gkm());
    CHECK(mentions(validate(*prod).warnings, "pairwise independent"));

    CHECK_THROWS_AS(product(cp2, make_cp1(), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(product(cp2, cp2, Rational(0)), std::invalid_argument);
}

TEST_CASE("product with a point is the identity up to naming") {
    auto cp2 = make_cp2();
    auto pt = make_point(2);
    auto xp = product(cp2, pt, Rational(1));
    REQUIRE(xp->point_count() == 3);
    CHECK(xp->edges.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(xp->points[i].moment == cp2->points[i].moment);
        CHECK(xp->points[i].weights == cp2->points[i].weights);
    }

    auto px = product(pt, cp2, Rational(2));
    for (size_t i = 0; i < 3; ++i) {
        RatVec doubled = cp2->points[i].moment;
        for (auto& x : doubled) x *= Rational(2);
        CHECK(px->points[i].moment == doubled);
    }
}

TEST_CASE("subtorus projection") {
    auto cp2 = make_cp2();

    Subtorus full = Subtorus::full(2);
    CHECK(project_moment(cp2, full).get() == cp2.get());

    Subtorus first;  // the circle with inclusion column (1,0): not generic
    first.columns = {IntVec{1, 0}};
    auto proj = project_moment(cp2, first);
    CHECK(proj->rank() == 1);
    CHECK(proj->projection_nongeneric);
    CHECK(proj->point("p0").weights == std::vector<IntVec>{{1}, {0}});
    CHECK(proj->point("p1").weights == std::vector<IntVec>{{-1}, {-1}});
    CHECK(proj->point("p2").weights == std::vector<IntVec>{{0}, {1}});

    Subtorus generic;  // (1,2) pairs nonzero with every weight
    generic.columns = {IntVec{1, 2}};
    auto gproj = project_moment(cp2, generic);
    CHECK_FALSE(gproj->projection_nongeneric);
    CHECK(gproj->point("p1").moment == RatVec{Rational(1)});
    CHECK(gproj->point("p2").moment == RatVec{Rational(2)});

    auto prod = make_cp2xcp2_k3();
    Subtorus diag;
    diag.columns = {IntVec{1, 1}};
    auto dproj = project_moment(prod, diag);
    for (const auto& p : prod->points)
        CHECK(dproj->point(p.name).moment == RatVec{p.moment[0] + p.moment[1]});

    Subtorus bad;
    bad.columns = {IntVec{1, 0}, IntVec{2, 0}};
    CHECK_THROWS_AS(project_moment(cp2, bad), std::invalid_argument);
}

TEST_CASE("su3 hexagon data") {
    auto hex = make_su3_hexagon();
    CHECK(hex->point_count() == 6);
    CHECK(hex->edges.size() == 9);
    for (const auto& p : hex->points) CHECK(p.weights.size() == 3);
    CHECK(hex->is_strictly_gkm());
    // the direction (1,2) separates the six vertices
    std::set<std::string> vals;
    for (const auto& p : hex->points) vals.insert(dot(p.moment, IntVec{1, 2}).str());
    CHECK(vals.size() == 6);
}
