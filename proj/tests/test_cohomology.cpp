#include "gkmred/catalog.hpp"
#include "gkmred/class_expr.hpp"
#include "gkmred/cohomology.hpp"
#include "gkmred/kirwan.hpp"

#include <catch_amalgamated.hpp>

using namespace gkm;

namespace {

EquivariantClass cp2_x(const SpacePtr& cp2) { return moment_class(cp2); }

MultiPoly v(int rank, int i) { return MultiPoly::variable(rank, i); }

}  // namespace

TEST_CASE("gkm_check") {
    auto cp1 = make_cp1();
    std::map<std::string, MultiPoly> tuple;
    tuple.emplace("p0", MultiPoly(1));
    tuple.emplace("p1", v(1, 0));
    CHECK(gkm_check(EquivariantClass(cp1, 2, tuple)));

    std::map<std::string, MultiPoly> consts;
    consts.emplace("p0", MultiPoly(1));
    consts.emplace("p1", MultiPoly::constant(1, Rational(1)));
    CHECK_FALSE(gkm_check(EquivariantClass(cp1, 0, consts)));  // unequal constants

    auto cp2 = make_cp2();
    CHECK(gkm_check(cp2_x(cp2)));  // restrictions (0, x1, x2)
    CHECK(cp2_x(cp2).at("p1") == v(2, 0));
    CHECK(cp2_x(cp2).at("p2") == v(2, 1));

    std::map<std::string, MultiPoly> missing;
    missing.emplace("p0", MultiPoly(2));
    CHECK_THROWS_AS(EquivariantClass(cp2, 2, missing), std::invalid_argument);
}

TEST_CASE("basis dimensions") {
    Cohomology prod(make_cp2xcp2_k3());
    CHECK(prod.basis(0).dim() == 1);
    CHECK(prod.basis(2).dim() == 4);
    CHECK(prod.basis(4).dim() == 10);
    CHECK(prod.basis(6).dim() == 18);
    CHECK(prod.basis(8).dim() == 27);

    Cohomology cp1(make_cp1());
    CHECK(cp1.basis(2).dim() == 2);
    CHECK(cp1.basis(4).dim() == 2);
    CHECK(cp1.basis(6).dim() == 2);

    // a point has the polynomial ring of the torus: one monomial per degree
    // in rank 1, binomial counts in general
    Cohomology pt(make_point(1));
    for (int k = 0; k <= 6; k += 2) CHECK(pt.basis(k).dim() == 1);
    Cohomology pt3(make_point(3));
    CHECK(pt3.basis(4).dim() == static_cast<size_t>(count_monomials(3, 2)));

    for (const auto& name : {"cp1", "cp2", "su3-hexagon", "cp2xcp2-k3"}) {
        Cohomology coh(builtin_space(name));
        const DegreeBasis& b0 = coh.basis(0);
        REQUIRE(b0.dim() == 1);  // connected: constants only
        const auto& r = b0.classes[0].restrictions();
        for (const auto& [p, f] : r) CHECK(f == r.begin()->second);
    }

    CHECK_THROWS_AS(Cohomology(make_cp2()).basis(3), std::invalid_argument);
    CHECK_THROWS_AS(Cohomology(make_cp2()).basis(-2), std::invalid_argument);
}

TEST_CASE("basis dimensions match Morse counting for several directions") {
    for (const auto& name : {"cp1", "cp2", "su3-hexagon", "cp2xcp2-k3"}) {
        auto sp = builtin_space(name);
        Cohomology coh(sp);
        std::vector<IntVec> dirs;
        if (sp->rank() == 1)
            dirs = {{1}, {-1}};
        else
            dirs = {{1, 2}, {2, 1}, {-1, 3}};
        for (const auto& xi : dirs)
            for (int k = 0; k <= 2 * sp->complex_dim; k += 2)
                CHECK(morse_count(*sp, xi, k) == static_cast<long>(coh.basis(k).dim()));
    }
}

TEST_CASE("the edge-divisibility solve refuses non-GKM direct data") {
    auto prod = make_cp2xcp2_k3();
    GKMSpace stripped = *prod;  // same data, provenance forgotten
    stripped.provenance = GKMSpace::Provenance::direct;
    stripped.rebuild_index();
    Cohomology coh(std::make_shared<GKMSpace>(std::move(stripped)));
    CHECK_THROWS_AS(coh.basis(4), std::invalid_argument);
}

TEST_CASE("class multiplication") {
    auto cp2 = make_cp2();
    Cohomology coh(cp2);
    EquivariantClass x = cp2_x(cp2);
    EquivariantClass one = EquivariantClass::unit(cp2);

    CHECK(class_mul(one, x).restrictions() == x.restrictions());

    EquivariantClass xx = class_mul(x, x);
    CHECK(xx.at("p0").is_zero());
    CHECK(xx.at("p1") == v(2, 0) * v(2, 0));
    CHECK(xx.at("p2") == v(2, 1) * v(2, 1));

    // products of basis classes stay GKM-valid
    for (int i = 0; i <= 4; i += 2)
        for (const auto& a : coh.basis(i).classes)
            for (const auto& b : coh.basis(2).classes) CHECK(gkm_check(class_mul(a, b)));
}

TEST_CASE("module action") {
    auto prod = make_cp2xcp2_k3();
    EquivariantClass u1 = module_action(v(2, 0), EquivariantClass::unit(prod));
    for (const auto& p : prod->points) CHECK(u1.at(p.name) == v(2, 0));

    EquivariantClass a = moment_class(prod);
    CHECK(module_action(MultiPoly::constant(2, Rational(1)), a).restrictions() ==
          a.restrictions());

    EquivariantClass u1u2 =
        module_action(v(2, 0) * v(2, 1), EquivariantClass::unit(prod));
    for (const auto& p : prod->points) CHECK(u1u2.at(p.name) == v(2, 0) * v(2, 1));
}

TEST_CASE("kunneth restrictions multiply pointwise") {
    auto prod = make_cp2xcp2_k3();
    auto cp2 = prod->factor_a;  // kunneth requires the product's own factors
    EquivariantClass x = cp2_x(cp2);
    EquivariantClass one = EquivariantClass::unit(cp2);

    CHECK(kunneth(one, one, prod).restrictions() ==
          EquivariantClass::unit(prod).restrictions());

    EquivariantClass xa = kunneth(x, one, prod);
    EquivariantClass xb = kunneth(one, x, prod);
    EquivariantClass xx = kunneth(x, x, prod);
    CHECK(class_mul(xa, xb).restrictions() == xx.restrictions());
    for (const auto& p : cp2->points)
        for (const auto& q : cp2->points)
            CHECK(xx.at(p.name + "." + q.name) == x.at(p.name) * x.at(q.name));
    CHECK(xx.at("p2.p2") == v(2, 1) * v(2, 1));

    CHECK_THROWS_AS(kunneth(x, x, cp2), std::invalid_argument);
}

TEST_CASE("the ten degree-4 product classes are independent") {
    auto prod = make_cp2xcp2_k3();
    auto cp2 = prod->factor_a;
    Cohomology coh(prod);
    EquivariantClass x = cp2_x(cp2), one = EquivariantClass::unit(cp2);
    EquivariantClass xl = kunneth(x, one, prod), xr = kunneth(one, x, prod);
    EquivariantClass u1 = module_action(v(2, 0), EquivariantClass::unit(prod));
    EquivariantClass u2 = module_action(v(2, 1), EquivariantClass::unit(prod));
    std::vector<EquivariantClass> ten = {
        class_mul(u1, u1), class_mul(u2, u2), class_mul(u1, u2), class_mul(xl, u1),
        class_mul(xl, u2), class_mul(u1, xr), class_mul(u2, xr), class_mul(xl, xr),
        class_mul(xr, xr), class_mul(xl, xl)};
    std::vector<RatVec> vecs;
    for (const auto& c : ten) vecs.push_back(coh.ambient_vector(c));
    CHECK(rank(RatMatrix::from_rows(vecs)) == 10);
    CHECK(coh.basis(4).dim() == 10);
}

TEST_CASE("morse index and the negative Euler class") {
    auto cp2 = make_cp2();
    IntVec xi{1, 2};
    CHECK(morse_index(cp2->point("p0"), xi) == 0);
    CHECK(morse_index(cp2->point("p1"), xi) == 2);
    CHECK(morse_index(cp2->point("p2"), xi) == 4);

    // flipping xi turns lambda into 2n - lambda
    for (const auto& sp : {make_cp2(), make_su3_hexagon()}) {
        IntVec neg{-1, -2};
        for (const auto& p : sp->points)
            CHECK(morse_index(p, xi) + morse_index(p, neg) == 2 * sp->complex_dim);
    }

    CHECK_THROWS_WITH(morse_index(cp2->point("p0"), IntVec{0, 1}),
                      Catch::Matchers::ContainsSubstring("(1,0)"));

    CHECK(negative_euler_class(cp2->point("p0"), xi, 2) ==
          MultiPoly::constant(2, Rational(1)));
    CHECK(negative_euler_class(cp2->point("p1"), xi, 2) == Rational(-1) * v(2, 0));
    MultiPoly expect = MultiPoly::linear_form({0, -1}) * MultiPoly::linear_form({1, -1});
    CHECK(negative_euler_class(cp2->point("p2"), xi, 2) == expect);
}

TEST_CASE("flow-up classes") {
    IntVec xi{1, 2};
    for (const auto& name : {"cp2", "su3-hexagon"}) {
        auto sp = builtin_space(name);
        Cohomology coh(sp);
        for (const auto& p : sp->points) {
            EquivariantClass f = flow_up_class(coh, p.name, xi);
            CHECK(f.degree() == morse_index(p, xi));
            CHECK(f.at(p.name) == negative_euler_class(p, xi, sp->rank()));
            CHECK(gkm_check(f));
            auto reach = reachable_upward(*sp, p.name, xi);
            for (const auto& q : sp->points)
                if (!reach.count(q.name)) CHECK(f.at(q.name).is_zero());
        }
    }

    // at the minimum the unit class is the canonical solution
    auto cp2 = make_cp2();
    Cohomology coh(cp2);
    EquivariantClass fmin = flow_up_class(coh, "p0", xi);
    CHECK(fmin.degree() == 0);
    CHECK(fmin.at("p0") == MultiPoly::constant(2, Rational(1)));

    // the middle point of cp2 forces the tuple (0, -x1, -x2)
    EquivariantClass fmid = flow_up_class(coh, "p1", xi);
    CHECK(fmid.at("p0").is_zero());
    CHECK(fmid.at("p1") == Rational(-1) * v(2, 0));
    CHECK(fmid.at("p2") == Rational(-1) * v(2, 1));

    // a non-separating direction is rejected: (1,1) collides on the hexagon
    Cohomology hex(make_su3_hexagon());
    CHECK_THROWS_AS(flow_up_class(hex, "v310", IntVec{1, 1}), std::invalid_argument);
}

TEST_CASE("classes vanishing below a point restrict there to a multiple of the Euler class") {
    IntVec xi{1, 2};
    for (const auto& name : {"cp2", "su3-hexagon"}) {
        auto sp = builtin_space(name);
        Cohomology coh(sp);
        for (const auto& p : sp->points) {
            int lambda = morse_index(p, xi);
            std::vector<MultiPoly> factors;
            for (const auto& w : p.weights)
                if (dot(w, xi) < 0) factors.push_back(MultiPoly::linear_form(w));
            Rational level = dot(p.moment, xi);
            std::vector<std::string> below;
            for (const auto& q : sp->points)
                if (dot(q.moment, xi) < level) below.push_back(q.name);
            for (int deg : {lambda, lambda + 2}) {
                Subspace s = detail::vanishing_subspace(coh, below, deg);
                for (size_t i = 0; i < s.basis().rows(); ++i) {
                    EquivariantClass c = coh.combine(deg, s.basis().row(i));
                    CHECK(divisible_by_linear_factors(c.at(p.name), factors));
                }
            }
        }
    }
}

TEST_CASE("nested products still match Morse counting") {
    auto cp1 = make_cp1();
    auto p2 = product(cp1, cp1, Rational(3));
    auto p3 = product(p2, cp1, Rational(9));
    CHECK(validate(*p3).ok());
    Cohomology coh(p3);
    for (IntVec xi : {IntVec{1}, IntVec{-1}})
        for (int k = 0; k <= 6; k += 2)
            CHECK(morse_count(*p3, xi, k) == static_cast<long>(coh.basis(k).dim()));
    // (1+t^2)^3: 1, 3, 3, 1 tensor the rank-1 polynomial ring
    CHECK(coh.basis(2).dim() == 4);   // 3 + 1
    CHECK(coh.basis(4).dim() == 7);   // 3 + 3 + 1
    CHECK(coh.basis(6).dim() == 8);   // 1 + 3 + 3 + 1
}

TEST_CASE("a product with a point keeps the Betti numbers") {
    auto cp2 = make_cp2();
    Cohomology base(cp2);
    Cohomology right(product(cp2, make_point(2), Rational(1)));
    Cohomology left(product(make_point(2), cp2, Rational(2)));
    for (int k = 0; k <= 8; k += 2) {
        CHECK(right.basis(k).dim() == base.basis(k).dim());
        CHECK(left.basis(k).dim() == base.basis(k).dim());
    }
}

TEST_CASE("subtorus restriction basis") {
    auto cp2 = make_cp2();
    Subtorus gen;
    gen.columns = {IntVec{1, 2}};
    Cohomology coh(project_moment(cp2, gen));
    long expected[] = {1, 2, 3, 3, 3};
    for (int k = 0; k <= 8; k += 2) CHECK(static_cast<long>(coh.basis(k).dim()) == expected[k / 2]);
    // formality: dims equal Morse counts of the restricted action
    for (int k = 0; k <= 8; k += 2)
        CHECK(morse_count(*coh.space(), IntVec{1}, k) == static_cast<long>(coh.basis(k).dim()));

    // the restricted product space also has a working basis
    auto prod = make_cp2xcp2_k3();
    Cohomology pcoh(project_moment(prod, gen));
    for (int k = 0; k <= 8; k += 2)
        CHECK(morse_count(*pcoh.space(), IntVec{1}, k) == static_cast<long>(pcoh.basis(k).dim()));
}

TEST_CASE("class expressions") {
    auto prod = make_cp2xcp2_k3();
    auto cp2 = prod->factor_a;
    EquivariantClass xx = kunneth(cp2_x(cp2), cp2_x(cp2), prod);
    CHECK(parse_class_expr("xl*xr", prod).restrictions() == xx.restrictions());
    EquivariantClass combo = parse_class_expr("u1^2 - 1/3*xr^2", prod);
    CHECK(combo.degree() == 4);
    CHECK(combo.at("p0.p0") == v(2, 0) * v(2, 0));
    CHECK_THROWS_AS(parse_class_expr("u1 + xl*xr", prod), std::invalid_argument);
    CHECK_THROWS_AS(parse_class_expr("nope", prod), std::invalid_argument);
}
