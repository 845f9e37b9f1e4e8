#include "gkmred/catalog.hpp"
#include "gkmred/class_expr.hpp"
#include "gkmred/json_io.hpp"
#include "gkmred/svg_plot.hpp"

#include <catch_amalgamated.hpp>

using namespace gkm;

namespace {

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

}  // namespace

TEST_CASE("space documents round-trip byte-identically") {
    for (const auto& name : {"point", "cp1", "cp2", "cp2xcp2-k3", "su3-hexagon"}) {
        auto sp = builtin_space(name);
        Json doc = space_to_json(*sp);
        auto back = space_from_json(doc);
        CHECK(dump_json(space_to_json(*back)) == dump_json(doc));
        CHECK(validate(*back).ok());
    }
}

TEST_CASE("parsing rejects bad documents") {
    CHECK_THROWS_AS(space_from_json(Json::parse(R"({"schema": 2})")), ParseError);
    CHECK_THROWS_AS(space_from_json(Json::parse(R"({"schema": 1, "rank": 2})")), ParseError);

    // floats are not rationals
    Json doc = space_to_json(*make_cp1());
    doc["fixed_points"][0]["moment"][0] = 0.5;
    CHECK_THROWS_AS(space_from_json(doc), ParseError);

    Json doc2 = space_to_json(*make_cp1());
    doc2["fixed_points"][0]["moment"][0] = "1/0";
    CHECK_THROWS_AS(space_from_json(doc2), ParseError);

    CHECK_THROWS_AS(load_space_file("/nonexistent/space.json"), ParseError);
}

TEST_CASE("a deserialized strict-GKM space computes") {
    auto sp = space_from_json(space_to_json(*make_cp2()));
    Cohomology coh(sp);
    CHECK(coh.basis(2).dim() == 3);
}

TEST_CASE("a deserialized product loses its provenance and says so") {
    auto sp = space_from_json(space_to_json(*make_cp2xcp2_k3()));
    Cohomology coh(sp);
    CHECK_THROWS_WITH(coh.basis(2), Catch::Matchers::ContainsSubstring("not GKM"));
}

TEST_CASE("reduction reports are byte-stable") {
    auto prod = make_cp2xcp2_k3();
    RatVec mu{Rational(5, 4), Rational(5, 4)};
    auto r1 = reduce(prod, mu, Subtorus::full(2));
    auto r2 = reduce(prod, mu, Subtorus::full(2));
    CHECK(dump_json(report_to_json(r1)) == dump_json(report_to_json(r2)));

    auto t1 = structure_constants(prod, mu, Subtorus::full(2));
    auto t2 = structure_constants(prod, mu, Subtorus::full(2));
    CHECK(dump_json(report_to_json(r1, &t1)) == dump_json(report_to_json(r2, &t2)));
}

TEST_CASE("svg element inventory for the product plot") {
    auto prod = make_cp2xcp2_k3();
    PlotSpec spec;
    spec.mu = RatVec{Rational(5, 4), Rational(5, 4)};
    spec.draw_mu_hyperplanes = true;
    spec.label_class = parse_class_expr("xl*xr", prod);
    std::string svg = render_svg(prod, spec);

    CHECK(count_occurrences(svg, "class=\"fixed-point\"") == 9);
    CHECK(count_occurrences(svg, "class=\"point-label\"") == 9);
    CHECK(count_occurrences(svg, "class=\"restriction-label\"") == 9);
    CHECK(count_occurrences(svg, "class=\"wall\"") == 9);
    CHECK(count_occurrences(svg, "class=\"mu-hyperplane\"") == 3);
    CHECK(count_occurrences(svg, "class=\"mu-marker\"") == 1);
    CHECK(count_occurrences(svg, "class=\"hull\"") == 1);

    CHECK(render_svg(prod, spec) == svg);  // deterministic
}

TEST_CASE("svg inventory for the hexagon, and rank guards") {
    auto hex = make_su3_hexagon();
    PlotSpec spec;
    std::string svg = render_svg(hex, spec);
    CHECK(count_occurrences(svg, "class=\"fixed-point\"") == 6);
    CHECK(count_occurrences(svg, "class=\"wall\"") == 9);
    CHECK(count_occurrences(svg, "class=\"restriction-label\"") == 0);

    PlotSpec empty;
    CHECK_THROWS_AS(render_svg(make_cp1(), empty), std::domain_error);
}
