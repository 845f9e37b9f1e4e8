// JSON ingestion and emission: the space document schema (schema: 1) and the
// reduction report. Rationals cross the boundary as exact "p/q" strings,
// never as floats; emission uses ordered keys so reports are byte-stable.

#pragma once

#include "gkmred/kirwan.hpp"
#include "gkmred/space.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace gkm {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

namespace detail {

inline Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string())
        throw ParseError(where + ": rationals must be strings \"p/q\" (floats are not accepted)");
    auto r = try_parse_rational(j.get<std::string>());
    if (!r) throw ParseError(where + ": malformed rational '" + j.get<std::string>() + "'");
    return *r;
}

inline IntVec intvec_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an integer array");
    IntVec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError(where + ": expected integer entries");
        v.push_back(x.get<std::int64_t>());
    }
    return v;
}

}  // namespace detail

inline SpacePtr space_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("space document must be a JSON object");
    if (!doc.contains("schema") || !doc["schema"].is_number_integer() ||
        doc["schema"].get<int>() != 1)
        throw ParseError("space document must carry \"schema\": 1");
    for (const char* field : {"rank", "complex_dim", "fixed_points", "edges"})
        if (!doc.contains(field))
            throw ParseError(std::string("space document is missing \"") + field + "\"");

    GKMSpace s;
    s.action = TorusAction::standard(doc["rank"].get<int>());
    s.complex_dim = doc["complex_dim"].get<int>();
    s.name = doc.contains("name") ? doc["name"].get<std::string>() : "space";

    if (!doc["fixed_points"].is_array()) throw ParseError("\"fixed_points\" must be an array");
    for (const auto& pj : doc["fixed_points"]) {
        FixedPoint p;
        if (!pj.contains("name") || !pj["name"].is_string())
            throw ParseError("fixed point without a name");
        p.name = pj["name"].get<std::string>();
        if (!pj.contains("moment") || !pj["moment"].is_array())
            throw ParseError("fixed point '" + p.name + "' needs a moment array");
        for (const auto& mj : pj["moment"])
            p.moment.push_back(detail::rational_from_json(mj, "moment of '" + p.name + "'"));
        if (!pj.contains("weights") || !pj["weights"].is_array())
            throw ParseError("fixed point '" + p.name + "' needs a weights array");
        for (const auto& wj : pj["weights"])
            p.weights.push_back(detail::intvec_from_json(wj, "weight of '" + p.name + "'"));
        s.points.push_back(std::move(p));
    }
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& ej : doc["edges"]) {
        GKMEdge e;
        if (!ej.contains("from") || !ej.contains("to") || !ej.contains("weight"))
            throw ParseError("edge needs from/to/weight");
        e.from = ej["from"].get<std::string>();
        e.to = ej["to"].get<std::string>();
        e.weight = detail::intvec_from_json(ej["weight"], "edge " + e.from + "-" + e.to);
        s.edges.push_back(std::move(e));
    }
    return finish_space(std::move(s));
}

inline Json space_to_json(const GKMSpace& s) {
    Json doc;
    doc["schema"] = 1;
    doc["name"] = s.name;
    doc["rank"] = s.rank();
    doc["complex_dim"] = s.complex_dim;
    doc["fixed_points"] = Json::array();
    for (const auto& p : s.points) {
        Json pj;
        pj["name"] = p.name;
        pj["moment"] = Json::array();
        for (const auto& m : p.moment) pj["moment"].push_back(m.str());
        pj["weights"] = Json::array();
        for (const auto& w : p.weights) pj["weights"].push_back(w);
        doc["fixed_points"].push_back(std::move(pj));
    }
    doc["edges"] = Json::array();
    for (const auto& e : s.edges) {
        Json ej;
        ej["from"] = e.from;
        ej["to"] = e.to;
        ej["weight"] = e.weight;
        doc["edges"].push_back(std::move(ej));
    }
    return doc;
}

inline SpacePtr load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON parse error in '") + path + "': " + e.what());
    }
    return space_from_json(doc);
}

inline Json structure_table_to_json(const StructureTable& t) {
    Json j;
    j["degrees"] = t.degrees;
    j["quotient_dims"] = Json::array();
    for (const auto& reps : t.rep_coords) j["quotient_dims"].push_back(reps.size());
    j["representatives"] = Json::array();
    for (const auto& reps : t.rep_coords) {
        Json rj = Json::array();
        for (const auto& r : reps) {
            Json v = Json::array();
            for (const auto& c : r) v.push_back(c.str());
            rj.push_back(std::move(v));
        }
        j["representatives"].push_back(std::move(rj));
    }
    j["products"] = Json::array();
    for (const auto& e : t.entries) {
        Json ej;
        ej["deg_a"] = e.deg_a;
        ej["index_a"] = e.ia;
        ej["deg_b"] = e.deg_b;
        ej["index_b"] = e.ib;
        Json v = Json::array();
        for (const auto& c : e.coeffs) v.push_back(c.str());
        ej["coeffs"] = std::move(v);
        j["products"].push_back(std::move(ej));
    }
    j["truncated_pairs"] = t.truncated_pairs;
    return j;
}

inline Json report_to_json(const ReductionReport& r, const StructureTable* table = nullptr) {
    Json j;
    j["schema"] = 1;
    j["space"] = r.space_name;
    j["mu"] = Json::array();
    for (const auto& m : r.mu) j["mu"].push_back(m.str());
    j["subtorus"] = Json::array();
    for (const auto& c : r.subtorus.columns) j["subtorus"].push_back(c);
    j["proper_subtorus"] = r.proper_subtorus;
    j["subtorus_nongeneric"] = r.subtorus_nongeneric;
    j["degree_bound"] = r.degree_bound;
    j["directions"] = Json::array();
    for (const auto& d : r.directions) j["directions"].push_back(d);
    j["degrees"] = r.degrees;
    j["dim_h"] = r.dim_h;
    j["dim_kernel"] = r.dim_kernel;
    j["betti"] = r.betti;
    j["equivariant"] = Json{{"dim_h", r.dim_h_equivariant},
                            {"dim_kernel", r.dim_kernel_equivariant}};
    if (table) j["structure_constants"] = structure_table_to_json(*table);
    return j;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gkm
