// The input data model: a compact Hamiltonian torus space with isolated
// fixed points, presented as GKM data (moment images, isotropy weights, and
// the one-skeleton edges), plus subtorus projection and product/dilation
// constructors.
//
// A space remembers how it was built (direct data, product of two factors,
// or subtorus projection of a parent). Cohomology construction dispatches on
// that provenance; see cohomology.hpp.

#pragma once

#include "gkmred/linalg.hpp"
#include "gkmred/polynomial.hpp"
#include "gkmred/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gkm {

struct TorusAction {
    int rank = 0;
    std::vector<std::string> names;  // variable labels, x1..xd by default

    static TorusAction standard(int rank) {
        TorusAction t;
        t.rank = rank;
        for (int i = 0; i < rank; ++i) t.names.push_back("x" + std::to_string(i + 1));
        return t;
    }
};

struct FixedPoint {
    std::string name;
    RatVec moment;                // Phi(p) in g*
    std::vector<IntVec> weights;  // isotropy weights of the tangent space
};

struct GKMEdge {
    std::string from, to;
    IntVec weight;  // primitive integer vector, defined up to sign
};

// Subtorus T of G given by an integer inclusion matrix (d x r, full column
// rank); columns are a basis of t inside g.
struct Subtorus {
    std::vector<IntVec> columns;  // r columns of length d

    static Subtorus full(int rank) {
        Subtorus s;
        for (int j = 0; j < rank; ++j) {
            IntVec c(rank, 0);
            c[j] = 1;
            s.columns.push_back(c);
        }
        return s;
    }

    int ambient_rank() const { return columns.empty() ? 0 : static_cast<int>(columns[0].size()); }
    int rank() const { return static_cast<int>(columns.size()); }

    bool is_identity() const {
        if (ambient_rank() != rank()) return false;
        for (int j = 0; j < rank(); ++j)
            for (int i = 0; i < ambient_rank(); ++i)
                if (columns[j][i] != (i == j ? 1 : 0)) return false;
        return true;
    }

    // transpose(inclusion) * v
    RatVec project(const RatVec& v) const {
        RatVec out(rank());
        for (int j = 0; j < rank(); ++j) out[j] = dot(v, columns[j]);
        return out;
    }
    IntVec project(const IntVec& v) const {
        IntVec out(rank());
        for (int j = 0; j < rank(); ++j) out[j] = dot(v, columns[j]);
        return out;
    }

    // iota(z) for z in t, as a vector in g
    IntVec include(const IntVec& z) const {
        if (static_cast<int>(z.size()) != rank())
            throw std::invalid_argument("Subtorus: coordinate length mismatch");
        IntVec out(ambient_rank(), 0);
        for (int j = 0; j < rank(); ++j)
            for (int i = 0; i < ambient_rank(); ++i) out[i] += columns[j][i] * z[j];
        return out;
    }

    void check_valid() const {
        if (columns.empty()) throw std::invalid_argument("Subtorus: empty inclusion");
        const size_t d = columns[0].size();
        if (rank() > static_cast<int>(d))
            throw std::invalid_argument("Subtorus: more columns than ambient rank");
        std::vector<RatVec> rows;
        for (auto& c : columns) {
            if (c.size() != d) throw std::invalid_argument("Subtorus: ragged inclusion");
            RatVec r(d);
            for (size_t i = 0; i < d; ++i) r[i] = Rational(static_cast<long>(c[i]));
            rows.push_back(r);
        }
        if (gkm::rank(RatMatrix::from_rows(rows)) != static_cast<size_t>(rank()))
            throw std::invalid_argument("Subtorus: inclusion not of full column rank");
    }
};

class GKMSpace;
using SpacePtr = std::shared_ptr<const GKMSpace>;

class GKMSpace {
  public:
    enum class Provenance { direct, product, projection };

    TorusAction action;
    std::vector<FixedPoint> points;
    std::vector<GKMEdge> edges;
    int complex_dim = 0;
    std::string name;

    Provenance provenance = Provenance::direct;
    // product provenance
    SpacePtr factor_a, factor_b;
    Rational dilation;
    // projection provenance
    SpacePtr parent;
    Subtorus parent_inclusion;
    bool projection_nongeneric = false;  // some projected weight vanished

    int rank() const { return action.rank; }
    size_t point_count() const { return points.size(); }

    int point_index(const std::string& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) throw std::invalid_argument("unknown fixed point '" + n + "'");
        return it->second;
    }
    bool has_point(const std::string& n) const { return index_.count(n) > 0; }
    const FixedPoint& point(const std::string& n) const { return points[point_index(n)]; }

    void rebuild_index() {
        index_.clear();
        for (size_t i = 0; i < points.size(); ++i) index_[points[i].name] = static_cast<int>(i);
    }

    // Pairwise-independent weights at every point: the strict GKM condition
    // under which restriction tuples with edge divisibility describe the
    // equivariant cohomology exactly.
    bool is_strictly_gkm() const {
        for (const auto& p : points)
            for (size_t i = 0; i < p.weights.size(); ++i)
                for (size_t j = i + 1; j < p.weights.size(); ++j)
                    if (parallel(p.weights[i], p.weights[j])) return false;
        return true;
    }

  private:
    std::map<std::string, int> index_;
};

inline SpacePtr finish_space(GKMSpace s) {
    s.rebuild_index();
    return std::make_shared<GKMSpace>(std::move(s));
}

struct ValidationReport {
    std::vector<std::string> violations;  // hard errors
    std::vector<std::string> warnings;    // non-GKM-in-the-strict-sense etc.
    bool ok() const { return violations.empty(); }
};

inline ValidationReport validate(const GKMSpace& space) {
    ValidationReport rep;
    auto bad = [&rep](const std::string& m) { rep.violations.push_back(m); };
    auto warn = [&rep](const std::string& m) { rep.warnings.push_back(m); };

    const int d = space.rank();
    if (d < 1) bad("torus rank must be at least 1");
    if (space.complex_dim < 0) bad("complex dimension must be nonnegative");

    std::map<std::string, int> seen;
    for (const auto& p : space.points) {
        if (seen.count(p.name)) bad("duplicate fixed point name '" + p.name + "'");
        seen[p.name] = 1;
        if (static_cast<int>(p.moment.size()) != d)
            bad("moment image of '" + p.name + "' has wrong length");
        if (static_cast<int>(p.weights.size()) != space.complex_dim)
            bad("fixed point '" + p.name + "' has " + std::to_string(p.weights.size()) +
                " weights, expected " + std::to_string(space.complex_dim));
        for (const auto& w : p.weights) {
            if (static_cast<int>(w.size()) != d)
                bad("weight at '" + p.name + "' has wrong length");
            else if (is_zero_vec(w))
                bad("zero weight at '" + p.name + "'");
        }
    }

    std::map<std::string, int> degree;
    for (const auto& e : space.edges) {
        if (!space.has_point(e.from) || !space.has_point(e.to)) {
            bad("edge " + e.from + "-" + e.to + " references an unknown point");
            continue;
        }
        degree[e.from]++;
        degree[e.to]++;
        if (static_cast<int>(e.weight.size()) != d || is_zero_vec(e.weight)) {
            bad("edge " + e.from + "-" + e.to + " has an invalid weight");
            continue;
        }
        auto has_weight = [&](const FixedPoint& p) {
            for (const auto& w : p.weights)
                if (parallel(w, e.weight)) return true;
            return false;
        };
        const auto& pf = space.point(e.from);
        const auto& pt = space.point(e.to);
        if (!has_weight(pf) || !has_weight(pt))
            bad("edge " + e.from + "-" + e.to +
                " weight does not occur (up to sign) at both endpoints");
        // moment map condition: the edge segment is parallel to the weight
        if (pf.moment.size() == pt.moment.size() &&
            static_cast<int>(pf.moment.size()) == d) {
            RatVec delta(d);
            bool zero = true;
            for (int i = 0; i < d; ++i) {
                delta[i] = pt.moment[i] - pf.moment[i];
                if (!delta[i].is_zero()) zero = false;
            }
            if (zero) {
                bad("edge " + e.from + "-" + e.to + " joins points with equal moment images");
            } else {
                bool par = true;
                for (int i = 0; i < d && par; ++i)
                    for (int j = i + 1; j < d && par; ++j)
                        if (delta[i] * Rational(static_cast<long>(e.weight[j])) !=
                            delta[j] * Rational(static_cast<long>(e.weight[i])))
                            par = false;
                if (!par)
                    bad("edge " + e.from + "-" + e.to +
                        " moment segment is not parallel to its weight");
            }
        }
    }

    for (const auto& p : space.points) {
        int deg = degree.count(p.name) ? degree[p.name] : 0;
        if (deg != space.complex_dim)
            warn("graph is not n-valent at '" + p.name + "' (degree " + std::to_string(deg) +
                 ", n = " + std::to_string(space.complex_dim) + ")");
        for (size_t i = 0; i < p.weights.size(); ++i)
            for (size_t j = i + 1; j < p.weights.size(); ++j)
                if (static_cast<int>(p.weights[i].size()) == d &&
                    static_cast<int>(p.weights[j].size()) == d &&
                    !is_zero_vec(p.weights[i]) && !is_zero_vec(p.weights[j]) &&
                    parallel(p.weights[i], p.weights[j])) {
                    warn("weights at '" + p.name +
                         "' are not pairwise independent (not GKM in the strict sense)");
                    i = p.weights.size();
                    break;
                }
    }
    return rep;
}

// One fixed point, no weights, no edges.
inline SpacePtr make_point(int rank, const std::string& name = "pt") {
    GKMSpace s;
    s.action = TorusAction::standard(rank);
    s.complex_dim = 0;
    s.name = name;
    s.points.push_back({"p", RatVec(rank, Rational(0)), {}});
    return finish_space(std::move(s));
}

// Product of two spaces with the same torus acting diagonally; the second
// factor's symplectic form (hence moment image) is scaled by `dilation`.
inline SpacePtr product(const SpacePtr& a, const SpacePtr& b, const Rational& dilation) {
    if (!a || !b) throw std::invalid_argument("product: null factor");
    if (a->rank() != b->rank()) throw std::invalid_argument("product: torus rank mismatch");
    if (dilation.sign() <= 0) throw std::invalid_argument("product: dilation must be positive");
    const int d = a->rank();

    GKMSpace s;
    s.action = TorusAction::standard(d);
    s.complex_dim = a->complex_dim + b->complex_dim;
    s.name = a->name + "x" + b->name;
    s.provenance = GKMSpace::Provenance::product;
    s.factor_a = a;
    s.factor_b = b;
    s.dilation = dilation;

    auto pair_name = [](const std::string& p, const std::string& q) { return p + "." + q; };

    for (const auto& p : a->points)
        for (const auto& q : b->points) {
            FixedPoint f;
            f.name = pair_name(p.name, q.name);
            f.moment.resize(d);
            for (int i = 0; i < d; ++i) f.moment[i] = p.moment[i] + dilation * q.moment[i];
            f.weights = p.weights;
            f.weights.insert(f.weights.end(), q.weights.begin(), q.weights.end());
            s.points.push_back(std::move(f));
        }
    for (const auto& e : a->edges)
        for (const auto& q : b->points)
            s.edges.push_back({pair_name(e.from, q.name), pair_name(e.to, q.name), e.weight});
    for (const auto& p : a->points)
        for (const auto& e : b->edges)
            s.edges.push_back({pair_name(p.name, e.from), pair_name(p.name, e.to), e.weight});

    return finish_space(std::move(s));
}

// Restrict the action to a subtorus: moment images and weights are pushed
// through transpose(inclusion). Zero projected weights are kept and flagged;
// they signal that the subtorus is not generic for this space.
inline SpacePtr project_moment(const SpacePtr& space, const Subtorus& sub) {
    if (!space) throw std::invalid_argument("project_moment: null space");
    sub.check_valid();
    if (sub.ambient_rank() != space->rank())
        throw std::invalid_argument("project_moment: subtorus ambient rank mismatch");
    if (sub.is_identity()) {
        // full torus: nothing to do
        return space;
    }

    GKMSpace s;
    s.action = TorusAction::standard(sub.rank());
    s.complex_dim = space->complex_dim;
    s.name = space->name + "|T";
    s.provenance = GKMSpace::Provenance::projection;
    s.parent = space;
    s.parent_inclusion = sub;

    bool nongeneric = false;
    for (const auto& p : space->points) {
        FixedPoint f;
        f.name = p.name;
        f.moment = sub.project(p.moment);
        for (const auto& w : p.weights) {
            IntVec pw = sub.project(w);
            if (is_zero_vec(pw)) nongeneric = true;
            f.weights.push_back(std::move(pw));
        }
        s.points.push_back(std::move(f));
    }
    for (const auto& e : space->edges) {
        IntVec w = primitive(sub.project(e.weight));
        if (is_zero_vec(w)) nongeneric = true;
        s.edges.push_back({e.from, e.to, std::move(w)});
    }
    s.projection_nongeneric = nongeneric;
    return finish_space(std::move(s));
}

}  // namespace gkm
