// Moment-polytope geometry read off the GKM one-skeleton: codimension-1
// walls, the wall-normal set, and exact regular-value testing.
//
// A wall is detected combinatorially: take any set of edge-weight directions
// spanning a hyperplane, keep the edges whose weights lie in that span, and
// look at connected components of the resulting subgraph. Components whose
// edge directions fill the hyperplane are walls; components of lower rank
// and bare fixed points are lower-dimensional critical strata, which still
// matter for regular-value testing.

#pragma once

#include "gkmred/space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gkm {

struct Wall {
    IntVec normal;     // primitive, positive leading entry
    Rational offset;   // hyperplane <y, normal> = offset
    std::vector<std::string> support;
    bool boundary = false;  // all moment images on one closed side
};

namespace detail {

class DisjointSet {
  public:
    explicit DisjointSet(size_t n) : parent_(n) {
        for (size_t i = 0; i < n; ++i) parent_[i] = i;
    }
    size_t find(size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(size_t a, size_t b) { parent_[find(a)] = find(b); }

  private:
    std::vector<size_t> parent_;
};

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(static_cast<long>(v[i]));
    return r;
}

// Distinct primitive edge-weight directions (sign-normalized).
inline std::vector<IntVec> weight_directions(const GKMSpace& s) {
    std::set<IntVec> dirs;
    for (const auto& e : s.edges) {
        IntVec p = primitive(e.weight);
        if (!is_zero_vec(p)) dirs.insert(p);
    }
    return {dirs.begin(), dirs.end()};
}

// All distinct subspaces of dimension in [1, max_dim] spanned by subsets of
// the given directions. Keyed by canonical RREF basis for deduplication.
inline std::vector<Subspace> direction_spans(const std::vector<IntVec>& dirs, int max_dim) {
    std::map<std::vector<std::string>, Subspace> seen;
    const size_t m = dirs.size();
    std::vector<size_t> idx;
    auto record = [&](const std::vector<size_t>& chosen) {
        std::vector<RatVec> rows;
        for (auto i : chosen) rows.push_back(to_rat(dirs[i]));
        Subspace sp = Subspace::span(rows, dirs.empty() ? 0 : dirs[0].size());
        if (sp.dim() == 0 || sp.dim() > static_cast<size_t>(max_dim)) return;
        std::vector<std::string> key;
        for (size_t i = 0; i < sp.basis().rows(); ++i) {
            std::string row;
            for (size_t j = 0; j < sp.basis().cols(); ++j) row += sp.basis()(i, j).str() + ",";
            key.push_back(row);
        }
        seen.emplace(key, sp);
    };
    // subsets of size <= max_dim suffice: any span of dimension v <= max_dim
    // is already the span of v independent members of the subset
    std::vector<size_t> stack;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (!stack.empty()) record(stack);
        if (stack.size() == static_cast<size_t>(max_dim)) return;
        for (size_t i = from; i < m; ++i) {
            stack.push_back(i);
            self(self, i + 1);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<Subspace> out;
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

struct Stratum {
    std::vector<int> point_idx;  // >= 1 points
    size_t edge_count = 0;
    size_t span_dim = 0;  // rank of the component's edge directions
};

// Connected components of the subgraph of edges whose weights lie in V.
inline std::vector<Stratum> components_for_span(const GKMSpace& s, const Subspace& v) {
    DisjointSet dsu(s.points.size());
    std::vector<std::vector<RatVec>> comp_dirs(s.points.size());
    std::vector<size_t> edge_count(s.points.size(), 0);
    for (const auto& e : s.edges) {
        RatVec w = to_rat(e.weight);
        if (!v.contains(w)) continue;
        size_t a = s.point_index(e.from), b = s.point_index(e.to);
        dsu.unite(a, b);
    }
    std::map<size_t, Stratum> comps;
    for (size_t i = 0; i < s.points.size(); ++i)
        comps[dsu.find(i)].point_idx.push_back(static_cast<int>(i));
    for (const auto& e : s.edges) {
        RatVec w = to_rat(e.weight);
        if (!v.contains(w)) continue;
        size_t root = dsu.find(s.point_index(e.from));
        comps[root].edge_count++;
        comp_dirs[root].push_back(w);
    }
    std::vector<Stratum> out;
    for (auto& [root, st] : comps) {
        if (!comp_dirs[root].empty())
            st.span_dim = Subspace::span(comp_dirs[root], s.rank()).dim();
        out.push_back(st);
    }
    return out;
}

// Primitive integer normal of a hyperplane subspace (dim = rank-1).
inline IntVec hyperplane_normal(const Subspace& v, int rank) {
    std::vector<RatVec> rows;
    for (size_t i = 0; i < v.basis().rows(); ++i) rows.push_back(v.basis().row(i));
    auto ns = nullspace(RatMatrix::from_rows(rows));
    if (ns.size() != 1) throw std::logic_error("hyperplane_normal: span is not a hyperplane");
    // clear denominators
    mpz_class lcm_den(1);
    for (auto& x : ns[0]) lcm_den = lcm(lcm_den, x.denominator());
    IntVec n(rank);
    for (int i = 0; i < rank; ++i) {
        mpz_class z = ns[0][i].numerator() * (lcm_den / ns[0][i].denominator());
        if (!z.fits_slong_p()) throw std::overflow_error("hyperplane_normal: entry too large");
        n[i] = z.get_si();
    }
    return primitive(n);
}

// Exact convex-hull membership via Caratheodory: mu is in the hull iff some
// affinely independent subset carries it with nonnegative barycentrics.
inline bool in_convex_hull(const std::vector<RatVec>& pts, const RatVec& mu) {
    if (pts.empty()) return false;
    const size_t r = mu.size();
    const size_t m = pts.size();
    std::vector<size_t> stack;
    auto affinely_independent = [&](const std::vector<size_t>& ss) {
        if (ss.size() <= 1) return true;
        std::vector<RatVec> rows;
        for (size_t i = 1; i < ss.size(); ++i) {
            RatVec d(r);
            for (size_t j = 0; j < r; ++j) d[j] = pts[ss[i]][j] - pts[ss[0]][j];
            rows.push_back(std::move(d));
        }
        return rank(RatMatrix::from_rows(rows)) == ss.size() - 1;
    };
    auto carries_mu = [&](const std::vector<size_t>& ss) {
        // solve sum l_i v_i = mu, sum l_i = 1; unique because affinely independent
        RatMatrix a(r + 1, ss.size());
        RatVec b(r + 1);
        for (size_t j = 0; j < ss.size(); ++j) {
            for (size_t i = 0; i < r; ++i) a(i, j) = pts[ss[j]][i];
            a(r, j) = Rational(1);
        }
        for (size_t i = 0; i < r; ++i) b[i] = mu[i];
        b[r] = Rational(1);
        auto sol = solve_linear(a, b);
        if (!sol) return false;
        for (auto& l : *sol)
            if (l.sign() < 0) return false;
        return true;
    };
    bool found = false;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (found) return;
        if (!stack.empty() && affinely_independent(stack) && carries_mu(stack)) {
            found = true;
            return;
        }
        if (stack.size() == r + 1) return;
        for (size_t i = from; i < m && !found; ++i) {
            stack.push_back(i);
            if (affinely_independent(stack)) self(self, i + 1);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

}  // namespace detail

// Every maximal hyperplane carrying >= 2 fixed points joined by in-wall
// edges whose directions span the hyperplane. Rank-1 spaces have no such
// hyperplanes (their critical strata are single moment values).
inline std::vector<Wall> walls(const GKMSpace& space) {
    std::vector<Wall> out;
    const int r = space.rank();
    if (r < 2) return out;
    auto dirs = detail::weight_directions(space);
    std::map<std::pair<IntVec, std::string>, Wall> merged;
    for (const auto& v : detail::direction_spans(dirs, r - 1)) {
        if (v.dim() != static_cast<size_t>(r - 1)) continue;
        IntVec normal = detail::hyperplane_normal(v, r);
        for (const auto& st : detail::components_for_span(space, v)) {
            if (st.point_idx.size() < 2 || st.edge_count < 1) continue;
            if (st.span_dim != static_cast<size_t>(r - 1)) continue;
            Rational offset = dot(space.points[st.point_idx[0]].moment, normal);
            auto key = std::make_pair(normal, offset.str());
            auto& w = merged[key];
            w.normal = normal;
            w.offset = offset;
            for (int pi : st.point_idx) w.support.push_back(space.points[pi].name);
        }
    }
    for (auto& [k, w] : merged) {
        std::sort(w.support.begin(), w.support.end());
        w.support.erase(std::unique(w.support.begin(), w.support.end()), w.support.end());
        int below = 0, above = 0;
        for (const auto& p : space.points) {
            Rational v = dot(p.moment, w.normal);
            if (v < w.offset) ++below;
            if (v > w.offset) ++above;
        }
        w.boundary = (below == 0 || above == 0);
        out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    });
    return out;
}

// Deduplicated wall normals, both orientations. Rank 1 always has the two
// directions +1 and -1.
inline std::vector<IntVec> wall_normals(const GKMSpace& space) {
    std::set<IntVec> out;
    if (space.rank() == 1) {
        out.insert({1});
        out.insert({-1});
    } else {
        for (const auto& w : walls(space)) {
            out.insert(w.normal);
            IntVec neg = w.normal;
            for (auto& x : neg) x = -x;
            out.insert(neg);
        }
    }
    return {out.begin(), out.end()};
}

// Is mu (in t*) off every critical stratum of the subtorus moment map?
// Critical strata are the convex hulls of the fixed-point images of each
// connected piece of each isotropy-subtorus fixed set, read off the graph:
// single vertices, plus components of parallel-edge subgraphs for every
// direction span of dimension <= r-1.
inline bool is_regular_value(const SpacePtr& space, const RatVec& mu, const Subtorus& sub) {
    SpacePtr sp = project_moment(space, sub);
    const int r = sp->rank();
    if (static_cast<int>(mu.size()) != r)
        throw std::invalid_argument("is_regular_value: mu has wrong length");
    for (const auto& p : sp->points)
        if (p.moment == mu) return false;
    if (r >= 2) {
        auto dirs = detail::weight_directions(*sp);
        for (const auto& v : detail::direction_spans(dirs, r - 1)) {
            for (const auto& st : detail::components_for_span(*sp, v)) {
                if (st.point_idx.size() < 2) continue;
                std::vector<RatVec> pts;
                for (int pi : st.point_idx) pts.push_back(sp->points[pi].moment);
                if (detail::in_convex_hull(pts, mu)) return false;
            }
        }
    }
    return true;
}

// Convex hull of all moment images contains mu (reductions at values outside
// the moment polytope are empty).
inline bool mu_in_moment_polytope(const SpacePtr& space, const RatVec& mu, const Subtorus& sub) {
    SpacePtr sp = project_moment(space, sub);
    std::vector<RatVec> pts;
    for (const auto& p : sp->points) pts.push_back(p.moment);
    return detail::in_convex_hull(pts, mu);
}

}  // namespace gkm
