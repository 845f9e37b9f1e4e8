// Equivariant cohomology classes as fixed-point restriction tuples, and
// per-degree basis construction.
//
// A class of a space with isolated fixed points is stored as its restriction
// tuple (one polynomial per fixed point). Construction of a degree basis
// depends on how the space was built:
//
//   direct      solve the GKM edge-divisibility system; valid exactly when
//               the isotropy weights are pairwise independent at every point
//   product     span of Kunneth products of factor basis classes; products
//               of GKM spaces under the diagonal action usually are not GKM
//               in the strict sense (weights repeat), and the plain edge
//               system then overcounts, so the tensor construction is used
//   projection  image of the parent's basis under the forgetful substitution
//               induced by the subtorus inclusion
//
// All three produce exact bases over Q; dimensions are cross-checked against
// Morse counting in the test suite.

#pragma once

#include "gkmred/space.hpp"
#include "gkmred/walls.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace gkm {

class EquivariantClass {
  public:
    EquivariantClass() = default;
    EquivariantClass(SpacePtr space, int degree, std::map<std::string, MultiPoly> restrictions)
        : space_(std::move(space)), degree_(degree), restrictions_(std::move(restrictions)) {
        if (degree_ < 0 || degree_ % 2)
            throw std::invalid_argument("EquivariantClass: degree must be even and nonnegative");
        for (const auto& p : space_->points) {
            auto it = restrictions_.find(p.name);
            if (it == restrictions_.end())
                throw std::invalid_argument("EquivariantClass: missing restriction at '" + p.name + "'");
            const MultiPoly& f = it->second;
            if (f.rank() != space_->rank())
                throw std::invalid_argument("EquivariantClass: restriction rank mismatch");
            if (!f.is_homogeneous() || (!f.is_zero() && f.cohom_degree() != degree_))
                throw std::invalid_argument(
                    "EquivariantClass: restriction at '" + p.name + "' not homogeneous of degree " +
                    std::to_string(degree_));
        }
    }

    static EquivariantClass zero(const SpacePtr& space, int degree) {
        std::map<std::string, MultiPoly> r;
        for (const auto& p : space->points) r.emplace(p.name, MultiPoly(space->rank()));
        return EquivariantClass(space, degree, std::move(r));
    }

    static EquivariantClass unit(const SpacePtr& space) {
        std::map<std::string, MultiPoly> r;
        for (const auto& p : space->points)
            r.emplace(p.name, MultiPoly::constant(space->rank(), Rational(1)));
        return EquivariantClass(space, 0, std::move(r));
    }

    const SpacePtr& space() const { return space_; }
    int degree() const { return degree_; }
    const MultiPoly& at(const std::string& point) const {
        auto it = restrictions_.find(point);
        if (it == restrictions_.end())
            throw std::invalid_argument("EquivariantClass: no restriction at '" + point + "'");
        return it->second;
    }
    const std::map<std::string, MultiPoly>& restrictions() const { return restrictions_; }

    bool is_zero() const {
        for (auto& [p, f] : restrictions_)
            if (!f.is_zero()) return false;
        return true;
    }

    friend EquivariantClass operator+(const EquivariantClass& a, const EquivariantClass& b) {
        a.check_same(b);
        if (a.degree_ != b.degree_)
            throw std::invalid_argument("class addition: degree mismatch");
        std::map<std::string, MultiPoly> r;
        for (auto& [p, f] : a.restrictions_) r.emplace(p, f + b.at(p));
        return EquivariantClass(a.space_, a.degree_, std::move(r));
    }
    friend EquivariantClass operator-(const EquivariantClass& a, const EquivariantClass& b) {
        return a + (Rational(-1) * b);
    }
    friend EquivariantClass operator*(const Rational& c, const EquivariantClass& a) {
        std::map<std::string, MultiPoly> r;
        for (auto& [p, f] : a.restrictions_) r.emplace(p, c * f);
        return EquivariantClass(a.space_, a.degree_, std::move(r));
    }

    void check_same(const EquivariantClass& b) const {
        if (space_.get() != b.space_.get())
            throw std::invalid_argument("classes live on different spaces");
    }

  private:
    SpacePtr space_;
    int degree_ = 0;
    std::map<std::string, MultiPoly> restrictions_;
};

// Pointwise product; the GKM condition is preserved automatically.
inline EquivariantClass class_mul(const EquivariantClass& a, const EquivariantClass& b) {
    a.check_same(b);
    std::map<std::string, MultiPoly> r;
    for (auto& [p, f] : a.restrictions()) r.emplace(p, f * b.at(p));
    return EquivariantClass(a.space(), a.degree() + b.degree(), std::move(r));
}

// H_T(pt)-module structure: multiply every restriction by h.
inline EquivariantClass module_action(const MultiPoly& h, const EquivariantClass& a) {
    if (h.rank() != a.space()->rank())
        throw std::invalid_argument("module_action: rank mismatch");
    if (!h.is_homogeneous()) throw std::invalid_argument("module_action: h must be homogeneous");
    if (h.is_zero()) return EquivariantClass::zero(a.space(), a.degree());
    std::map<std::string, MultiPoly> r;
    for (auto& [p, f] : a.restrictions()) r.emplace(p, h * f);
    return EquivariantClass(a.space(), a.degree() + h.cohom_degree(), std::move(r));
}

// True iff the difference across every edge is divisible by the edge weight.
inline bool gkm_check(const EquivariantClass& c) {
    const auto& sp = *c.space();
    for (const auto& e : sp.edges) {
        MultiPoly l = MultiPoly::linear_form(e.weight);
        if (l.is_zero()) continue;  // zero projected weight carries no condition
        if (!poly_divides(l, c.at(e.from) - c.at(e.to))) return false;
    }
    return true;
}

// Class on a product space with restriction a|_p * b|_q at the pair (p,q).
inline EquivariantClass kunneth(const EquivariantClass& a, const EquivariantClass& b,
                                const SpacePtr& prod) {
    if (!prod || prod->provenance != GKMSpace::Provenance::product)
        throw std::invalid_argument("kunneth: target is not a product space");
    if (prod->factor_a.get() != a.space().get() || prod->factor_b.get() != b.space().get())
        throw std::invalid_argument("kunneth: factors do not match the product's provenance");
    std::map<std::string, MultiPoly> r;
    for (const auto& p : prod->factor_a->points)
        for (const auto& q : prod->factor_b->points)
            r.emplace(p.name + "." + q.name, a.at(p.name) * b.at(q.name));
    return EquivariantClass(prod, a.degree() + b.degree(), std::move(r));
}

inline Rational moment_pairing(const FixedPoint& p, const IntVec& xi) {
    return dot(p.moment, xi);
}

// 2 * number of isotropy weights pairing negatively with xi.
inline int morse_index(const FixedPoint& p, const IntVec& xi) {
    int neg = 0;
    for (const auto& w : p.weights) {
        auto v = dot(w, xi);
        if (v == 0) {
            std::string ws;
            for (auto x : w) ws += (ws.empty() ? "" : ",") + std::to_string(x);
            throw std::invalid_argument("morse_index: xi is not generic at '" + p.name +
                                        "' (weight (" + ws + ") pairs to zero)");
        }
        if (v < 0) ++neg;
    }
    return 2 * neg;
}

// Product of the negatively-pairing weight linear forms; 1 when none.
inline MultiPoly negative_euler_class(const FixedPoint& p, const IntVec& xi, int rank) {
    MultiPoly e = MultiPoly::constant(rank, Rational(1));
    for (const auto& w : p.weights) {
        auto v = dot(w, xi);
        if (v == 0) {
            morse_index(p, xi);  // throws with the offending weight named
        }
        if (v < 0) e = e * MultiPoly::linear_form(w);
    }
    return e;
}

inline bool xi_generic(const GKMSpace& s, const IntVec& xi) {
    for (const auto& p : s.points)
        for (const auto& w : p.weights)
            if (dot(w, xi) == 0) return false;
    return true;
}

inline bool xi_separates(const GKMSpace& s, const IntVec& xi) {
    std::set<std::string> vals;
    for (const auto& p : s.points) {
        auto v = dot(p.moment, xi).str();
        if (!vals.insert(v).second) return false;
    }
    return true;
}

// Expected dim H^degree by Morse counting for a given generic direction.
inline long morse_count(const GKMSpace& s, const IntVec& xi, int degree) {
    if (degree < 0 || degree % 2) return 0;
    long total = 0;
    for (const auto& p : s.points) {
        int lambda = morse_index(p, xi);
        int rem = degree - lambda;
        if (rem < 0 || rem % 2) continue;
        total += count_monomials(s.rank(), rem / 2);
    }
    return total;
}

struct DegreeBasis {
    int degree = 0;
    std::vector<EquivariantClass> classes;
    std::vector<RatVec> coords;  // ambient coefficient vectors, one per class
    size_t ambient_dim = 0;
    size_t dim() const { return classes.size(); }
};

namespace detail {

// Incrementally collects vectors that increase rank.
class GreedyBasis {
  public:
    explicit GreedyBasis(size_t ambient) : ambient_(ambient) {}

    bool try_add(const RatVec& v) {
        RatVec w = v;
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (w[pivots_[i]].is_zero()) continue;
            Rational f = w[pivots_[i]];
            for (size_t j = 0; j < ambient_; ++j) w[j] -= f * rows_[i][j];
        }
        size_t p = ambient_;
        for (size_t j = 0; j < ambient_; ++j)
            if (!w[j].is_zero()) {
                p = j;
                break;
            }
        if (p == ambient_) return false;
        Rational inv = Rational(1) / w[p];
        for (size_t j = 0; j < ambient_; ++j) w[j] *= inv;
        rows_.push_back(std::move(w));
        pivots_.push_back(p);
        return true;
    }

    size_t dim() const { return rows_.size(); }

  private:
    size_t ambient_;
    std::vector<RatVec> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace detail

// Basis provider for one space; caches per-degree bases and the ambient
// coordinatization (points x monomials of the right polynomial degree).
class Cohomology {
  public:
    explicit Cohomology(SpacePtr space) : space_(std::move(space)) {
        if (!space_) throw std::invalid_argument("Cohomology: null space");
    }

    const SpacePtr& space() const { return space_; }

    size_t ambient_dim(int degree) const {
        return space_->points.size() * monomials(degree).size();
    }

    const std::vector<Exponents>& monomials(int degree) const {
        if (degree < 0 || degree % 2)
            throw std::invalid_argument("Cohomology: degree must be even and nonnegative");
        auto it = monomial_cache_.find(degree);
        if (it == monomial_cache_.end())
            it = monomial_cache_.emplace(degree, monomials_of_degree(space_->rank(), degree / 2)).first;
        return it->second;
    }

    RatVec ambient_vector(const EquivariantClass& c) const {
        const auto& mons = monomials(c.degree());
        RatVec v(space_->points.size() * mons.size());
        size_t k = 0;
        for (const auto& p : space_->points) {
            const MultiPoly& f = c.at(p.name);
            for (const auto& m : mons) v[k++] = f.coeff(m);
        }
        return v;
    }

    EquivariantClass class_from_ambient(int degree, const RatVec& v) const {
        const auto& mons = monomials(degree);
        if (v.size() != space_->points.size() * mons.size())
            throw std::invalid_argument("class_from_ambient: wrong length");
        std::map<std::string, MultiPoly> r;
        size_t k = 0;
        for (const auto& p : space_->points) {
            MultiPoly f(space_->rank());
            for (const auto& m : mons) f.add_term(m, v[k++]);
            r.emplace(p.name, std::move(f));
        }
        return EquivariantClass(space_, degree, std::move(r));
    }

    const DegreeBasis& basis(int degree) {
        auto it = basis_cache_.find(degree);
        if (it != basis_cache_.end()) return it->second;
        DegreeBasis b = build_basis(degree);
        return basis_cache_.emplace(degree, std::move(b)).first->second;
    }

    // Coordinates of c in basis(c.degree()), if c lies in the cohomology.
    std::optional<RatVec> express(const EquivariantClass& c) {
        const DegreeBasis& b = basis(c.degree());
        if (b.classes.empty()) {
            if (c.is_zero()) return RatVec{};
            return std::nullopt;
        }
        return coordinates_in_span(b.coords, ambient_vector(c));
    }

    EquivariantClass combine(int degree, const RatVec& coeffs) {
        const DegreeBasis& b = basis(degree);
        if (coeffs.size() != b.dim()) throw std::invalid_argument("combine: wrong coefficient count");
        EquivariantClass out = EquivariantClass::zero(space_, degree);
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero()) out = out + coeffs[i] * b.classes[i];
        return out;
    }

  private:
    DegreeBasis build_basis(int degree) {
        switch (space_->provenance) {
            case GKMSpace::Provenance::product:
                return build_product_basis(degree);
            case GKMSpace::Provenance::projection:
                return build_projection_basis(degree);
            case GKMSpace::Provenance::direct:
            default:
                return build_gkm_basis(degree);
        }
    }

    // Solve the edge-divisibility system over tuples of degree-k polynomials.
    DegreeBasis build_gkm_basis(int degree) {
        if (!space_->is_strictly_gkm())
            throw std::invalid_argument(
                "basis: space '" + space_->name +
                "' is not GKM in the strict sense (repeated weight directions); "
                "restriction tuples with edge divisibility would overcount. Build it as a "
                "product or a projection to get a valid basis.");
        const auto& mons = monomials(degree);
        const size_t n_amb = ambient_dim(degree);
        const int d = space_->rank();

        // constraint rows: for each edge, the remainder of (f_from - f_to)
        // mod the edge weight form must vanish coefficient-wise
        std::vector<RatVec> rows;
        for (const auto& e : space_->edges) {
            MultiPoly l = MultiPoly::linear_form(e.weight);
            size_t pi = space_->point_index(e.from);
            size_t qi = space_->point_index(e.to);
            // remainder coefficients depend linearly on each input monomial
            std::map<Exponents, RatVec> rem_rows;  // remainder monomial -> row
            for (size_t mi = 0; mi < mons.size(); ++mi) {
                MultiPoly mono(d);
                mono.add_term(mons[mi], Rational(1));
                MultiPoly rem = reduce_by_linear(mono, l).remainder;
                for (const auto& [re, rc] : rem.terms()) {
                    auto it = rem_rows.find(re);
                    if (it == rem_rows.end()) it = rem_rows.emplace(re, RatVec(n_amb)).first;
                    it->second[pi * mons.size() + mi] += rc;
                    it->second[qi * mons.size() + mi] -= rc;
                }
            }
            for (auto& [re, row] : rem_rows) rows.push_back(std::move(row));
        }

        DegreeBasis b;
        b.degree = degree;
        b.ambient_dim = n_amb;
        std::vector<RatVec> kernel =
            rows.empty() ? full_space(n_amb) : nullspace(RatMatrix::from_rows(rows));
        for (auto& v : kernel) {
            b.classes.push_back(class_from_ambient(degree, v));
            b.coords.push_back(std::move(v));
        }
        return b;
    }

    // Kunneth: products of factor basis classes span the product cohomology.
    DegreeBasis build_product_basis(int degree) {
        if (!sub_a_) sub_a_ = std::make_unique<Cohomology>(space_->factor_a);
        if (!sub_b_) sub_b_ = std::make_unique<Cohomology>(space_->factor_b);
        DegreeBasis b;
        b.degree = degree;
        b.ambient_dim = ambient_dim(degree);
        detail::GreedyBasis greedy(b.ambient_dim);
        for (int i = 0; i <= degree; i += 2) {
            const DegreeBasis& ba = sub_a_->basis(i);
            const DegreeBasis& bb = sub_b_->basis(degree - i);
            for (const auto& ca : ba.classes)
                for (const auto& cb : bb.classes) {
                    EquivariantClass prod = kunneth(ca, cb, space_);
                    RatVec v = ambient_vector(prod);
                    if (greedy.try_add(v)) {
                        b.classes.push_back(std::move(prod));
                        b.coords.push_back(std::move(v));
                    }
                }
        }
        return b;
    }

    // Forgetful image: restriction polynomials pulled back along the
    // subtorus inclusion span the subtorus cohomology degree by degree.
    DegreeBasis build_projection_basis(int degree) {
        if (!parent_coh_) parent_coh_ = std::make_unique<Cohomology>(space_->parent);
        const Subtorus& sub = space_->parent_inclusion;
        const int d = space_->parent->rank();
        const int r = space_->rank();
        std::vector<MultiPoly> images;  // x_i -> sum_j inclusion[i][j] t_j
        for (int i = 0; i < d; ++i) {
            IntVec row(r);
            for (int j = 0; j < r; ++j) row[j] = sub.columns[j][i];
            images.push_back(MultiPoly::linear_form(row));
        }
        DegreeBasis b;
        b.degree = degree;
        b.ambient_dim = ambient_dim(degree);
        detail::GreedyBasis greedy(b.ambient_dim);
        for (const auto& c : parent_coh_->basis(degree).classes) {
            std::map<std::string, MultiPoly> rest;
            for (auto& [p, f] : c.restrictions()) rest.emplace(p, f.substitute_linear(images, r));
            EquivariantClass proj(space_, degree, std::move(rest));
            RatVec v = ambient_vector(proj);
            if (greedy.try_add(v)) {
                b.classes.push_back(std::move(proj));
                b.coords.push_back(std::move(v));
            }
        }
        return b;
    }

    static std::vector<RatVec> full_space(size_t n) {
        std::vector<RatVec> vs;
        for (size_t i = 0; i < n; ++i) {
            RatVec v(n);
            v[i] = Rational(1);
            vs.push_back(std::move(v));
        }
        return vs;
    }

    SpacePtr space_;
    std::map<int, DegreeBasis> basis_cache_;
    mutable std::map<int, std::vector<Exponents>> monomial_cache_;
    std::unique_ptr<Cohomology> sub_a_, sub_b_, parent_coh_;
};

// Fixed points reachable from `start` along edge walks with strictly
// increasing moment pairing; the graph proxy for the extended stable
// manifold of the downward gradient flow.
inline std::set<std::string> reachable_upward(const GKMSpace& s, const std::string& start,
                                              const IntVec& xi) {
    std::set<std::string> seen{start};
    std::vector<std::string> todo{start};
    while (!todo.empty()) {
        std::string cur = todo.back();
        todo.pop_back();
        Rational h = dot(s.point(cur).moment, xi);
        for (const auto& e : s.edges) {
            std::string other;
            if (e.from == cur)
                other = e.to;
            else if (e.to == cur)
                other = e.from;
            else
                continue;
            if (dot(s.point(other).moment, xi) > h && !seen.count(other)) {
                seen.insert(other);
                todo.push_back(other);
            }
        }
    }
    return seen;
}

// A class of degree lambda_p restricting to the negative Euler class at p and
// to zero at every fixed point outside the reachable set of p. Any solution
// of the linear system is accepted; infeasibility means the graph proxy for
// the extended stable manifold failed and is reported as an error.
inline EquivariantClass flow_up_class(Cohomology& coh, const std::string& point_name,
                                      const IntVec& xi) {
    const GKMSpace& s = *coh.space();
    if (!xi_generic(s, xi))
        throw std::invalid_argument("flow_up_class: xi pairs to zero with some weight");
    if (!xi_separates(s, xi))
        throw std::invalid_argument(
            "flow_up_class: moment pairings do not separate the fixed points; choose another xi");
    const FixedPoint& p = s.point(point_name);
    const int lambda = morse_index(p, xi);
    MultiPoly euler = negative_euler_class(p, xi, s.rank());
    auto reach = reachable_upward(s, point_name, xi);

    const DegreeBasis& b = coh.basis(lambda);
    const auto& mons = coh.monomials(lambda);
    std::vector<RatVec> rows;
    RatVec rhs;
    auto add_point_conditions = [&](const std::string& q, const MultiPoly& value) {
        size_t qi = s.point_index(q);
        for (size_t mi = 0; mi < mons.size(); ++mi) {
            RatVec row(b.dim());
            for (size_t ci = 0; ci < b.dim(); ++ci)
                row[ci] = b.coords[ci][qi * mons.size() + mi];
            rows.push_back(std::move(row));
            rhs.push_back(value.coeff(mons[mi]));
        }
    };
    add_point_conditions(point_name, euler);
    for (const auto& q : s.points)
        if (!reach.count(q.name)) add_point_conditions(q.name, MultiPoly(s.rank()));

    auto sol = solve_linear(RatMatrix::from_rows(rows), rhs);
    if (!sol)
        throw std::domain_error("flow_up_class: no class realizes the flow-up conditions at '" +
                                point_name + "' (reachability proxy failed)");
    return coh.combine(lambda, *sol);
}

}  // namespace gkm
