// Kernel of the (equivariant) Kirwan map and everything derived from it:
// half-space vanishing subspaces, kernel ideals, reduced Betti numbers,
// wall-direction sufficiency checks, the reduction-in-stages dimension
// identity, quotient-ring structure constants, and the forgetful map to a
// subtorus.
//
// The degree-k piece of the ideal generated by the half-space kernels is the
// plain span of the per-direction slices: each K^xi is itself closed under
// multiplication by arbitrary classes (vanishing conditions are pointwise),
// which the test suite exercises as a property.

#pragma once

#include "gkmred/cohomology.hpp"
#include "gkmred/walls.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gkm {

struct HalfSpaceCondition {
    IntVec xi;  // direction in t, length = subtorus rank
    RatVec mu;
    std::vector<std::string> positive_points;  // <Phi_T(p), xi> > <mu, xi>
};

struct KernelSlice {
    int degree = 0;
    Subspace subspace;  // coordinates w.r.t. the chosen DegreeBasis
};

// Positive-side fixed points of the affine hyperplane through mu with normal
// xi, measured with the subtorus moment map. A fixed point landing exactly
// on the hyperplane makes the pair (mu, xi) unusable and is an error.
inline HalfSpaceCondition half_space_condition(const SpacePtr& space, const IntVec& xi,
                                               const RatVec& mu, const Subtorus& sub) {
    if (is_zero_vec(xi)) throw std::invalid_argument("half_space_condition: xi must be nonzero");
    if (static_cast<int>(xi.size()) != sub.rank() || static_cast<int>(mu.size()) != sub.rank())
        throw std::invalid_argument("half_space_condition: xi/mu length must equal subtorus rank");
    Rational level = dot(mu, xi);
    HalfSpaceCondition cond{xi, mu, {}};
    for (const auto& p : space->points) {
        Rational v = dot(sub.project(p.moment), xi);
        if (v == level)
            throw std::domain_error("half-space test degenerates: <Phi(" + p.name +
                                    "), xi> equals <mu, xi>; perturb mu or xi");
        if (v > level) cond.positive_points.push_back(p.name);
    }
    return cond;
}

namespace detail {

inline std::vector<RatVec> identity_rows(size_t n) {
    std::vector<RatVec> rows;
    for (size_t i = 0; i < n; ++i) {
        RatVec v(n);
        v[i] = Rational(1);
        rows.push_back(std::move(v));
    }
    return rows;
}

// Subspace of basis coordinates whose classes vanish at all named points.
inline Subspace vanishing_subspace(Cohomology& coh, const std::vector<std::string>& points,
                                   int degree) {
    const DegreeBasis& b = coh.basis(degree);
    if (b.dim() == 0) return Subspace(0);
    const auto& mons = coh.monomials(degree);
    std::vector<RatVec> rows;
    for (const auto& name : points) {
        size_t pi = coh.space()->point_index(name);
        for (size_t mi = 0; mi < mons.size(); ++mi) {
            RatVec row(b.dim());
            bool nonzero = false;
            for (size_t ci = 0; ci < b.dim(); ++ci) {
                row[ci] = b.coords[ci][pi * mons.size() + mi];
                if (!row[ci].is_zero()) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return Subspace::span(identity_rows(b.dim()), b.dim());
    auto kernel = nullspace(RatMatrix::from_rows(rows));
    return Subspace::span(kernel, b.dim());
}

}  // namespace detail

inline KernelSlice half_space_kernel(Cohomology& coh, const IntVec& xi, const RatVec& mu,
                                     const Subtorus& sub, int degree) {
    if (!is_regular_value(coh.space(), mu, sub))
        throw std::domain_error("mu is not a regular value");
    auto cond = half_space_condition(coh.space(), xi, mu, sub);
    return KernelSlice{degree, detail::vanishing_subspace(coh, cond.positive_points, degree)};
}

// Degree-k pieces of the ideal generated by all requested half-space
// kernels, for k = 0, 2, ..., degree_bound.
inline std::vector<KernelSlice> kernel_ideal(Cohomology& coh, const RatVec& mu,
                                             const Subtorus& sub,
                                             const std::vector<IntVec>& directions,
                                             int degree_bound) {
    if (directions.empty()) throw std::invalid_argument("kernel_ideal: no directions");
    if (!is_regular_value(coh.space(), mu, sub))
        throw std::domain_error("mu is not a regular value");
    std::vector<HalfSpaceCondition> conds;
    for (const auto& xi : directions)
        conds.push_back(half_space_condition(coh.space(), xi, mu, sub));
    std::vector<KernelSlice> out;
    for (int k = 0; k <= degree_bound; k += 2) {
        Subspace total(coh.basis(k).dim());
        for (const auto& c : conds)
            total = subspace_sum(total, detail::vanishing_subspace(coh, c.positive_points, k));
        out.push_back(KernelSlice{k, std::move(total)});
    }
    return out;
}

// Default direction set: normals of the codimension-1 walls of the subtorus
// moment image, both orientations (the finite generating set that provably
// suffices for the kernel).
inline std::vector<IntVec> default_directions(const SpacePtr& space, const Subtorus& sub) {
    return wall_normals(*project_moment(space, sub));
}

struct ReductionReport {
    std::string space_name;
    RatVec mu;
    Subtorus subtorus;
    bool proper_subtorus = false;
    bool subtorus_nongeneric = false;
    int degree_bound = 0;
    std::vector<IntVec> directions;
    std::vector<int> degrees;  // 0, 2, ..., degree_bound

    // ordinary reduction data, computed on the subtorus-restricted space:
    // betti[k] = dim H_T^k(M) - dim <K_T>_k = dim H^k(M//T)
    std::vector<long> dim_h;
    std::vector<long> dim_kernel;
    std::vector<long> betti;

    // equivariant data on the G-space: dim H_G^k(M) and the degree-k piece
    // of <K_G^t(mu)>; the difference is dim H^k_{G/T}(M//T). Coincides with
    // the block above when the subtorus is the full torus.
    std::vector<long> dim_h_equivariant;
    std::vector<long> dim_kernel_equivariant;
};

inline ReductionReport reduce(const SpacePtr& space, const RatVec& mu, const Subtorus& sub,
                              int degree_bound = -1,
                              const std::vector<IntVec>* directions_override = nullptr) {
    sub.check_valid();
    if (sub.ambient_rank() != space->rank())
        throw std::invalid_argument("reduce: subtorus ambient rank mismatch");
    if (!is_regular_value(space, mu, sub)) throw std::domain_error("mu is not a regular value");
    if (!mu_in_moment_polytope(space, mu, sub))
        throw std::domain_error("mu lies outside the moment polytope; the reduction is empty");
    if (degree_bound < 0) degree_bound = 2 * space->complex_dim;

    ReductionReport rep;
    rep.space_name = space->name;
    rep.mu = mu;
    rep.subtorus = sub;
    rep.proper_subtorus = !sub.is_identity();
    rep.degree_bound = degree_bound;

    SpacePtr t_space = project_moment(space, sub);
    rep.subtorus_nongeneric = t_space->projection_nongeneric;
    rep.directions = directions_override ? *directions_override : default_directions(space, sub);

    Cohomology coh_t(t_space);
    Subtorus full_t = Subtorus::full(t_space->rank());
    auto kernel_t = kernel_ideal(coh_t, mu, full_t, rep.directions, degree_bound);
    for (const auto& ks : kernel_t) {
        rep.degrees.push_back(ks.degree);
        long h = static_cast<long>(coh_t.basis(ks.degree).dim());
        rep.dim_h.push_back(h);
        rep.dim_kernel.push_back(static_cast<long>(ks.subspace.dim()));
        rep.betti.push_back(h - static_cast<long>(ks.subspace.dim()));
    }

    if (rep.proper_subtorus) {
        Cohomology coh_g(space);
        auto kernel_g = kernel_ideal(coh_g, mu, sub, rep.directions, degree_bound);
        for (const auto& ks : kernel_g) {
            rep.dim_h_equivariant.push_back(static_cast<long>(coh_g.basis(ks.degree).dim()));
            rep.dim_kernel_equivariant.push_back(static_cast<long>(ks.subspace.dim()));
        }
    } else {
        rep.dim_h_equivariant = rep.dim_h;
        rep.dim_kernel_equivariant = rep.dim_kernel;
    }
    return rep;
}

struct KernelMembership {
    bool in_kernel = false;
    std::vector<IntVec> witnesses;  // directions whose single slice contains the class
};

// Membership of a class in the kernel ideal at its degree, with the list of
// wall directions whose single half-space condition already certifies it.
inline KernelMembership verify_class_in_kernel(Cohomology& coh, const EquivariantClass& cls,
                                               const RatVec& mu, const Subtorus& sub,
                                               const std::vector<IntVec>& directions,
                                               int degree_bound = -1) {
    if (degree_bound < 0) degree_bound = 2 * coh.space()->complex_dim;
    if (cls.degree() > degree_bound)
        throw std::invalid_argument("verify_class_in_kernel: class degree exceeds bound");
    auto coords = coh.express(cls);
    if (!coords)
        throw std::invalid_argument(
            "verify_class_in_kernel: tuple is not a class of this space's cohomology");
    KernelMembership out;
    Subspace total(coh.basis(cls.degree()).dim());
    for (const auto& xi : directions) {
        KernelSlice s = half_space_kernel(coh, xi, mu, sub, cls.degree());
        if (s.subspace.dim() > 0 && s.subspace.contains(*coords)) out.witnesses.push_back(xi);
        total = subspace_sum(total, s.subspace);
    }
    out.in_kernel = coords->empty() ? true : total.contains(*coords);
    if (coords->empty()) out.in_kernel = cls.is_zero();
    return out;
}

// Knuth's 64-bit linear congruential generator; seeded and reproducible.
class Lcg {
  public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint32_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 33);
    }

  private:
    std::uint64_t state_;
};

// Random integer direction with coordinates in [-9, 9] \ {0}.
inline IntVec random_direction(Lcg& rng, int rank) {
    IntVec xi(rank);
    for (int i = 0; i < rank; ++i) {
        int v = static_cast<int>(rng.next() % 18);  // 0..17
        xi[i] = (v < 9) ? (v - 9) : (v - 8);        // -9..-1, 1..9
    }
    return xi;
}

struct WallSufficiency {
    bool sufficient = false;
    std::vector<IntVec> sampled;
    std::vector<long> wall_dims;      // per degree
    std::vector<long> combined_dims;  // per degree
};

// Executable content of the walls theorem: adding seeded random directions
// to the wall normals must not grow the kernel in any degree. Sampled
// directions that put a fixed point exactly on the hyperplane through mu are
// redrawn (they are non-generic for this mu; the wall set itself is
// unaffected).
inline WallSufficiency wall_sufficiency_check(const SpacePtr& space, const RatVec& mu,
                                              const Subtorus& sub, int sample_count,
                                              std::uint64_t seed, int degree_bound = -1) {
    if (degree_bound < 0) degree_bound = 2 * space->complex_dim;
    SpacePtr t_space = project_moment(space, sub);
    std::vector<IntVec> walls_only = default_directions(space, sub);

    Lcg rng(seed);
    std::vector<IntVec> sampled;
    int guard = 0;
    while (static_cast<int>(sampled.size()) < sample_count) {
        if (++guard > 100 * sample_count + 1000)
            throw std::domain_error("wall_sufficiency_check: could not sample equality-free directions");
        IntVec xi = random_direction(rng, t_space->rank());
        Rational level = dot(mu, xi);
        bool equality = false;
        for (const auto& p : t_space->points)
            if (dot(p.moment, xi) == level) {
                equality = true;
                break;
            }
        if (!equality) sampled.push_back(std::move(xi));
    }

    std::vector<IntVec> combined = walls_only;
    combined.insert(combined.end(), sampled.begin(), sampled.end());

    Cohomology coh(space);
    auto base = kernel_ideal(coh, mu, sub, walls_only, degree_bound);
    auto more = kernel_ideal(coh, mu, sub, combined, degree_bound);

    WallSufficiency out;
    out.sampled = std::move(sampled);
    out.sufficient = true;
    for (size_t i = 0; i < base.size(); ++i) {
        out.wall_dims.push_back(static_cast<long>(base[i].subspace.dim()));
        out.combined_dims.push_back(static_cast<long>(more[i].subspace.dim()));
        if (base[i].subspace.dim() != more[i].subspace.dim()) out.sufficient = false;
    }
    return out;
}

// Pullback of restriction polynomials along the subtorus inclusion; lands on
// the projected space.
inline EquivariantClass forget_to_subtorus(const EquivariantClass& cls, const Subtorus& sub) {
    SpacePtr target = project_moment(cls.space(), sub);
    if (target.get() == cls.space().get()) return cls;  // identity inclusion
    const int d = cls.space()->rank();
    const int r = sub.rank();
    std::vector<MultiPoly> images;
    for (int i = 0; i < d; ++i) {
        IntVec row(r);
        for (int j = 0; j < r; ++j) row[j] = sub.columns[j][i];
        images.push_back(MultiPoly::linear_form(row));
    }
    std::map<std::string, MultiPoly> rest;
    for (auto& [p, f] : cls.restrictions()) rest.emplace(p, f.substitute_linear(images, r));
    return EquivariantClass(target, cls.degree(), std::move(rest));
}

struct StageDimensions {
    bool holds = false;
    bool mu_nonzero = false;  // the stages identity is paper-backed at mu = 0
    std::vector<int> degrees;
    std::vector<long> lhs;  // dim <K_G^t>_k
    std::vector<long> rhs;  // sum over l+m=k of dim H^l_{G/T}(pt) * dim <K_T^t>_m
};

// Reduction-in-stages dimension identity. Requires a generic subtorus
// (M^T = M^G); refuses otherwise.
inline StageDimensions check_stage_dimensions(const SpacePtr& space, const RatVec& mu,
                                              const Subtorus& sub, int degree_bound = -1) {
    if (degree_bound < 0) degree_bound = 2 * space->complex_dim;
    SpacePtr t_space = project_moment(space, sub);
    if (t_space->projection_nongeneric)
        throw std::domain_error(
            "check_stage_dimensions: subtorus is not generic (some projected weight vanishes)");
    const int d = space->rank();
    const int r = sub.rank();
    auto directions = default_directions(space, sub);

    Cohomology coh_g(space);
    auto ker_g = kernel_ideal(coh_g, mu, sub, directions, degree_bound);

    Cohomology coh_t(t_space);
    auto ker_t = kernel_ideal(coh_t, mu, Subtorus::full(r), directions, degree_bound);

    StageDimensions out;
    for (const auto& x : mu)
        if (!x.is_zero()) out.mu_nonzero = true;
    out.holds = true;
    for (size_t i = 0; i < ker_g.size(); ++i) {
        int k = ker_g[i].degree;
        long lhs = static_cast<long>(ker_g[i].subspace.dim());
        long rhs = 0;
        for (int l = 0; l <= k; l += 2) {
            int m = k - l;
            rhs += count_monomials(d - r, l / 2) * static_cast<long>(ker_t[m / 2].subspace.dim());
        }
        out.degrees.push_back(k);
        out.lhs.push_back(lhs);
        out.rhs.push_back(rhs);
        if (lhs != rhs) out.holds = false;
    }
    return out;
}

struct StructureTable {
    std::vector<int> degrees;
    std::vector<std::vector<RatVec>> rep_coords;  // per degree: quotient representatives
    struct Entry {
        int deg_a;
        size_t ia;
        int deg_b;
        size_t ib;
        RatVec coeffs;  // over the representatives of degree deg_a+deg_b
    };
    std::vector<Entry> entries;
    size_t truncated_pairs = 0;
};

// Multiplication table of the reduced ring H^*(M//T(mu)) = H_T^*(M)/<K_T>,
// on coset representatives chosen as the non-pivot coordinates of each
// kernel slice.
inline StructureTable structure_constants(const SpacePtr& space, const RatVec& mu,
                                          const Subtorus& sub, int degree_bound = -1) {
    if (degree_bound < 0) degree_bound = 2 * space->complex_dim;
    SpacePtr t_space = project_moment(space, sub);
    Cohomology coh(t_space);
    auto directions = default_directions(space, sub);
    auto kernel = kernel_ideal(coh, mu, Subtorus::full(t_space->rank()), directions, degree_bound);

    StructureTable table;
    std::map<int, std::vector<RatVec>> reps;      // degree -> coordinate vectors
    std::map<int, std::vector<RatVec>> ker_rows;  // degree -> kernel basis rows
    for (const auto& ks : kernel) {
        const size_t n = coh.basis(ks.degree).dim();
        std::set<size_t> pivots;
        std::vector<RatVec> krows;
        for (size_t i = 0; i < ks.subspace.basis().rows(); ++i) {
            krows.push_back(ks.subspace.basis().row(i));
            for (size_t j = 0; j < n; ++j)
                if (!krows.back()[j].is_zero()) {
                    pivots.insert(j);
                    break;
                }
        }
        std::vector<RatVec> r;
        for (size_t j = 0; j < n; ++j) {
            if (pivots.count(j)) continue;
            RatVec v(n);
            v[j] = Rational(1);
            r.push_back(std::move(v));
        }
        table.degrees.push_back(ks.degree);
        table.rep_coords.push_back(r);
        reps[ks.degree] = std::move(r);
        ker_rows[ks.degree] = std::move(krows);
    }

    for (int da = 0; da <= degree_bound; da += 2) {
        for (int db = da; db <= degree_bound; db += 2) {
            const auto& ra = reps[da];
            const auto& rb = reps[db];
            if (ra.empty() || rb.empty()) continue;
            if (da + db > degree_bound) {
                table.truncated_pairs += ra.size() * rb.size();
                continue;
            }
            int dc = da + db;
            // rows of the combined system: kernel basis then representatives
            std::vector<RatVec> rows = ker_rows[dc];
            size_t ker_dim = rows.size();
            rows.insert(rows.end(), reps[dc].begin(), reps[dc].end());
            for (size_t ia = 0; ia < ra.size(); ++ia)
                for (size_t ib = 0; ib < rb.size(); ++ib) {
                    EquivariantClass pa = coh.combine(da, ra[ia]);
                    EquivariantClass pb = coh.combine(db, rb[ib]);
                    auto coords = coh.express(class_mul(pa, pb));
                    if (!coords) throw std::logic_error("structure_constants: product left the ring");
                    RatVec coeffs(reps[dc].size());
                    if (!coords->empty()) {
                        if (rows.empty()) {
                            bool all_zero = true;
                            for (auto& c : *coords) all_zero = all_zero && c.is_zero();
                            if (!all_zero)
                                throw std::logic_error("structure_constants: inconsistent quotient");
                        } else {
                            auto sol = coordinates_in_span(rows, *coords);
                            if (!sol)
                                throw std::logic_error("structure_constants: product not expressible");
                            for (size_t j = 0; j < coeffs.size(); ++j) coeffs[j] = (*sol)[ker_dim + j];
                        }
                    }
                    table.entries.push_back({da, ia, db, ib, std::move(coeffs)});
                }
        }
    }
    return table;
}

}  // namespace gkm
