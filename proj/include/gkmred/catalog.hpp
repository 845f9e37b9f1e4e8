// Built-in example spaces: projective spaces with the standard linear torus
// action, the dilated product of two CP^2s under the diagonal torus, and a
// generic SU(3) coadjoint orbit (the hexagon).

#pragma once

#include "gkmred/space.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace gkm {

// primitive() normalizes the sign; weights must keep their direction
inline IntVec primitive_signed(IntVec v) {
    std::int64_t g = 0;
    for (auto x : v) g = gcd64(g, x);
    if (g == 0) return v;
    for (auto& x : v) x /= g;
    return v;
}

// CP^n under the standard T^n action, moment simplex with vertices at 0 and
// the coordinate unit vectors. Weights at each vertex point along the edges.
inline SpacePtr make_cpn(int n) {
    if (n < 0) throw std::invalid_argument("make_cpn: n must be nonnegative");
    if (n == 0) return make_point(1, "cp0");
    GKMSpace s;
    s.action = TorusAction::standard(n);
    s.complex_dim = n;
    s.name = (n == 1) ? "cp1" : (n == 2 ? "cp2" : "cp" + std::to_string(n));
    auto vertex = [n](int i) {
        RatVec v(n, Rational(0));
        if (i > 0) v[i - 1] = Rational(1);
        return v;
    };
    for (int i = 0; i <= n; ++i) {
        FixedPoint p;
        p.name = "p" + std::to_string(i);
        p.moment = vertex(i);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            IntVec w(n, 0);
            if (j > 0) w[j - 1] += 1;
            if (i > 0) w[i - 1] -= 1;
            p.weights.push_back(std::move(w));
        }
        s.points.push_back(std::move(p));
    }
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            IntVec w(n, 0);
            if (j > 0) w[j - 1] += 1;
            if (i > 0) w[i - 1] -= 1;
            s.edges.push_back({"p" + std::to_string(i), "p" + std::to_string(j), primitive(w)});
        }
    return finish_space(std::move(s));
}

inline SpacePtr make_cp1() { return make_cpn(1); }
inline SpacePtr make_cp2() { return make_cpn(2); }

inline SpacePtr make_cp2xcp2_k3() {
    SpacePtr c = make_cp2();
    auto s = product(c, c, Rational(3));
    auto copy = *s;
    copy.name = "cp2xcp2-k3";
    copy.rebuild_index();
    auto out = std::make_shared<GKMSpace>(std::move(copy));
    return out;
}

// Generic SU(3) coadjoint orbit: the orbit of (3,1,0). Vertices are the six
// permutations, projected to their first two coordinates; two vertices are
// joined when they differ by a transposition, and the isotropy weights are
// the primitive directions toward the neighbors (the roots).
inline SpacePtr make_su3_hexagon() {
    GKMSpace s;
    s.action = TorusAction::standard(2);
    s.complex_dim = 3;
    s.name = "su3-hexagon";

    std::vector<std::array<int, 3>> perms = {{3, 1, 0}, {1, 3, 0}, {3, 0, 1},
                                             {0, 3, 1}, {1, 0, 3}, {0, 1, 3}};
    auto name_of = [](const std::array<int, 3>& t) {
        return "v" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
    };
    auto moment_of = [](const std::array<int, 3>& t) {
        return RatVec{Rational(t[0]), Rational(t[1])};
    };
    auto differ_by_transposition = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
        int diff = 0;
        for (int i = 0; i < 3; ++i)
            if (a[i] != b[i]) ++diff;
        return diff == 2;
    };

    for (const auto& t : perms) {
        FixedPoint p;
        p.name = name_of(t);
        p.moment = moment_of(t);
        s.points.push_back(std::move(p));
    }
    for (size_t i = 0; i < perms.size(); ++i)
        for (size_t j = i + 1; j < perms.size(); ++j) {
            if (!differ_by_transposition(perms[i], perms[j])) continue;
            RatVec a = moment_of(perms[i]), b = moment_of(perms[j]);
            IntVec dir(2);
            for (int k = 0; k < 2; ++k) {
                Rational d = b[k] - a[k];
                dir[k] = static_cast<std::int64_t>(d.numerator().get_si());
            }
            s.edges.push_back({name_of(perms[i]), name_of(perms[j]), primitive(dir)});
        }
    // weights: primitive direction toward each neighbor
    for (auto& p : s.points) {
        for (const auto& e : s.edges) {
            const std::string* other = nullptr;
            if (e.from == p.name)
                other = &e.to;
            else if (e.to == p.name)
                other = &e.from;
            else
                continue;
            RatVec om;
            for (const auto& q : s.points)
                if (q.name == *other) om = q.moment;
            IntVec w(2);
            for (int k = 0; k < 2; ++k)
                w[k] = static_cast<std::int64_t>((om[k] - p.moment[k]).numerator().get_si());
            p.weights.push_back(primitive_signed(w));
        }
    }
    return finish_space(std::move(s));
}

inline std::vector<std::string> builtin_names() {
    return {"point", "cp1", "cp2", "cpn(n)", "cp2xcp2-k3", "su3-hexagon"};
}

// Resolve "point", "cp1", "cp2", "cpN"/"cpn(N)", "cp2xcp2-k3", "su3-hexagon".
inline SpacePtr builtin_space(const std::string& name) {
    if (name == "point") return make_point(1, "point");
    if (name == "cp1") return make_cp1();
    if (name == "cp2") return make_cp2();
    if (name == "cp2xcp2-k3") return make_cp2xcp2_k3();
    if (name == "su3-hexagon") return make_su3_hexagon();
    auto parse_n = [](const std::string& t) -> int {
        if (t.empty()) return -1;
        for (char c : t)
            if (c < '0' || c > '9') return -1;
        return std::stoi(t);
    };
    if (name.rfind("cpn(", 0) == 0 && name.back() == ')') {
        int n = parse_n(name.substr(4, name.size() - 5));
        if (n >= 0) return make_cpn(n);
    }
    if (name.rfind("cp", 0) == 0) {
        int n = parse_n(name.substr(2));
        if (n >= 0) return make_cpn(n);
    }
    throw std::invalid_argument("unknown builtin space '" + name + "'");
}

}  // namespace gkm
