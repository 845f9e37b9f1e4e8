// Multivariate polynomials over Q with dense exponent-vector keys.
//
// Variables carry cohomological degree 2, so a monomial of polynomial degree
// k sits in cohomological degree 2k. Everything here is graded and exact;
// the only division we ever need is by a nonzero homogeneous linear form.

#pragma once

#include "gkmred/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gkm {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

class MultiPoly {
  public:
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(int rank = 0) : rank_(rank) {
        if (rank < 0) throw std::invalid_argument("MultiPoly: negative rank");
    }

    static MultiPoly constant(int rank, const Rational& c) {
        MultiPoly p(rank);
        p.add_term(Exponents(rank, 0), c);
        return p;
    }

    static MultiPoly variable(int rank, int i, const Rational& c = Rational(1)) {
        if (i < 0 || i >= rank) throw std::invalid_argument("MultiPoly: variable index");
        MultiPoly p(rank);
        Exponents e(rank, 0);
        e[i] = 1;
        p.add_term(e, c);
        return p;
    }

    // <w, x> as a linear form
    static MultiPoly linear_form(const IntVec& w) {
        MultiPoly p(static_cast<int>(w.size()));
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0) p.add_term_unit(i, Rational(static_cast<long>(w[i])));
        return p;
    }

    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c) {
        if (static_cast<int>(e.size()) != rank_)
            throw std::invalid_argument("MultiPoly: exponent vector rank mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    MultiPoly operator-() const {
        MultiPoly r(rank_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_rank(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_rank(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_rank(b);
        MultiPoly r(a.rank_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Exponents e(a.rank_);
                for (int i = 0; i < a.rank_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) {
        MultiPoly r(p.rank_);
        if (c.is_zero()) return r;
        for (auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Cohomological degree when homogeneous (zero counts as any degree).
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = total_degree(terms_.begin()->first);
        for (auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    // largest 2*deg over the stored terms, -1 for zero
    int cohom_degree() const {
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, 2 * total_degree(e));
        return d;
    }

    MultiPoly homogeneous_part(int cohom_deg) const {
        MultiPoly r(rank_);
        if (cohom_deg < 0 || cohom_deg % 2) return r;
        for (auto& [e, c] : terms_)
            if (2 * total_degree(e) == cohom_deg) r.terms_.emplace(e, c);
        return r;
    }

    // x_i -> rows[i] expressed in a new variable set of rank new_rank.
    MultiPoly substitute_linear(const std::vector<MultiPoly>& rows, int new_rank) const {
        if (static_cast<int>(rows.size()) != rank_)
            throw std::invalid_argument("substitute_linear: needs one image per variable");
        MultiPoly r(new_rank);
        for (auto& [e, c] : terms_) {
            MultiPoly t = MultiPoly::constant(new_rank, c);
            for (int i = 0; i < rank_; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * rows[i];
            r += t;
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print in descending graded-lex order for readability
        std::vector<const TermMap::value_type*> ts;
        for (auto& kv : terms_) ts.push_back(&kv);
        std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
            int da = total_degree(a->first), db = total_degree(b->first);
            if (da != db) return da > db;
            return a->first > b->first;
        });
        for (auto* kv : ts) {
            const auto& [e, c] = *kv;
            Rational a = c;
            if (!first) {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            } else if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
            bool any_var = total_degree(e) > 0;
            bool need_star = !any_var || a != Rational(1);
            if (need_star) os << a.str();
            for (int i = 0; i < rank_; ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                need_star = true;
                if (static_cast<size_t>(i) < names.size())
                    os << names[i];
                else
                    os << "x" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

  private:
    void check_rank(const MultiPoly& o) const {
        if (rank_ != o.rank_) throw std::invalid_argument("MultiPoly: rank mismatch");
    }
    void add_term_unit(size_t i, const Rational& c) {
        Exponents e(rank_, 0);
        e[i] = 1;
        add_term(e, c);
    }

    int rank_;
    TermMap terms_;
};

// All exponent vectors of the given total degree, in lexicographic order.
inline std::vector<Exponents> monomials_of_degree(int rank, int deg) {
    std::vector<Exponents> out;
    if (deg < 0) return out;
    if (rank == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    Exponents cur(rank, 0);
    // recursive stars-and-bars, iterative via explicit stack on first index
    struct Rec {
        int rank, deg;
        std::vector<Exponents>& out;
        Exponents& cur;
        void go(int i, int rem) {
            if (i == rank - 1) {
                cur[i] = rem;
                out.push_back(cur);
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                cur[i] = v;
                go(i + 1, rem - v);
            }
        }
    } rec{rank, deg, out, cur};
    rec.go(0, deg);
    std::sort(out.begin(), out.end());
    return out;
}

inline long count_monomials(int rank, int deg) {
    // C(deg + rank - 1, rank - 1)
    if (deg < 0) return 0;
    if (rank == 0) return deg == 0 ? 1 : 0;
    long num = 1, den = 1;
    for (int i = 1; i <= rank - 1; ++i) {
        num *= deg + i;
        den *= i;
    }
    return num / den;
}

// Division with remainder by a nonzero homogeneous linear form l, eliminating
// the pivot variable of l. The remainder is supported on monomials free of
// the pivot variable, and a nonzero multiple of l always contains a pivot
// monomial, so remainder zero is equivalent to exact divisibility.
struct LinearDivision {
    MultiPoly quotient;
    MultiPoly remainder;
};

inline LinearDivision reduce_by_linear(const MultiPoly& p, const MultiPoly& l) {
    if (l.is_zero()) throw std::invalid_argument("reduce_by_linear: zero divisor");
    if (l.cohom_degree() != 2 || !l.is_homogeneous())
        throw std::invalid_argument("reduce_by_linear: divisor must be a linear form");
    if (p.rank() != l.rank()) throw std::invalid_argument("reduce_by_linear: rank mismatch");
    const int rank = p.rank();
    int pivot = -1;
    Rational pc;
    for (auto& [e, c] : l.terms()) {
        for (int i = 0; i < rank && pivot < 0; ++i)
            if (e[i] == 1) {
                pivot = i;
                pc = c;
            }
        if (pivot >= 0) break;
    }
    LinearDivision out{MultiPoly(rank), p};
    for (;;) {
        const Exponents* hit = nullptr;
        for (auto& [e, c] : out.remainder.terms())
            if (e[pivot] > 0) {
                hit = &e;
                break;
            }
        if (!hit) break;
        Exponents qe = *hit;
        qe[pivot] -= 1;
        Rational qc = out.remainder.coeff(*hit) / pc;
        MultiPoly qt(rank);
        qt.add_term(qe, qc);
        out.quotient += qt;
        out.remainder -= qt * l;
    }
    return out;
}

inline std::optional<MultiPoly> divide_by_linear(const MultiPoly& p, const MultiPoly& l) {
    LinearDivision d = reduce_by_linear(p, l);
    if (!d.remainder.is_zero()) return std::nullopt;
    return d.quotient;
}

inline bool poly_divides(const MultiPoly& divisor, const MultiPoly& dividend) {
    return divide_by_linear(dividend, divisor).has_value();
}

// Divisibility by a product of linear forms (used for Euler-class multiples).
inline bool divisible_by_linear_factors(const MultiPoly& p, const std::vector<MultiPoly>& factors) {
    MultiPoly cur = p;
    for (const auto& l : factors) {
        auto q = divide_by_linear(cur, l);
        if (!q) return false;
        cur = *q;
    }
    return true;
}

}  // namespace gkm
