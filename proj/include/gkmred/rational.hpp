// Exact rational arithmetic on top of GMP.
//
// Rational is a thin value wrapper around mpq_class that keeps every value
// canonical (lowest terms, positive denominator, 0 == 0/1) and adds strict
// "p/q" string parsing. No floats anywhere.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm {

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_), no_canon{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Canonical form: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

  private:
    struct no_canon {};
    Rational(mpq_class&& q, no_canon) : v_(std::move(q)) {}
    mpq_class v_;
};

// Strict parser for "p" or "p/q" with optional leading sign. Anything else
// (floats, whitespace, empty denominators) is rejected.
inline std::optional<Rational> try_parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto is_digits = [](const std::string& t, size_t from) {
        if (from >= t.size()) return false;
        for (size_t i = from; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    size_t num_from = (num.size() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
    if (!is_digits(num, num_from) || !is_digits(den, 0)) return std::nullopt;
    if (num[0] == '+') num.erase(0, 1);  // mpz rejects a leading plus
    mpz_class n(num), d(den);
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

inline Rational parse_rational(const std::string& s) {
    auto r = try_parse_rational(s);
    if (!r) throw std::invalid_argument("not a rational: '" + s + "'");
    return *r;
}

using RatVec = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;

inline Rational dot(const RatVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational r;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * Rational(static_cast<long>(b[i]));
    return r;
}

inline std::int64_t dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    std::int64_t r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

inline bool is_zero_vec(const IntVec& v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { auto t = a % b; a = b; b = t; }
    return a;
}

// Divide out the content and fix the sign of the leading nonzero entry to be
// positive. The zero vector is returned unchanged.
inline IntVec primitive(IntVec v) {
    std::int64_t g = 0;
    for (auto x : v) g = gcd64(g, x);
    if (g == 0) return v;
    for (auto& x : v) x /= g;
    for (auto x : v) {
        if (x > 0) break;
        if (x < 0) {
            for (auto& y : v) y = -y;
            break;
        }
    }
    return v;
}

inline bool parallel(const IntVec& a, const IntVec& b) {
    // a || b  iff  a_i b_j == a_j b_i for all i < j
    if (a.size() != b.size()) throw std::invalid_argument("parallel: length mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

}  // namespace gkm
