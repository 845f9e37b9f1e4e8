// Tiny expression language for naming equivariant classes on the command
// line: sums of terms, each a rational coefficient times a product of named
// generators with optional integer powers, e.g.
//
//   "xl*xr"            "u1^2 - 1/3*xr^2"           "u1*u2 + u1*xr"
//
// Generators available on every space: one, u1..ud (the module classes of
// the variables), and x (the moment class, normalized to vanish at the first
// fixed point). Product-built spaces also get xl and xr, the factor moment
// classes extended by 1.

#pragma once

#include "gkmred/cohomology.hpp"

#include <cctype>
#include <map>
#include <string>

namespace gkm {

// Restriction tuple p -> <Phi(p) - Phi(p0), vars>; GKM-valid because edge
// segments are parallel to edge weights.
inline EquivariantClass moment_class(const SpacePtr& space) {
    const auto& base = space->points.front().moment;
    std::map<std::string, MultiPoly> r;
    for (const auto& p : space->points) {
        MultiPoly f(space->rank());
        Exponents e(space->rank(), 0);
        for (int i = 0; i < space->rank(); ++i) {
            e[i] = 1;
            f.add_term(e, p.moment[i] - base[i]);
            e[i] = 0;
        }
        r.emplace(p.name, std::move(f));
    }
    return EquivariantClass(space, 2, std::move(r));
}

inline std::map<std::string, EquivariantClass> named_generators(const SpacePtr& space) {
    std::map<std::string, EquivariantClass> gens;
    gens.emplace("one", EquivariantClass::unit(space));
    for (int i = 0; i < space->rank(); ++i)
        gens.emplace("u" + std::to_string(i + 1),
                     module_action(MultiPoly::variable(space->rank(), i),
                                   EquivariantClass::unit(space)));
    gens.emplace("x", moment_class(space));
    if (space->provenance == GKMSpace::Provenance::product) {
        gens.emplace("xl", kunneth(moment_class(space->factor_a),
                                   EquivariantClass::unit(space->factor_b), space));
        gens.emplace("xr", kunneth(EquivariantClass::unit(space->factor_a),
                                   moment_class(space->factor_b), space));
    }
    return gens;
}

namespace detail {

class ExprParser {
  public:
    ExprParser(const std::string& text, const SpacePtr& space)
        : text_(text), space_(space), gens_(named_generators(space)) {}

    EquivariantClass parse() {
        auto c = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return c;
    }

  private:
    [[noreturn]] void fail(const std::string& m) const {
        throw std::invalid_argument("class expression '" + text_ + "': " + m);
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    EquivariantClass parse_sum() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        EquivariantClass acc = parse_term();
        if (neg) acc = Rational(-1) * acc;
        for (;;) {
            skip_ws();
            if (eat('+')) {
                auto t = parse_term();
                if (t.degree() != acc.degree()) fail("terms of different degree");
                acc = acc + t;
            } else if (eat('-')) {
                auto t = parse_term();
                if (t.degree() != acc.degree()) fail("terms of different degree");
                acc = acc - t;
            } else {
                return acc;
            }
        }
    }

    EquivariantClass parse_term() {
        Rational coeff(1);
        EquivariantClass acc = EquivariantClass::unit(space_);
        bool any = false;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_rational_token();
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                acc = class_mul(acc, parse_factor());
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (!eat('*')) break;
        }
        if (!any) fail("empty term");
        return coeff * acc;
    }

    Rational parse_rational_token() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string num = text_.substr(start, pos_ - start);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            size_t ds = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (ds == pos_) fail("malformed rational coefficient");
            return parse_rational(num + "/" + text_.substr(ds, pos_ - ds));
        }
        return parse_rational(num);
    }

    EquivariantClass parse_factor() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        auto it = gens_.find(name);
        if (it == gens_.end()) fail("unknown generator '" + name + "'");
        EquivariantClass base = it->second;
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            size_t ds = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (ds == pos_) fail("malformed exponent");
            int e = std::stoi(text_.substr(ds, pos_ - ds));
            EquivariantClass acc = EquivariantClass::unit(space_);
            for (int i = 0; i < e; ++i) acc = class_mul(acc, base);
            return acc;
        }
        return base;
    }

    std::string text_;
    size_t pos_ = 0;
    SpacePtr space_;
    std::map<std::string, EquivariantClass> gens_;
};

}  // namespace detail

inline EquivariantClass parse_class_expr(const std::string& text, const SpacePtr& space) {
    return detail::ExprParser(text, space).parse();
}

}  // namespace gkm
