// poly.hpp - multivariate polynomials with exact rational coefficients.
//
// A Poly models a smooth function on the base R^m restricted to the polynomial
// ring Q[x1..xm]. Terms live in a canonically ordered sparse map keyed by the
// exponent multi-index; zero coefficients are never stored, so operator== is
// structural identity and "is exactly zero" is decidable.
#pragma once

#include "jacal/rational.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacal {

// Ordered coordinate names of a base chart, shared between all objects over it.
class Vars {
public:
    Vars() : names_(std::make_shared<const std::vector<std::string>>()) {}
    explicit Vars(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }

    // Index of a coordinate name, or -1.
    int index_of(const std::string& s) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == s) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const Vars& o) const {
        return names_ == o.names_ || *names_ == *o.names_;
    }
    bool operator!=(const Vars& o) const { return !(*this == o); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

// Exponent multi-index; size always equals the chart dimension.
using Expo = std::vector<unsigned>;

// Graded-lexicographic term order: total degree first, then lexicographic.
// Any fixed total order would do; this one prints low-degree terms first.
struct ExpoLess {
    bool operator()(const Expo& a, const Expo& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

class Poly {
public:
    Poly() = default;
    explicit Poly(Vars vars) : vars_(std::move(vars)) {}
    Poly(Vars vars, const Rat& c) : vars_(std::move(vars)) {
        if (c != 0) terms_[Expo(vars_.size(), 0)] = c;
    }

    static Poly constant(const Vars& v, const Rat& c) { return Poly(v, c); }
    static Poly zero(const Vars& v) { return Poly(v); }
    static Poly one(const Vars& v) { return Poly(v, 1); }
    // The coordinate function x_i.
    static Poly var(const Vars& v, std::size_t i);
    static Poly monomial(const Vars& v, const Expo& e, const Rat& c);

    const Vars& vars() const { return vars_; }
    const std::map<Expo, Rat, ExpoLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (the value at the origin).
    Rat constant_term() const;
    unsigned total_degree() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(unsigned k) const;
    // d/dx_i, exact.
    Poly derivative(std::size_t i) const;
    // Value at a rational point; pt.size() must equal the chart dimension.
    Rat eval(const std::vector<Rat>& pt) const;

    // Canonical text: terms in map order, rationals as a/b, e.g. "1 - 1/2*x^2*y".
    std::string str() const;

    void add_term(const Expo& e, const Rat& c);  // accumulates, drops zeros

private:
    void check_compatible(const Poly& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("Poly: mismatched coordinate charts");
    }

    Vars vars_;
    std::map<Expo, Rat, ExpoLess> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

}  // namespace jacal
