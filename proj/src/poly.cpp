#include "jacal/poly.hpp"

#include <sstream>

namespace jacal {

Poly Poly::var(const Vars& v, std::size_t i) {
    if (i >= v.size()) throw std::out_of_range("Poly::var: index out of range");
    Expo e(v.size(), 0);
    e[i] = 1;
    return monomial(v, e, 1);
}

Poly Poly::monomial(const Vars& v, const Expo& e, const Rat& c) {
    if (e.size() != v.size()) throw std::invalid_argument("Poly::monomial: bad exponent length");
    Poly p(v);
    if (c != 0) p.terms_[e] = c;
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (unsigned e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Rat Poly::constant_term() const {
    Expo z(vars_.size(), 0);
    auto it = terms_.find(z);
    return it == terms_.end() ? Rat(0) : it->second;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned k : e) s += k;
        if (s > d) d = s;
    }
    return d;
}

void Poly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(vars_);
    for (auto& [ea, ca] : terms_) {
        for (auto& [eb, cb] : o.terms_) {
            Expo e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = Poly::one(vars_);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
}

Poly Poly::derivative(std::size_t i) const {
    if (i >= vars_.size()) throw std::out_of_range("Poly::derivative: index out of range");
    Poly r(vars_);
    for (auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Expo d = e;
        d[i] -= 1;
        r.add_term(d, c * Rat(e[i]));
    }
    return r;
}

Rat Poly::eval(const std::vector<Rat>& pt) const {
    if (pt.size() != vars_.size()) throw std::invalid_argument("Poly::eval: bad point dimension");
    Rat acc = 0;
    for (auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= pt[i];
        acc += t;
    }
    return acc;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto rit = terms_.rbegin(); rit != terms_.rend(); ++rit) {
        const auto& [e, c] = *rit;
        Rat a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_.name(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << rat_str(a);
        } else if (a == 1) {
            out << mono;
        } else {
            out << rat_str(a) << "*" << mono;
        }
    }
    return out.str();
}

}  // namespace jacal
