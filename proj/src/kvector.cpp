#include "jacal/kvector.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jacal {

FrameNames FrameNames::generic(std::size_t r) {
    FrameNames n;
    for (std::size_t i = 1; i <= r; ++i) {
        n.mv.push_back("e" + std::to_string(i));
        n.form.push_back("a" + std::to_string(i));
    }
    return n;
}

FrameNames FrameNames::tangent(const Vars& v) {
    FrameNames n;
    for (std::size_t i = 0; i < v.size(); ++i) {
        n.mv.push_back("D" + v.name(i));
        n.form.push_back("d" + v.name(i));
    }
    return n;
}

FrameNames FrameNames::extended(const Vars& v) {
    FrameNames n = tangent(v);
    n.mv.push_back("Dt");
    n.form.push_back("dt");
    return n;
}

KVector reinterpret_variance(const KVector& w, Variance v) {
    KVector out(w.vars(), w.rank(), w.degree(), v);
    for (const auto& [idx, c] : w.terms()) out.add_term(idx, c);
    return out;
}

int sort_sign(IdxTuple& idx) {
    int sign = 1;
    // insertion sort, counting swaps; tuples are tiny
    for (std::size_t i = 1; i < idx.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && idx[j] < idx[j - 1]) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
            --j;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

int merge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int crossings = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining elements of a
            crossings += static_cast<int>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return (crossings % 2 == 0) ? 1 : -1;
}

KVector::KVector(Vars vars, int rank, int degree, Variance variance)
    : vars_(std::move(vars)), rank_(rank), degree_(degree), variance_(variance) {
    // Degrees above the rank are allowed: those exterior powers are the zero
    // space, and differentials/wedges land there on top-degree input.
    if (degree < 0) throw std::invalid_argument("KVector: negative degree");
}

KVector KVector::scalar(const Vars& v, int rank, Variance var, const Poly& f) {
    KVector k(v, rank, 0, var);
    k.add_term({}, f);
    return k;
}

KVector KVector::frame(const Vars& v, int rank, Variance var, int i) {
    if (i < 0 || i >= rank) throw std::out_of_range("KVector::frame: index out of range");
    KVector k(v, rank, 1, var);
    k.add_term({i}, Poly::one(v));
    return k;
}

void KVector::add_term(const IdxTuple& idx, const Poly& c) {
    if (static_cast<int>(idx.size()) != degree_)
        throw std::invalid_argument("KVector::add_term: tuple length != degree");
    if (c.is_zero()) return;
    IdxTuple key = idx;
    int sign = sort_sign(key);
    if (sign == 0) return;
    for (int v : key)
        if (v < 0 || v >= rank_) throw std::out_of_range("KVector::add_term: index out of range");
    Poly add = (sign == 1) ? c : -c;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(add));
    } else {
        it->second += add;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly KVector::component(const IdxTuple& idx) const {
    IdxTuple key = idx;
    int sign = sort_sign(key);
    if (sign == 0) return Poly::zero(vars_);
    auto it = terms_.find(key);
    if (it == terms_.end()) return Poly::zero(vars_);
    return sign == 1 ? it->second : -it->second;
}

KVector KVector::operator-() const {
    KVector r(vars_, rank_, degree_, variance_);
    for (auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

KVector KVector::operator+(const KVector& o) const {
    if (vars_ != o.vars_ || rank_ != o.rank_ || degree_ != o.degree_ || variance_ != o.variance_)
        throw std::invalid_argument("KVector: incompatible operands for +");
    KVector r = *this;
    for (auto& [k, c] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

KVector KVector::operator-(const KVector& o) const { return *this + (-o); }

KVector KVector::operator*(const Poly& f) const {
    KVector r(vars_, rank_, degree_, variance_);
    if (f.is_zero()) return r;
    for (auto& [k, c] : terms_) {
        Poly p = c * f;
        if (!p.is_zero()) r.terms_[k] = std::move(p);
    }
    return r;
}

KVector KVector::operator*(const Rat& c) const {
    KVector r(vars_, rank_, degree_, variance_);
    if (c == 0) return r;
    for (auto& [k, p] : terms_) r.terms_[k] = p * c;
    return r;
}

bool KVector::operator==(const KVector& o) const {
    return vars_ == o.vars_ && rank_ == o.rank_ && degree_ == o.degree_ &&
           variance_ == o.variance_ && terms_ == o.terms_;
}

KVector KVector::wedge(const KVector& o) const {
    if (vars_ != o.vars_ || rank_ != o.rank_ || variance_ != o.variance_)
        throw std::invalid_argument("KVector: incompatible operands for wedge");
    int d = degree_ + o.degree_;
    if (d > rank_) return KVector(vars_, rank_, d, variance_);  // identically zero space
    KVector r(vars_, rank_, d, variance_);
    IdxTuple merged;
    for (auto& [ka, ca] : terms_) {
        for (auto& [kb, cb] : o.terms_) {
            int sign = merge_sign(ka, kb, merged);
            if (sign == 0) continue;
            Poly p = ca * cb;
            if (sign == -1) p = -p;
            if (p.is_zero()) continue;
            auto it = r.terms_.find(merged);
            if (it == r.terms_.end()) {
                r.terms_.emplace(merged, std::move(p));
            } else {
                it->second += p;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

KVector KVector::eval_at(const std::vector<Rat>& pt) const {
    KVector r(vars_, rank_, degree_, variance_);
    for (auto& [k, c] : terms_) {
        Rat v = c.eval(pt);
        if (v != 0) r.terms_[k] = Poly::constant(vars_, v);
    }
    return r;
}

std::vector<Poly> KVector::coeffs1() const {
    if (degree_ != 1) throw std::logic_error("KVector::coeffs1: degree != 1");
    std::vector<Poly> out(static_cast<std::size_t>(rank_), Poly::zero(vars_));
    for (auto& [k, c] : terms_) out[static_cast<std::size_t>(k[0])] = c;
    return out;
}

std::string KVector::str(const FrameNames& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [k, c] : terms_) {
        std::string coeff = c.str();
        bool negated = false;
        if (coeff.size() > 1 && coeff[0] == '-' && c.terms().size() == 1) {
            negated = true;
            coeff = coeff.substr(1);
        }
        if (first) {
            if (negated) out << "-";
        } else {
            out << (negated ? " - " : " + ");
        }
        first = false;

        std::string frame;
        for (int i : k) {
            if (!frame.empty()) frame += "^";
            frame += names.of(variance_, static_cast<std::size_t>(i));
        }
        if (frame.empty()) {
            out << coeff;
        } else if (coeff == "1") {
            out << frame;
        } else {
            bool atomic = c.terms().size() <= 1;
            out << (atomic ? coeff : "(" + coeff + ")") << "*" << frame;
        }
    }
    return out.str();
}

std::string KVector::str() const {
    return str(FrameNames::generic(static_cast<std::size_t>(rank_)));
}

KVector contract(const KVector& one, const KVector& target) {
    if (one.degree() != 1) throw std::invalid_argument("contract: first argument must have degree 1");
    if (one.variance() != opposite(target.variance()))
        throw std::invalid_argument("contract: variances must be dual");
    if (target.degree() == 0)
        return KVector(target.vars(), target.rank(), 0, target.variance());
    KVector r(target.vars(), target.rank(), target.degree() - 1, target.variance());
    for (auto& [kx, cx] : one.terms()) {
        int x = kx[0];
        for (auto& [kt, ct] : target.terms()) {
            for (std::size_t t = 0; t < kt.size(); ++t) {
                if (kt[t] != x) continue;
                IdxTuple rest;
                rest.reserve(kt.size() - 1);
                for (std::size_t u = 0; u < kt.size(); ++u)
                    if (u != t) rest.push_back(kt[u]);
                Poly p = cx * ct;
                if (t % 2 == 1) p = -p;
                r.add_term(rest, p);
                break;  // indices in kt are distinct
            }
        }
    }
    return r;
}

KVector contract_multi(const KVector& q, const KVector& target) {
    if (q.variance() != opposite(target.variance()))
        throw std::invalid_argument("contract_multi: variances must be dual");
    KVector acc(target.vars(), target.rank(),
                std::max(0, target.degree() - q.degree()), target.variance());
    for (auto& [kq, cq] : q.terms()) {
        if (static_cast<int>(kq.size()) > target.degree()) continue;
        KVector cur = target;
        for (int idx : kq) {
            KVector one = KVector::frame(q.vars(), q.rank(), q.variance(), idx);
            cur = contract(one, cur);
        }
        acc += cur * cq;
    }
    return acc;
}

Poly eval_on(const KVector& w, const std::vector<KVector>& args) {
    if (static_cast<int>(args.size()) != w.degree())
        throw std::invalid_argument("eval_on: argument count != degree");
    KVector cur = w;
    for (auto& a : args) cur = contract(a, cur);
    return cur.component({});
}

}  // namespace jacal
