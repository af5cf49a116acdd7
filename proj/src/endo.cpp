#include "jacal/endo.hpp"

#include <stdexcept>

namespace jacal {

PolyMat mat_zero(const Vars& v, std::size_t rows, std::size_t cols) {
    return PolyMat(rows, std::vector<Poly>(cols, Poly::zero(v)));
}

PolyMat mat_identity(const Vars& v, std::size_t n) {
    PolyMat m = mat_zero(v, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Poly::one(v);
    return m;
}

PolyMat mat_add(const PolyMat& a, const PolyMat& b) {
    PolyMat r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

PolyMat mat_sub(const PolyMat& a, const PolyMat& b) {
    PolyMat r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] - b[i][j];
    return r;
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    if (!a.empty() && a[0].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
    const Vars& v = a.empty() ? Vars() : a[0][0].vars();
    PolyMat r = mat_zero(v, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

PolyMat mat_scale(const PolyMat& a, const Rat& c) {
    PolyMat r = a;
    for (auto& row : r)
        for (auto& p : row) p = p * c;
    return r;
}

PolyMat mat_transpose(const PolyMat& a) {
    std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    const Vars& v = a.empty() ? Vars() : a[0][0].vars();
    PolyMat r = mat_zero(v, m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

bool mat_equal(const PolyMat& a, const PolyMat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

bool mat_is_zero(const PolyMat& a) {
    for (auto& row : a)
        for (auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

namespace {

Poly det_rec(const PolyMat& a, std::vector<std::size_t> cols, std::size_t row) {
    const Vars& v = a[0][0].vars();
    if (cols.size() == 1) return a[row][cols[0]];
    Poly acc = Poly::zero(v);
    for (std::size_t t = 0; t < cols.size(); ++t) {
        if (a[row][cols[t]].is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t u = 0; u < cols.size(); ++u)
            if (u != t) rest.push_back(cols[u]);
        Poly sub = det_rec(a, rest, row + 1);
        Poly term = a[row][cols[t]] * sub;
        acc += (t % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

Poly mat_det(const PolyMat& a) {
    std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("mat_det: empty matrix");
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return det_rec(a, cols, 0);
}

std::optional<PolyMat> mat_try_invert(const PolyMat& a) {
    Poly d = mat_det(a);
    if (!d.is_constant() || d.is_zero()) return std::nullopt;
    Rat dv = d.constant_term();
    std::size_t n = a.size();
    const Vars& v = a[0][0].vars();
    PolyMat inv = mat_zero(v, n, n);
    if (n == 1) {
        inv[0][0] = Poly::constant(v, Rat(1) / dv);
        return inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // cofactor C_ji for the adjugate
            PolyMat minor;
            minor.reserve(n - 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<Poly> row;
                row.reserve(n - 1);
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(a[r][c]);
                minor.push_back(std::move(row));
            }
            Poly cof = mat_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i][j] = cof * (Rat(1) / dv);
        }
    }
    return inv;
}

EndoTensor::EndoTensor(Vars vars, PolyMat m) : vars_(std::move(vars)), m_(std::move(m)) {
    for (auto& row : m_)
        if (row.size() != m_.size()) throw std::invalid_argument("EndoTensor: matrix not square");
}

EndoTensor EndoTensor::identity(const Vars& v, int rank) {
    return EndoTensor(v, mat_identity(v, static_cast<std::size_t>(rank)));
}

EndoTensor EndoTensor::zero(const Vars& v, int rank) {
    return EndoTensor(v, mat_zero(v, static_cast<std::size_t>(rank), static_cast<std::size_t>(rank)));
}

KVector EndoTensor::apply1(const KVector& x) const {
    if (x.degree() != 1) throw std::invalid_argument("EndoTensor::apply1: degree != 1");
    KVector r(vars_, x.rank(), 1, x.variance());
    for (auto& [k, c] : x.terms()) {
        std::size_t j = static_cast<std::size_t>(k[0]);
        for (std::size_t i = 0; i < m_.size(); ++i) {
            // multivectors transform by columns, forms by rows (transpose)
            const Poly& entry = x.variance() == Variance::Multivector ? m_[i][j] : m_[j][i];
            if (!entry.is_zero()) r.add_term({static_cast<int>(i)}, c * entry);
        }
    }
    return r;
}

KVector insert_endo(const EndoTensor& n, const KVector& w) {
    KVector r(w.vars(), w.rank(), w.degree(), w.variance());
    for (auto& [k, c] : w.terms()) {
        for (std::size_t t = 0; t < k.size(); ++t) {
            std::size_t j = static_cast<std::size_t>(k[t]);
            for (std::size_t l = 0; l < static_cast<std::size_t>(n.rank()); ++l) {
                const Poly& entry = w.variance() == Variance::Form ? n.at(j, l) : n.at(l, j);
                if (entry.is_zero()) continue;
                IdxTuple idx = k;
                idx[t] = static_cast<int>(l);
                r.add_term(idx, c * entry);
            }
        }
    }
    return r;
}

}  // namespace jacal
