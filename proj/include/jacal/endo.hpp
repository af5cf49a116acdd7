// endo.hpp - bundle endomorphisms as square Poly matrices, plus matrix helpers.
//
// Column convention: N(e_j) = sum_i N[i][j] e_i, so composition of bundle maps
// is matrix product and the dual map N* acts on coframe coefficient vectors by
// the transpose.
#pragma once

#include "jacal/kvector.hpp"

#include <optional>
#include <vector>

namespace jacal {

using PolyMat = std::vector<std::vector<Poly>>;

PolyMat mat_zero(const Vars& v, std::size_t rows, std::size_t cols);
PolyMat mat_identity(const Vars& v, std::size_t n);
PolyMat mat_add(const PolyMat& a, const PolyMat& b);
PolyMat mat_sub(const PolyMat& a, const PolyMat& b);
PolyMat mat_mul(const PolyMat& a, const PolyMat& b);
PolyMat mat_scale(const PolyMat& a, const Rat& c);
PolyMat mat_transpose(const PolyMat& a);
bool mat_equal(const PolyMat& a, const PolyMat& b);
bool mat_is_zero(const PolyMat& a);
Poly mat_det(const PolyMat& a);  // cofactor expansion; exact
// Inverse when det is a nonzero constant (adjugate / det); nullopt otherwise.
std::optional<PolyMat> mat_try_invert(const PolyMat& a);

class EndoTensor {
public:
    EndoTensor() = default;
    EndoTensor(Vars vars, PolyMat m);
    static EndoTensor identity(const Vars& v, int rank);
    static EndoTensor zero(const Vars& v, int rank);

    const Vars& vars() const { return vars_; }
    int rank() const { return static_cast<int>(m_.size()); }
    const PolyMat& matrix() const { return m_; }
    const Poly& at(std::size_t i, std::size_t j) const { return m_[i][j]; }

    EndoTensor transpose() const { return EndoTensor(vars_, mat_transpose(m_)); }
    EndoTensor compose(const EndoTensor& o) const { return EndoTensor(vars_, mat_mul(m_, o.m_)); }
    EndoTensor operator+(const EndoTensor& o) const { return EndoTensor(vars_, mat_add(m_, o.m_)); }
    EndoTensor operator-(const EndoTensor& o) const { return EndoTensor(vars_, mat_sub(m_, o.m_)); }
    EndoTensor operator*(const Rat& c) const { return EndoTensor(vars_, mat_scale(m_, c)); }
    bool operator==(const EndoTensor& o) const { return vars_ == o.vars_ && mat_equal(m_, o.m_); }
    bool operator!=(const EndoTensor& o) const { return !(*this == o); }

    // N applied to a degree-1 multivector, or N* (transpose) to a degree-1 form.
    KVector apply1(const KVector& x) const;

private:
    Vars vars_;
    PolyMat m_;
};

// Degree-0 derivation extension of N across the slots of a form or multivector:
// (insert_endo(N, w))(u1,...,uk) = sum_i w(u1,...,N u_i,...,uk).
// On degree-1 forms this is N*; on degree-0 it is zero.
KVector insert_endo(const EndoTensor& n, const KVector& w);

}  // namespace jacal
