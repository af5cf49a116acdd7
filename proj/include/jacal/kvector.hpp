// kvector.hpp - exterior algebra of frame sections with polynomial coefficients.
//
// A KVector of degree k is a section of the k-th exterior power of the frame
// bundle (variance Multivector) or of its dual (variance Form), stored as a
// sparse map from strictly increasing 0-based index tuples to Poly
// coefficients. Signs are normalized at insertion: inserting a tuple in any
// order accumulates the coefficient times the permutation sign, and tuples
// with repeated indices vanish. Zero coefficients are never stored, so
// equality is structural and exact.
#pragma once

#include "jacal/poly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace jacal {

enum class Variance { Multivector, Form };

inline Variance opposite(Variance v) {
    return v == Variance::Multivector ? Variance::Form : Variance::Multivector;
}

using IdxTuple = std::vector<int>;

// Display names for frame elements, one per variance slot.
// Tangent charts use Dx/dx style; generic frames fall back to e1 / a1.
struct FrameNames {
    std::vector<std::string> mv;    // multivector frame, e.g. "Dx"
    std::vector<std::string> form;  // dual coframe, e.g. "dx"
    static FrameNames generic(std::size_t r);
    static FrameNames tangent(const Vars& v);
    // Tangent names plus a trailing unit-section slot printed Dt/dt.
    static FrameNames extended(const Vars& v);
    const std::string& of(Variance var, std::size_t i) const {
        return var == Variance::Multivector ? mv[i] : form[i];
    }
};

class KVector {
public:
    KVector() = default;
    KVector(Vars vars, int rank, int degree, Variance variance);

    static KVector zero(const Vars& v, int rank, int degree, Variance var) {
        return KVector(v, rank, degree, var);
    }
    // Degree-0 element wrapping a scalar function.
    static KVector scalar(const Vars& v, int rank, Variance var, const Poly& f);
    // Single frame element e_i (mv) or its dual (form).
    static KVector frame(const Vars& v, int rank, Variance var, int i);

    const Vars& vars() const { return vars_; }
    int rank() const { return rank_; }
    int degree() const { return degree_; }
    Variance variance() const { return variance_; }
    const std::map<IdxTuple, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Accumulate c on the tuple `idx` (any order); repeated indices drop out,
    // unsorted tuples pick up the permutation sign.
    void add_term(const IdxTuple& idx, const Poly& c);

    // Signed coefficient of an arbitrary-order tuple (0 on repeats).
    Poly component(const IdxTuple& idx) const;

    KVector operator-() const;
    KVector operator+(const KVector& o) const;
    KVector operator-(const KVector& o) const;
    KVector& operator+=(const KVector& o) { return *this = *this + o; }
    KVector& operator-=(const KVector& o) { return *this = *this - o; }
    KVector operator*(const Poly& f) const;
    KVector operator*(const Rat& c) const;
    bool operator==(const KVector& o) const;
    bool operator!=(const KVector& o) const { return !(*this == o); }

    // Exterior product; degrees add, variances must agree.
    KVector wedge(const KVector& o) const;

    // All coefficients evaluated at a rational point (constant-coefficient result).
    KVector eval_at(const std::vector<Rat>& pt) const;

    // For degree 1: the coefficient vector, dense.
    std::vector<Poly> coeffs1() const;

    std::string str(const FrameNames& names) const;
    std::string str() const;

private:
    Vars vars_;
    int rank_ = 0;
    int degree_ = 0;
    Variance variance_ = Variance::Multivector;
    std::map<IdxTuple, Poly> terms_;
};

inline KVector operator*(const Poly& f, const KVector& v) { return v * f; }
inline KVector operator*(const Rat& c, const KVector& v) { return v * c; }

// Interior product of a degree-1 element of the opposite variance:
// i_xi(u1^...^up) = sum_t (-1)^t xi(u_t) u1^...^{omit t}...^up   (t 0-based).
// Covers both i_{1-form}(multivector) and i_{vector}(form).
KVector contract(const KVector& one, const KVector& target);

// Iterated interior product of a degree-q element Q of the opposite variance:
// on decomposables i_{x1^...^xq} = i_{xq} o ... o i_{x1}, so that
// contract_multi(X^Y, w) = w(X,Y,.) under the evaluation convention below.
KVector contract_multi(const KVector& q, const KVector& target);

// Full evaluation: w(u1,...,uk) = (i_{uk} ... i_{u1} w) for degree-1 args
// of the opposite variance; returns the scalar coefficient as a Poly.
Poly eval_on(const KVector& w, const std::vector<KVector>& args);

// Same coefficients on the same tuples, viewed with the given variance.
// Identifies a frame with its dual; used by dual-algebroid constructions.
KVector reinterpret_variance(const KVector& w, Variance v);

// Parity sign helpers (shared with the bracket machinery).
int sort_sign(IdxTuple& idx);                    // sorts in place; 0 if repeats
int merge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& out);  // 0 on clash

}  // namespace jacal
