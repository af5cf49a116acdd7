// algebroid.hpp - Lie algebroids over polynomial charts, their Jacobi
// extensions by a 1-cocycle, differential calculus and Schouten brackets.
//
// A LieAlgebroid is (base chart, rank, anchor matrix, structure functions).
// All identities here are polynomial identities, so every verifier is exact:
// a residual is a section that must be structurally zero.
#pragma once

#include "jacal/endo.hpp"
#include "jacal/kvector.hpp"
#include "jacal/report.hpp"

#include <functional>

namespace jacal {

// Vector fields on the base chart: degree-1 multivectors over the coordinate frame.
Poly vf_apply(const KVector& v, const Poly& f);
KVector vf_bracket(const KVector& v, const KVector& w);

// Enumerates strictly increasing k-tuples from {0..r-1} in lexicographic order.
void for_each_increasing(int r, int k, const std::function<void(const IdxTuple&)>& fn);

class LieAlgebroid {
public:
    LieAlgebroid() = default;
    // anchor: rank x dim matrix, a(e_i) = sum_j anchor[i][j] d/dx_j.
    // c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k.
    LieAlgebroid(Vars vars, int rank, PolyMat anchor,
                 std::vector<std::vector<std::vector<Poly>>> c, FrameNames names);

    const Vars& vars() const { return vars_; }
    int dim() const { return static_cast<int>(vars_.size()); }
    int rank() const { return rank_; }
    const PolyMat& anchor() const { return anchor_; }
    const Poly& structure_fn(int i, int j, int k) const { return c_[i][j][k]; }
    const std::vector<std::vector<std::vector<Poly>>>& structure_fns() const { return c_; }
    const FrameNames& names() const { return names_; }

    KVector frame_mv(int i) const { return KVector::frame(vars_, rank_, Variance::Multivector, i); }
    KVector frame_form(int i) const { return KVector::frame(vars_, rank_, Variance::Form, i); }
    KVector zero_mv(int deg) const { return KVector(vars_, rank_, deg, Variance::Multivector); }
    KVector zero_form(int deg) const { return KVector(vars_, rank_, deg, Variance::Form); }

    // Anchor image of a degree-1 section, as a vector field on the base.
    KVector anchor_of(const KVector& x) const;
    // a(X)(f) for degree-1 X.
    Poly anchor_apply(const KVector& x, const Poly& f) const;

    KVector bracket_frame(int i, int j) const;  // [e_i, e_j]
    // Lie bracket of degree-1 sections (Leibniz extension over coefficients).
    KVector bracket(const KVector& x, const KVector& y) const;

    // Schouten bracket on multivectors, graded with deg P = p-1. Degree-1 pairs
    // reduce to bracket(); [P, f] contracts the anchor into the coefficient.
    KVector schouten(const KVector& p, const KVector& q) const;

    // Exterior differential on forms (derivation extension of df and de^k).
    KVector differential(const KVector& w) const;

private:
    Vars vars_;
    int rank_ = 0;
    PolyMat anchor_;
    std::vector<std::vector<std::vector<Poly>>> c_;
    FrameNames names_;
};

// Antisymmetry of the structure functions, anchor compatibility on frame
// pairs, Jacobi identity on frame triples. Reports carry the offending
// indices and the first nonzero residual section.
Report verify_lie_algebroid(const LieAlgebroid& a);

class JacobiAlgebroid {
public:
    JacobiAlgebroid() = default;
    JacobiAlgebroid(LieAlgebroid alg, KVector phi0);

    const LieAlgebroid& alg() const { return alg_; }
    const Vars& vars() const { return alg_.vars(); }
    int rank() const { return alg_.rank(); }
    const KVector& phi0() const { return phi0_; }
    const FrameNames& names() const { return alg_.names(); }

    // phi0(X) for degree-1 X.
    Poly phi0_of(const KVector& x) const;
    // rho(X)(f) = a(X)(f) + phi0(X) f: the first-order-operator representation.
    Poly rho_apply(const KVector& x, const Poly& f) const;

    // Extended differential d + phi0 ^ . ; squares to zero iff phi0 is a cocycle.
    KVector jetd(const KVector& w) const;
    // Lie derivative of forms along a degree-1 section, via the Cartan formula
    // with the extended differential.
    KVector lie_derivative(const KVector& x, const KVector& w) const;

    // Extended Schouten bracket:
    //   [[P,Q]] = [P,Q] + (-1)^{p+1}(p-1) P ^ i_{phi0} Q - (q-1) i_{phi0} P ^ Q.
    KVector schouten_jacobi(const KVector& p, const KVector& q) const;

private:
    LieAlgebroid alg_;
    KVector phi0_;
};

// d(phi0) = 0, reported with the residual 2-form on failure.
Report verify_cocycle(const JacobiAlgebroid& j);

// Frame-level data feeding the first-principles differential: an anchor into
// first-order operators (vector field part + scalar part) and structure
// functions for the bracket of frame elements. Instantiated by the primal
// algebroid (differentiating forms) and by dual structures (differentiating
// multivectors).
struct FrameStructure {
    Vars vars;
    int rank = 0;
    PolyMat rho_vec;              // rank x dim
    std::vector<Poly> rho_scal;   // rank
    std::vector<std::vector<std::vector<Poly>>> c;  // c[i][j][k]
    Variance section_variance = Variance::Form;     // variance of differentiated sections

    Poly rho_apply(int i, const Poly& f) const;
};

FrameStructure primal_frame_structure(const LieAlgebroid& a);
FrameStructure primal_frame_structure(const JacobiAlgebroid& j);

// First-principles differential:
//   (d w)(u_0..u_k) = sum_i (-1)^i rho(u_i) w(..omit i..)
//                   + sum_{i<j} (-1)^{i+j} w([u_i,u_j], ..omit i,j..)
// evaluated on frame tuples of the structure.
KVector jerd(const FrameStructure& f, const KVector& w);

// gl(n)-valued 1-form: one n x n Poly matrix per frame slot.
struct GlValuedForm {
    Vars vars;
    std::vector<PolyMat> theta;  // size = rank; theta[i] is n x n
    int n() const { return theta.empty() ? 0 : static_cast<int>(theta[0].size()); }
};

// Flatness of the connection rho = a + theta on the trivial bundle:
// d theta + (1/2)[theta ^ theta] = 0 on frame pairs, cross-checked as the
// operator identity [rho(e_i), rho(e_j)] = rho([e_i, e_j]) on test vectors.
Report check_maurer_cartan(const LieAlgebroid& a, const GlValuedForm& th);

// Internal builders (public contract wrappers live with the contact module).
LieAlgebroid tangent_algebroid(const Vars& v);
// Rank dim+1: tangent frame plus a central unit section with zero anchor row.
LieAlgebroid extended_algebroid(const Vars& v);

}  // namespace jacal
