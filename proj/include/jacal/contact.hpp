// contact.hpp - tangent doubles deformed by a closed 1-form, the extended
// line algebroid, and the odd-dimensional verifiers built on them: conformal
// symplectic forms, Jacobi pairs, almost and normal contact triples, and
// contact forms with their block structures.
#pragma once

#include "jacal/courant.hpp"

#include <vector>

namespace jacal {

// Tangent Jacobi algebroid over the chart, deformed by the closed 1-form
// phi0. Throws std::invalid_argument when phi0 is not closed or malformed.
JacobiAlgebroid build_tangent(const Vars& v, const KVector& phi0);

// Extended algebroid (tangent frame plus a central unit slot) carrying the
// unit cocycle on the trailing slot; its jet differential sends the unit
// section to the trailing coform.
JacobiAlgebroid build_e1(const Vars& v);

// Same terms over the extended frame (rank + 1); degree and variance kept.
KVector extend_section(const KVector& w);

// Theta = omega + dt ^ eta as a degree-2 form over the extended frame.
KVector contact_two_form(const Vars& v, const KVector& omega, const KVector& eta);

// d omega = phi0 ^ omega exactly and nondegeneracy of omega at each sample
// point; when the determinant of omega is a nonzero constant, also runs the
// block structure [[0, -omega^{-1}], [omega, 0]] on the tangent double and
// asserts the two verdicts agree. Throws std::invalid_argument on an
// odd-dimensional chart or an explicitly empty sample set.
Report verify_conformal_symplectic(const JacobiAlgebroid& t, const KVector& omega,
                                   const std::vector<std::vector<Rat>>& points);
Report verify_conformal_symplectic(const JacobiAlgebroid& t, const KVector& omega);

// Classical pair conditions: the bivector squares onto the line of the pair
// and the vector preserves the bivector. Cross-checked against the extended
// bivector lambda + Dt ^ x, whose square under the cocycle-corrected bracket
// vanishes exactly when both conditions hold.
Report verify_jacobi_pair(const Vars& v, const KVector& lambda, const KVector& x);

struct ContactTriple {
    EndoTensor phi;
    KVector y;    // multivector, degree 1
    KVector eta;  // form, degree 1
};

// eta(y) = 1 and phi^2 - eta (x) y = -id, plus the two identities forced by
// them: phi(y) = 0 and eta o phi = 0. The forced identities are engine
// theorems, so a verified defining pair with a failing forced identity
// throws std::logic_error instead of reporting a data verdict. A trailing
// item asserts that the extended endomorphism [[phi, -y], [eta, 0]] squares
// to minus the identity exactly when the defining pair holds.
Report verify_almost_contact(const ContactTriple& c);

// Normality tensor T(phi)(x1, x2) + d eta(x1, x2) y on frame pairs with a
// function-linearity obligation; absorbs the almost-contact report and
// asserts the block structure driven by [[phi, -y], [eta, 0]] on the
// extended double returns the same verdict.
Report verify_normal_contact(const ContactTriple& c);

// Contact form check for eta with candidate exterior derivative omega:
// machine-checks the split jet differential of Theta = omega + dt ^ eta,
// then exactness omega = d eta, closedness d omega = 0, and nondegeneracy
// eta ^ omega^n at the sample points. On a passing form whose Theta has
// constant determinant, runs the block structure [[0, -Theta^{-1}],
// [Theta, 0]] on the extended double. Throws std::invalid_argument on an
// even-dimensional chart or an explicitly empty sample set.
Report verify_contact_form(const Vars& v, const KVector& eta, const KVector& omega,
                           const std::vector<std::vector<Rat>>& points);
Report verify_contact_form(const Vars& v, const KVector& eta, const KVector& omega);

}  // namespace jacal
