#include "jacal/nijenhuis.hpp"

#include <sstream>
#include <stdexcept>

namespace jacal {

namespace {

void require_bivector(const KVector& pi, const char* who) {
    if (pi.degree() != 2 || pi.variance() != Variance::Multivector)
        throw std::invalid_argument(std::string(who) + ": expected a degree-2 multivector");
}

void require_twoform(const KVector& s, const char* who) {
    if (s.degree() != 2 || s.variance() != Variance::Form)
        throw std::invalid_argument(std::string(who) + ": expected a degree-2 form");
}

void require_rank(int a, int b, const char* who) {
    if (a != b) throw std::invalid_argument(std::string(who) + ": rank mismatch");
}

std::string first_nonzero_entry(const PolyMat& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (!m[i][j].is_zero()) {
                std::ostringstream os;
                os << "[" << i << "][" << j << "] = " << m[i][j].str();
                return os.str();
            }
    return "0";
}

std::string pair_str(const FrameNames& nm, Variance v, int i, int j) {
    return "(" + nm.of(v, i) + "," + nm.of(v, j) + ")";
}

}  // namespace

PolyMat sharp_matrix(const KVector& pi) {
    require_bivector(pi, "sharp_matrix");
    const int r = pi.rank();
    PolyMat p = mat_zero(pi.vars(), r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) p[i][j] = pi.component({j, i});
    return p;
}

KVector sharp(const KVector& pi, const KVector& xi) {
    require_bivector(pi, "sharp");
    if (xi.degree() != 1 || xi.variance() != Variance::Form)
        throw std::invalid_argument("sharp: expected a degree-1 form");
    require_rank(pi.rank(), xi.rank(), "sharp");
    const PolyMat p = sharp_matrix(pi);
    const std::vector<Poly> v = xi.coeffs1();
    KVector out(pi.vars(), pi.rank(), 1, Variance::Multivector);
    for (int i = 0; i < pi.rank(); ++i) {
        Poly c = Poly::zero(pi.vars());
        for (int j = 0; j < pi.rank(); ++j) c = c + p[i][j] * v[j];
        out.add_term({i}, c);
    }
    return out;
}

PolyMat flat_matrix(const KVector& sigma) {
    require_twoform(sigma, "flat_matrix");
    const int r = sigma.rank();
    PolyMat s = mat_zero(sigma.vars(), r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) s[i][j] = sigma.component({j, i});
    return s;
}

KVector flat(const KVector& sigma, const KVector& x) {
    require_twoform(sigma, "flat");
    if (x.degree() != 1 || x.variance() != Variance::Multivector)
        throw std::invalid_argument("flat: expected a degree-1 multivector");
    require_rank(sigma.rank(), x.rank(), "flat");
    const PolyMat s = flat_matrix(sigma);
    const std::vector<Poly> v = x.coeffs1();
    KVector out(sigma.vars(), sigma.rank(), 1, Variance::Form);
    for (int i = 0; i < sigma.rank(); ++i) {
        Poly c = Poly::zero(sigma.vars());
        for (int j = 0; j < sigma.rank(); ++j) c = c + s[i][j] * v[j];
        out.add_term({i}, c);
    }
    return out;
}

PolyMat musical_defect(const KVector& pi, const EndoTensor& n) {
    require_rank(pi.rank(), n.rank(), "musical_defect");
    const PolyMat p = sharp_matrix(pi);
    const PolyMat np = mat_mul(n.matrix(), p);
    return mat_sub(np, mat_mul(p, mat_transpose(n.matrix())));
}

bool musical_commutes(const KVector& pi, const EndoTensor& n) {
    return mat_is_zero(musical_defect(pi, n));
}

KVector pi_n(const KVector& pi, const EndoTensor& n) {
    require_bivector(pi, "pi_n");
    require_rank(pi.rank(), n.rank(), "pi_n");
    const PolyMat defect = musical_defect(pi, n);
    if (!mat_is_zero(defect))
        throw std::domain_error(
            "pi_n: musical maps do not commute; symmetric defect entry " +
            first_nonzero_entry(defect));
    const PolyMat np = mat_mul(n.matrix(), sharp_matrix(pi));
    const int r = pi.rank();
    KVector out(pi.vars(), r, 2, Variance::Multivector);
    // pi_N(e^a, e^b) = e^b(N sharp e^a) = (N P)[b][a].
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) out.add_term({a, b}, np[b][a]);
    return out;
}

KVector torsion(const LieAlgebroid& a, const EndoTensor& n,
                const KVector& x, const KVector& y) {
    require_rank(a.rank(), n.rank(), "torsion");
    require_rank(a.rank(), x.rank(), "torsion");
    const KVector nx = n.apply1(x);
    const KVector ny = n.apply1(y);
    const KVector inner = a.bracket(nx, y) + a.bracket(x, ny) - n.apply1(a.bracket(x, y));
    return a.bracket(nx, ny) - n.apply1(inner);
}

std::vector<std::vector<KVector>> torsion_table(const LieAlgebroid& a,
                                                const EndoTensor& n) {
    const int r = a.rank();
    std::vector<std::vector<KVector>> t(r, std::vector<KVector>(r, a.zero_mv(1)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) t[i][j] = torsion(a, n, a.frame_mv(i), a.frame_mv(j));
    return t;
}

KVector bracket_n(const LieAlgebroid& a, const EndoTensor& n,
                  const KVector& x, const KVector& y) {
    require_rank(a.rank(), n.rank(), "bracket_n");
    return a.bracket(n.apply1(x), y) + a.bracket(x, n.apply1(y)) -
           n.apply1(a.bracket(x, y));
}

KVector bracket_pi(const JacobiAlgebroid& j, const KVector& pi,
                   const KVector& xi, const KVector& eta) {
    require_rank(j.rank(), pi.rank(), "bracket_pi");
    const Poly pairing = eval_on(pi, {xi, eta});
    const KVector scal = KVector::scalar(j.vars(), j.rank(), Variance::Form, pairing);
    return -j.jetd(scal) + j.lie_derivative(sharp(pi, xi), eta) -
           j.lie_derivative(sharp(pi, eta), xi);
}

KVector fundamental_identity_defect(const JacobiAlgebroid& j, const KVector& pi,
                                    const KVector& xi, const KVector& eta) {
    const KVector lhs = sharp(pi, bracket_pi(j, pi, xi, eta)) -
                        j.alg().bracket(sharp(pi, xi), sharp(pi, eta));
    // The closure trivector pairs with the arguments in reversed order: our
    // evaluation inserts the first argument innermost, so eta comes first.
    const KVector rhs =
        contract_multi(eta.wedge(xi), j.schouten_jacobi(pi, pi)) * Rat(1, 2);
    return lhs - rhs;
}

KVector concomitant(const JacobiAlgebroid& j, const KVector& pi,
                    const EndoTensor& n, const KVector& xi, const KVector& eta) {
    const KVector pin = pi_n(pi, n);  // throws on non-commuting musical maps
    return bracket_pi(j, pin, xi, eta) - bracket_pi(j, pi, n.apply1(xi), eta) -
           bracket_pi(j, pi, xi, n.apply1(eta)) + n.apply1(bracket_pi(j, pi, xi, eta));
}

KVector d_n(const JacobiAlgebroid& j, const EndoTensor& n, const KVector& w) {
    require_rank(j.rank(), n.rank(), "d_n");
    return insert_endo(n, j.jetd(w)) - j.jetd(insert_endo(n, w));
}

FrameStructure deformed_frame_structure(const LieAlgebroid& a, const EndoTensor& n) {
    require_rank(a.rank(), n.rank(), "deformed_frame_structure");
    const int r = a.rank();
    FrameStructure f;
    f.vars = a.vars();
    f.rank = r;
    f.rho_vec = mat_zero(a.vars(), r, a.dim());
    f.rho_scal.assign(r, Poly::zero(a.vars()));
    f.c.assign(r, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r, Poly::zero(a.vars()))));
    for (int i = 0; i < r; ++i) {
        f.rho_vec[i] = a.anchor_of(n.apply1(a.frame_mv(i))).coeffs1();
        for (int j2 = 0; j2 < r; ++j2) {
            const std::vector<Poly> br =
                bracket_n(a, n, a.frame_mv(i), a.frame_mv(j2)).coeffs1();
            for (int k = 0; k < r; ++k) f.c[i][j2][k] = br[k];
        }
    }
    f.section_variance = Variance::Form;
    return f;
}

KVector d_n_split(const JacobiAlgebroid& j, const EndoTensor& n, const KVector& w) {
    const KVector lie_part = jerd(deformed_frame_structure(j.alg(), n), w);
    return lie_part + n.apply1(j.phi0()).wedge(w);
}

KVector dphi_flat(const JacobiAlgebroid& j, const KVector& phi,
                  const KVector& x, const KVector& y, const KVector& z) {
    require_rank(j.rank(), phi.rank(), "dphi_flat");
    return contract_multi(x.wedge(y).wedge(z), j.jetd(phi));
}

JacobiAlgebroid dual_jacobi_algebroid(const JacobiAlgebroid& j, const KVector& pi) {
    const LieAlgebroid& a = j.alg();
    require_rank(a.rank(), pi.rank(), "dual_jacobi_algebroid");
    const int r = a.rank();
    PolyMat anchor = mat_zero(a.vars(), r, a.dim());
    std::vector<std::vector<std::vector<Poly>>> c(
        r, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r, Poly::zero(a.vars()))));
    KVector phi0(a.vars(), r, 1, Variance::Form);
    for (int i = 0; i < r; ++i) {
        const KVector si = sharp(pi, a.frame_form(i));
        anchor[i] = a.anchor_of(si).coeffs1();
        phi0.add_term({i}, j.phi0_of(si));
        for (int k = 0; k < r; ++k) {
            const std::vector<Poly> br =
                bracket_pi(j, pi, a.frame_form(i), a.frame_form(k)).coeffs1();
            for (int l = 0; l < r; ++l) c[i][k][l] = br[l];
        }
    }
    const FrameNames dual_names{a.names().form, a.names().mv};
    return JacobiAlgebroid(LieAlgebroid(a.vars(), r, anchor, c, dual_names), phi0);
}

Report verify_jacobi_bivector(const JacobiAlgebroid& j, const KVector& pi) {
    Report rep;
    rep.title = "jacobi-bivector";
    const KVector closure = j.schouten_jacobi(pi, pi);
    if (closure.is_zero()) {
        rep.pass("schouten-closure");
    } else {
        rep.fail("schouten-closure", "", closure.str(j.names()));
    }
    if (!closure.is_zero()) {
        rep.skip("dual-structure", "bivector is not Jacobi");
        return rep;
    }
    const JacobiAlgebroid dual = dual_jacobi_algebroid(j, pi);
    rep.absorb("dual-", verify_lie_algebroid(dual.alg()));
    rep.absorb("dual-", verify_cocycle(dual));
    const KVector unit = KVector::scalar(j.vars(), j.rank(), Variance::Form, Poly::one(j.vars()));
    const KVector lhs = dual.jetd(unit);
    const KVector rhs = reinterpret_variance(-sharp(pi, j.jetd(unit)), Variance::Form);
    if (lhs == rhs) {
        rep.pass("dual-unit-differential");
    } else {
        rep.fail("dual-unit-differential", "", (lhs - rhs).str(dual.names()));
    }
    return rep;
}

Report verify_quadruple(const QuadrupleCandidate& q) {
    Report rep;
    rep.title = "quadruple";
    const JacobiAlgebroid& j = q.j;
    const LieAlgebroid& a = j.alg();
    const int r = a.rank();

    const KVector closure = j.schouten_jacobi(q.pi, q.pi);
    if (closure.is_zero()) rep.pass("bivector-closure");
    else rep.fail("bivector-closure", "", closure.str(j.names()));

    const PolyMat defect = musical_defect(q.pi, q.n);
    const bool musical_ok = mat_is_zero(defect);
    if (musical_ok) rep.pass("musical-commutation");
    else rep.fail("musical-commutation", "", first_nonzero_entry(defect));

    if (!musical_ok) {
        rep.skip("concomitant", "musical maps do not commute; deformed bivector ill-formed");
    } else {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            for (int k = i + 1; k < r && ok; ++k) {
                const KVector c = concomitant(j, q.pi, q.n, a.frame_form(i), a.frame_form(k));
                if (!c.is_zero()) {
                    rep.fail("concomitant", pair_str(j.names(), Variance::Form, i, k),
                             c.str(j.names()));
                    ok = false;
                }
            }
        if (ok) rep.pass("concomitant");
    }

    const KVector dphi = j.jetd(q.phi);
    if (dphi.is_zero()) rep.pass("phi-closed");
    else rep.fail("phi-closed", "", dphi.str(j.names()));

    const KVector dnphi = j.jetd(insert_endo(q.n, q.phi));
    if (dnphi.is_zero()) rep.pass("contracted-phi-closed");
    else rep.fail("contracted-phi-closed", "", dnphi.str(j.names()));

    {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            for (int k = i + 1; k < r && ok; ++k) {
                const KVector t = torsion(a, q.n, a.frame_mv(i), a.frame_mv(k));
                const KVector expected =
                    sharp(q.pi, contract_multi(a.frame_mv(i).wedge(a.frame_mv(k)), q.phi));
                if (t != expected) {
                    rep.fail("torsion-matches-phi", pair_str(j.names(), Variance::Multivector, i, k),
                             (t - expected).str(j.names()));
                    ok = false;
                }
            }
        if (ok) rep.pass("torsion-matches-phi");
    }

    if (!rep.passed()) {
        rep.skip("deformed-pair-bracket", "definition checks failed");
        rep.skip("deformed-closure-vs-phi", "definition checks failed");
        return rep;
    }

    const KVector pin = pi_n(q.pi, q.n);
    const KVector pair_bracket = j.schouten_jacobi(q.pi, pin);
    if (pair_bracket.is_zero()) rep.pass("deformed-pair-bracket");
    else rep.fail("deformed-pair-bracket", "", pair_bracket.str(j.names()));

    {
        const KVector pin_closure = j.schouten_jacobi(pin, pin);
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            for (int k = i + 1; k < r && ok; ++k) {
                const KVector xi = a.frame_form(i);
                const KVector eta = a.frame_form(k);
                const KVector lhs = contract_multi(xi.wedge(eta), pin_closure);
                const KVector inner =
                    contract_multi(sharp(q.pi, xi).wedge(sharp(q.pi, eta)), q.phi);
                const KVector res = lhs - Rat(2) * sharp(q.pi, inner);
                if (!res.is_zero()) {
                    rep.fail("deformed-closure-vs-phi", pair_str(j.names(), Variance::Form, i, k),
                             res.str(j.names()));
                    ok = false;
                }
            }
        if (ok) rep.pass("deformed-closure-vs-phi");
    }
    return rep;
}

}  // namespace jacal
