// courant.cpp - canonical double, Courant-Jacobi axioms, block deformations,
// and the dual-side presentation with its round trips.
#include "jacal/courant.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace jacal {

namespace {

KVector scalar_mv(const JacobiAlgebroid& j, const Poly& f) {
    return KVector::scalar(j.vars(), j.rank(), Variance::Multivector, f);
}

KVector scalar_form(const JacobiAlgebroid& j, const Poly& f) {
    return KVector::scalar(j.vars(), j.rank(), Variance::Form, f);
}

// Row of a rank x dim matrix as a vector field over the coordinate frame.
KVector row_as_vf(const Vars& v, const std::vector<Poly>& row) {
    KVector out(v, static_cast<int>(v.size()), 1, Variance::Multivector);
    for (std::size_t k = 0; k < row.size(); ++k) out.add_term({static_cast<int>(k)}, row[k]);
    return out;
}

std::string point_str(const std::vector<Rat>& pt) {
    std::string s = "(";
    for (std::size_t i = 0; i < pt.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(pt[i]);
    }
    return s + ")";
}

std::string pair_str(const GenSection& u, const GenSection& v, const FrameNames& names) {
    return "(" + u.str(names) + ", " + v.str(names) + ")";
}

// First nonzero entry of a matrix, for residual strings.
bool mat_first_nonzero(const PolyMat& m, std::string* where, std::string* residual) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < m[i].size(); ++k)
            if (!m[i][k].is_zero()) {
                *where = "entry (" + std::to_string(i) + ", " + std::to_string(k) + ")";
                *residual = m[i][k].str();
                return true;
            }
    return false;
}

}  // namespace

std::string GenSection::str(const FrameNames& names) const {
    if (is_zero()) return "0";
    if (xi.is_zero()) return x.str(names);
    if (x.is_zero()) return xi.str(names);
    return x.str(names) + " (+) " + xi.str(names);
}

GenSection gen_section(const JacobiAlgebroid& j, const KVector& x, const KVector& xi) {
    (void)j;
    return {x, xi};
}

GenSection gen_of_mv(const JacobiAlgebroid& j, const KVector& x) {
    return {x, j.alg().zero_form(1)};
}

GenSection gen_of_form(const JacobiAlgebroid& j, const KVector& xi) {
    return {j.alg().zero_mv(1), xi};
}

GenSection gen_zero(const JacobiAlgebroid& j) {
    return {j.alg().zero_mv(1), j.alg().zero_form(1)};
}

Poly FirstOrderOp::apply(const Poly& f) const { return vf_apply(vec, f) + scal * f; }

FirstOrderOp op_commutator(const FirstOrderOp& a, const FirstOrderOp& b) {
    return {vf_bracket(a.vec, b.vec), vf_apply(a.vec, b.scal) - vf_apply(b.vec, a.scal)};
}

GenSection apply_block(const GcsMap& g, const GenSection& u) {
    GenSection out;
    out.x = g.n.apply1(u.x) + sharp(g.pi, u.xi);
    out.xi = flat(g.sigma, u.x) - g.n.apply1(u.xi);
    return out;
}

PolyMat block_matrix(const GcsMap& g) {
    const Vars& v = g.n.vars();
    const std::size_t r = g.n.matrix().size();
    const PolyMat& nm = g.n.matrix();
    const PolyMat pm = sharp_matrix(g.pi);
    const PolyMat sm = flat_matrix(g.sigma);
    PolyMat out = mat_zero(v, 2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            out[i][k] = nm[i][k];
            out[i][r + k] = pm[i][k];
            out[r + i][k] = sm[i][k];
            out[r + i][r + k] = -nm[k][i];
        }
    return out;
}

Report block_conditions(const Vars& vars, const GcsMap& g) {
    Report rep;
    rep.title = "block map admissibility";
    const PolyMat& nm = g.n.matrix();
    const PolyMat pm = sharp_matrix(g.pi);
    const PolyMat sm = flat_matrix(g.sigma);
    const std::size_t r = nm.size();

    std::string where, residual;
    const PolyMat musical = mat_sub(mat_mul(nm, pm), mat_mul(pm, mat_transpose(nm)));
    if (mat_first_nonzero(musical, &where, &residual))
        rep.fail("musical commutation", where, residual);
    else
        rep.pass("musical commutation");

    const PolyMat square =
        mat_add(mat_add(mat_mul(nm, nm), mat_mul(pm, sm)), mat_identity(vars, r));
    if (mat_first_nonzero(square, &where, &residual))
        rep.fail("square condition", where, residual);
    else
        rep.pass("square condition");

    const PolyMat intertwiner = mat_sub(mat_mul(mat_transpose(nm), sm), mat_mul(sm, nm));
    if (mat_first_nonzero(intertwiner, &where, &residual))
        rep.fail("flat intertwiner", where, residual);
    else
        rep.pass("flat intertwiner");
    return rep;
}

CjStructure canonical_double(const JacobiAlgebroid& j) {
    CjStructure s;
    s.host = j;
    s.pairing = [j](const GenSection& u, const GenSection& v) {
        return (eval_on(u.xi, {v.x}) + eval_on(v.xi, {u.x})) * Rat(1, 2);
    };
    s.bracket = [j](const GenSection& u, const GenSection& v) {
        GenSection out;
        out.x = j.alg().bracket(u.x, v.x);
        out.xi = j.lie_derivative(u.x, v.xi) - j.lie_derivative(v.x, u.xi) +
                 j.jetd(scalar_form(j, eval_on(u.xi, {v.x})));
        return out;
    };
    s.anchor = [j](const GenSection& u) {
        return FirstOrderOp{j.alg().anchor_of(u.x), j.phi0_of(u.x)};
    };
    return s;
}

Rat rat_det(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Rat factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

std::vector<std::vector<Rat>> pairing_gram_at(const CjStructure& s, const std::vector<Rat>& pt) {
    const JacobiAlgebroid& j = s.host;
    const int r = j.rank();
    std::vector<GenSection> basis;
    for (int i = 0; i < r; ++i) basis.push_back(gen_of_mv(j, j.alg().frame_mv(i)));
    for (int i = 0; i < r; ++i) basis.push_back(gen_of_form(j, j.alg().frame_form(i)));
    std::vector<std::vector<Rat>> gram(2 * r, std::vector<Rat>(2 * r, Rat(0)));
    for (int a = 0; a < 2 * r; ++a)
        for (int b = 0; b < 2 * r; ++b) gram[a][b] = s.pairing(basis[a], basis[b]).eval(pt);
    return gram;
}

namespace {

// Frame sections of the double plus a few monomial-coefficient composites.
std::vector<GenSection> sample_sections(const JacobiAlgebroid& j) {
    const int r = j.rank();
    const Vars& v = j.vars();
    std::vector<GenSection> out;
    for (int i = 0; i < r; ++i) out.push_back(gen_of_mv(j, j.alg().frame_mv(i)));
    for (int i = 0; i < r; ++i) out.push_back(gen_of_form(j, j.alg().frame_form(i)));
    if (v.size() == 0) return out;
    const Poly a = Poly::var(v, 0);
    const Poly b = Poly::var(v, v.size() - 1) * Poly::var(v, v.size() - 1);
    const Poly c = Poly::var(v, 0) * Poly::var(v, v.size() > 1 ? 1 : 0);
    const int last = r - 1;
    out.push_back({j.alg().frame_mv(0) * a, j.alg().frame_form(last)});
    out.push_back({j.alg().frame_mv(last), j.alg().frame_form(0) * b});
    out.push_back({j.alg().frame_mv(0) * c, j.alg().frame_form(last) * c});
    return out;
}

std::vector<std::vector<Rat>> sample_points(const CjStructure& s, const VerifyOptions& opt) {
    if (!opt.samples.empty()) return opt.samples;
    return {std::vector<Rat>(s.host.vars().size(), Rat(0))};
}

}  // namespace

Report verify_courant_jacobi(const CjStructure& s, const VerifyOptions& opt) {
    Report rep;
    rep.title = "courant-jacobi axioms";
    const JacobiAlgebroid& j = s.host;
    const FrameNames& names = j.names();
    const int r = j.rank();
    const std::vector<GenSection> secs = sample_sections(j);
    const int n = static_cast<int>(secs.size());

    {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = a; b < n && ok; ++b) {
                const Poly resid = s.pairing(secs[a], secs[b]) - s.pairing(secs[b], secs[a]);
                if (!resid.is_zero()) {
                    rep.fail("pairing symmetric", pair_str(secs[a], secs[b], names), resid.str());
                    ok = false;
                }
            }
        if (ok) rep.pass("pairing symmetric");
    }

    {
        bool ok = true;
        for (const auto& pt : sample_points(s, opt)) {
            if (rat_det(pairing_gram_at(s, pt)) == 0) {
                rep.fail("pairing nondegenerate", point_str(pt), "gram determinant = 0");
                ok = false;
                break;
            }
        }
        if (ok) rep.pass("pairing nondegenerate");
    }

    {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                const Poly resid = s.pairing(s.bracket(secs[b], secs[a]), secs[a]) -
                                   s.pairing(secs[b], s.bracket(secs[a], secs[a]));
                if (!resid.is_zero()) {
                    rep.fail("symmetric part axiom", pair_str(secs[a], secs[b], names),
                             resid.str());
                    ok = false;
                }
            }
        if (ok) rep.pass("symmetric part axiom");
    }

    {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                const Poly resid =
                    s.anchor(secs[a]).apply(s.pairing(secs[b], secs[b])) -
                    s.pairing(s.bracket(secs[a], secs[b]), secs[b]) * Rat(2);
                if (!resid.is_zero()) {
                    rep.fail("metric derivation axiom", pair_str(secs[a], secs[b], names),
                             resid.str());
                    ok = false;
                }
            }
        if (ok) rep.pass("metric derivation axiom");
    }

    {
        // Frame triples with a pair table, then the monomial-coefficient
        // composites from the sample list.
        bool ok = true;
        std::vector<std::vector<GenSection>> table(
            2 * r, std::vector<GenSection>(2 * r, gen_zero(j)));
        for (int a = 0; a < 2 * r; ++a)
            for (int b = 0; b < 2 * r; ++b) table[a][b] = s.bracket(secs[a], secs[b]);
        for (int a = 0; a < 2 * r && ok; ++a)
            for (int b = 0; b < 2 * r && ok; ++b)
                for (int c = 0; c < 2 * r && ok; ++c) {
                    const GenSection defect = s.bracket(secs[a], table[b][c]) -
                                              s.bracket(table[a][b], secs[c]) -
                                              s.bracket(secs[b], table[a][c]);
                    if (!defect.is_zero()) {
                        rep.fail("leibniz identity",
                                 "(" + secs[a].str(names) + ", " + secs[b].str(names) + ", " +
                                     secs[c].str(names) + ")",
                                 defect.str(names));
                        ok = false;
                    }
                }
        for (int a = 2 * r; a < n && ok; ++a)
            for (int b = 0; b < n && ok; b += 2)
                for (int c = 1; c < n && ok; c += 2) {
                    const GenSection defect =
                        s.bracket(secs[a], s.bracket(secs[b], secs[c])) -
                        s.bracket(s.bracket(secs[a], secs[b]), secs[c]) -
                        s.bracket(secs[b], s.bracket(secs[a], secs[c]));
                    if (!defect.is_zero()) {
                        rep.fail("leibniz identity",
                                 "(" + secs[a].str(names) + ", " + secs[b].str(names) + ", " +
                                     secs[c].str(names) + ")",
                                 defect.str(names));
                        ok = false;
                    }
                }
        if (ok) rep.pass("leibniz identity");
    }

    {
        bool vec_ok = true, scal_ok = true;
        for (int a = 0; a < n && (vec_ok || scal_ok); ++a)
            for (int b = 0; b < n && (vec_ok || scal_ok); ++b) {
                const FirstOrderOp lhs = s.anchor(s.bracket(secs[a], secs[b]));
                const FirstOrderOp rhs = op_commutator(s.anchor(secs[a]), s.anchor(secs[b]));
                if (vec_ok && lhs.vec != rhs.vec) {
                    rep.fail("anchor homomorphism (vector part)",
                             pair_str(secs[a], secs[b], names),
                             (lhs.vec - rhs.vec).str(FrameNames::tangent(j.vars())));
                    vec_ok = false;
                }
                if (scal_ok && lhs.scal != rhs.scal) {
                    rep.fail("anchor homomorphism (scalar part)",
                             pair_str(secs[a], secs[b], names), (lhs.scal - rhs.scal).str());
                    scal_ok = false;
                }
            }
        if (vec_ok) rep.pass("anchor homomorphism (vector part)");
        if (scal_ok) rep.pass("anchor homomorphism (scalar part)");
    }
    return rep;
}

namespace {

Poly random_poly(std::mt19937& rng, const Vars& v, int degree) {
    auto coeff = [&rng]() { return Rat(static_cast<int>(rng() % 5) - 2); };
    Poly f = Poly::constant(v, coeff());
    if (v.size() > 0 && degree >= 1)
        f += Poly::var(v, rng() % v.size()) * coeff();
    if (v.size() > 0 && degree >= 2)
        f += Poly::var(v, rng() % v.size()) * Poly::var(v, rng() % v.size()) * coeff();
    return f;
}

GenSection random_section(std::mt19937& rng, const JacobiAlgebroid& j, int degree) {
    const int r = j.rank();
    GenSection u = gen_zero(j);
    u.x += j.alg().frame_mv(static_cast<int>(rng() % r)) * random_poly(rng, j.vars(), degree);
    u.x += j.alg().frame_mv(static_cast<int>(rng() % r)) * random_poly(rng, j.vars(), degree);
    u.xi += j.alg().frame_form(static_cast<int>(rng() % r)) * random_poly(rng, j.vars(), degree);
    u.xi += j.alg().frame_form(static_cast<int>(rng() % r)) * random_poly(rng, j.vars(), degree);
    return u;
}

}  // namespace

Report verify_gcs(const CjStructure& s, const GcsMap& g, const VerifyOptions& opt) {
    Report rep;
    rep.title = "generalized complex structure";
    const JacobiAlgebroid& j = s.host;
    const FrameNames& names = j.names();
    const int r = j.rank();

    {
        const PolyMat m = block_matrix(g);
        const PolyMat defect = mat_add(mat_mul(m, m), mat_identity(j.vars(), 2 * r));
        std::string where, residual;
        if (mat_first_nonzero(defect, &where, &residual))
            rep.fail("squares to minus identity", where, residual);
        else
            rep.pass("squares to minus identity");
    }

    std::vector<GenSection> frames;
    for (int i = 0; i < r; ++i) frames.push_back(gen_of_mv(j, j.alg().frame_mv(i)));
    for (int i = 0; i < r; ++i) frames.push_back(gen_of_form(j, j.alg().frame_form(i)));

    {
        bool ok = true;
        for (int a = 0; a < 2 * r && ok; ++a)
            for (int b = a; b < 2 * r && ok; ++b) {
                const Poly resid =
                    s.pairing(apply_block(g, frames[a]), apply_block(g, frames[b])) -
                    s.pairing(frames[a], frames[b]);
                if (!resid.is_zero()) {
                    rep.fail("preserves pairing", pair_str(frames[a], frames[b], names),
                             resid.str());
                    ok = false;
                }
            }
        if (ok) rep.pass("preserves pairing");
    }

    {
        auto nij = [&](const GenSection& u, const GenSection& v) {
            const GenSection ju = apply_block(g, u), jv = apply_block(g, v);
            return s.bracket(ju, jv) - s.bracket(u, v) -
                   apply_block(g, s.bracket(ju, v) + s.bracket(u, jv));
        };
        bool ok = true;
        for (int a = 0; a < 2 * r && ok; ++a)
            for (int b = 0; b < 2 * r && ok; ++b) {
                const GenSection defect = nij(frames[a], frames[b]);
                if (!defect.is_zero()) {
                    rep.fail("integrability", pair_str(frames[a], frames[b], names),
                             defect.str(names));
                    ok = false;
                }
            }
        std::mt19937 rng(opt.seed);
        for (int t = 0; t < 3 && ok; ++t) {
            const GenSection u = random_section(rng, j, opt.degree);
            const GenSection v = random_section(rng, j, opt.degree);
            const GenSection defect = nij(u, v);
            if (!defect.is_zero()) {
                rep.fail("integrability", pair_str(u, v, names), defect.str(names));
                ok = false;
            }
        }
        if (ok) rep.pass("integrability");
    }

    if (rep.passed()) rep.absorb("induced bivector: ", verify_jacobi_bivector(j, g.pi));
    return rep;
}

DeformResult deform(const CjStructure& s, const GcsMap& g, bool require_admissible) {
    const Report conditions = block_conditions(s.host.vars(), g);
    if (require_admissible && !conditions.passed()) {
        std::string what = "deform: block map fails the admissibility conditions";
        for (const auto& item : conditions.items)
            if (item.verdict == Verdict::Fail) {
                what += ": " + item.name + " at " + item.where + ", residual " + item.residual;
                break;
            }
        throw std::domain_error(what);
    }

    DeformResult out;
    out.deformed.host = s.host;
    // The pairing is left untouched: an admissible block map preserves it
    // anyway, and a degenerate one (pi = 0, n = 0, sigma = 0 deforms to the
    // zero bracket) must not degrade nondegeneracy.
    out.deformed.pairing = s.pairing;
    out.deformed.bracket = [s, g](const GenSection& u, const GenSection& v) {
        return s.bracket(apply_block(g, u), v) + s.bracket(u, apply_block(g, v)) -
               apply_block(g, s.bracket(u, v));
    };
    out.deformed.anchor = [s, g](const GenSection& u) { return s.anchor(apply_block(g, u)); };

    // Component formulas of the deformed bracket of a canonical double,
    // evaluated independently and compared with the direct deformation.
    Report& comp = out.components;
    comp.title = "deformed bracket components";
    const JacobiAlgebroid& j = s.host;
    const FrameNames& names = j.names();
    const int r = j.rank();
    const KVector dsigma = j.jetd(g.sigma);
    const Poly x0 = j.vars().size() ? Poly::var(j.vars(), 0) : Poly::one(j.vars());

    auto mixed_expected = [&](const KVector& x, const KVector& xi) {
        GenSection e;
        e.x = j.alg().bracket(x, sharp(g.pi, xi)) - sharp(g.pi, j.lie_derivative(x, xi));
        e.xi = j.lie_derivative(g.n.apply1(x), xi) - j.lie_derivative(x, g.n.apply1(xi)) +
               g.n.apply1(j.lie_derivative(x, xi));
        return e;
    };

    {
        bool ok = true;
        for (int a = 0; a < r && ok; ++a)
            for (int b = 0; b < r && ok; ++b)
                for (int coef = 0; coef < 2 && ok; ++coef) {
                    const KVector x =
                        coef ? j.alg().frame_mv(a) * x0 : j.alg().frame_mv(a);
                    const KVector y = j.alg().frame_mv(b);
                    const GenSection direct =
                        out.deformed.bracket(gen_of_mv(j, x), gen_of_mv(j, y));
                    GenSection expected;
                    expected.x = bracket_n(j.alg(), g.n, x, y);
                    expected.xi = contract_multi(x.wedge(y), dsigma);
                    const GenSection resid = direct - expected;
                    if (!resid.is_zero()) {
                        comp.fail("vector-vector formula",
                                  pair_str(gen_of_mv(j, x), gen_of_mv(j, y), names),
                                  resid.str(names));
                        ok = false;
                    }
                }
        if (ok) comp.pass("vector-vector formula");
    }

    {
        bool ok = true;
        for (int a = 0; a < r && ok; ++a)
            for (int b = 0; b < r && ok; ++b)
                for (int coef = 0; coef < 2 && ok; ++coef) {
                    const KVector xi =
                        coef ? j.alg().frame_form(a) * x0 : j.alg().frame_form(a);
                    const KVector eta = j.alg().frame_form(b);
                    const GenSection direct =
                        out.deformed.bracket(gen_of_form(j, xi), gen_of_form(j, eta));
                    GenSection expected;
                    expected.x = j.alg().zero_mv(1);
                    expected.xi = bracket_pi(j, g.pi, xi, eta);
                    const GenSection resid = direct - expected;
                    if (!resid.is_zero()) {
                        comp.fail("coform-coform formula",
                                  pair_str(gen_of_form(j, xi), gen_of_form(j, eta), names),
                                  resid.str(names));
                        ok = false;
                    }
                }
        if (ok) comp.pass("coform-coform formula");
    }

    {
        bool ok = true;
        for (int a = 0; a < r && ok; ++a)
            for (int b = 0; b < r && ok; ++b)
                for (int coef = 0; coef < 2 && ok; ++coef) {
                    const KVector x = coef ? j.alg().frame_mv(a) * x0 : j.alg().frame_mv(a);
                    const KVector xi = j.alg().frame_form(b);
                    const GenSection direct =
                        out.deformed.bracket(gen_of_mv(j, x), gen_of_form(j, xi));
                    const GenSection resid = direct - mixed_expected(x, xi);
                    if (!resid.is_zero()) {
                        comp.fail("vector-coform formula",
                                  pair_str(gen_of_mv(j, x), gen_of_form(j, xi), names),
                                  resid.str(names));
                        ok = false;
                    }
                }
        if (ok) comp.pass("vector-coform formula");
    }

    {
        bool ok = true;
        for (int a = 0; a < r && ok; ++a)
            for (int b = 0; b < r && ok; ++b)
                for (int coef = 0; coef < 2 && ok; ++coef) {
                    const KVector xi =
                        coef ? j.alg().frame_form(a) * x0 : j.alg().frame_form(a);
                    const KVector y = j.alg().frame_mv(b);
                    const GenSection direct =
                        out.deformed.bracket(gen_of_form(j, xi), gen_of_mv(j, y));
                    const GenSection expected =
                        -mixed_expected(y, xi) -
                        apply_block(g, gen_of_form(j, j.jetd(scalar_form(j, eval_on(xi, {y})))));
                    const GenSection resid = direct - expected;
                    if (!resid.is_zero()) {
                        comp.fail("coform-vector formula",
                                  pair_str(gen_of_form(j, xi), gen_of_mv(j, y), names),
                                  resid.str(names));
                        ok = false;
                    }
                }
        if (ok) comp.pass("coform-vector formula");
    }
    return out;
}

FrameStructure dual_frame_structure(const DualStructure& d) {
    FrameStructure f;
    f.vars = d.host.vars();
    f.rank = d.host.rank();
    f.rho_vec = d.dual_anchor_vec;
    f.rho_scal = d.dual_anchor_scal;
    f.c = d.dual_c;
    f.section_variance = Variance::Multivector;
    return f;
}

KVector dual_differential(const DualStructure& d, const KVector& w) {
    return jerd(dual_frame_structure(d), w);
}

KVector dual_bracket(const DualStructure& d, const KVector& xi, const KVector& eta) {
    const JacobiAlgebroid& j = d.host;
    const int r = j.rank();
    const std::vector<Poly> xs = xi.coeffs1();
    const std::vector<Poly> es = eta.coeffs1();
    KVector out = j.alg().zero_form(1);
    KVector rho_xi(j.vars(), j.alg().dim(), 1, Variance::Multivector);
    KVector rho_eta(j.vars(), j.alg().dim(), 1, Variance::Multivector);
    for (int i = 0; i < r; ++i) {
        rho_xi += row_as_vf(j.vars(), d.dual_anchor_vec[i]) * xs[i];
        rho_eta += row_as_vf(j.vars(), d.dual_anchor_vec[i]) * es[i];
    }
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            if (xs[i].is_zero() || es[k].is_zero()) continue;
            for (int l = 0; l < r; ++l) out.add_term({l}, xs[i] * es[k] * d.dual_c[i][k][l]);
        }
    for (int k = 0; k < r; ++k) out.add_term({k}, vf_apply(rho_xi, es[k]));
    for (int i = 0; i < r; ++i) out.add_term({i}, -vf_apply(rho_eta, xs[i]));
    return out;
}

DualStructure trivial_dual(const JacobiAlgebroid& j) {
    DualStructure d;
    d.host = j;
    const int r = j.rank();
    d.dual_anchor_vec = mat_zero(j.vars(), r, j.alg().dim());
    d.dual_anchor_scal.assign(r, Poly::zero(j.vars()));
    d.dual_c.assign(r, std::vector<std::vector<Poly>>(
                           r, std::vector<Poly>(r, Poly::zero(j.vars()))));
    d.phi = KVector(j.vars(), r, 3, Variance::Multivector);
    return d;
}

DualStructure dual_from_bivector(const JacobiAlgebroid& j, const KVector& pi) {
    DualStructure d = trivial_dual(j);
    const int r = j.rank();
    for (int i = 0; i < r; ++i) {
        const KVector si = sharp(pi, j.alg().frame_form(i));
        d.dual_anchor_vec[i] = j.alg().anchor_of(si).coeffs1();
        d.dual_anchor_scal[i] = j.phi0_of(si);
        for (int k = 0; k < r; ++k) {
            const std::vector<Poly> br =
                bracket_pi(j, pi, j.alg().frame_form(i), j.alg().frame_form(k)).coeffs1();
            for (int l = 0; l < r; ++l) d.dual_c[i][k][l] = br[l];
        }
    }
    return d;
}

DualStructure dual_from_quadruple(const QuadrupleCandidate& q) {
    DualStructure d;
    d.host = dual_jacobi_algebroid(q.j, q.pi);
    const int r = q.j.rank();
    d.dual_anchor_vec = mat_zero(q.j.vars(), r, q.j.alg().dim());
    d.dual_anchor_scal.assign(r, Poly::zero(q.j.vars()));
    d.dual_c.assign(r, std::vector<std::vector<Poly>>(
                           r, std::vector<Poly>(r, Poly::zero(q.j.vars()))));
    for (int i = 0; i < r; ++i) {
        const KVector ni = q.n.apply1(q.j.alg().frame_mv(i));
        d.dual_anchor_vec[i] = q.j.alg().anchor_of(ni).coeffs1();
        d.dual_anchor_scal[i] = q.j.phi0_of(ni);
        for (int k = 0; k < r; ++k) {
            const std::vector<Poly> br =
                bracket_n(q.j.alg(), q.n, q.j.alg().frame_mv(i), q.j.alg().frame_mv(k))
                    .coeffs1();
            for (int l = 0; l < r; ++l) d.dual_c[i][k][l] = br[l];
        }
    }
    d.phi = reinterpret_variance(q.phi, Variance::Multivector);
    return d;
}

CjStructure build_double(const DualStructure& d, MixedDifferential md) {
    CjStructure s;
    const JacobiAlgebroid j = d.host;
    s.host = j;
    s.pairing = [j](const GenSection& u, const GenSection& v) {
        return (eval_on(u.xi, {v.x}) + eval_on(v.xi, {u.x})) * Rat(1, 2);
    };
    s.anchor = [j, d](const GenSection& u) {
        FirstOrderOp op{j.alg().anchor_of(u.x), j.phi0_of(u.x)};
        const std::vector<Poly> cs = u.xi.coeffs1();
        for (int i = 0; i < j.rank(); ++i) {
            op.vec += row_as_vf(j.vars(), d.dual_anchor_vec[i]) * cs[i];
            op.scal += d.dual_anchor_scal[i] * cs[i];
        }
        return op;
    };
    s.bracket = [j, d, md](const GenSection& u, const GenSection& v) {
        auto hostd = [&](const KVector& w) {
            return md == MixedDifferential::Jet ? j.jetd(w) : j.alg().differential(w);
        };
        GenSection out;
        out.x = j.alg().bracket(u.x, v.x);
        out.xi = j.alg().zero_form(1);
        {
            const KVector& x = u.x;
            const KVector& eta = v.xi;
            out.xi += contract(x, hostd(eta)) +
                      j.jetd(scalar_form(j, eval_on(eta, {x})));
            out.x -= contract(eta, dual_differential(d, x));
        }
        {
            const KVector& xi = u.xi;
            const KVector& y = v.x;
            out.xi -= contract(y, hostd(xi));
            out.x += contract(xi, dual_differential(d, y)) +
                     dual_differential(d, scalar_mv(j, eval_on(xi, {y})));
        }
        out.xi += dual_bracket(d, u.xi, v.xi);
        out.x += contract_multi(u.xi.wedge(v.xi), d.phi);
        return out;
    };
    return s;
}

DualStructure extract_bialgebroid(const CjStructure& s, DoubleSide dirac) {
    const JacobiAlgebroid& j = s.host;
    const Vars& v = j.vars();
    const int r = j.rank();
    const int m = j.alg().dim();
    const FrameNames& names = j.names();
    const bool first = dirac == DoubleSide::First;

    auto dirac_frame = [&](int i) {
        return first ? gen_of_mv(j, j.alg().frame_mv(i)) : gen_of_form(j, j.alg().frame_form(i));
    };
    auto co_frame = [&](int i) {
        return first ? gen_of_form(j, j.alg().frame_form(i)) : gen_of_mv(j, j.alg().frame_mv(i));
    };
    auto dirac_part = [&](const GenSection& u) { return first ? u.x : u.xi; };
    auto co_part = [&](const GenSection& u) { return first ? u.xi : u.x; };

    for (int i = 0; i < r; ++i)
        for (int k = i; k < r; ++k) {
            const Poly p = s.pairing(dirac_frame(i), dirac_frame(k));
            if (!p.is_zero())
                throw std::invalid_argument(
                    "extract_bialgebroid: designated half is not isotropic at " +
                    pair_str(dirac_frame(i), dirac_frame(k), names));
        }

    PolyMat anchor = mat_zero(v, r, m);
    KVector phi0(v, r, 1, Variance::Form);
    std::vector<std::vector<std::vector<Poly>>> c(
        r, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r, Poly::zero(v))));
    for (int i = 0; i < r; ++i) {
        const FirstOrderOp op = s.anchor(dirac_frame(i));
        anchor[i] = op.vec.coeffs1();
        phi0.add_term({i}, op.scal);
        for (int k = 0; k < r; ++k) {
            const GenSection br = s.bracket(dirac_frame(i), dirac_frame(k));
            if (!co_part(br).is_zero())
                throw std::invalid_argument(
                    "extract_bialgebroid: designated half is not closed under the bracket at " +
                    pair_str(dirac_frame(i), dirac_frame(k), names));
            const std::vector<Poly> comps = dirac_part(br).coeffs1();
            for (int l = 0; l < r; ++l) c[i][k][l] = comps[l];
        }
    }
    const FrameNames host_names = first ? names : FrameNames{names.form, names.mv};
    DualStructure out;
    out.host = JacobiAlgebroid(LieAlgebroid(v, r, anchor, c, host_names), phi0);

    out.dual_anchor_vec = mat_zero(v, r, m);
    out.dual_anchor_scal.assign(r, Poly::zero(v));
    out.dual_c.assign(r, std::vector<std::vector<Poly>>(
                             r, std::vector<Poly>(r, Poly::zero(v))));
    std::vector<std::vector<std::vector<Poly>>> w(
        r, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r, Poly::zero(v))));
    for (int i = 0; i < r; ++i) {
        const FirstOrderOp op = s.anchor(co_frame(i));
        out.dual_anchor_vec[i] = op.vec.coeffs1();
        out.dual_anchor_scal[i] = op.scal;
        for (int k = 0; k < r; ++k) {
            const GenSection br = s.bracket(co_frame(i), co_frame(k));
            const std::vector<Poly> cs = co_part(br).coeffs1();
            for (int l = 0; l < r; ++l) out.dual_c[i][k][l] = cs[l];
            w[i][k] = dirac_part(br).coeffs1();
        }
    }

    out.phi = KVector(v, r, 3, Variance::Multivector);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int cdx = b + 1; cdx < r; ++cdx) out.phi.add_term({a, b, cdx}, w[a][b][cdx]);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k)
            for (int l = 0; l < r; ++l) {
                Poly expect = Poly::zero(v);
                if (i != k && k != l && i != l) {
                    IdxTuple idx = {i, k, l};
                    // sign of the sorting permutation of a 3-tuple
                    int inv = (idx[0] > idx[1]) + (idx[0] > idx[2]) + (idx[1] > idx[2]);
                    IdxTuple sorted = idx;
                    std::sort(sorted.begin(), sorted.end());
                    expect = out.phi.component(sorted) * Rat(inv % 2 ? -1 : 1);
                }
                if (w[i][k][l] != expect)
                    throw std::invalid_argument(
                        "extract_bialgebroid: co-side bracket components are not alternating "
                        "at (" +
                        std::to_string(i) + ", " + std::to_string(k) + ", " + std::to_string(l) +
                        ")");
            }
    return out;
}

bool dual_structure_equal(const DualStructure& a, const DualStructure& b, std::string* why) {
    auto diff = [&](const std::string& what) {
        if (why) *why = what;
        return false;
    };
    if (a.host.vars() != b.host.vars()) return diff("base charts differ");
    if (a.host.rank() != b.host.rank()) return diff("ranks differ");
    if (!mat_equal(a.host.alg().anchor(), b.host.alg().anchor())) return diff("host anchors differ");
    const int r = a.host.rank();
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k)
            for (int l = 0; l < r; ++l)
                if (a.host.alg().structure_fn(i, k, l) != b.host.alg().structure_fn(i, k, l))
                    return diff("host structure functions differ at (" + std::to_string(i) +
                                ", " + std::to_string(k) + ", " + std::to_string(l) + ")");
    if (a.host.phi0() != b.host.phi0()) return diff("host cocycles differ");
    if (!mat_equal(a.dual_anchor_vec, b.dual_anchor_vec)) return diff("dual anchors differ");
    for (int i = 0; i < r; ++i)
        if (a.dual_anchor_scal[i] != b.dual_anchor_scal[i])
            return diff("dual anchor scalar parts differ at " + std::to_string(i));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k)
            for (int l = 0; l < r; ++l)
                if (a.dual_c[i][k][l] != b.dual_c[i][k][l])
                    return diff("dual structure functions differ at (" + std::to_string(i) +
                                ", " + std::to_string(k) + ", " + std::to_string(l) + ")");
    if (a.phi != b.phi) return diff("phi components differ");
    return true;
}

KVector derivation_defect(const JacobiAlgebroid& host,
                          const std::function<KVector(const KVector&)>& delta,
                          const KVector& p, const KVector& q) {
    auto u = [&host](const KVector& w) { return contract(host.phi0(), w); };
    const int dp = p.degree();
    const int dq = q.degree();
    KVector def = host.schouten_jacobi(p, delta(q)) * Rat(dp % 2 ? -1 : 1) -
                  host.schouten_jacobi(delta(p), q);
    if (dp + dq > 0) def += delta(host.schouten_jacobi(p, q));
    if (dp == 0 && dq == 0) return def - p.wedge(u(delta(q))) * Rat(2);
    if (dp == 0 && dq == 1) {
        const KVector unit = scalar_mv(host, Poly::one(host.vars()));
        const KVector beta = delta(unit);
        return def - (p.wedge(delta(u(q))) + p.wedge(u(delta(q))) -
                      beta.wedge(p).wedge(u(q)) + delta(p).wedge(u(q))) *
                         Rat(2);
    }
    if (dp == 1 && dq == 0) return def + u(delta(p)).wedge(q) * Rat(2);
    if (dp == 1 && dq == 1) return def - delta(p).wedge(u(q)) * Rat(2);
    return def;
}

Report verify_quasi_bialgebroid(const DualStructure& d) {
    Report rep;
    rep.title = "quasi-bialgebroid dual data";
    const JacobiAlgebroid& h = d.host;
    const Vars& v = h.vars();
    const int r = h.rank();
    const FrameNames& names = h.names();
    auto delta = [&d](const KVector& w) { return dual_differential(d, w); };

    std::vector<KVector> low;
    for (std::size_t k = 0; k < std::min<std::size_t>(v.size(), 2); ++k)
        low.push_back(scalar_mv(h, Poly::var(v, k)));
    if (v.size())
        low.push_back(scalar_mv(h, Poly::var(v, 0) * Poly::var(v, 0)));
    for (int i = 0; i < r; ++i) low.push_back(h.alg().frame_mv(i));

    {
        bool ok = true;
        for (const KVector& w : low) {
            const KVector resid = delta(delta(w)) - h.schouten_jacobi(d.phi, w);
            if (!resid.is_zero()) {
                rep.fail("differential squares to bracketing by phi", w.str(names),
                         resid.str(names));
                ok = false;
                break;
            }
        }
        if (ok) rep.pass("differential squares to bracketing by phi");
    }

    {
        const KVector resid = delta(d.phi);
        if (resid.is_zero())
            rep.pass("phi is closed");
        else
            rep.fail("phi is closed", "", resid.str(names));
    }

    {
        const Poly f = v.size() ? Poly::var(v, 0) : Poly::one(v);
        const Poly g =
            v.size() ? Poly::var(v, v.size() - 1) * Poly::var(v, v.size() - 1) : Poly::one(v);
        const KVector e0 = h.alg().frame_mv(0);
        const KVector elast = h.alg().frame_mv(r - 1);
        const KVector e1 = h.alg().frame_mv(r > 1 ? 1 : 0);
        struct Case {
            const char* name;
            KVector p, q;
        };
        const std::vector<Case> cases = {
            {"derivation law on functions", scalar_mv(h, f), scalar_mv(h, g)},
            {"derivation law (function, section)", scalar_mv(h, f), elast},
            {"derivation law (section, function)", e0, scalar_mv(h, g)},
            {"derivation law (section, section)", e0 * f, e1},
        };
        for (const Case& cs : cases) {
            const KVector resid = derivation_defect(h, delta, cs.p, cs.q);
            if (resid.is_zero())
                rep.pass(cs.name);
            else
                rep.fail(cs.name, "(" + cs.p.str(names) + ", " + cs.q.str(names) + ")",
                         resid.str(names));
        }
    }
    return rep;
}

CorrespondenceResult correspondence_suite(const QuadrupleCandidate& q, const KVector& sigma) {
    CorrespondenceResult res;
    Report& rep = res.report;
    rep.title = "correspondence suite";

    const KVector pot = q.j.jetd(sigma) - q.phi;
    const bool potential_ok = pot.is_zero();
    if (potential_ok)
        rep.pass("potential reproduces phi");
    else
        rep.fail("potential reproduces phi", "", pot.str(q.j.names()));

    const Report quad = verify_quadruple(q);
    rep.absorb("quadruple: ", quad);
    res.quadruple_ok = quad.passed();

    const DualStructure d = dual_from_quadruple(q);
    const Report dual = verify_quasi_bialgebroid(d);
    rep.absorb("dual data: ", dual);
    res.bialgebroid_ok = dual.passed();

    const DeformResult def =
        deform(canonical_double(q.j), GcsMap{q.n, q.pi, sigma}, false);
    rep.absorb("deformation components: ", def.components);
    const Report dbl = verify_courant_jacobi(def.deformed);
    rep.absorb("deformed double: ", dbl);
    res.double_ok = potential_ok && dbl.passed();

    res.coherent =
        res.quadruple_ok == res.bialgebroid_ok && res.bialgebroid_ok == res.double_ok;
    if (res.coherent) {
        rep.pass("legs agree");
    } else {
        const auto pf = [](bool b) { return b ? std::string("pass") : std::string("fail"); };
        rep.fail("legs agree", "",
                 "quadruple " + pf(res.quadruple_ok) + ", dual data " + pf(res.bialgebroid_ok) +
                     ", deformed double " + pf(res.double_ok));
    }
    return res;
}

}  // namespace jacal
