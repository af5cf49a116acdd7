#include "doctest.h"

#include "jacal/expr.hpp"
#include "jacal/nijenhuis.hpp"

#include <string>

using namespace jacal;

namespace {

Vars xy() { return Vars({"x", "y"}); }
Vars xyz() { return Vars({"x", "y", "z"}); }
Vars r4() { return Vars({"x1", "x2", "x3", "x4"}); }

KVector mv(const LieAlgebroid& a, int deg,
           std::initializer_list<std::pair<IdxTuple, const char*>> terms) {
    KVector out = a.zero_mv(deg);
    for (const auto& [idx, s] : terms) out.add_term(idx, parse_poly(s, a.vars()));
    return out;
}

KVector form(const LieAlgebroid& a, int deg,
             std::initializer_list<std::pair<IdxTuple, const char*>> terms) {
    KVector out = a.zero_form(deg);
    for (const auto& [idx, s] : terms) out.add_term(idx, parse_poly(s, a.vars()));
    return out;
}

EndoTensor endo(const Vars& v, std::initializer_list<std::initializer_list<const char*>> rows) {
    PolyMat m;
    for (const auto& row : rows) {
        m.emplace_back();
        for (const char* s : row) m.back().push_back(parse_poly(s, v));
    }
    return EndoTensor(v, m);
}

JacobiAlgebroid flat_jacobi(const LieAlgebroid& a) { return JacobiAlgebroid(a, a.zero_form(1)); }

// Solvable rank-2 algebroid over R^2: [e1,e2] = x e2, a(e1) = Dx, a(e2) = 0.
// Any form q(x,y) e^1 is closed for it.
LieAlgebroid solvable_r2() {
    Vars v = xy();
    PolyMat anchor = mat_zero(v, 2, 2);
    anchor[0][0] = Poly::one(v);
    std::vector<std::vector<std::vector<Poly>>> c(
        2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2, Poly::zero(v))));
    c[0][1][1] = Poly::var(v, 0);
    c[1][0][1] = -Poly::var(v, 0);
    return LieAlgebroid(v, 2, anchor, c, FrameNames::generic(2));
}

// Rotation-block pair on tangent R^4: N = J + J and the bivector whose sharp
// matrix is [[0,K],[-K,0]] with K = diag(1,-1); the musical maps commute and
// N P = [[0,JK],[-JK,0]] is skew.
struct R4Pair {
    JacobiAlgebroid j;
    KVector pi;
    EndoTensor n;
};

R4Pair r4_pair() {
    LieAlgebroid t = tangent_algebroid(r4());
    JacobiAlgebroid j = flat_jacobi(t);
    KVector pi = mv(t, 2, {{{0, 2}, "-1"}, {{1, 3}, "1"}});
    EndoTensor n = endo(r4(), {{"0", "-1", "0", "0"},
                               {"1", "0", "0", "0"},
                               {"0", "0", "0", "-1"},
                               {"0", "0", "1", "0"}});
    return {j, pi, n};
}

}  // namespace

TEST_CASE("sharp and flat: sign anchors, skewness, matrix consistency") {
    LieAlgebroid t = tangent_algebroid(xy());
    KVector pi = mv(t, 2, {{{0, 1}, "1"}});  // Dx^Dy
    CHECK(sharp(pi, form(t, 1, {{{0}, "1"}})) == mv(t, 1, {{{1}, "1"}}));    // dx -> Dy
    CHECK(sharp(pi, form(t, 1, {{{1}, "1"}})) == mv(t, 1, {{{0}, "-1"}}));   // dy -> -Dx
    KVector sigma = form(t, 2, {{{0, 1}, "1"}});  // dx^dy
    CHECK(flat(sigma, mv(t, 1, {{{0}, "1"}})) == form(t, 1, {{{1}, "1"}}));  // Dx -> dy
    CHECK(flat(sigma, mv(t, 1, {{{1}, "1"}})) == form(t, 1, {{{0}, "-1"}}));

    // eta(sharp xi) = pi(xi,eta) = -xi(sharp eta), with polynomial sections
    LieAlgebroid t3 = tangent_algebroid(xyz());
    KVector p3 = mv(t3, 2, {{{0, 1}, "x"}, {{0, 2}, "y^2"}, {{1, 2}, "x*y+1"}});
    KVector xi = form(t3, 1, {{{0}, "y"}, {{2}, "x-1"}});
    KVector eta = form(t3, 1, {{{1}, "x*y"}, {{2}, "2"}});
    CHECK(eval_on(eta, {sharp(p3, xi)}) == eval_on(p3, {xi, eta}));
    CHECK(eval_on(eta, {sharp(p3, xi)}) == -eval_on(xi, {sharp(p3, eta)}));
    // sigma_flat(X)(Y) = sigma(X,Y)
    KVector s3 = form(t3, 2, {{{0, 1}, "z"}, {{1, 2}, "x"}});
    KVector X = mv(t3, 1, {{{0}, "y"}, {{1}, "1"}});
    KVector Y = mv(t3, 1, {{{1}, "x"}, {{2}, "z^2"}});
    CHECK(eval_on(flat(s3, X), {Y}) == eval_on(s3, {X, Y}));
    // function-linearity of the musical maps
    Poly f = parse_poly("x^2-z", t3.vars());
    CHECK(sharp(p3, xi * f) == sharp(p3, xi) * f);
    CHECK(flat(s3, X * f) == flat(s3, X) * f);
}

TEST_CASE("torsion: vanishing cases, a frozen value, f-linearity") {
    LieAlgebroid t = tangent_algebroid(xy());
    KVector dx1 = t.frame_mv(0), dy1 = t.frame_mv(1);
    CHECK(torsion(t, EndoTensor::identity(xy(), 2), dx1, dy1).is_zero());
    EndoTensor rot = endo(xy(), {{"0", "-1"}, {"1", "0"}});
    for (const auto& row : torsion_table(t, rot))
        for (const auto& entry : row) CHECK(entry.is_zero());

    // N = diag(x,1): the four-term expansion on (Dx,Dy) collapses, since
    // [x Dx, Dy] = 0 and [Dx, Dy] = 0.
    EndoTensor nd = endo(xy(), {{"x", "0"}, {"0", "1"}});
    KVector byhand = t.bracket(nd.apply1(dx1), nd.apply1(dy1)) -
                     nd.apply1(t.bracket(nd.apply1(dx1), dy1) + t.bracket(dx1, nd.apply1(dy1)) -
                               nd.apply1(t.bracket(dx1, dy1)));
    CHECK(torsion(t, nd, dx1, dy1) == byhand);
    CHECK(torsion(t, nd, dx1, dy1).is_zero());

    // N = diag(y,x) has genuine torsion: T(Dx,Dy) = (y-x)(Dx + Dy).
    EndoTensor nyx = endo(xy(), {{"y", "0"}, {"0", "x"}});
    CHECK(torsion(t, nyx, dx1, dy1) == mv(t, 1, {{{0}, "y-x"}, {{1}, "y-x"}}));
    // tensorial: function-linear in each slot, antisymmetric
    Poly f = parse_poly("x^2+y", t.vars());
    CHECK(torsion(t, nyx, dx1 * f, dy1) == torsion(t, nyx, dx1, dy1) * f);
    CHECK(torsion(t, nyx, dx1, dy1 * f) == torsion(t, nyx, dx1, dy1) * f);
    CHECK(torsion(t, nyx, dy1, dx1) == -torsion(t, nyx, dx1, dy1));

    // nonabelian frame: torsion remains tensorial over the solvable algebroid
    LieAlgebroid s = solvable_r2();
    EndoTensor ns = endo(xy(), {{"1", "x"}, {"0", "1"}});
    KVector e0 = s.frame_mv(0), e1 = s.frame_mv(1);
    CHECK(torsion(s, ns, e0 * f, e1) == torsion(s, ns, e0, e1) * f);
}

TEST_CASE("deformed bracket: degenerate endomorphisms and a frozen value") {
    LieAlgebroid t = tangent_algebroid(xy());
    KVector X = mv(t, 1, {{{0}, "x"}});  // x Dx
    KVector Y = t.frame_mv(1);
    CHECK(bracket_n(t, EndoTensor::identity(xy(), 2), X, Y) == t.bracket(X, Y));
    CHECK(bracket_n(t, EndoTensor::zero(xy(), 2), X, Y).is_zero());

    EndoTensor rot = endo(xy(), {{"0", "-1"}, {"1", "0"}});
    // [x Dx, Dy]_N = [x Dy, Dy] + [x Dx, -Dx] - N[x Dx, Dy] = Dx
    CHECK(bracket_n(t, rot, X, Y) == t.frame_mv(0));
    // Leibniz with the deformed anchor a o N
    Poly f = parse_poly("x*y", t.vars());
    CHECK(bracket_n(t, rot, X, Y * f) ==
          bracket_n(t, rot, X, Y) * f + Y * t.anchor_apply(rot.apply1(X), f));
    // zero torsion makes the deformed bracket a Lie bracket
    KVector Z = mv(t, 1, {{{0}, "y"}, {{1}, "x^2"}});
    CHECK(torsion(t, rot, X, Z).is_zero());
    KVector jac = bracket_n(t, rot, bracket_n(t, rot, X, Y), Z) +
                  bracket_n(t, rot, bracket_n(t, rot, Y, Z), X) +
                  bracket_n(t, rot, bracket_n(t, rot, Z, X), Y);
    CHECK(jac.is_zero());
}

TEST_CASE("bracket on 1-forms induced by a bivector") {
    LieAlgebroid t = tangent_algebroid(xy());
    JacobiAlgebroid j0 = flat_jacobi(t);
    KVector pi = mv(t, 2, {{{0, 1}, "1"}});
    KVector dx = t.frame_form(0), dy = t.frame_form(1);
    CHECK(bracket_pi(j0, t.zero_mv(2), dx, dy).is_zero());
    CHECK(bracket_pi(j0, pi, dx, dy).is_zero());

    // cocycle phi0 = dx: compare against the term-by-term expansion built
    // from the plain differential, L_X = i_X d + d i_X, and the phi0(X)
    // correction on 1-forms.
    JacobiAlgebroid j = JacobiAlgebroid(t, form(t, 1, {{{0}, "1"}}));
    auto lie_plus = [&](const KVector& v, const KVector& w) {
        KVector classical = contract(v, t.differential(w)) + t.differential(contract(v, w));
        return classical + w * j.phi0_of(v);
    };
    auto oracle = [&](const KVector& xi, const KVector& eta) {
        Poly p = eval_on(pi, {xi, eta});
        KVector scal = KVector::scalar(t.vars(), 2, Variance::Form, p);
        KVector jd = t.differential(scal) + j.phi0().wedge(scal);
        return -jd + lie_plus(sharp(pi, xi), eta) - lie_plus(sharp(pi, eta), xi);
    };
    KVector xi = form(t, 1, {{{0}, "y"}, {{1}, "x^2"}});
    KVector eta = form(t, 1, {{{0}, "1"}, {{1}, "x*y+1"}});
    CHECK(bracket_pi(j, pi, dx, dy) == oracle(dx, dy));
    CHECK(bracket_pi(j, pi, xi, eta) == oracle(xi, eta));
    CHECK(bracket_pi(j, pi, xi, eta) == -bracket_pi(j, pi, eta, xi));
}

TEST_CASE("sharp intertwines the induced bracket up to the bivector closure") {
    // The defect vanishes for EVERY bivector, Jacobi or not, and with any
    // closed cocycle; this ties sharp, bracket_pi, and the extended Schouten
    // bracket together.
    auto sweep = [](const JacobiAlgebroid& j, const KVector& pi) {
        const LieAlgebroid& a = j.alg();
        for (int i = 0; i < a.rank(); ++i)
            for (int k = i; k < a.rank(); ++k)
                CHECK(fundamental_identity_defect(j, pi, a.frame_form(i), a.frame_form(k))
                          .is_zero());
        KVector xi = a.frame_form(0) * parse_poly("x", a.vars()) +
                     a.frame_form(a.rank() - 1) * parse_poly("y+1", a.vars());
        KVector eta = a.frame_form(1) * parse_poly("x*y", a.vars()) -
                      a.frame_form(0) * parse_poly("y^2", a.vars());
        CHECK(fundamental_identity_defect(j, pi, xi, eta).is_zero());
    };

    LieAlgebroid t3 = tangent_algebroid(xyz());
    JacobiAlgebroid flat3 = flat_jacobi(t3);
    JacobiAlgebroid twisted3(t3, form(t3, 1, {{{2}, "1"}}));  // phi0 = dz
    const char* coeffs[6] = {"1", "x", "y", "x*y", "x^2-y", "z+1"};
    for (int s = 0; s < 6; ++s) {
        KVector pi = t3.zero_mv(2);
        pi.add_term({0, 1}, parse_poly(coeffs[s % 6], t3.vars()));
        pi.add_term({0, 2}, parse_poly(coeffs[(s + 2) % 6], t3.vars()));
        pi.add_term({1, 2}, parse_poly(coeffs[(s + 4) % 6], t3.vars()));
        sweep(flat3, pi);
        sweep(twisted3, pi);
    }

    // solvable frame with a nonconstant closed cocycle
    LieAlgebroid s = solvable_r2();
    JacobiAlgebroid js(s, form(s, 1, {{{0}, "x*y^2"}}));
    sweep(js, mv(s, 2, {{{0, 1}, "x+y"}}));

    // extended frame: the unit direction mixes into the cocycle terms
    LieAlgebroid e1 = extended_algebroid(xy());
    JacobiAlgebroid je(e1, form(e1, 1, {{{2}, "1"}}));
    sweep(je, mv(e1, 2, {{{0, 1}, "1"}, {{0, 2}, "-1"}}));
    sweep(je, mv(e1, 2, {{{0, 1}, "x"}, {{1, 2}, "y"}}));

    // non-Jacobi bivector: both sides of the intertwining identity are
    // individually nonzero yet agree
    KVector bad = mv(t3, 2, {{{0, 1}, "1"}, {{0, 2}, "x"}});
    KVector dx = t3.frame_form(0), dy = t3.frame_form(1);
    KVector lhs = sharp(bad, bracket_pi(flat3, bad, dx, dy)) -
                  t3.bracket(sharp(bad, dx), sharp(bad, dy));
    KVector rhs = contract_multi(dy.wedge(dx), flat3.schouten_jacobi(bad, bad)) * Rat(1, 2);
    CHECK(!lhs.is_zero());
    CHECK(lhs == rhs);
    sweep(flat3, bad);
}

TEST_CASE("musical commutation gates the deformed bivector") {
    R4Pair p = r4_pair();
    CHECK(musical_commutes(p.pi, p.n));
    KVector pin = pi_n(p.pi, p.n);
    CHECK(pin == mv(p.j.alg(), 2, {{{0, 3}, "-1"}, {{1, 2}, "-1"}}));
    CHECK(mat_equal(sharp_matrix(pin), mat_mul(p.n.matrix(), sharp_matrix(p.pi))));
    CHECK(pi_n(p.pi, EndoTensor::identity(r4(), 4)) == p.pi);

    // flipping the second rotation block breaks commutation
    EndoTensor broken = endo(r4(), {{"0", "-1", "0", "0"},
                                    {"1", "0", "0", "0"},
                                    {"0", "0", "0", "1"},
                                    {"0", "0", "-1", "0"}});
    CHECK(!musical_commutes(p.pi, broken));
    CHECK_THROWS_AS(pi_n(p.pi, broken), std::domain_error);
    try {
        pi_n(p.pi, broken);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("symmetric defect") != std::string::npos);
    }
    CHECK_THROWS_AS(concomitant(p.j, p.pi, broken, p.j.alg().frame_form(0),
                                p.j.alg().frame_form(1)),
                    std::domain_error);
}

TEST_CASE("concomitant: compatible pairs vanish, a shear fixture does not") {
    // constant multiples of the identity are compatible with any bivector,
    // including in the presence of a cocycle
    LieAlgebroid t = tangent_algebroid(xy());
    JacobiAlgebroid j(t, form(t, 1, {{{0}, "1"}}));
    KVector pi = mv(t, 2, {{{0, 1}, "1"}});
    EndoTensor two = EndoTensor::identity(xy(), 2) * Rat(2);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            CHECK(concomitant(j, pi, two, t.frame_form(i), t.frame_form(k)).is_zero());

    R4Pair p = r4_pair();
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k)
            CHECK(concomitant(p.j, p.pi, p.n, p.j.alg().frame_form(i),
                              p.j.alg().frame_form(k))
                      .is_zero());

    // shear along the kernel direction of a degenerate bivector: musical maps
    // commute but the pair is not compatible; C(dx,dy) = -dz exactly.
    LieAlgebroid t3 = tangent_algebroid(xyz());
    JacobiAlgebroid j3 = flat_jacobi(t3);
    KVector pi3 = mv(t3, 2, {{{0, 1}, "1"}});
    EndoTensor shear = endo(xyz(), {{"1", "0", "x"}, {"0", "1", "0"}, {"0", "0", "1"}});
    CHECK(musical_commutes(pi3, shear));
    CHECK(concomitant(j3, pi3, shear, t3.frame_form(0), t3.frame_form(1)) ==
          form(t3, 1, {{{2}, "-1"}}));
    // tensorial in both slots
    Poly f = parse_poly("x*z", t3.vars());
    CHECK(concomitant(j3, pi3, shear, t3.frame_form(0) * f, t3.frame_form(1)) ==
          concomitant(j3, pi3, shear, t3.frame_form(0), t3.frame_form(1)) * f);
}

TEST_CASE("degree +1 commutator operator and its split route") {
    LieAlgebroid t = tangent_algebroid(xy());
    JacobiAlgebroid j(t, form(t, 1, {{{0}, "1"}}));  // phi0 = dx
    EndoTensor rot = endo(xy(), {{"0", "-1"}, {"1", "0"}});

    // on the function y: i_N jetd y = N*(dy + y dx) = dx - y dy
    KVector fy = KVector::scalar(xy(), 2, Variance::Form, parse_poly("y", xy()));
    CHECK(d_n(j, rot, fy) == form(t, 1, {{{0}, "1"}, {{1}, "-y"}}));

    CHECK(d_n(j, EndoTensor::zero(xy(), 2), fy).is_zero());
    KVector w1 = form(t, 1, {{{0}, "x*y"}, {{1}, "1"}});
    CHECK(d_n(j, EndoTensor::zero(xy(), 2), w1).is_zero());
    CHECK(d_n(j, EndoTensor::identity(xy(), 2), w1) == j.jetd(w1));

    // the commutator route equals the deformed-Cartan-plus-cocycle route on
    // every degree and over nonabelian frames
    auto agree = [](const JacobiAlgebroid& jj, const EndoTensor& n, const KVector& w) {
        CHECK(d_n(jj, n, w) == d_n_split(jj, n, w));
    };
    agree(j, rot, fy);
    agree(j, rot, w1);
    agree(j, rot, form(t, 2, {{{0, 1}, "x^2-y"}}));
    EndoTensor nyx = endo(xy(), {{"y", "0"}, {"0", "x"}});
    agree(j, nyx, w1);

    LieAlgebroid s = solvable_r2();
    JacobiAlgebroid js(s, form(s, 1, {{{0}, "x"}}));
    EndoTensor shear = endo(xy(), {{"1", "x"}, {"0", "1"}});
    agree(js, shear, KVector::scalar(xy(), 2, Variance::Form, parse_poly("x*y", xy())));
    agree(js, shear, form(s, 1, {{{0}, "y"}, {{1}, "x"}}));
    agree(js, shear, form(s, 2, {{{0, 1}, "x+y"}}));

    LieAlgebroid e1 = extended_algebroid(xy());
    JacobiAlgebroid je(e1, form(e1, 1, {{{2}, "1"}}));
    EndoTensor mix = endo(xy(), {{"0", "-1", "0"}, {"1", "0", "0"}, {"0", "x", "1"}});
    agree(je, mix, form(e1, 1, {{{1}, "x"}, {{2}, "y"}}));
    agree(je, mix, form(e1, 2, {{{0, 2}, "y"}, {{1, 2}, "x"}}));
}

TEST_CASE("1-form-valued contraction of the differential of a 3-form") {
    LieAlgebroid t3 = tangent_algebroid(xyz());
    JacobiAlgebroid j3 = flat_jacobi(t3);
    KVector vol = form(t3, 3, {{{0, 1, 2}, "x*y"}});
    CHECK(dphi_flat(j3, vol, t3.frame_mv(0), t3.frame_mv(1), t3.frame_mv(2)).is_zero());

    LieAlgebroid t4 = tangent_algebroid(r4());
    JacobiAlgebroid j4 = flat_jacobi(t4);
    KVector phi = form(t4, 3, {{{1, 2, 3}, "x1"}});
    // jetd phi = dx1^dx2^dx3^dx4, so contracting the first three frame
    // directions leaves dx4
    CHECK(dphi_flat(j4, phi, t4.frame_mv(0), t4.frame_mv(1), t4.frame_mv(2)) ==
          form(t4, 1, {{{3}, "1"}}));
    Poly f = parse_poly("x2^2", t4.vars());
    CHECK(dphi_flat(j4, phi, t4.frame_mv(0) * f, t4.frame_mv(1), t4.frame_mv(2)) ==
          form(t4, 1, {{{3}, "x2^2"}}));
    KVector closed = form(t4, 3, {{{0, 1, 2}, "1"}});
    CHECK(dphi_flat(j4, closed, t4.frame_mv(0), t4.frame_mv(1), t4.frame_mv(3)).is_zero());
}

TEST_CASE("dual algebroid of a Jacobi bivector") {
    // Poisson on R^2
    LieAlgebroid t = tangent_algebroid(xy());
    JacobiAlgebroid j0 = flat_jacobi(t);
    KVector pi = mv(t, 2, {{{0, 1}, "1"}});
    Report r = verify_jacobi_bivector(j0, pi);
    CHECK(r.passed());

    // zero bivector
    CHECK(verify_jacobi_bivector(j0, t.zero_mv(2)).passed());

    // rank 2 with cocycle: every bivector is Jacobi (no 3-vectors), and the
    // dual axioms still pass
    JacobiAlgebroid j(t, form(t, 1, {{{0}, "1"}}));
    CHECK(verify_jacobi_bivector(j, pi).passed());

    // a Poisson bivector with polynomial coefficients on R^3
    LieAlgebroid t3 = tangent_algebroid(xyz());
    JacobiAlgebroid flat3 = flat_jacobi(t3);
    KVector poisson3 = mv(t3, 2, {{{0, 1}, "1"}, {{1, 2}, "x"}});
    CHECK(flat3.schouten_jacobi(poisson3, poisson3).is_zero());
    CHECK(verify_jacobi_bivector(flat3, poisson3).passed());

    // extended frame over R^2 with the unit-direction cocycle
    LieAlgebroid e1 = extended_algebroid(xy());
    JacobiAlgebroid je(e1, form(e1, 1, {{{2}, "1"}}));
    KVector embedded = mv(e1, 2, {{{0, 1}, "1"}, {{0, 2}, "-1"}});
    CHECK(je.schouten_jacobi(embedded, embedded).is_zero());
    Report re = verify_jacobi_bivector(je, embedded);
    CHECK(re.passed());
    // the dual cocycle is the sharp image of the host cocycle, negated
    JacobiAlgebroid dual = dual_jacobi_algebroid(je, embedded);
    CHECK(reinterpret_variance(dual.phi0(), Variance::Multivector) == -sharp(embedded, je.phi0()));

    // non-Jacobi bivector: closure fails and the dual checks are skipped
    KVector bad = mv(t3, 2, {{{0, 1}, "1"}, {{0, 2}, "x"}});
    Report rb = verify_jacobi_bivector(flat3, bad);
    CHECK(!rb.passed());
    CHECK(rb.fail_count() == 1);
    CHECK(rb.items[0].residual != "");
}

TEST_CASE("derivation property of the commutator operator detects compatibility") {
    // d_N transported to the dual side obeys the graded derivation law over
    // the dual bracket exactly when (pi, N) is compatible:
    //   def(P,Q) = D[[P,Q]] - [[DP,Q]] + (-1)^p [[P,DQ]] = 0,  D = d_N.
    // This is exact even with a nonzero cocycle, which is not obvious: the
    // dual bracket then has a unit obstruction [[P,1]] = -(-1)^p i_theta P
    // (theta the dual cocycle) and D itself is first order, D(1) = beta != 0.
    // The two first-order characters cancel because both ride the same
    // cocycle insertion; the checks below exercise that cancellation on
    // fixtures where beta and the obstruction are individually nonzero.
    auto residual = [](const JacobiAlgebroid& j, const KVector& pi, const EndoTensor& n,
                       const KVector& p, const KVector& q) {
        JacobiAlgebroid dual = dual_jacobi_algebroid(j, pi);
        auto to_dual = [](const KVector& w) {
            return reinterpret_variance(w, Variance::Multivector);
        };
        auto dn = [&](const KVector& w_dual) {
            return to_dual(d_n(j, n, reinterpret_variance(w_dual, Variance::Form)));
        };
        const int dp = p.degree(), dq = q.degree();
        KVector def = dual.schouten_jacobi(p, dn(q)) * Rat(dp % 2 ? -1 : 1) -
                      dual.schouten_jacobi(dn(p), q);
        // the (0,0) bracket is the zero function: its image under D would sit
        // one degree above the other terms, so the differential term drops
        if (dp + dq > 0) def += dn(dual.schouten_jacobi(p, q));
        return def;
    };

    LieAlgebroid t = tangent_algebroid(xy());
    JacobiAlgebroid j(t, form(t, 1, {{{0}, "1"}}));
    KVector pi = mv(t, 2, {{{0, 1}, "1"}});
    EndoTensor two = EndoTensor::identity(xy(), 2) * Rat(2);
    KVector f0 = KVector::scalar(xy(), 2, Variance::Multivector, parse_poly("x^2+y", xy()));
    KVector g0 = KVector::scalar(xy(), 2, Variance::Multivector, parse_poly("x*y", xy()));
    KVector xi_d = reinterpret_variance(form(t, 1, {{{0}, "y"}, {{1}, "x"}}),
                                        Variance::Multivector);
    KVector eta_d = reinterpret_variance(form(t, 1, {{{1}, "x*y+1"}}), Variance::Multivector);
    // the exactness is nontrivial here: the unit obstruction and D(1) are
    // both nonzero on this fixture
    {
        JacobiAlgebroid dual = dual_jacobi_algebroid(j, pi);
        CHECK(!dual.phi0().is_zero());
        KVector unit = KVector::scalar(xy(), 2, Variance::Form, Poly::one(xy()));
        CHECK(!d_n(j, two, unit).is_zero());
    }
    CHECK(residual(j, pi, two, f0, g0).is_zero());
    CHECK(residual(j, pi, two, f0, xi_d).is_zero());
    CHECK(residual(j, pi, two, xi_d, f0).is_zero());
    CHECK(residual(j, pi, two, xi_d, eta_d).is_zero());
    // a scalar-function tensor that stays compatible on the plane
    EndoTensor xid = endo(xy(), {{"x", "0"}, {"0", "x"}});
    CHECK(musical_commutes(pi, xid));
    CHECK(concomitant(j, pi, xid, t.frame_form(0), t.frame_form(1)).is_zero());
    CHECK(residual(j, pi, xid, f0, eta_d).is_zero());
    CHECK(residual(j, pi, xid, xi_d, eta_d).is_zero());

    // rank 3, nonzero two-component cocycle, N = Id
    LieAlgebroid t3 = tangent_algebroid(xyz());
    JacobiAlgebroid j3(t3, form(t3, 1, {{{0}, "1"}, {{2}, "1"}}));
    KVector pi3 = mv(t3, 2, {{{0, 1}, "1"}});
    EndoTensor id3 = EndoTensor::identity(xyz(), 3);
    KVector zdx = reinterpret_variance(form(t3, 1, {{{0}, "z"}}), Variance::Multivector);
    KVector xdy = reinterpret_variance(form(t3, 1, {{{1}, "x"}}), Variance::Multivector);
    KVector ydz = reinterpret_variance(form(t3, 1, {{{2}, "y"}}), Variance::Multivector);
    KVector dy3 = reinterpret_variance(t3.frame_form(1), Variance::Multivector);
    KVector h3 = KVector::scalar(xyz(), 3, Variance::Multivector, parse_poly("z", xyz()));
    CHECK(residual(j3, pi3, id3, zdx, dy3).is_zero());
    CHECK(residual(j3, pi3, id3, xdy, ydz).is_zero());
    CHECK(residual(j3, pi3, id3, h3, xdy).is_zero());
    CHECK(residual(j3, pi3, id3, dy3, h3).is_zero());

    // zero cocycle: the classical statement of the same law
    R4Pair p4 = r4_pair();
    KVector f4 = KVector::scalar(r4(), 4, Variance::Multivector, parse_poly("x1*x3", r4()));
    KVector a4 = reinterpret_variance(
        form(p4.j.alg(), 1, {{{0}, "x2"}, {{3}, "1"}}), Variance::Multivector);
    KVector b4 = reinterpret_variance(
        form(p4.j.alg(), 1, {{{1}, "x1"}, {{2}, "x4"}}), Variance::Multivector);
    CHECK(residual(p4.j, p4.pi, p4.n, f4, a4).is_zero());
    CHECK(residual(p4.j, p4.pi, p4.n, a4, b4).is_zero());

    // converse, nonzero cocycle: N = x Id is musical on R^3 but the pair is
    // not compatible there, and the residual picks up the concomitant
    EndoTensor xid3 = endo(xyz(), {{"x", "0", "0"}, {"0", "x", "0"}, {"0", "0", "x"}});
    CHECK(musical_commutes(pi3, xid3));
    CHECK(!concomitant(j3, pi3, xid3, t3.frame_form(1), t3.frame_form(2)).is_zero());
    KVector one3 = KVector::scalar(xyz(), 3, Variance::Multivector, Poly::one(xyz()));
    KVector dx3 = reinterpret_variance(t3.frame_form(0), Variance::Multivector);
    CHECK(!residual(j3, pi3, xid3, one3, dy3).is_zero());
    CHECK(!residual(j3, pi3, xid3, dx3, dy3).is_zero());

    // converse, zero cocycle: the musical shear fails the classical law once
    // the sections have non-constant coefficients
    JacobiAlgebroid j3f = flat_jacobi(t3);
    EndoTensor shear = endo(xyz(), {{"1", "0", "x"}, {"0", "1", "0"}, {"0", "0", "1"}});
    KVector x3 = KVector::scalar(xyz(), 3, Variance::Multivector, parse_poly("x", xyz()));
    CHECK(!residual(j3f, pi3, shear, x3, dy3).is_zero());
    CHECK(!residual(j3f, pi3, shear, dy3, xdy).is_zero());
}

TEST_CASE("dual bracket satisfies the wedge law with first-order anomaly") {
    // [[P, Q^R]] = [[P,Q]]^R + (-1)^{(p-1)q} Q^[[P,R]] + (-1)^p (i_{X0}P)^Q^R
    // over the dual algebroid, X0 its cocycle. The anomaly is the unit
    // obstruction riding along: it equals -[[P,1]]^Q^R.
    LieAlgebroid e1 = extended_algebroid(xy());
    JacobiAlgebroid je(e1, form(e1, 1, {{{2}, "1"}}));
    KVector embedded = mv(e1, 2, {{{0, 1}, "1"}, {{0, 2}, "-1"}});
    JacobiAlgebroid dual = dual_jacobi_algebroid(je, embedded);

    auto check_wedge = [&](const KVector& p, const KVector& q, const KVector& r) {
        int sgn = ((p.degree() - 1) * q.degree()) % 2 ? -1 : 1;
        KVector lhs = dual.schouten_jacobi(p, q.wedge(r));
        KVector rhs = dual.schouten_jacobi(p, q).wedge(r) +
                      q.wedge(dual.schouten_jacobi(p, r)) * Rat(sgn) +
                      contract(dual.phi0(), p).wedge(q).wedge(r) *
                          Rat(p.degree() % 2 ? -1 : 1);
        CHECK(lhs == rhs);
    };
    KVector u = dual.alg().frame_mv(0) * parse_poly("x", xy());
    KVector v = dual.alg().frame_mv(1) + dual.alg().frame_mv(2) * parse_poly("y", xy());
    KVector w = dual.alg().frame_mv(2) * parse_poly("x*y", xy());
    check_wedge(u, v, w);
    check_wedge(u.wedge(v), w, u);
    check_wedge(v, u.wedge(w), u);
}

TEST_CASE("quadruple verifier: passing structures") {
    // scalar pair with cocycle
    LieAlgebroid t = tangent_algebroid(xy());
    JacobiAlgebroid j(t, form(t, 1, {{{0}, "1"}}));
    QuadrupleCandidate q1{j, mv(t, 2, {{{0, 1}, "1"}}),
                          EndoTensor::identity(xy(), 2) * Rat(2), t.zero_form(3)};
    Report r1 = verify_quadruple(q1);
    CHECK(r1.passed());
    CHECK(r1.items.size() == 8);  // six conditions + two consequences

    // rotation blocks on R^4
    R4Pair p = r4_pair();
    QuadrupleCandidate q2{p.j, p.pi, p.n, p.j.alg().zero_form(3)};
    CHECK(verify_quadruple(q2).passed());

    // nonzero 3-form with zero bivector
    LieAlgebroid t3 = tangent_algebroid(xyz());
    JacobiAlgebroid j3 = flat_jacobi(t3);
    QuadrupleCandidate q3{j3, t3.zero_mv(2), EndoTensor::identity(xyz(), 3),
                          form(t3, 3, {{{0, 1, 2}, "1"}})};
    CHECK(verify_quadruple(q3).passed());

    // embedded Jacobi bivector on the extended frame
    LieAlgebroid e1 = extended_algebroid(xy());
    JacobiAlgebroid je(e1, form(e1, 1, {{{2}, "1"}}));
    QuadrupleCandidate q4{je, mv(e1, 2, {{{0, 1}, "1"}, {{0, 2}, "-1"}}),
                          EndoTensor::identity(xy(), 3), e1.zero_form(3)};
    CHECK(verify_quadruple(q4).passed());
}

TEST_CASE("quadruple verifier: single-defect fixtures fail the right item") {
    auto item = [](const Report& r, const std::string& name) -> const CheckItem& {
        for (const auto& it : r.items)
            if (it.name == name) return it;
        static CheckItem missing;
        return missing;
    };

    // broken musical commutation: concomitant and consequences are skipped
    R4Pair p = r4_pair();
    EndoTensor broken = endo(r4(), {{"0", "-1", "0", "0"},
                                    {"1", "0", "0", "0"},
                                    {"0", "0", "0", "1"},
                                    {"0", "0", "-1", "0"}});
    Report r1 = verify_quadruple({p.j, p.pi, broken, p.j.alg().zero_form(3)});
    CHECK(!r1.passed());
    CHECK(item(r1, "musical-commutation").verdict == Verdict::Fail);
    CHECK(item(r1, "musical-commutation").residual != "");
    CHECK(item(r1, "concomitant").verdict == Verdict::Skipped);
    CHECK(item(r1, "deformed-pair-bracket").verdict == Verdict::Skipped);

    // non-closed 3-form, everything else trivial
    LieAlgebroid t4 = tangent_algebroid(r4());
    JacobiAlgebroid j4 = flat_jacobi(t4);
    KVector phi_open = form(t4, 3, {{{1, 2, 3}, "x1"}});
    Report r2 = verify_quadruple({j4, t4.zero_mv(2), EndoTensor::zero(r4(), 4), phi_open});
    CHECK(!r2.passed());
    CHECK(r2.fail_count() == 1);
    CHECK(item(r2, "phi-closed").verdict == Verdict::Fail);

    // closed 3-form that the torsion cannot match
    KVector pi4 = mv(t4, 2, {{{0, 2}, "-1"}, {{1, 3}, "1"}});
    EndoTensor n4 = endo(r4(), {{"0", "-1", "0", "0"},
                                {"1", "0", "0", "0"},
                                {"0", "0", "0", "-1"},
                                {"0", "0", "1", "0"}});
    KVector phi_c = form(t4, 3, {{{0, 1, 2}, "1"}});
    Report r3 = verify_quadruple({j4, pi4, n4, phi_c});
    CHECK(!r3.passed());
    CHECK(r3.fail_count() == 1);
    CHECK(item(r3, "torsion-matches-phi").verdict == Verdict::Fail);
    CHECK(item(r3, "torsion-matches-phi").where != "");
    CHECK(item(r3, "torsion-matches-phi").residual != "");
}
