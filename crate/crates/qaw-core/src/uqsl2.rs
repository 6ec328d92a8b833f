//! U_q(sl2) realized on Laurent polynomials, its equitable presentation, the
//! twisted generators W0, W1 with their q-commutator G1, and the quadratic
//! (Askey-Wilson) closure relations they satisfy.
//!
//! The realization acts on functions of z through the q-shift T:
//!   K± = u∓¹ T±¹,
//!   S+ = z (u² T⁻¹ - u⁻² T)/(q - q⁻¹),
//!   S- = -z⁻¹ (T⁻¹ - T)/(q - q⁻¹),
//! with u = q^ν. The Casimir element acts as the scalar
//! ω_ν = (q u² + q⁻¹ u⁻²)/(q - q⁻¹)², which replaces it in every structure
//! constant below.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::Check;
use crate::qcore::point::{ParamPoint, Profile};
use crate::qcore::rat::Rat;
use crate::skewring::{q_commutator, SkewLaurentOp};

const ANCHOR_UQSL2: &str = "uq-sl2-chevalley-realization";
const ANCHOR_CASIMIR: &str = "casimir-scalar-action";
const ANCHOR_GTABLE: &str = "g1-coefficient-table";
const ANCHOR_AW: &str = "askey-wilson-closure";
const ANCHOR_AW_REDUCED: &str = "askey-wilson-reduced-closure";
const ANCHOR_EQUITABLE: &str = "equitable-presentation";
const ANCHOR_EQ_AW: &str = "equitable-askey-wilson-relations";
const ANCHOR_FORMS: &str = "equitable-chevalley-forms";

/// Chevalley generators in the realization.
pub struct ChevalleySet {
    pub splus: SkewLaurentOp,
    pub sminus: SkewLaurentOp,
    pub kplus: SkewLaurentOp,
    pub kminus: SkewLaurentOp,
}

pub fn chevalley(p: &Arc<ParamPoint>) -> ChevalleySet {
    let u = &p.u;
    let dq = p.dq();
    let kplus = SkewLaurentOp::monomial(p, 0, 1, u.inv());
    let kminus = SkewLaurentOp::monomial(p, 0, -1, u.clone());
    let splus = SkewLaurentOp::monomial(p, 1, -1, u.pow(2) / &dq)
        + SkewLaurentOp::monomial(p, 1, 1, -(u.pow(-2) / &dq));
    let sminus =
        SkewLaurentOp::monomial(p, -1, -1, -dq.inv()) + SkewLaurentOp::monomial(p, -1, 1, dq.inv());
    ChevalleySet {
        splus,
        sminus,
        kplus,
        kminus,
    }
}

/// Ω = (q⁻¹ K+² + q K-²)/(q - q⁻¹)² + S+ S-.
pub fn casimir_op(g: &ChevalleySet) -> SkewLaurentOp {
    let p = g.kplus.point();
    let q = p.q();
    let dq2 = p.dq().pow(2);
    (&g.kplus * &g.kplus).scale(&(q.inv() / &dq2))
        + (&g.kminus * &g.kminus).scale(&(&q / &dq2))
        + &g.splus * &g.sminus
}

/// ω_ν = (q u² + q⁻¹ u⁻²)/(q - q⁻¹)².
pub fn casimir_value(p: &ParamPoint) -> Rat {
    let q = p.q();
    let u = &p.u;
    (&q * u.pow(2) + u.pow(-2) / &q) / p.dq().pow(2)
}

/// Equitable generators. Y⁻¹ is exact in the realization (Y = K+², so
/// Y⁻¹ = K-²).
pub struct EquitableSet {
    pub x: SkewLaurentOp,
    pub y: SkewLaurentOp,
    pub yinv: SkewLaurentOp,
    pub z: SkewLaurentOp,
}

pub fn equitable(g: &ChevalleySet) -> EquitableSet {
    let p = g.kplus.point();
    let q = p.q();
    let t = &p.t;
    let km2 = &g.kminus * &g.kminus;
    let x = &km2 - (&g.splus * &g.kminus).scale(&(p.dq() * t));
    let y = &g.kplus * &g.kplus;
    let z = &km2 + (&g.sminus * &g.kminus).scale(&((Rat::one() - q.pow(-2)) * t));
    EquitableSet { x, y, yinv: km2, z }
}

/// W0 = c0 S+K+ + c̄0 S-K+ + ε0 K+² + μ0,
/// W1 = c1 S+K- + c̄1 S-K- + ε1 K-² + μ1.
pub fn build_w(p: &Arc<ParamPoint>, g: &ChevalleySet) -> (SkewLaurentOp, SkewLaurentOp) {
    let w0 = (&g.splus * &g.kplus).scale(&p.c0)
        + (&g.sminus * &g.kplus).scale(&p.cb0)
        + (&g.kplus * &g.kplus).scale(&p.eps0)
        + SkewLaurentOp::constant(p, p.mu0.clone());
    let w1 = (&g.splus * &g.kminus).scale(&p.c1)
        + (&g.sminus * &g.kminus).scale(&p.cb1)
        + (&g.kminus * &g.kminus).scale(&p.eps1)
        + SkewLaurentOp::constant(p, p.mu1.clone());
    (w0, w1)
}

/// G1 = q W1 W0 - q⁻¹ W0 W1.
pub fn build_g1(w0: &SkewLaurentOp, w1: &SkewLaurentOp) -> SkewLaurentOp {
    let q = w0.point().q();
    q_commutator(w1, w0, &q)
}

/// Closed-form coefficients of the expansion
/// G1 = g1 S-² + g2 S-K- + g3 S-K+ + g2p S+K- + g3p S+K+ + g4 K+² + g5 K-² + g6,
/// with the Casimir already evaluated to ω_ν inside g6.
#[derive(Clone, Debug, PartialEq)]
pub struct GCoefficients {
    pub g1: Rat,
    pub g2: Rat,
    pub g3: Rat,
    pub g2p: Rat,
    pub g3p: Rat,
    pub g4: Rat,
    pub g5: Rat,
    pub g6: Rat,
}

pub fn g_coeffs(p: &ParamPoint) -> GCoefficients {
    let q = p.q();
    let qi = q.inv();
    let dq = p.dq();
    let d2 = q.pow(2) - q.pow(-2);
    let w = casimir_value(p);
    GCoefficients {
        g1: &p.cb0 * &p.cb1 * &d2,
        g2: &p.cb0 * &p.eps1 * &d2 * &q + &p.mu0 * &p.cb1 * &dq,
        g3: &p.cb1 * &p.eps0 * &d2 * &qi + &p.mu1 * &p.cb0 * &dq,
        g2p: &p.mu0 * &p.c1 * &dq,
        g3p: &p.mu1 * &p.c0 * &dq,
        g4: -(&p.c0 * &p.cb1) * &qi * (&q + &qi) / &dq + &p.mu1 * &p.eps0 * &dq,
        g5: -(&p.c1 * &p.cb0) * &q * (&q + &qi) / &dq + &p.mu0 * &p.eps1 * &dq,
        g6: (&p.c1 * &p.cb0 * &q + &p.c0 * &p.cb1 * &qi) * &dq * &w
            + (&p.eps0 * &p.eps1 + &p.mu0 * &p.mu1) * &dq,
    }
}

/// Reconstruct G1 from its closed-form coefficient table.
pub fn g1_from_coeffs(g: &ChevalleySet, gc: &GCoefficients) -> SkewLaurentOp {
    let p = g.kplus.point();
    (&g.sminus * &g.sminus).scale(&gc.g1)
        + (&g.sminus * &g.kminus).scale(&gc.g2)
        + (&g.sminus * &g.kplus).scale(&gc.g3)
        + (&g.splus * &g.kminus).scale(&gc.g2p)
        + (&g.splus * &g.kplus).scale(&gc.g3p)
        + (&g.kplus * &g.kplus).scale(&gc.g4)
        + (&g.kminus * &g.kminus).scale(&gc.g5)
        + SkewLaurentOp::constant(p, gc.g6.clone())
}

/// Structure constants of the quadratic closure relations
///   [W1, W0]_q = G1,
///   [W0, G1]_q = ρ0 W1 + ω W0 + γ0 (W0W1 + W1W0) + γ1 W0² + η0,
///   [G1, W1]_q = ρ1 W0 + ω W1 + γ1 (W0W1 + W1W0) + γ0 W1² + η1.
#[derive(Clone, Debug, PartialEq)]
pub struct AwConstants {
    pub rho0: Rat,
    pub rho1: Rat,
    pub omega: Rat,
    pub gamma0: Rat,
    pub gamma1: Rat,
    pub eta0: Rat,
    pub eta1: Rat,
}

pub fn aw_constants(p: &ParamPoint) -> AwConstants {
    let q = p.q();
    let qi = q.inv();
    let dq = p.dq();
    let dq2 = dq.pow(2);
    let sq = &q + &qi;
    let sq2 = sq.pow(2);
    let w = casimir_value(p);
    let g6 = g_coeffs(p).g6;
    AwConstants {
        rho0: -(&p.c0 * &p.cb0 * &sq2) - p.mu0.pow(2) * &dq2,
        rho1: -(&p.c1 * &p.cb1 * &sq2) - p.mu1.pow(2) * &dq2,
        omega: &dq * &g6 - Rat::from_int(3) * &p.mu0 * &p.mu1 * &dq2,
        gamma0: &p.mu0 * &dq2,
        gamma1: &p.mu1 * &dq2,
        eta0: &sq
            * (&p.c0 * &p.cb0 * &p.eps1 * &dq2 * &w
                - &p.eps0 * (&q * &p.c1 * &p.cb0 + &qi * &p.c0 * &p.cb1))
            - &p.mu0 * &dq * &g6
            + &p.mu1 * &p.c0 * &p.cb0 * &sq2
            + Rat::from_int(2) * p.mu0.pow(2) * &p.mu1 * &dq2,
        eta1: &sq
            * (&p.c1 * &p.cb1 * &p.eps0 * &dq2 * &w
                - &p.eps1 * (&qi * &p.c0 * &p.cb1 + &q * &p.c1 * &p.cb0))
            - &p.mu1 * &dq * &g6
            + &p.mu0 * &p.c1 * &p.cb1 * &sq2
            + Rat::from_int(2) * p.mu1.pow(2) * &p.mu0 * &dq2,
    }
}

/// A = aX + a⁻¹Y + q b c⁻¹ (1 - XY), and cyclic siblings.
pub fn equitable_abc(p: &Arc<ParamPoint>) -> (SkewLaurentOp, SkewLaurentOp, SkewLaurentOp) {
    let q = p.q();
    let e = equitable(&chevalley(p));
    let i = SkewLaurentOp::identity(p);
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let op_a = e.x.scale(a) + e.y.scale(&a.inv()) + (&i - &e.x * &e.y).scale(&(&q * b / c));
    let op_b = e.y.scale(b) + e.z.scale(&b.inv()) + (&i - &e.y * &e.z).scale(&(&q * c / a));
    let op_c = e.z.scale(c) + e.x.scale(&c.inv()) + (&i - &e.z * &e.x).scale(&(&q * a / b));
    (op_a, op_b, op_c)
}

/// B written directly on Chevalley generators:
/// B = g2 S-K- + g3 S-K+ + b K+² + b⁻¹ K-², g2 = (1-q⁻²) q^{1/2} b⁻¹,
/// g3 = -(q-q⁻¹) q^{-3/2} c a⁻¹.
pub fn b_chevalley_form(p: &Arc<ParamPoint>) -> SkewLaurentOp {
    let q = p.q();
    let t = &p.t;
    let g = chevalley(p);
    let g2 = (Rat::one() - q.pow(-2)) * t / &p.b;
    let g3 = -(p.dq() * &p.c) / (t.pow(3) * &p.a);
    (&g.sminus * &g.kminus).scale(&g2)
        + (&g.sminus * &g.kplus).scale(&g3)
        + (&g.kplus * &g.kplus).scale(&p.b)
        + (&g.kminus * &g.kminus).scale(&p.b.inv())
}

/// A on Chevalley generators:
/// A = -a(q-q⁻¹)q^{1/2} S+K- + b(q²-1)q^{1/2}c⁻¹ S+K+ + a⁻¹K+² + aK-².
pub fn a_chevalley_form(p: &Arc<ParamPoint>) -> SkewLaurentOp {
    let q = p.q();
    let t = &p.t;
    let g = chevalley(p);
    (&g.splus * &g.kminus).scale(&(-(&p.a * p.dq()) * t))
        + (&g.splus * &g.kplus).scale(&(&p.b * (q.pow(2) - Rat::one()) * t / &p.c))
        + (&g.kplus * &g.kplus).scale(&p.a.inv())
        + (&g.kminus * &g.kminus).scale(&p.a)
}

/// C on Chevalley generators, quartic in K-, with the Casimir evaluated
/// to ω_ν.
pub fn c_chevalley_form(p: &Arc<ParamPoint>) -> SkewLaurentOp {
    let q = p.q();
    let t = &p.t;
    let w = casimir_value(p);
    let g = chevalley(p);
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let km2 = &g.kminus * &g.kminus;
    let km3 = &km2 * &g.kminus;
    let km4 = &km2 * &km2;
    let sq = &q + q.inv();
    km2.scale(&(c + c.inv()))
        + km4.scale(&(-(a * &sq) / b))
        + km2.scale(&(a * p.dq().pow(2) * &w / b))
        + (&g.sminus * (g.kminus.scale(&(c * t)) - km3.scale(&(t.pow(3) * a / b)))
            - &g.splus * (g.kminus.scale(&(t.pow(3) / c)) - km3.scale(&(a * t / b))))
        .scale(&(Rat::one() - q.pow(-2)))
}

pub fn verify_chevalley(p: &Arc<ParamPoint>) -> Vec<Check> {
    let g = chevalley(p);
    let q = p.q();
    let i = SkewLaurentOp::identity(p);
    vec![
        Check::ops(
            "chevalley-k-inverse",
            ANCHOR_UQSL2,
            [
                ("kplus-kminus", &g.kplus * &g.kminus - &i),
                ("kminus-kplus", &g.kminus * &g.kplus - &i),
            ],
        ),
        Check::ops(
            "chevalley-weight-shift",
            ANCHOR_UQSL2,
            [
                ("splus", &g.kplus * &g.splus * &g.kminus - g.splus.scale(&q)),
                (
                    "sminus",
                    &g.kplus * &g.sminus * &g.kminus - g.sminus.scale(&q.inv()),
                ),
            ],
        ),
        Check::op(
            "chevalley-s-bracket",
            ANCHOR_UQSL2,
            &(&g.splus * &g.sminus
                - &g.sminus * &g.splus
                - (&g.kplus * &g.kplus - &g.kminus * &g.kminus).scale(&p.dq().inv())),
        ),
    ]
}

pub fn verify_casimir(p: &Arc<ParamPoint>) -> Vec<Check> {
    let g = chevalley(p);
    let om = casimir_op(&g);
    let scalar = SkewLaurentOp::constant(p, casimir_value(p));
    vec![
        Check::op("casimir-scalar", ANCHOR_CASIMIR, &(&om - &scalar)),
        Check::ops(
            "casimir-central",
            ANCHOR_CASIMIR,
            [
                ("splus", &om * &g.splus - &g.splus * &om),
                ("sminus", &om * &g.sminus - &g.sminus * &om),
                ("kplus", &om * &g.kplus - &g.kplus * &om),
            ],
        ),
    ]
}

pub fn verify_gtable(p: &Arc<ParamPoint>) -> Vec<Check> {
    let g = chevalley(p);
    let (w0, w1) = build_w(p, &g);
    let gc = g_coeffs(p);
    let mut out = vec![Check::op(
        "g1-reconstruction",
        ANCHOR_GTABLE,
        &(build_g1(&w0, &w1) - g1_from_coeffs(&g, &gc)),
    )];
    match p.profile {
        Profile::Little => out.push(Check::scalars(
            "g-profile-zeros",
            ANCHOR_GTABLE,
            [
                ("g1", gc.g1.clone(), Rat::zero()),
                ("g2p", gc.g2p.clone(), Rat::zero()),
                ("g3p", gc.g3p.clone(), Rat::zero()),
            ],
        )),
        Profile::Big => {
            let q = p.q();
            out.push(Check::scalars(
                "g-profile-zeros",
                ANCHOR_GTABLE,
                [
                    ("g2p", gc.g2p.clone(), Rat::zero()),
                    ("g3p", gc.g3p.clone(), Rat::zero()),
                    (
                        "g1",
                        gc.g1.clone(),
                        &p.cb0 * &p.cb1 * (q.pow(2) - q.pow(-2)),
                    ),
                ],
            ));
        }
        _ => {}
    }
    out
}

pub fn verify_aw(p: &Arc<ParamPoint>) -> Vec<Check> {
    let q = p.q();
    let g = chevalley(p);
    let (w0, w1) = build_w(p, &g);
    let g1 = build_g1(&w0, &w1);
    let k = aw_constants(p);
    let i = |c: &Rat| SkewLaurentOp::constant(p, c.clone());
    let cross = &w0 * &w1 + &w1 * &w0;
    let rhs2 = w1.scale(&k.rho0)
        + w0.scale(&k.omega)
        + cross.scale(&k.gamma0)
        + (&w0 * &w0).scale(&k.gamma1)
        + i(&k.eta0);
    let rhs3 = w0.scale(&k.rho1)
        + w1.scale(&k.omega)
        + cross.scale(&k.gamma1)
        + (&w1 * &w1).scale(&k.gamma0)
        + i(&k.eta1);
    vec![
        Check::op(
            "aw-bracket-definition",
            ANCHOR_AW,
            &(q_commutator(&w1, &w0, &q) - &g1),
        ),
        Check::op(
            "aw-closure-w0",
            ANCHOR_AW,
            &(q_commutator(&w0, &g1, &q) - rhs2),
        ),
        Check::op(
            "aw-closure-w1",
            ANCHOR_AW,
            &(q_commutator(&g1, &w1, &q) - rhs3),
        ),
    ]
}

/// Reduced closure relations for profiles with μ0 = c0 = 0 (ρ0 and γ0 drop).
pub fn verify_reduced(p: &Arc<ParamPoint>) -> Vec<Check> {
    assert!(
        p.mu0.is_zero() && p.c0.is_zero(),
        "reduced relations need mu0 = c0 = 0"
    );
    let q = p.q();
    let g = chevalley(p);
    let (w0, w1) = build_w(p, &g);
    let g1 = build_g1(&w0, &w1);
    let k = aw_constants(p);
    let i = |c: &Rat| SkewLaurentOp::constant(p, c.clone());
    let rhs2 = w0.scale(&k.omega) + (&w0 * &w0).scale(&k.gamma1) + i(&k.eta0);
    let rhs3 = w0.scale(&k.rho1)
        + w1.scale(&k.omega)
        + (&w0 * &w1 + &w1 * &w0).scale(&k.gamma1)
        + i(&k.eta1);
    vec![
        Check::op(
            "aw-reduced-w0",
            ANCHOR_AW_REDUCED,
            &(q_commutator(&w0, &g1, &q) - rhs2),
        ),
        Check::op(
            "aw-reduced-w1",
            ANCHOR_AW_REDUCED,
            &(q_commutator(&g1, &w1, &q) - rhs3),
        ),
    ]
}

pub fn verify_equitable_xyz(p: &Arc<ParamPoint>) -> Vec<Check> {
    let q = p.q();
    let dqi = p.dq().inv();
    let e = equitable(&chevalley(p));
    let i = SkewLaurentOp::identity(p);
    vec![
        Check::op(
            "equitable-xy",
            ANCHOR_EQUITABLE,
            &(q_commutator(&e.x, &e.y, &q).scale(&dqi) - &i),
        ),
        Check::op(
            "equitable-yz",
            ANCHOR_EQUITABLE,
            &(q_commutator(&e.y, &e.z, &q).scale(&dqi) - &i),
        ),
        Check::op(
            "equitable-zx",
            ANCHOR_EQUITABLE,
            &(q_commutator(&e.z, &e.x, &q).scale(&dqi) - &i),
        ),
        Check::op(
            "equitable-y-inverse",
            ANCHOR_EQUITABLE,
            &(&e.y * &e.yinv - &i),
        ),
    ]
}

/// The three cyclic relations tying A, B, C to the normalized Casimir
/// Λ = (q - q⁻¹)² ω_ν.
pub fn verify_equitable_aw(p: &Arc<ParamPoint>) -> Vec<Check> {
    let q = p.q();
    let d2i = (q.pow(2) - q.pow(-2)).inv();
    let sq = &q + q.inv();
    let lam = p.dq().pow(2) * casimir_value(p);
    let (op_a, op_b, op_c) = equitable_abc(p);
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let scal = |x: &Rat, y: &Rat, z: &Rat| {
        SkewLaurentOp::constant(
            p,
            (&lam * (x + x.inv()) + (y + y.inv()) * (z + z.inv())) / &sq,
        )
    };
    vec![
        Check::op(
            "equitable-aw-a",
            ANCHOR_EQ_AW,
            &(&op_a + q_commutator(&op_b, &op_c, &q).scale(&d2i) - scal(a, b, c)),
        ),
        Check::op(
            "equitable-aw-b",
            ANCHOR_EQ_AW,
            &(&op_b + q_commutator(&op_c, &op_a, &q).scale(&d2i) - scal(b, c, a)),
        ),
        Check::op(
            "equitable-aw-c",
            ANCHOR_EQ_AW,
            &(&op_c + q_commutator(&op_a, &op_b, &q).scale(&d2i) - scal(c, a, b)),
        ),
    ]
}

pub fn verify_chevalley_forms(p: &Arc<ParamPoint>) -> Vec<Check> {
    let (op_a, op_b, op_c) = equitable_abc(p);
    vec![
        Check::op(
            "b-chevalley-form",
            ANCHOR_FORMS,
            &(&op_b - b_chevalley_form(p)),
        ),
        Check::op(
            "a-chevalley-form",
            ANCHOR_FORMS,
            &(&op_a - a_chevalley_form(p)),
        ),
        Check::op(
            "c-chevalley-form",
            ANCHOR_FORMS,
            &(&op_c - c_chevalley_form(p)),
        ),
    ]
}
