//! Tridiagonalization structure: each equitable generator is a tridiagonal
//! perturbation of the next one, A = α zB + β Bz + γ z + δ and
//! B = α z⁻¹A + β Az⁻¹ + γ z⁻¹ + δ, with closed-form coefficients; and the
//! z⁻¹-lift that turns a little-type operator with 𝔞 = q² into a big-type
//! one, G1 = β tG1 z⁻¹ + γ tG1 + γ' z⁻¹ + δ.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::Check;
use crate::qcore::point::ParamPoint;
use crate::qcore::rat::Rat;
use crate::qjacobi::little_dictionary;
use crate::skewring::SkewLaurentOp;
use crate::uqsl2::{chevalley, equitable_abc, g1_from_coeffs, g_coeffs, GCoefficients};

const ANCHOR_AB: &str = "equitable-tridiagonalization";
const ANCHOR_REDUCTION: &str = "tridiagonalization-reduction-tables";
const ANCHOR_LIFT: &str = "big-from-little-lift";

/// Coefficients of a tridiagonal relation between two operators. The A↔B
/// relations carry no z⁻¹ remainder term, the big-from-little lift does
/// (and has α = 0 by construction).
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagCoeffs {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
    pub gamma_prime: Option<Rat>,
    pub delta: Rat,
}

/// A = α zB + β Bz + γ z + δ.
pub fn coeffs_a_from_b(p: &ParamPoint) -> TridiagCoeffs {
    let q = p.q();
    let (t, u) = (&p.t, &p.u);
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let d = q.pow(2) - q.pow(-2);
    TridiagCoeffs {
        alpha: -&q * (t.pow(3) * u * a * b - (t.pow(3) * u * c).inv()) / &d,
        beta: (t * u * a * b - t.pow(3) / (u * c)) / &d,
        gamma: b * t.pow(3) * u / c + a * t / u,
        delta: (&q * u.pow(2) * a + (&q * u.pow(2) * a).inv() + b * c + (b * c).inv())
            / (&q + q.inv()),
        gamma_prime: None,
    }
}

/// B = α z⁻¹A + β Az⁻¹ + γ z⁻¹ + δ.
pub fn coeffs_b_from_a(p: &ParamPoint) -> TridiagCoeffs {
    let q = p.q();
    let (t, u) = (&p.t, &p.u);
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let d = q.pow(2) - q.pow(-2);
    TridiagCoeffs {
        alpha: -q.inv() * (t.pow(3) * u * c - (t.pow(3) * u * a * b).inv()) / &d,
        beta: (u * c / t.pow(3) - (t * u * a * b).inv()) / &d,
        gamma: u / (t * b) + c / (a * t.pow(3) * u),
        delta: (&q * u.pow(2) * b + (&q * u.pow(2) * b).inv() + a * c + (a * c).inv())
            / (&q + q.inv()),
        gamma_prime: None,
    }
}

/// A - (α zB + β Bz + γ z + δ); zero at every admissible point.
pub fn a_from_b_residual(p: &Arc<ParamPoint>) -> SkewLaurentOp {
    let (op_a, op_b, _) = equitable_abc(p);
    let s = coeffs_a_from_b(p);
    let z = SkewLaurentOp::z_pow(p, 1);
    op_a - ((&z * &op_b).scale(&s.alpha)
        + (&op_b * &z).scale(&s.beta)
        + z.scale(&s.gamma)
        + SkewLaurentOp::constant(p, s.delta))
}

/// B - (α z⁻¹A + β Az⁻¹ + γ z⁻¹ + δ).
pub fn b_from_a_residual(p: &Arc<ParamPoint>) -> SkewLaurentOp {
    let (op_a, op_b, _) = equitable_abc(p);
    let s = coeffs_b_from_a(p);
    let zi = SkewLaurentOp::z_pow(p, -1);
    op_b - ((&zi * &op_a).scale(&s.alpha)
        + (&op_a * &zi).scale(&s.beta)
        + zi.scale(&s.gamma)
        + SkewLaurentOp::constant(p, s.delta))
}

/// The same residual with γ bumped by 1; nonzero whenever the exact
/// coefficients are the unique solution, so it serves as a negative control.
pub fn a_from_b_residual_perturbed(p: &Arc<ParamPoint>) -> SkewLaurentOp {
    a_from_b_residual(p) - SkewLaurentOp::z_pow(p, 1)
}

/// Coefficient table of β tG1 z⁻¹ + γ tG1 + γ' z⁻¹ + δ for a little-shaped
/// table tG1 (the α z⁻¹ tG1 term is forced to zero, hence absent).
pub fn tridiag_g_table(
    p: &ParamPoint,
    beta: &Rat,
    gamma: &Rat,
    delta: &Rat,
    tg: &GCoefficients,
) -> GCoefficients {
    let q = p.q();
    let u = &p.u;
    let dq = p.dq();
    GCoefficients {
        g1: -(beta * &dq * &q * u * &tg.g2),
        g2: -(beta * &dq * q.pow(2) * u * &tg.g5) + gamma * &tg.g2,
        g3: beta * &dq * &tg.g4 / (q.pow(2) * u) + gamma * &tg.g3,
        g2p: Rat::zero(),
        g3p: Rat::zero(),
        g4: gamma * &tg.g4,
        g5: gamma * &tg.g5,
        g6: gamma * &tg.g6 + delta,
    }
}

/// γ' is not free: the z⁻¹ remainder must cancel the constant basis
/// component produced by tG1 z⁻¹.
pub fn gamma_prime_constraint(p: &ParamPoint, beta: &Rat, tg: &GCoefficients) -> Rat {
    let q = p.q();
    let u2 = p.u.pow(2);
    let s = q.pow(2) * &u2;
    -(beta * &tg.g4 / &s + beta * &s * &tg.g5 + beta * &tg.g6)
}

/// Invert the lift: recover (β, γ, γ', δ) from the big-shaped table g and
/// the little-shaped table tg it came from.
pub fn coeffs_big_from_little(
    p: &ParamPoint,
    tg: &GCoefficients,
    g: &GCoefficients,
) -> TridiagCoeffs {
    let q = p.q();
    let u = &p.u;
    let dq = p.dq();
    let s = q.pow(3) * u.pow(2);
    let den = &tg.g4 / &s - &s * &tg.g5;
    let qu = &q * u;
    let beta = (&qu * &g.g2 + &g.g3 / &qu) / (&dq * &den);
    let gamma =
        (q.pow(2) * u * &g.g3 * &tg.g5 + &tg.g4 * &g.g2 / (q.pow(2) * u)) / (&qu * &tg.g2 * &den);
    let gamma_prime = gamma_prime_constraint(p, &beta, tg);
    let delta = &g.g6 - &gamma * &tg.g6;
    TridiagCoeffs {
        alpha: Rat::zero(),
        beta,
        gamma,
        gamma_prime: Some(gamma_prime),
        delta,
    }
}

pub fn verify_tridiag_ab(p: &Arc<ParamPoint>) -> Vec<Check> {
    vec![
        Check::op("a-from-b-tridiagonal", ANCHOR_AB, &a_from_b_residual(p)),
        Check::op("b-from-a-tridiagonal", ANCHOR_AB, &b_from_a_residual(p)),
        Check::cond(
            "tridiagonal-perturbation-detected",
            ANCHOR_AB,
            !a_from_b_residual_perturbed(p).is_zero(),
            "perturbed coefficients still satisfy the relation",
        ),
    ]
}

/// Debug hook: the a-from-b relation evaluated with one corrupted
/// coefficient. Always fails; exercises the failure-reporting path.
pub fn verify_tridiag_ab_corrupted(p: &Arc<ParamPoint>) -> Vec<Check> {
    vec![
        Check::op(
            "a-from-b-tridiagonal",
            ANCHOR_AB,
            &a_from_b_residual_perturbed(p),
        ),
        Check::op("b-from-a-tridiagonal", ANCHOR_AB, &b_from_a_residual(p)),
    ]
}

/// The commutation tables the tridiagonal relations reduce to: moving z or
/// z⁻¹ past each quadratic generator lands back in the same finite basis.
pub fn verify_reduction_tables(p: &Arc<ParamPoint>) -> Vec<Check> {
    let q = p.q();
    let u = &p.u;
    let dq = p.dq();
    let dqi = dq.inv();
    let g = chevalley(p);
    let i = SkewLaurentOp::identity(p);
    let z = SkewLaurentOp::z_pow(p, 1);
    let zi = SkewLaurentOp::z_pow(p, -1);
    let smkm = &g.sminus * &g.kminus;
    let smkp = &g.sminus * &g.kplus;
    let spkm = &g.splus * &g.kminus;
    let spkp = &g.splus * &g.kplus;
    let kp2 = &g.kplus * &g.kplus;
    let km2 = &g.kminus * &g.kminus;
    let q2u2 = q.pow(2) * u.pow(2);

    let z_side = [
        (
            "z-sminus-kminus",
            &z * &smkm - (i.scale(u) - km2.scale(&u.inv())).scale(&dqi),
        ),
        (
            "z-sminus-kplus",
            &z * &smkp - (i.scale(&-u.inv()) + kp2.scale(u)).scale(&dqi),
        ),
        (
            "sminus-kminus-z",
            &smkm * &z - (i.scale(u) - km2.scale(&(u * q.pow(2)).inv())).scale(&dqi),
        ),
        (
            "sminus-kplus-z",
            &smkp * &z - (i.scale(&-u.inv()) + kp2.scale(&(u * q.pow(2)))).scale(&dqi),
        ),
        (
            "kplus-squared-z",
            &kp2 * &z - spkp.scale(&-(&dq * u * q.pow(2))) - z.scale(&q2u2),
        ),
        (
            "kminus-squared-z",
            &km2 * &z - spkm.scale(&(&dq / (u * q.pow(2)))) - z.scale(&q2u2.inv()),
        ),
    ];
    let zi_side = [
        (
            "zi-splus-kplus",
            &zi * &spkp - (i.scale(u) - kp2.scale(&u.inv())).scale(&dqi),
        ),
        (
            "zi-splus-kminus",
            &zi * &spkm - (i.scale(&-u.inv()) + km2.scale(u)).scale(&dqi),
        ),
        (
            "splus-kplus-zi",
            &spkp * &zi - (i.scale(u) - kp2.scale(&(u * q.pow(2)).inv())).scale(&dqi),
        ),
        (
            "splus-kminus-zi",
            &spkm * &zi - (i.scale(&-u.inv()) + km2.scale(&(u * q.pow(2)))).scale(&dqi),
        ),
        (
            "kplus-squared-zi",
            &kp2 * &zi - smkp.scale(&(&dq / (u * q.pow(2)))) - zi.scale(&q2u2.inv()),
        ),
        (
            "kminus-squared-zi",
            &km2 * &zi - smkm.scale(&-(&dq * u * q.pow(2))) - zi.scale(&q2u2),
        ),
    ];
    let zi2 = &zi * &zi;
    let sm2 = [
        (
            "sminus-squared",
            &g.sminus * &g.sminus
                - (&zi * &smkm).scale(&(-&q / (u * &dq)))
                - (&zi * &smkp).scale(&(u / (&q * &dq))),
        ),
        (
            "sminus-kminus-zi",
            &smkm * &zi - (&zi * &smkm).scale(&q.pow(2)) + zi2.scale(&(u * &q)),
        ),
        (
            "sminus-kplus-zi",
            &smkp * &zi - (&zi * &smkp).scale(&q.pow(-2)) + zi2.scale(&(u * &q).inv()),
        ),
    ];
    vec![
        Check::ops("reduction-z-side", ANCHOR_REDUCTION, z_side),
        Check::ops("reduction-z-inverse-side", ANCHOR_REDUCTION, zi_side),
        Check::ops("reduction-sminus-square", ANCHOR_REDUCTION, sm2),
    ]
}

/// The lift battery at a little point with 𝔞 pinned to q²: the pin shows up
/// as t̃g3 = -q^{2ν+2} t̃g2 and through the parameter dictionary; the forward
/// table inverts exactly; the lifted table is the stated ring identity, and
/// an α ≠ 0 term breaks it.
pub fn verify_big_from_little(
    p: &Arc<ParamPoint>,
    beta: &Rat,
    gamma: &Rat,
    delta: &Rat,
) -> Vec<Check> {
    let q = p.q();
    let tg = g_coeffs(p);
    let shape = Check::scalars(
        "lift-constraint-shape",
        ANCHOR_LIFT,
        [("g3-vs-g2", tg.g3.clone(), -(p.u.pow(2) * q.pow(2)) * &tg.g2)],
    );
    let forced = match little_dictionary(p) {
        Ok(lp) => Check::scalars(
            "lift-constraint-forces-a",
            ANCHOR_LIFT,
            [("a", lp.a, q.pow(2))],
        ),
        Err(e) => Check::fail("lift-constraint-forces-a", ANCHOR_LIFT, format!("{e}")),
    };

    let g = tridiag_g_table(p, beta, gamma, delta, &tg);
    let inv = coeffs_big_from_little(p, &tg, &g);
    let gp0 = gamma_prime_constraint(p, beta, &tg);
    let round_trip = Check::scalars(
        "lift-coefficient-round-trip",
        ANCHOR_LIFT,
        [
            ("beta", inv.beta.clone(), beta.clone()),
            ("gamma", inv.gamma.clone(), gamma.clone()),
            (
                "gamma-prime",
                inv.gamma_prime.clone().unwrap_or_else(Rat::zero),
                gp0.clone(),
            ),
            ("delta", inv.delta.clone(), delta.clone()),
        ],
    );

    let ch = chevalley(p);
    let tg1 = g1_from_coeffs(&ch, &tg);
    let lifted = g1_from_coeffs(&ch, &g);
    let zi = SkewLaurentOp::z_pow(p, -1);
    let rhs = (&tg1 * &zi).scale(beta)
        + tg1.scale(gamma)
        + zi.scale(&gp0)
        + SkewLaurentOp::constant(p, delta.clone());
    let residual = &lifted - &rhs;
    let ring = Check::op("lift-ring-identity", ANCHOR_LIFT, &residual);
    let bad = residual - (&zi * &tg1).scale(&Rat::new(1, 7));
    let control = Check::cond(
        "lift-alpha-negative-control",
        ANCHOR_LIFT,
        !bad.is_zero(),
        "an added α z⁻¹ tG1 term went undetected",
    );
    vec![shape, forced, round_trip, ring, control]
}
