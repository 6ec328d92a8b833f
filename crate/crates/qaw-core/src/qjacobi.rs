//! Little and big q-Jacobi polynomials in base q², their q-difference
//! operators, and the dictionary between polynomial parameters (𝔞, 𝔟, 𝔠)
//! and the closed-form coefficients of G1.
//!
//! Conventions: for little-profile points (μ0 = c0 = c̄1 = 0) the operator
//! G1 is tridiagonalized by the basis f_s(z) = (κz; q²)_s with
//! κ = (ε0/c̄0)(1 - q²)/(q^{ν+1}), and the polynomial eigenfunctions are the
//! little q-Jacobi polynomials p_n(z; 𝔞, 𝔟; q²).  Big-profile points
//! (μ0 = c0 = 0) produce big q-Jacobi polynomials, in the variable q²𝔟z for
//! the rescaled parametrization and in z itself for the plain one.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::Check;
use crate::qcore::point::ParamPoint;
use crate::qcore::rat::{qpoch, Rat};
use crate::skewring::{LaurentPoly, SkewLaurentOp};
use crate::uqsl2::{build_g1, build_w, chevalley, g_coeffs};

const ANCHOR_LITTLE_DICT: &str = "little-q-jacobi-dictionary";
const ANCHOR_W0: &str = "w0-eigenfunctions";
const ANCHOR_LITTLE: &str = "little-q-jacobi-family";
const ANCHOR_BIG: &str = "big-q-jacobi-family";
const ANCHOR_BIG_PLAIN: &str = "big-q-jacobi-plain-dictionary";
const ANCHOR_LITTLE_FROM_BIG: &str = "little-from-big-specialization";

#[derive(Clone, Debug, PartialEq)]
pub struct LittleParams {
    pub a: Rat,
    pub b: Rat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BigParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

/// Why a coefficient table failed to translate into polynomial parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum DictionaryError {
    /// A coefficient that must vanish for the profile does not.
    ProfileShape(&'static str),
    /// A compatibility ratio between coefficients fails.
    Incompatible(&'static str),
    /// The discriminant of the root equation is not a rational square.
    IrrationalDiscriminant,
    /// No root assignment satisfies the cross-check 𝔞𝔟 = m1.
    NoAdmissibleRoot,
}

impl core::fmt::Display for DictionaryError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DictionaryError::ProfileShape(s) => write!(f, "profile shape: {s}"),
            DictionaryError::Incompatible(s) => write!(f, "incompatible coefficients: {s}"),
            DictionaryError::IrrationalDiscriminant => {
                write!(f, "root discriminant is not a rational square")
            }
            DictionaryError::NoAdmissibleRoot => write!(f, "no admissible root assignment"),
        }
    }
}

/// κ = (ε0/c̄0)(1 - q²)/(q^{ν+1}).
pub fn kappa(p: &ParamPoint) -> Rat {
    let q = p.q();
    (&p.eps0 / &p.cb0) * (Rat::one() - q.pow(2)) / (&p.u * &q)
}

/// f_s(z) = (κz; q²)_s, the W0 eigenbasis.
pub fn eigenfunction_f(s: u32, p: &ParamPoint) -> LaurentPoly {
    let k = kappa(p);
    let q2 = p.q().pow(2);
    let mut f = LaurentPoly::one();
    for j in 0..s {
        let lin = LaurentPoly::one() + LaurentPoly::monomial(1, -(&k * q2.pow(j as i64)));
        f = f * lin;
    }
    f
}

/// W0 f_n = λ_n f_n with λ_n = ε0 q^{2n - 2ν}.
pub fn w0_lambda(n: i64, p: &ParamPoint) -> Rat {
    &p.eps0 * p.q().pow(2 * n) / p.u.pow(2)
}

/// Off-diagonal part of W0 on monomials: W0 z^n = λ_n z^n + ν_n z^{n-1}.
pub fn w0_nu(n: i64, p: &ParamPoint) -> Rat {
    let q = p.q();
    &p.cb0 * &q * (Rat::one() - q.pow(2 * n)) / (&p.u * (Rat::one() - q.pow(2)))
}

/// p_n(z; 𝔞, 𝔟; q²) as a basic hypergeometric series in base q²:
/// Σ_s (q^{-2n}; q²)_s (𝔞𝔟q^{2n+2}; q²)_s / ((q²𝔞; q²)_s (q²; q²)_s) (q²z)^s.
pub fn little_poly(n: u32, lp: &LittleParams, q: &Rat) -> LaurentPoly {
    let q2 = q.pow(2);
    let ab = &lp.a * &lp.b;
    let ni = n as i64;
    let mut out = LaurentPoly::zero();
    for s in 0..=n {
        let c = qpoch(&q.pow(-2 * ni), &q2, s) * qpoch(&(&ab * q.pow(2 * ni + 2)), &q2, s)
            / (qpoch(&(&q2 * &lp.a), &q2, s) * qpoch(&q2, &q2, s))
            * q2.pow(s as i64);
        out = out + LaurentPoly::monomial(s as i64, c);
    }
    out
}

fn little_prefactor(n: u32, lp: &LittleParams, q: &Rat) -> Rat {
    let q2 = q.pow(2);
    let ni = n as i64;
    (-(&q2 * &lp.b)).pow(-ni) * q.pow(-ni * (ni - 1)) * qpoch(&(&q2 * &lp.b), &q2, n)
        / qpoch(&(&q2 * &lp.a), &q2, n)
}

/// The same polynomial written on the (q²𝔟z; q²)_s basis; expanding it
/// gives an independent route to the monomial coefficients.
pub fn phi32_little(n: u32, lp: &LittleParams, q: &Rat) -> LaurentPoly {
    let q2 = q.pow(2);
    let ab = &lp.a * &lp.b;
    let ni = n as i64;
    let pre = little_prefactor(n, lp, q);
    let mut out = LaurentPoly::zero();
    for s in 0..=n {
        let c = qpoch(&q.pow(-2 * ni), &q2, s) * qpoch(&(&ab * q.pow(2 * ni + 2)), &q2, s)
            / (qpoch(&(&q2 * &lp.b), &q2, s) * qpoch(&q2, &q2, s))
            * q2.pow(s as i64);
        let mut f = LaurentPoly::one();
        for j in 0..s {
            f = f
                * (LaurentPoly::one()
                    + LaurentPoly::monomial(1, -(&q2 * &lp.b * q2.pow(j as i64))));
        }
        out = out + f.scale(&(&c * &pre));
    }
    out
}

/// Expansion coefficient of p_n over the eigenbasis f_s.
pub fn overlap_gamma(n: u32, s: u32, lp: &LittleParams, q: &Rat) -> Rat {
    let q2 = q.pow(2);
    let ab = &lp.a * &lp.b;
    let ni = n as i64;
    little_prefactor(n, lp, q)
        * qpoch(&q.pow(-2 * ni), &q2, s)
        * qpoch(&(&ab * q.pow(2 * ni + 2)), &q2, s)
        / (qpoch(&(&q2 * &lp.b), &q2, s) * qpoch(&q2, &q2, s))
        * q2.pow(s as i64)
}

/// Third route: Σ_s γ_{n,s} f_s with f_s built from the point's κ.
pub fn expand_little(n: u32, lp: &LittleParams, p: &ParamPoint) -> LaurentPoly {
    let q = p.q();
    let mut out = LaurentPoly::zero();
    for s in 0..=n {
        out = out + eigenfunction_f(s, p).scale(&overlap_gamma(n, s, lp, &q));
    }
    out
}

/// G1 for little-profile points, assembled from its coefficient table
/// (the S-² and S+ rows vanish).
pub fn little_operator(p: &Arc<ParamPoint>) -> SkewLaurentOp {
    let gc = g_coeffs(p);
    assert!(
        gc.g1.is_zero() && gc.g2p.is_zero() && gc.g3p.is_zero(),
        "little operator needs a little-profile point"
    );
    let g = chevalley(p);
    (&g.sminus * &g.kminus).scale(&gc.g2)
        + (&g.sminus * &g.kplus).scale(&gc.g3)
        + (&g.kplus * &g.kplus).scale(&gc.g4)
        + (&g.kminus * &g.kminus).scale(&gc.g5)
        + SkewLaurentOp::constant(p, gc.g6)
}

/// G1 for big-profile points; the S-² row survives.
pub fn big_operator(p: &Arc<ParamPoint>) -> SkewLaurentOp {
    let gc = g_coeffs(p);
    assert!(
        gc.g2p.is_zero() && gc.g3p.is_zero(),
        "big operator needs mu0 = c0 = 0"
    );
    let g = chevalley(p);
    (&g.sminus * &g.sminus).scale(&gc.g1)
        + (&g.sminus * &g.kminus).scale(&gc.g2)
        + (&g.sminus * &g.kplus).scale(&gc.g3)
        + (&g.kplus * &g.kplus).scale(&gc.g4)
        + (&g.kminus * &g.kminus).scale(&gc.g5)
        + SkewLaurentOp::constant(p, gc.g6)
}

/// Eigenvalue of G1 on the n-th polynomial:
/// a_n = g5 q^{2ν} (q^{-2n} + 𝔞𝔟 q^{2n+2}) + g6.
pub fn spectrum_a(n: i64, ab: &Rat, p: &ParamPoint) -> Rat {
    let gc = g_coeffs(p);
    let q = p.q();
    &gc.g5 * p.u.pow(2) * (q.pow(-2 * n) + ab * q.pow(2 * n + 2)) + &gc.g6
}

/// Subdiagonal of G1 on the f-basis, little case:
/// G1 f_n = a_n f_n + b_n f_{n-1}.
pub fn bidiag_little(n: i64, b: &Rat, p: &ParamPoint) -> Rat {
    let gc = g_coeffs(p);
    let q = p.q();
    -(&gc.g5 * p.u.pow(2))
        * q.pow(-2 * n)
        * (Rat::one() - q.pow(2 * n))
        * (Rat::one() - q.pow(2 * n) * b)
}

/// Subdiagonal of G1 on the f-basis, big case.
pub fn bidiag_big(n: i64, a: &Rat, c: &Rat, p: &ParamPoint) -> Rat {
    let gc = g_coeffs(p);
    let q = p.q();
    -(&gc.g5 * p.u.pow(2))
        * q.pow(-2 * n)
        * (Rat::one() - q.pow(2 * n))
        * (Rat::one() - q.pow(2 * n) * a)
        * (Rat::one() - q.pow(2 * n) * c)
}

/// The little q-Jacobi divided-difference operator
/// L = B(z) T² + B̄(z) T⁻² - (B + B̄)(z),
/// B(z) = -𝔞/z + 𝔞𝔟q², B̄(z) = -1/z + 1.
pub fn qdiff_little(lp: &LittleParams, p: &Arc<ParamPoint>) -> SkewLaurentOp {
    let q2 = p.q().pow(2);
    let bz = SkewLaurentOp::monomial(p, -1, 0, -lp.a.clone())
        + SkewLaurentOp::monomial(p, 0, 0, &lp.a * &lp.b * &q2);
    let bb = SkewLaurentOp::monomial(p, -1, 0, -Rat::one())
        + SkewLaurentOp::monomial(p, 0, 0, Rat::one());
    let t2 = SkewLaurentOp::t_pow(p, 2);
    let tm2 = SkewLaurentOp::t_pow(p, -2);
    &bz * &t2 + &bb * &tm2 - (bz + bb)
}

/// The big q-Jacobi operator with coefficient functions evaluated at
/// scale·z, so it acts on P_n(scale·z) directly:
/// B(z) = 𝔞𝔠q²/z² - 𝔞(𝔟+𝔠)q²/z + 𝔞𝔟q², B̄(z) = 𝔞𝔠q⁴/z² - (𝔞+𝔠)q²/z + 1.
pub fn qdiff_big(bp: &BigParams, scale: &Rat, p: &Arc<ParamPoint>) -> SkewLaurentOp {
    let q2 = p.q().pow(2);
    let s1 = scale.inv();
    let s2 = s1.pow(2);
    let (a, b, c) = (&bp.a, &bp.b, &bp.c);
    let bz = SkewLaurentOp::monomial(p, -2, 0, a * c * &q2 * &s2)
        + SkewLaurentOp::monomial(p, -1, 0, -(a * (b + c) * &q2 * &s1))
        + SkewLaurentOp::monomial(p, 0, 0, a * b * &q2);
    let bb = SkewLaurentOp::monomial(p, -2, 0, a * c * q2.pow(2) * &s2)
        + SkewLaurentOp::monomial(p, -1, 0, -((a + c) * &q2 * &s1))
        + SkewLaurentOp::monomial(p, 0, 0, Rat::one());
    let t2 = SkewLaurentOp::t_pow(p, 2);
    let tm2 = SkewLaurentOp::t_pow(p, -2);
    &bz * &t2 + &bb * &tm2 - (bz + bb)
}

/// Eigenvalue of L: μ_n = q^{-2n}(1 - q^{2n})(1 - 𝔞𝔟q^{2n+2}).
pub fn qdiff_eigenvalue(n: i64, ab: &Rat, q: &Rat) -> Rat {
    q.pow(-2 * n) * (Rat::one() - q.pow(2 * n)) * (Rat::one() - ab * q.pow(2 * n + 2))
}

/// Read (𝔞, 𝔟) off a little-shaped coefficient table.
pub fn little_dictionary(p: &ParamPoint) -> Result<LittleParams, DictionaryError> {
    let gc = g_coeffs(p);
    if !(gc.g1.is_zero() && gc.g2p.is_zero() && gc.g3p.is_zero()) {
        return Err(DictionaryError::ProfileShape(
            "S-² and S+ rows must vanish for the little case",
        ));
    }
    if gc.g5.is_zero() || gc.g3.is_zero() {
        return Err(DictionaryError::Incompatible("g3 and g5 must be nonzero"));
    }
    let q = p.q();
    let u = &p.u;
    let dq = p.dq();
    if &gc.g2 / &gc.g5 != &dq * u {
        return Err(DictionaryError::Incompatible(
            "g2/g5 must equal (q - q⁻¹) q^ν",
        ));
    }
    let a = -(&gc.g3 / &gc.g5) / (u.pow(3) * &dq);
    let b = -(&gc.g4 / &gc.g3) * &dq / (u * q.pow(2));
    Ok(LittleParams { a, b })
}

/// Read (𝔞, 𝔟, 𝔠) off a big-shaped coefficient table.  The roots of the
/// quadratic are recovered exactly; when both orderings pass the 𝔞𝔟
/// cross-check the lexicographically smaller 𝔞 wins.
pub fn big_dictionary(p: &ParamPoint, rescaled: bool) -> Result<BigParams, DictionaryError> {
    let gc = g_coeffs(p);
    if !(gc.g2p.is_zero() && gc.g3p.is_zero()) {
        return Err(DictionaryError::ProfileShape(
            "S+ rows must vanish for the big case",
        ));
    }
    if gc.g5.is_zero() {
        return Err(DictionaryError::Incompatible("g5 must be nonzero"));
    }
    let q = p.q();
    let u = &p.u;
    let dq = p.dq();
    // (prod, sum, ab, absum) = (𝔞𝔠/𝔟², (𝔞+𝔠)/𝔟, 𝔞𝔟, 𝔞(𝔟+𝔠)/𝔟) rescaled,
    // and (𝔞𝔠, 𝔞+𝔠, 𝔞𝔟, 𝔞(𝔟+𝔠)) plain.
    let (prod, sum, ab, absum) = if rescaled {
        (
            (&gc.g1 / &gc.g5) * &q / (u.pow(2) * dq.pow(2)),
            (&gc.g2 / &gc.g5) / (u * &dq),
            (&gc.g4 / &gc.g5) / (u.pow(4) * q.pow(2)),
            -(&gc.g3 / &gc.g5) / (u.pow(3) * &dq),
        )
    } else {
        (
            (&gc.g1 / &gc.g5) / (u.pow(2) * q.pow(3) * dq.pow(2)),
            (&gc.g2 / &gc.g5) / (u * q.pow(2) * &dq),
            (&gc.g4 / &gc.g5) / (u.pow(4) * q.pow(2)),
            -(&gc.g3 / &gc.g5) / (u.pow(3) * q.pow(2) * &dq),
        )
    };
    let disc = sum.pow(2) - Rat::from_int(4) * &prod;
    if disc.is_negative() {
        return Err(DictionaryError::IrrationalDiscriminant);
    }
    let rt = disc
        .sqrt_exact()
        .ok_or(DictionaryError::IrrationalDiscriminant)?;
    let half = Rat::new(1, 2);
    let r1 = (&sum + &rt) * &half;
    let r2 = (&sum - &rt) * &half;
    let mut found: Option<BigParams> = None;
    for (ra, rc) in [(&r1, &r2), (&r2, &r1)] {
        if ra.is_zero() {
            continue;
        }
        let (a, b, c, valid) = if rescaled {
            // roots are 𝔞/𝔟 and 𝔠/𝔟; recover 𝔟 from 𝔞(𝔟+𝔠)/𝔟, then
            // cross-check against 𝔞𝔟
            let den = ra * (Rat::one() + rc);
            if den.is_zero() {
                continue;
            }
            let b = &absum / &den;
            let valid = !b.is_zero() && ra * b.pow(2) == ab;
            (ra * &b, b.clone(), rc * &b, valid)
        } else {
            // roots are 𝔞 and 𝔠 themselves; recover 𝔟 from 𝔞𝔟, then
            // cross-check against 𝔞(𝔟+𝔠)
            let b = &ab / ra;
            let valid = !b.is_zero() && ra * (&b + rc) == absum;
            (ra.clone(), b, rc.clone(), valid)
        };
        if !valid {
            continue;
        }
        let better = match &found {
            None => true,
            Some(prev) => a < prev.a,
        };
        if better {
            found = Some(BigParams { a, b, c });
        }
    }
    found.ok_or(DictionaryError::NoAdmissibleRoot)
}

/// Specialization p_n(z; 𝔞, 𝔟) = pre · P_n(q²𝔟z; 𝔟, 𝔞, 0; q²) of the big
/// polynomial to the little one.
pub fn little_from_big(n: u32, lp: &LittleParams, q: &Rat) -> LaurentPoly {
    let swapped = BigParams {
        a: lp.b.clone(),
        b: lp.a.clone(),
        c: Rat::zero(),
    };
    let scale = q.pow(2) * &lp.b;
    big_poly_at(n, &swapped, &scale, q).scale(&little_prefactor(n, lp, q))
}

/// Expansion coefficient of the big polynomial over (scale·z; q²)_s.
pub fn big_gamma(n: u32, s: u32, bp: &BigParams, q: &Rat) -> Rat {
    let q2 = q.pow(2);
    let ab = &bp.a * &bp.b;
    let ni = n as i64;
    qpoch(&q.pow(-2 * ni), &q2, s) * qpoch(&(&ab * q.pow(2 * ni + 2)), &q2, s)
        / (qpoch(&(&q2 * &bp.a), &q2, s) * qpoch(&(&q2 * &bp.c), &q2, s) * qpoch(&q2, &q2, s))
        * q2.pow(s as i64)
}

/// P_n(scale·z; 𝔞, 𝔟, 𝔠; q²) = Σ_s γ'_{n,s} (scale·z; q²)_s.
pub fn big_poly_at(n: u32, bp: &BigParams, scale: &Rat, q: &Rat) -> LaurentPoly {
    let q2 = q.pow(2);
    let mut out = LaurentPoly::zero();
    for s in 0..=n {
        let mut f = LaurentPoly::one();
        for j in 0..s {
            f = f * (LaurentPoly::one() + LaurentPoly::monomial(1, -(scale * q2.pow(j as i64))));
        }
        out = out + f.scale(&big_gamma(n, s, bp, q));
    }
    out
}

fn fold_polys(name: &'static str, anchor: &'static str, rows: Vec<(String, LaurentPoly)>) -> Check {
    Check::polys(
        name,
        anchor,
        rows.iter().map(|(l, r)| (l.as_str(), r.clone())),
    )
}

pub fn verify_little_dictionary(p: &ParamPoint) -> Vec<Check> {
    let name = "little-dictionary-round-trip";
    let q = p.q();
    match little_dictionary(p) {
        Ok(lp) => vec![Check::scalars(
            name,
            ANCHOR_LITTLE_DICT,
            [
                ("a", lp.a, p.pa.clone()),
                ("b", lp.b, p.pb.clone()),
                ("kappa", kappa(p), q.pow(2) * &p.pb),
            ],
        )],
        Err(e) => vec![Check::fail(name, ANCHOR_LITTLE_DICT, format!("{e}"))],
    }
}

pub fn verify_w0_eigen(p: &Arc<ParamPoint>, n_max: u32) -> Vec<Check> {
    let g = chevalley(p);
    let (w0, _) = build_w(p, &g);
    let mut eigen = Vec::new();
    let mut mono = Vec::new();
    for n in 0..=n_max {
        let ni = n as i64;
        let f = eigenfunction_f(n, p);
        eigen.push((format!("n={n}"), w0.apply(&f) - f.scale(&w0_lambda(ni, p))));
        let zn = LaurentPoly::monomial(ni, Rat::one());
        let mut expect = LaurentPoly::monomial(ni, w0_lambda(ni, p));
        if n > 0 {
            expect = expect + LaurentPoly::monomial(ni - 1, w0_nu(ni, p));
        }
        mono.push((format!("n={n}"), w0.apply(&zn) - expect));
    }
    vec![
        fold_polys("w0-eigenfunctions", ANCHOR_W0, eigen),
        fold_polys("w0-bidiagonal-monomials", ANCHOR_W0, mono),
    ]
}

/// Little-profile battery: the operator matches the bracket, has the stated
/// spectrum on the polynomials, acts bidiagonally on the f-basis, and the
/// three routes to the coefficients agree; plus the divided-difference form.
pub fn verify_little_family(p: &Arc<ParamPoint>, n_max: u32) -> Vec<Check> {
    let q = p.q();
    let lp = LittleParams {
        a: p.pa.clone(),
        b: p.pb.clone(),
    };
    let ab = &lp.a * &lp.b;
    let g = chevalley(p);
    let (w0, w1) = build_w(p, &g);
    let tg1 = little_operator(p);
    let gc = g_coeffs(p);
    let ldiff = qdiff_little(&lp, p);
    let g5u2 = &gc.g5 * p.u.pow(2);

    let mut eigen = Vec::new();
    let mut bidiag = Vec::new();
    let mut routes = Vec::new();
    let mut qdiff = Vec::new();
    for n in 0..=n_max {
        let ni = n as i64;
        let pn = little_poly(n, &lp, &q);
        let an = spectrum_a(ni, &ab, p);
        eigen.push((format!("n={n}"), tg1.apply(&pn) - pn.scale(&an)));

        let f = eigenfunction_f(n, p);
        let mut rhs = f.scale(&an);
        if n > 0 {
            rhs = rhs + eigenfunction_f(n - 1, p).scale(&bidiag_little(ni, &lp.b, p));
        }
        bidiag.push((format!("n={n}"), tg1.apply(&f) - rhs));

        routes.push((
            format!("series-vs-phi32 n={n}"),
            &pn - phi32_little(n, &lp, &q),
        ));
        routes.push((
            format!("series-vs-expansion n={n}"),
            &pn - expand_little(n, &lp, p),
        ));

        qdiff.push((
            format!("n={n}"),
            ldiff.apply(&pn) - pn.scale(&qdiff_eigenvalue(ni, &ab, &q)),
        ));
    }
    let affine = &tg1
        - ldiff.scale(&g5u2)
        - SkewLaurentOp::constant(p, &g5u2 * (Rat::one() + &ab * q.pow(2)) + &gc.g6);
    vec![
        Check::op(
            "little-operator-matches-bracket",
            ANCHOR_LITTLE,
            &(build_g1(&w0, &w1) - &tg1),
        ),
        fold_polys("little-eigen-equation", ANCHOR_LITTLE, eigen),
        fold_polys("little-bidiagonal-action", ANCHOR_LITTLE, bidiag),
        fold_polys("little-three-routes", ANCHOR_LITTLE, routes),
        fold_polys("little-qdiff-eigen", ANCHOR_LITTLE, qdiff),
        Check::op("little-operator-affine-qdiff", ANCHOR_LITTLE, &affine),
    ]
}

/// Big-profile battery in the rescaled parametrization (variable q²𝔟z).
pub fn verify_big_rescaled(p: &Arc<ParamPoint>, n_max: u32) -> Vec<Check> {
    let q = p.q();
    let bp = BigParams {
        a: p.pa.clone(),
        b: p.pb.clone(),
        c: p.pc.clone(),
    };
    let ab = &bp.a * &bp.b;
    let scale = q.pow(2) * &bp.b;
    let g = chevalley(p);
    let (w0, w1) = build_w(p, &g);
    let g1op = big_operator(p);
    let gc = g_coeffs(p);
    let ldiff = qdiff_big(&bp, &scale, p);
    let g5u2 = &gc.g5 * p.u.pow(2);

    let dict = match big_dictionary(p, true) {
        Ok(got) => Check::scalars(
            "big-dictionary-round-trip",
            ANCHOR_BIG,
            [
                ("a", got.a, bp.a.clone()),
                ("b", got.b, bp.b.clone()),
                ("c", got.c, bp.c.clone()),
                ("kappa", kappa(p), scale.clone()),
            ],
        ),
        Err(e) => Check::fail("big-dictionary-round-trip", ANCHOR_BIG, format!("{e}")),
    };

    let mut eigen = Vec::new();
    let mut bidiag = Vec::new();
    let mut qdiff = Vec::new();
    let mut w0eig = Vec::new();
    for n in 0..=n_max {
        let ni = n as i64;
        let pn = big_poly_at(n, &bp, &scale, &q);
        let an = spectrum_a(ni, &ab, p);
        eigen.push((format!("n={n}"), g1op.apply(&pn) - pn.scale(&an)));

        let f = eigenfunction_f(n, p);
        let mut rhs = f.scale(&an);
        if n > 0 {
            rhs = rhs + eigenfunction_f(n - 1, p).scale(&bidiag_big(ni, &bp.a, &bp.c, p));
        }
        bidiag.push((format!("n={n}"), g1op.apply(&f) - rhs));

        qdiff.push((
            format!("n={n}"),
            ldiff.apply(&pn) - pn.scale(&qdiff_eigenvalue(ni, &ab, &q)),
        ));
        w0eig.push((format!("n={n}"), w0.apply(&f) - f.scale(&w0_lambda(ni, p))));
    }
    let affine = &g1op
        - ldiff.scale(&g5u2)
        - SkewLaurentOp::constant(p, &g5u2 * (Rat::one() + &ab * q.pow(2)) + &gc.g6);
    vec![
        dict,
        Check::op(
            "big-operator-matches-bracket",
            ANCHOR_BIG,
            &(build_g1(&w0, &w1) - &g1op),
        ),
        fold_polys("big-eigen-equation", ANCHOR_BIG, eigen),
        fold_polys("big-bidiagonal-action", ANCHOR_BIG, bidiag),
        fold_polys("big-qdiff-eigen", ANCHOR_BIG, qdiff),
        Check::op("big-operator-affine-qdiff", ANCHOR_BIG, &affine),
        fold_polys("big-w0-eigenfunctions", ANCHOR_BIG, w0eig),
    ]
}

/// Big-profile battery in the plain parametrization (variable z itself).
/// Here the dictionary is symmetric under (𝔞, 𝔟, 𝔠) → (𝔠, 𝔞𝔟/𝔠, 𝔞), so the
/// round-trip accepts either representative.
pub fn verify_big_plain(p: &Arc<ParamPoint>, n_max: u32) -> Vec<Check> {
    let q = p.q();
    let u = &p.u;
    let dq = p.dq();
    let bp = BigParams {
        a: p.pa.clone(),
        b: p.pb.clone(),
        c: p.pc.clone(),
    };
    let ab = &bp.a * &bp.b;
    let gc = g_coeffs(p);
    let m1 = (&gc.g1 / &gc.g5) / (u.pow(2) * q.pow(3) * dq.pow(2));
    let m2 = (&gc.g2 / &gc.g5) / (u * q.pow(2) * &dq);
    let m3 = (&gc.g4 / &gc.g5) / (u.pow(4) * q.pow(2));
    let m4 = -(&gc.g3 / &gc.g5) / (u.pow(3) * q.pow(2) * &dq);
    let ident = Check::scalars(
        "big-plain-moment-identification",
        ANCHOR_BIG_PLAIN,
        [
            ("ac", m1.clone(), &bp.a * &bp.c),
            ("a+c", m2, &bp.a + &bp.c),
            ("ab", m3.clone(), ab.clone()),
            ("a(b+c)", m4.clone(), &bp.a * (&bp.b + &bp.c)),
            ("sum-rule", m4, &m3 + &m1),
            ("kappa", kappa(p), Rat::one()),
        ],
    );
    let swapped = BigParams {
        a: bp.c.clone(),
        b: &ab / &bp.c,
        c: bp.a.clone(),
    };
    let dict = match big_dictionary(p, false) {
        Ok(got) => Check::cond(
            "big-plain-dictionary",
            ANCHOR_BIG_PLAIN,
            got == bp || got == swapped,
            "recovered parameters match neither representative",
        ),
        Err(e) => Check::fail("big-plain-dictionary", ANCHOR_BIG_PLAIN, format!("{e}")),
    };

    let g1op = big_operator(p);
    let ldiff = qdiff_big(&bp, &Rat::one(), p);
    let mut eigen = Vec::new();
    let mut qdiff = Vec::new();
    for n in 0..=n_max {
        let ni = n as i64;
        let pn = big_poly_at(n, &bp, &Rat::one(), &q);
        qdiff.push((
            format!("n={n}"),
            ldiff.apply(&pn) - pn.scale(&qdiff_eigenvalue(ni, &ab, &q)),
        ));
        eigen.push((
            format!("n={n}"),
            g1op.apply(&pn) - pn.scale(&spectrum_a(ni, &ab, p)),
        ));
    }
    vec![
        ident,
        dict,
        fold_polys("big-plain-qdiff-eigen", ANCHOR_BIG_PLAIN, qdiff),
        fold_polys("big-plain-eigen-equation", ANCHOR_BIG_PLAIN, eigen),
    ]
}

/// The little polynomial as a 𝔠 = 0 specialization of the big one.
pub fn verify_little_from_big(p: &ParamPoint, n_max: u32) -> Vec<Check> {
    let q = p.q();
    let lp = LittleParams {
        a: p.pa.clone(),
        b: p.pb.clone(),
    };
    let mut rows = Vec::new();
    for n in 0..=n_max {
        rows.push((
            format!("n={n}"),
            little_poly(n, &lp, &q) - little_from_big(n, &lp, &q),
        ));
    }
    vec![fold_polys("little-from-big", ANCHOR_LITTLE_FROM_BIG, rows)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_pass;
    use crate::qcore::point::{sample_big_plain, sample_point, Profile, DEFAULT_N_MAX};

    #[test]
    fn little_poly_low_degrees() {
        let q = Rat::new(1, 4);
        let lp = LittleParams {
            a: Rat::new(1, 3),
            b: Rat::new(1, 5),
        };
        assert_eq!(little_poly(0, &lp, &q), LaurentPoly::one());
        // p_1 = 1 - ((1 - 𝔞𝔟q⁴)/(1 - 𝔞q²)) z
        let p1 = little_poly(1, &lp, &q);
        assert_eq!(p1.coeff(0), Rat::one());
        assert_eq!(p1.coeff(1), Rat::new(-3839, 3760));
        assert_eq!(
            qdiff_eigenvalue(1, &(&lp.a * &lp.b), &q),
            Rat::new(3839, 256)
        );
    }

    #[test]
    fn qdiff_eigenvalue_vanishes_at_zero() {
        let q = Rat::new(1, 4);
        assert!(qdiff_eigenvalue(0, &Rat::new(1, 15), &q).is_zero());
    }

    #[test]
    fn three_routes_agree() {
        for seed in 1..=3 {
            let p = sample_point(seed, Profile::Little);
            let q = p.q();
            let lp = LittleParams {
                a: p.pa.clone(),
                b: p.pb.clone(),
            };
            for n in 0..=5 {
                let pn = little_poly(n, &lp, &q);
                assert_eq!(pn, phi32_little(n, &lp, &q), "seed {seed} n {n}");
                assert_eq!(pn, expand_little(n, &lp, &p), "seed {seed} n {n}");
            }
        }
    }

    #[test]
    fn little_dictionary_round_trips() {
        for seed in 1..=3 {
            let p = sample_point(seed, Profile::Little);
            assert!(all_pass(&verify_little_dictionary(&p)), "seed {seed}");
        }
    }

    #[test]
    fn dictionary_rejects_general_points() {
        let p = sample_point(1, Profile::General);
        assert!(matches!(
            little_dictionary(&p),
            Err(DictionaryError::ProfileShape(_))
        ));
        assert!(matches!(
            big_dictionary(&p, true),
            Err(DictionaryError::ProfileShape(_))
        ));
    }

    #[test]
    fn little_family_batteries() {
        for seed in 1..=2 {
            let p = Arc::new(sample_point(seed, Profile::Little));
            assert!(all_pass(&verify_w0_eigen(&p, 6)), "seed {seed}");
            assert!(all_pass(&verify_little_family(&p, 6)), "seed {seed}");
        }
    }

    #[test]
    fn big_rescaled_battery() {
        for seed in 1..=2 {
            let p = Arc::new(sample_point(seed, Profile::Big));
            assert!(all_pass(&verify_big_rescaled(&p, 6)), "seed {seed}");
        }
    }

    #[test]
    fn big_plain_battery() {
        for seed in 1..=2 {
            let p = Arc::new(sample_big_plain(seed, DEFAULT_N_MAX));
            assert!(all_pass(&verify_big_plain(&p, 6)), "seed {seed}");
        }
    }

    #[test]
    fn little_from_big_specializes() {
        for seed in 1..=2 {
            let p = sample_point(seed, Profile::Big);
            assert!(all_pass(&verify_little_from_big(&p, 6)), "seed {seed}");
        }
    }
}
