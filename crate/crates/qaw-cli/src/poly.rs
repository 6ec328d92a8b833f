//! Polynomial evaluation: exact coefficient lists for a requested family
//! member, plus its q-difference eigenvalue.

use std::str::FromStr;

use qaw_core::qjacobi::{big_poly_at, little_poly, qdiff_eigenvalue, BigParams, LittleParams};
use qaw_core::Rat;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Little,
    BigRescaled,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Little => "little",
            Family::BigRescaled => "big_rescaled",
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "little" => Ok(Family::Little),
            "big_rescaled" => Ok(Family::BigRescaled),
            other => Err(format!(
                "unknown family '{other}' (expected little or big_rescaled)"
            )),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PolyRequest {
    pub family: Family,
    pub n: u32,
    pub a: Rat,
    pub b: Rat,
    pub c: Option<Rat>,
    pub t: Rat,
}

#[derive(Debug, Serialize)]
pub struct PolyOutput {
    pub tool_version: String,
    pub invocation: serde_json::Value,
    pub family: String,
    pub n: u32,
    pub q: String,
    /// (power of z, coefficient) pairs in ascending power order.
    pub coefficients: Vec<(i64, String)>,
    /// q-difference eigenvalue q^{-2n}(1 - q^{2n})(1 - 𝔞𝔟q^{2n+2}); it
    /// depends only on the inputs here, unlike the gauge-dependent operator
    /// spectrum.
    pub eigenvalue: String,
}

/// Screens the request: q must not be 0 or 1 and no series denominator
/// (q²x; q²)_s, s ≤ n, may vanish.
fn screen(req: &PolyRequest) -> Result<(), String> {
    if req.t.is_zero() || req.t.abs().is_one() {
        return Err(format!("t = {} makes q degenerate", req.t));
    }
    let q = req.t.pow(2);
    let mut pochhammer_args = vec![("pa", req.a.clone())];
    if let Some(c) = &req.c {
        pochhammer_args.push(("pc", c.clone()));
    }
    for (name, x) in pochhammer_args {
        if x.is_zero() {
            continue;
        }
        let mut qk = Rat::one();
        for k in 1..=req.n as i64 {
            qk = qk * q.pow(-2);
            if x == qk {
                return Err(format!("{name} = q^{} degenerates the series", -2 * k));
            }
        }
    }
    match req.family {
        Family::Little => {
            if req.c.is_some() {
                return Err("family little takes no pc".to_owned());
            }
        }
        Family::BigRescaled => {
            if req.c.is_none() {
                return Err("family big_rescaled requires pc".to_owned());
            }
            if req.b.is_zero() {
                return Err("family big_rescaled requires nonzero pb".to_owned());
            }
        }
    }
    Ok(())
}

pub fn run_poly(req: &PolyRequest) -> Result<PolyOutput, String> {
    screen(req)?;
    let q = req.t.pow(2);
    let poly = match req.family {
        Family::Little => little_poly(
            req.n,
            &LittleParams {
                a: req.a.clone(),
                b: req.b.clone(),
            },
            &q,
        ),
        Family::BigRescaled => {
            let bp = BigParams {
                a: req.a.clone(),
                b: req.b.clone(),
                c: req.c.clone().expect("screened"),
            };
            let scale = q.pow(2) * &bp.b;
            big_poly_at(req.n, &bp, &scale, &q)
        }
    };
    let ab = &req.a * &req.b;
    let invocation = serde_json::json!({
        "command": "poly",
        "family": req.family.name(),
        "n": req.n,
        "pa": req.a.to_string(),
        "pb": req.b.to_string(),
        "pc": req.c.as_ref().map(|c| c.to_string()),
        "t": req.t.to_string(),
    });
    Ok(PolyOutput {
        tool_version: env!("CARGO_PKG_VERSION").to_owned(),
        invocation,
        family: req.family.name().to_owned(),
        n: req.n,
        q: q.to_string(),
        coefficients: poly.terms().map(|(m, c)| (*m, c.to_string())).collect(),
        eigenvalue: qdiff_eigenvalue(req.n as i64, &ab, &q).to_string(),
    })
}
