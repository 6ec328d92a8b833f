//! Verification check records.
//!
//! A `Check` is the kernel-side result of one identity verification: a slug
//! naming the check, a slug naming the identity it exercises, a pass flag,
//! and on failure a short serialization of the leading nonzero residual
//! terms. Timing, seeds and point digests are added by the caller.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::qcore::rat::Rat;
use crate::skewring::{LaurentPoly, SkewLaurentOp};

const HEAD_TERMS: usize = 4;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub anchor: &'static str,
    pub pass: bool,
    /// Empty on pass; leading residual terms on fail.
    pub residual: String,
}

fn op_head(op: &SkewLaurentOp) -> String {
    let total = op.num_terms();
    let mut parts: Vec<String> = op
        .terms()
        .take(HEAD_TERMS)
        .map(|(&(j, k), c)| format!("z^{j} T^{k}: {c}"))
        .collect();
    if total > HEAD_TERMS {
        parts.push(format!("(+{} more)", total - HEAD_TERMS));
    }
    parts.join("; ")
}

fn poly_head(p: &LaurentPoly) -> String {
    let total = p.num_terms();
    let mut parts: Vec<String> = p
        .terms()
        .take(HEAD_TERMS)
        .map(|(&j, c)| format!("z^{j}: {c}"))
        .collect();
    if total > HEAD_TERMS {
        parts.push(format!("(+{} more)", total - HEAD_TERMS));
    }
    parts.join("; ")
}

impl Check {
    pub fn pass(name: &'static str, anchor: &'static str) -> Self {
        Check {
            name,
            anchor,
            pass: true,
            residual: String::new(),
        }
    }

    pub fn fail(name: &'static str, anchor: &'static str, residual: String) -> Self {
        Check {
            name,
            anchor,
            pass: false,
            residual,
        }
    }

    /// Pass iff the operator residual is zero.
    pub fn op(name: &'static str, anchor: &'static str, residual: &SkewLaurentOp) -> Self {
        if residual.is_zero() {
            Self::pass(name, anchor)
        } else {
            Self::fail(name, anchor, op_head(residual))
        }
    }

    /// Folds labelled operator residuals into one check; reports the first
    /// nonzero residual.
    pub fn ops<'a, I>(name: &'static str, anchor: &'static str, residuals: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, SkewLaurentOp)>,
    {
        for (label, r) in residuals {
            if !r.is_zero() {
                return Self::fail(name, anchor, format!("{label}: {}", op_head(&r)));
            }
        }
        Self::pass(name, anchor)
    }

    /// Folds labelled polynomial residuals into one check.
    pub fn polys<'a, I>(name: &'static str, anchor: &'static str, residuals: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, LaurentPoly)>,
    {
        for (label, r) in residuals {
            if !r.is_zero() {
                return Self::fail(name, anchor, format!("{label}: {}", poly_head(&r)));
            }
        }
        Self::pass(name, anchor)
    }

    /// Folds labelled scalar equalities into one check.
    pub fn scalars<'a, I>(name: &'static str, anchor: &'static str, pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, Rat, Rat)>,
    {
        for (label, got, want) in pairs {
            if got != want {
                return Self::fail(name, anchor, format!("{label}: got {got}, want {want}"));
            }
        }
        Self::pass(name, anchor)
    }

    /// Boolean condition with a fixed failure description.
    pub fn cond(name: &'static str, anchor: &'static str, ok: bool, on_fail: &str) -> Self {
        if ok {
            Self::pass(name, anchor)
        } else {
            Self::fail(name, anchor, String::from(on_fail))
        }
    }
}

/// True iff every check passed.
pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::point::{sample_point, Profile};
    use alloc::sync::Arc;

    #[test]
    fn residual_heads() {
        let p = Arc::new(sample_point(1, Profile::General));
        let zero = SkewLaurentOp::zero(&p);
        assert!(Check::op("x", "y", &zero).pass);

        let mut big = SkewLaurentOp::zero(&p);
        for j in 0..6 {
            big = big + SkewLaurentOp::monomial(&p, j, 0, Rat::one());
        }
        let c = Check::op("x", "y", &big);
        assert!(!c.pass);
        assert!(c.residual.contains("(+2 more)"));
    }

    #[test]
    fn scalar_fold() {
        let ok = Check::scalars("s", "a", [("v", Rat::one(), Rat::one())]);
        assert!(ok.pass);
        let bad = Check::scalars("s", "a", [("v", Rat::one(), Rat::zero())]);
        assert!(!bad.pass);
        assert!(bad.residual.contains("got 1, want 0"));
    }
}
