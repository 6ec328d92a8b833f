//! The skew Laurent ring C[z, z⁻¹][T, T⁻¹] with T z = q z T, and its action
//! on Laurent polynomials.
//!
//! An operator is a finite sum Σ c_{jk} z^j T^k held in normal form (all
//! z-powers to the left of all shift-powers). Multiplication normalizes
//! termwise with T^k ∘ z^j = q^{jk} z^j T^k. Identity verification reduces
//! to `is_zero` on a difference of operators, which is exact.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::qcore::point::ParamPoint;
use crate::qcore::rat::Rat;

/// Element of the skew Laurent ring at a fixed parameter point.
///
/// Invariant: no explicit zero coefficients are stored, so table equality is
/// operator equality (for operators over equal points).
#[derive(Clone)]
pub struct SkewLaurentOp {
    point: Arc<ParamPoint>,
    terms: BTreeMap<(i64, i64), Rat>,
}

fn insert_term(terms: &mut BTreeMap<(i64, i64), Rat>, key: (i64, i64), val: Rat) {
    if val.is_zero() {
        return;
    }
    match terms.entry(key) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(val);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + val;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl SkewLaurentOp {
    pub fn zero(point: &Arc<ParamPoint>) -> Self {
        SkewLaurentOp {
            point: Arc::clone(point),
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(point: &Arc<ParamPoint>) -> Self {
        Self::constant(point, Rat::one())
    }

    pub fn constant(point: &Arc<ParamPoint>, c: Rat) -> Self {
        Self::monomial(point, 0, 0, c)
    }

    /// c · z^j T^k.
    pub fn monomial(point: &Arc<ParamPoint>, j: i64, k: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        insert_term(&mut terms, (j, k), c);
        SkewLaurentOp {
            point: Arc::clone(point),
            terms,
        }
    }

    /// z^j.
    pub fn z_pow(point: &Arc<ParamPoint>, j: i64) -> Self {
        Self::monomial(point, j, 0, Rat::one())
    }

    /// T^k, the k-fold q-shift.
    pub fn t_pow(point: &Arc<ParamPoint>, k: i64) -> Self {
        Self::monomial(point, 0, k, Rat::one())
    }

    pub fn point(&self) -> &Arc<ParamPoint> {
        &self.point
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in (j, k)-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, j: i64, k: i64) -> Rat {
        self.terms.get(&(j, k)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(&self.point);
        }
        SkewLaurentOp {
            point: Arc::clone(&self.point),
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Apply to a Laurent polynomial: T^k z^m = q^{km} z^m, then multiply by z^j.
    pub fn apply(&self, f: &LaurentPoly) -> LaurentPoly {
        let q = self.point.q();
        let mut out = BTreeMap::new();
        for (&(j, k), c) in &self.terms {
            for (&m, d) in &f.terms {
                let val = c * d * q.pow(k * m);
                insert_poly_term(&mut out, m + j, val);
            }
        }
        LaurentPoly { terms: out }
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.point, &other.point) || *self.point == *other.point,
            "operators over mismatched parameter points"
        );
    }
}

impl PartialEq for SkewLaurentOp {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.point, &other.point) || *self.point == *other.point)
            && self.terms == other.terms
    }
}

impl Eq for SkewLaurentOp {}

macro_rules! op_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for SkewLaurentOp {
            type Output = SkewLaurentOp;
            fn $method(self, rhs: SkewLaurentOp) -> SkewLaurentOp {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&SkewLaurentOp> for SkewLaurentOp {
            type Output = SkewLaurentOp;
            fn $method(self, rhs: &SkewLaurentOp) -> SkewLaurentOp {
                (&self).$method(rhs)
            }
        }
        impl $imp<SkewLaurentOp> for &SkewLaurentOp {
            type Output = SkewLaurentOp;
            fn $method(self, rhs: SkewLaurentOp) -> SkewLaurentOp {
                self.$method(&rhs)
            }
        }
    };
}

op_binop!(Add, add);
op_binop!(Sub, sub);
op_binop!(Mul, mul);

impl Add<&SkewLaurentOp> for &SkewLaurentOp {
    type Output = SkewLaurentOp;
    fn add(self, rhs: &SkewLaurentOp) -> SkewLaurentOp {
        self.assert_compatible(rhs);
        let mut terms = self.terms.clone();
        for (&key, val) in &rhs.terms {
            insert_term(&mut terms, key, val.clone());
        }
        SkewLaurentOp {
            point: Arc::clone(&self.point),
            terms,
        }
    }
}

impl Sub<&SkewLaurentOp> for &SkewLaurentOp {
    type Output = SkewLaurentOp;
    fn sub(self, rhs: &SkewLaurentOp) -> SkewLaurentOp {
        self.assert_compatible(rhs);
        let mut terms = self.terms.clone();
        for (&key, val) in &rhs.terms {
            insert_term(&mut terms, key, -val);
        }
        SkewLaurentOp {
            point: Arc::clone(&self.point),
            terms,
        }
    }
}

impl Mul<&SkewLaurentOp> for &SkewLaurentOp {
    type Output = SkewLaurentOp;
    fn mul(self, rhs: &SkewLaurentOp) -> SkewLaurentOp {
        self.assert_compatible(rhs);
        let q = self.point.q();
        let mut terms = BTreeMap::new();
        for (&(j1, k1), c1) in &self.terms {
            for (&(j2, k2), c2) in &rhs.terms {
                // T^{k1} z^{j2} = q^{j2 k1} z^{j2} T^{k1}
                let val = c1 * c2 * q.pow(j2 * k1);
                insert_term(&mut terms, (j1 + j2, k1 + k2), val);
            }
        }
        SkewLaurentOp {
            point: Arc::clone(&self.point),
            terms,
        }
    }
}

impl Neg for &SkewLaurentOp {
    type Output = SkewLaurentOp;
    fn neg(self) -> SkewLaurentOp {
        self.scale(&Rat::from_int(-1))
    }
}

impl Neg for SkewLaurentOp {
    type Output = SkewLaurentOp;
    fn neg(self) -> SkewLaurentOp {
        -&self
    }
}

impl fmt::Display for SkewLaurentOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(j, k), c)| format!("z^{j} T^{k}: {c}"))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl fmt::Debug for SkewLaurentOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewLaurentOp[{self}]")
    }
}

/// qq·A∘B - qq⁻¹·B∘A. Panics if qq is zero.
pub fn q_commutator(a: &SkewLaurentOp, b: &SkewLaurentOp, qq: &Rat) -> SkewLaurentOp {
    assert!(
        !qq.is_zero(),
        "q-commutator with zero deformation parameter"
    );
    (a * b).scale(qq) - (b * a).scale(&qq.inv())
}

fn insert_poly_term(terms: &mut BTreeMap<i64, Rat>, key: i64, val: Rat) {
    if val.is_zero() {
        return;
    }
    match terms.entry(key) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(val);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + val;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Laurent polynomial in z; the function space the operators act on.
/// No explicit zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(j: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        insert_poly_term(&mut terms, j, c);
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, j: i64) -> Rat {
        self.terms.get(&j).cloned().unwrap_or_else(Rat::zero)
    }

    /// (lowest, highest) occurring z-power; None for the zero polynomial.
    pub fn span(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?;
        let hi = self.terms.keys().next_back()?;
        Some((*lo, *hi))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }
}

impl FromIterator<(i64, Rat)> for LaurentPoly {
    fn from_iter<I: IntoIterator<Item = (i64, Rat)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (j, c) in iter {
            insert_poly_term(&mut terms, j, c);
        }
        LaurentPoly { terms }
    }
}

macro_rules! poly_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $imp<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&j, c) in &rhs.terms {
            insert_poly_term(&mut terms, j, c.clone());
        }
        LaurentPoly { terms }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&j, c) in &rhs.terms {
            insert_poly_term(&mut terms, j, -c);
        }
        LaurentPoly { terms }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (&j, c) in &self.terms {
            for (&m, d) in &rhs.terms {
                insert_poly_term(&mut terms, j + m, c * d);
            }
        }
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&Rat::from_int(-1))
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&j, c)| format!("z^{j}: {c}"))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::point::{sample_point, Profile};
    use alloc::sync::Arc;

    fn pt() -> Arc<ParamPoint> {
        Arc::new(sample_point(1, Profile::General))
    }

    #[test]
    fn defining_relation() {
        let p = pt();
        let q = p.q();
        let z = SkewLaurentOp::z_pow(&p, 1);
        let t = SkewLaurentOp::t_pow(&p, 1);
        // T z = q z T
        let lhs = &t * &z;
        let rhs = SkewLaurentOp::monomial(&p, 1, 1, q.clone());
        assert_eq!(lhs, rhs);
        assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn zt_squared() {
        let p = pt();
        let q = p.q();
        let zt = SkewLaurentOp::monomial(&p, 1, 1, Rat::one());
        // (zT)(zT) = q z² T²
        assert_eq!(&zt * &zt, SkewLaurentOp::monomial(&p, 2, 2, q));
    }

    #[test]
    fn identity_is_neutral() {
        let p = pt();
        let x = SkewLaurentOp::monomial(&p, 2, -1, Rat::new(3, 7))
            + SkewLaurentOp::monomial(&p, -1, 1, Rat::new(-2, 5));
        let i = SkewLaurentOp::identity(&p);
        assert_eq!(&i * &x, x);
        assert_eq!(&x * &i, x);
    }

    #[test]
    fn q_commutator_values() {
        let p = pt();
        let q = p.q();
        let z = SkewLaurentOp::z_pow(&p, 1);
        let t = SkewLaurentOp::t_pow(&p, 1);
        // [z, T]_q = q zT - q⁻¹ Tz = (q - 1) zT
        let expect = SkewLaurentOp::monomial(&p, 1, 1, &q - Rat::one());
        assert_eq!(q_commutator(&z, &t, &q), expect);
        // [A, A]_q = (q - q⁻¹) A²
        let a = SkewLaurentOp::monomial(&p, 1, -2, Rat::new(2, 3));
        let dq = &q - q.inv();
        assert_eq!(q_commutator(&a, &a, &q), (&a * &a).scale(&dq));
        // [1, B]_q = (q - q⁻¹) B
        let i = SkewLaurentOp::identity(&p);
        assert_eq!(q_commutator(&i, &a, &q), a.scale(&dq));
    }

    #[test]
    #[should_panic(expected = "zero deformation")]
    fn q_commutator_zero_parameter() {
        let p = pt();
        let z = SkewLaurentOp::z_pow(&p, 1);
        let _ = q_commutator(&z, &z, &Rat::zero());
    }

    #[test]
    fn apply_shift_and_multiply() {
        let p = pt();
        let q = p.q();
        let t = SkewLaurentOp::t_pow(&p, 1);
        for n in [-2i64, 0, 3, 5] {
            let zn = LaurentPoly::monomial(n, Rat::one());
            assert_eq!(t.apply(&zn), zn.scale(&q.pow(n)));
        }
        // (z T²) z³ = q⁶ z⁴
        let zt2 = SkewLaurentOp::monomial(&p, 1, 2, Rat::one());
        let z3 = LaurentPoly::monomial(3, Rat::one());
        assert_eq!(zt2.apply(&z3), LaurentPoly::monomial(4, q.pow(6)));
        // z⁻¹(T⁻¹ - T) kills constants
        let op = SkewLaurentOp::monomial(&p, -1, -1, Rat::one())
            - SkewLaurentOp::monomial(&p, -1, 1, Rat::one());
        assert!(op.apply(&LaurentPoly::one()).is_zero());
    }

    #[test]
    fn cancellation_is_canonical() {
        let p = pt();
        let a = SkewLaurentOp::monomial(&p, 1, 1, Rat::new(5, 3));
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_eq!(diff.num_terms(), 0);
        assert!(!SkewLaurentOp::identity(&p).is_zero());
    }

    #[test]
    #[should_panic(expected = "mismatched parameter points")]
    fn mismatched_points_panic() {
        let p1 = Arc::new(sample_point(1, Profile::General));
        let p2 = Arc::new(sample_point(2, Profile::General));
        let a = SkewLaurentOp::z_pow(&p1, 1);
        let b = SkewLaurentOp::z_pow(&p2, 1);
        let _ = &a * &b;
    }

    #[test]
    fn poly_ops() {
        let f = LaurentPoly::from_iter([(0, Rat::one()), (2, Rat::new(1, 2))]);
        let g = LaurentPoly::from_iter([(0, Rat::one()), (2, Rat::new(-1, 2))]);
        let prod = &f * &g;
        assert_eq!(
            prod,
            LaurentPoly::from_iter([(0, Rat::one()), (4, Rat::new(-1, 4))])
        );
        assert!((&f - &f).is_zero());
        assert_eq!(f.span(), Some((0, 2)));
        assert_eq!(f.coeff(2), Rat::new(1, 2));
        assert_eq!(f.coeff(5), Rat::zero());
    }
}
