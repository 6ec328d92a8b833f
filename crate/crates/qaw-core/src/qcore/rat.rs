//! Arbitrary-precision rational scalars.
//!
//! `Rat` is the coefficient field for every operator and polynomial in this
//! crate. Values are always in lowest terms with a positive denominator, so
//! structural equality is value equality and zero coefficients can be pruned
//! reliably.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// Exact rational scalar, lowest terms, positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// num/den, reduced. Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Rat(self.0.recip())
    }

    /// Integer power, negative exponents allowed. 0^0 = 1; panics on 0^(e<0).
    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Rat::one();
        }
        assert!(!self.is_zero() || e > 0, "zero raised to a negative power");
        let mag = u32::try_from(e.unsigned_abs()).expect("exponent magnitude out of range");
        let powed = Pow::pow(&self.0, mag);
        if e < 0 {
            Rat(powed.recip())
        } else {
            Rat(powed)
        }
    }

    /// Exact square root if the value is a square of a rational.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let sn = self.0.numer().sqrt();
        if &(&sn * &sn) != self.0.numer() {
            return None;
        }
        let sd = self.0.denom().sqrt();
        if &(&sd * &sd) != self.0.denom() {
            return None;
        }
        // gcd(n,d) = 1 implies gcd(sqrt n, sqrt d) = 1, so new_raw stays canonical.
        Some(Rat(BigRational::new_raw(sn, sd)))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Failed parse of a "num/den" literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError {
    input: String,
}

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}", self.input)
    }
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts "num/den" or a bare integer; tolerates U+2212 minus signs.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().replace('\u{2212}', "-");
        norm.parse::<BigRational>()
            .map(Rat)
            .map_err(|_| ParseRatError {
                input: s.to_string(),
            })
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $imp<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $imp<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl $imp<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// q-shifted factorial (a; qq)_n = ∏_{k=0}^{n-1} (1 - a qq^k); empty product is 1.
pub fn qpoch(a: &Rat, qq: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    let mut apow = a.clone();
    for _ in 0..n {
        acc = acc * (Rat::one() - &apow);
        apow = apow * qq;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(3, -6), Rat::new(-1, 2));
        assert_eq!(Rat::new(0, 5), Rat::zero());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Rat::new(-3, 7).to_string(), "-3/7");
        assert_eq!(Rat::from_int(5).to_string(), "5");
        assert_eq!("\u{2212}3/7".parse::<Rat>().unwrap(), Rat::new(-3, 7));
        assert_eq!(" 12/8 ".parse::<Rat>().unwrap(), Rat::new(3, 2));
        assert_eq!("9".parse::<Rat>().unwrap(), Rat::from_int(9));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
        assert!("".parse::<Rat>().is_err());
    }

    #[test]
    fn powers() {
        let x = Rat::new(2, 3);
        assert_eq!(x.pow(0), Rat::one());
        assert_eq!(x.pow(3), Rat::new(8, 27));
        assert_eq!(x.pow(-2), Rat::new(9, 4));
        assert_eq!(Rat::zero().pow(0), Rat::one());
    }

    #[test]
    #[should_panic(expected = "negative power")]
    fn zero_negative_power_panics() {
        let _ = Rat::zero().pow(-1);
    }

    #[test]
    fn sqrt_exact() {
        assert_eq!(Rat::new(9, 4).sqrt_exact(), Some(Rat::new(3, 2)));
        assert_eq!(Rat::new(2, 1).sqrt_exact(), None);
        assert_eq!(Rat::new(-9, 4).sqrt_exact(), None);
        assert_eq!(Rat::zero().sqrt_exact(), Some(Rat::zero()));
        assert_eq!(Rat::new(49, 81).sqrt_exact(), Some(Rat::new(7, 9)));
    }

    #[test]
    fn qpoch_values() {
        let a = Rat::new(1, 2);
        let qq = Rat::new(1, 3);
        assert_eq!(qpoch(&a, &qq, 0), Rat::one());
        assert_eq!(qpoch(&a, &qq, 2), Rat::new(5, 12));
        assert_eq!(qpoch(&Rat::one(), &qq, 1), Rat::zero());
        assert_eq!(qpoch(&Rat::one(), &qq, 4), Rat::zero());
    }

    #[test]
    fn qpoch_recurrence() {
        let a = Rat::new(-4, 7);
        let qq = Rat::new(3, 5);
        for n in 0..12u32 {
            let step = Rat::one() - a.clone() * qq.pow(n as i64);
            assert_eq!(qpoch(&a, &qq, n + 1), qpoch(&a, &qq, n) * step);
        }
    }
}
