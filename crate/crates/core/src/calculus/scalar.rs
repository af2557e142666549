use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{format_rational, int, is_integer, Poly, Rational, SignSet};
use crate::error::{Error, Result};

/// Smallest `n` for which symbolic quantities are required to make sense.
pub const DOMAIN_START: i64 = 2;

/// Upper bound on the number of points inspected when deciding the sign of a
/// symbolic quantity on the domain.
const SIGN_EVAL_LIMIT: u64 = 1_000_000;

/// An exact value: a rational number, or a polynomial in `n` of degree >= 1.
///
/// Constant polynomials are always demoted to `Num`, so a degree-0 result of
/// symbolic arithmetic compares equal to the matching numeric value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Num(Rational),
    Sym(Poly),
}

impl Scalar {
    pub fn n() -> Self {
        Scalar::Sym(Poly::var())
    }

    pub fn zero() -> Self {
        Scalar::Num(Rational::zero())
    }

    pub fn from_poly(p: Poly) -> Self {
        match p.as_constant() {
            Some(c) => Scalar::Num(c),
            None => Scalar::Sym(p),
        }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Num(crate::algebra::rat(num, den))
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Scalar::Sym(_))
    }

    pub fn as_num(&self) -> Option<&Rational> {
        match self {
            Scalar::Num(r) => Some(r),
            Scalar::Sym(_) => None,
        }
    }

    pub fn to_poly(&self) -> Poly {
        match self {
            Scalar::Num(r) => Poly::constant(r.clone()),
            Scalar::Sym(p) => p.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Num(r) if r.is_zero())
    }

    /// Value at a specific `n`.
    pub fn eval(&self, n: &BigInt) -> Rational {
        match self {
            Scalar::Num(r) => r.clone(),
            Scalar::Sym(p) => p.eval(&int(n.clone())),
        }
    }

    /// Substitute a specific `n`, yielding a numeric scalar.
    pub fn at(&self, n: &BigInt) -> Scalar {
        Scalar::Num(self.eval(n))
    }

    /// Integral at every admissible `n` (exact for symbolic values).
    pub fn is_integral(&self) -> bool {
        match self {
            Scalar::Num(r) => is_integer(r),
            Scalar::Sym(p) => p.is_integer_valued(),
        }
    }

    /// Signs taken over the domain `n >= DOMAIN_START`.
    pub fn signs(&self) -> Result<SignSet> {
        match self {
            Scalar::Num(r) => Ok(SignSet::of(r)),
            Scalar::Sym(p) => p
                .signs_from(DOMAIN_START, SIGN_EVAL_LIMIT)
                .ok_or_else(|| Error::UndecidedSign(self.to_string())),
        }
    }

    pub fn is_positive(&self) -> Result<bool> {
        Ok(self.signs()?.always_positive())
    }

    pub fn is_nonnegative(&self) -> Result<bool> {
        Ok(self.signs()?.never_negative())
    }

    /// Coefficient of the highest power (the value itself when numeric).
    pub fn leading(&self) -> Rational {
        match self {
            Scalar::Num(r) => r.clone(),
            Scalar::Sym(p) => p.leading().cloned().unwrap_or_else(Rational::zero),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Scalar::Num(_) => 0,
            Scalar::Sym(p) => p.degree().unwrap_or(0),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Num(r) => Scalar::Num(num_traits::pow(r.clone(), exp as usize)),
            Scalar::Sym(p) => Scalar::from_poly(p.pow(exp)),
        }
    }

    /// Exact division; `None` when the divisor is zero or, for a symbolic
    /// divisor, when it does not divide the dividend as a polynomial.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        match rhs {
            Scalar::Num(d) if d.is_zero() => None,
            Scalar::Num(d) => Some(match self {
                Scalar::Num(a) => Scalar::Num(a / d),
                Scalar::Sym(p) => Scalar::from_poly(p.scale(&(Rational::one() / d))),
            }),
            Scalar::Sym(d) => self.to_poly().div_exact(d).map(Scalar::from_poly),
        }
    }

    pub fn div_exact(&self, rhs: &Scalar) -> Result<Scalar> {
        self.checked_div(rhs).ok_or_else(|| Error::InexactDivision {
            num: self.to_string(),
            den: rhs.to_string(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        self * &Scalar::Num(c.clone())
    }

    /// Integer value, if this is a numeric integer that fits in `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        match self {
            Scalar::Num(r) if is_integer(r) && !r.is_negative() => r.numer().to_u64(),
            _ => None,
        }
    }

    /// Require an integer value that is `>= 0` everywhere on the domain.
    pub fn require_count(&self, what: &'static str) -> Result<()> {
        if !self.is_integral() {
            return Err(Error::NotIntegral {
                what,
                value: self.to_string(),
            });
        }
        if !self.is_nonnegative()? {
            return Err(Error::NegativeCount {
                what,
                value: self.to_string(),
            });
        }
        Ok(())
    }

    /// Require an integer value that is `> 0` everywhere on the domain.
    pub fn require_positive_integer(&self, what: &'static str) -> Result<()> {
        if !self.is_integral() {
            return Err(Error::NotIntegral {
                what,
                value: self.to_string(),
            });
        }
        if !self.is_positive()? {
            return Err(Error::NotPositive {
                what,
                value: self.to_string(),
            });
        }
        Ok(())
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::Num(int(v))
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::Num(int(v))
    }
}

impl From<Rational> for Scalar {
    fn from(v: Rational) -> Self {
        Scalar::Num(v)
    }
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        Scalar::from_poly(p)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Num(r) => f.write_str(&format_rational(r)),
            Scalar::Sym(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

macro_rules! scalar_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Num(a), Scalar::Num(b)) => Scalar::Num(a.$method(b)),
                    _ => Scalar::from_poly(self.to_poly().$method(rhs.to_poly())),
                }
            }
        }
        impl $imp<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $imp<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Num(r) => Scalar::Num(-r),
            Scalar::Sym(p) => Scalar::Sym(-p),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotion_and_demotion() {
        let n = Scalar::n();
        let zero = &n - &n;
        assert_eq!(zero, Scalar::zero());
        assert_eq!(&(&n + &Scalar::from(3)) - &n, Scalar::from(3));
        assert!(!zero.is_symbolic());
    }

    #[test]
    fn division() {
        let n = Scalar::n();
        assert_eq!(n.pow(3).checked_div(&n), Some(n.pow(2)));
        assert_eq!(Scalar::from(8).checked_div(&Scalar::from(3)), Some(Scalar::ratio(8, 3)));
        assert_eq!(n.checked_div(&Scalar::zero()), None);
        assert_eq!(Scalar::from(1).checked_div(&n), None);
    }

    #[test]
    fn domain_signs() {
        let n = Scalar::n();
        let k = &(&Scalar::from(2) * &n.pow(3)) - &Scalar::from(2);
        assert!(k.is_positive().unwrap());
        assert!(k.require_count("k").is_ok());
        assert!((-&k).require_count("k").is_err());
        assert!(Scalar::ratio(1, 2).require_count("k").is_err());
    }

    #[test]
    fn numeric_u64() {
        assert_eq!(Scalar::from(57).to_u64(), Some(57));
        assert_eq!(Scalar::from(-1).to_u64(), None);
        assert_eq!(Scalar::n().to_u64(), None);
    }
}
