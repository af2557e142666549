use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Laurent polynomial in `t` with integer coefficients.
///
/// Stored as a sparse map from exponent to nonzero coefficient, which makes
/// the representation canonical.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn new(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }

    /// Dense constructor: `coeffs[i]` multiplies `t^(lowest + i)`.
    pub fn from_coeffs(lowest: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::new(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (lowest + i as i64, BigInt::from(c))),
        )
    }

    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        LaurentPoly::new([(exp, c)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Difference between the highest and lowest exponent.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn trailing(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `t -> t^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        LaurentPoly::new(self.terms.iter().map(|(&e, c)| (e * k, c.clone())))
    }

    /// `t -> t^2`.
    pub fn substitute_square(&self) -> Self {
        self.substitute_power(2)
    }

    /// `t -> t^-1`.
    pub fn mirror(&self) -> Self {
        self.substitute_power(-1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.mirror()
    }

    /// Symmetric under `t -> t^-1` with top coefficient `±1`.
    pub fn is_monic_symmetric(&self) -> Result<bool> {
        let top = self.leading().ok_or(Error::UndefinedForZero)?;
        Ok(self.is_symmetric() && top.abs().is_one())
    }

    /// Exact quotient by `divisor`, or `None` if it does not divide.
    ///
    /// Long division from the top exponent; every step must divide the
    /// leading coefficient exactly in the integers.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let d_top = divisor.max_exp()?;
        let d_low = divisor.min_exp()?;
        let d_lead = divisor.leading()?.clone();
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        let low_bound = self.min_exp().unwrap_or(0) - d_low;
        while let Some((&e, c)) = rem.iter().next_back() {
            let q_exp = e - d_top;
            if q_exp < low_bound {
                return None;
            }
            let (q, r) = c.div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            for (de, dc) in &divisor.terms {
                let slot = rem.entry(q_exp + de).or_insert_with(BigInt::zero);
                *slot -= &q * dc;
                if slot.is_zero() {
                    rem.remove(&(q_exp + de));
                }
            }
            quot.insert(q_exp, q);
        }
        Some(LaurentPoly { terms: quot })
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `t^2 - 1 + t^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i == 0, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(&e, c)| (e, c.clone())),
        )
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *out.entry(ea + eb).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: out }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($imp:ident :: $method:ident),*) => {$(
        impl $imp<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$method(&rhs) }
        }
        impl $imp<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$method(rhs) }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> LaurentPoly {
        LaurentPoly::from_coeffs(-1, &[1, -1, 1])
    }

    #[test]
    fn square_substitution_doubles_exponents() {
        let sq = trefoil().substitute_square();
        assert_eq!(sq, LaurentPoly::new([(2, 1.into()), (0, (-1).into()), (-2, 1.into())]));
        assert_eq!(sq.to_string(), "t^2 - 1 + t^-2");
    }

    #[test]
    fn multiplicative_identity() {
        assert_eq!(&trefoil() * &LaurentPoly::one(), trefoil());
    }

    #[test]
    fn product_differs_from_factors() {
        let a = trefoil();
        let b = LaurentPoly::from_coeffs(-3, &[1, -1, 1, -1, 1, -1, 1]);
        let p = &a * &b;
        // Hand expansion: t^4 - 2t^3 + 3t^2 - 3t + 3 - 3t^-1 + 3t^-2 - 2t^-3 + t^-4.
        assert_eq!(p, LaurentPoly::from_coeffs(-4, &[1, -2, 3, -3, 3, -3, 3, -2, 1]));
        assert_ne!(p, a);
        assert_ne!(p, b);
    }

    #[test]
    fn monic_symmetric() {
        assert!(trefoil().is_monic_symmetric().unwrap());
        assert!(!LaurentPoly::from_coeffs(-1, &[2, -3, 2]).is_monic_symmetric().unwrap());
        assert!(trefoil().substitute_square().is_monic_symmetric().unwrap());
        assert!(!LaurentPoly::from_coeffs(0, &[1, 1]).is_monic_symmetric().unwrap());
        assert!(matches!(
            LaurentPoly::zero().is_monic_symmetric(),
            Err(Error::UndefinedForZero)
        ));
    }

    #[test]
    fn exact_division() {
        // (t^6 - 1)(t - 1) / ((t^2 - 1)(t^3 - 1)) = t^2 - t + 1
        let num = &LaurentPoly::from_coeffs(0, &[-1, 0, 0, 0, 0, 0, 1])
            * &LaurentPoly::from_coeffs(0, &[-1, 1]);
        let den = &LaurentPoly::from_coeffs(0, &[-1, 0, 1])
            * &LaurentPoly::from_coeffs(0, &[-1, 0, 0, 1]);
        assert_eq!(num.div_exact(&den), Some(LaurentPoly::from_coeffs(0, &[1, -1, 1])));
        assert_eq!(LaurentPoly::from_coeffs(0, &[1, 0, 1]).div_exact(&LaurentPoly::from_coeffs(0, &[1, 1])), None);
        assert_eq!(LaurentPoly::from_coeffs(0, &[3]).div_exact(&LaurentPoly::from_coeffs(0, &[2])), None);
    }

    #[test]
    fn cancellation_is_zero() {
        let a = trefoil();
        assert!((&a - &a).is_zero());
        assert_eq!(a.eval_at_one(), BigInt::one());
    }
}
