use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, is_integer, Rational};

/// Univariate polynomial in `n` with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `n^i`. Trailing zeros are never stored,
/// so the zero polynomial is the empty vector and equality is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The polynomial `n`.
    pub fn var() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Poly::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, n: impl Into<BigInt>) -> Rational {
        self.eval(&int(n))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division over the rationals. `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Poly) -> Option<(Poly, Poly)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Some((Poly::zero(), Poly::zero()));
        };
        if sd < dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Poly::new(quot), Poly::new(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Coefficients in the binomial basis: `p(n) = sum_k c_k * C(n, k)`.
    ///
    /// `c_k` is the k-th forward difference of `p` at 0.
    pub fn newton_coefficients(&self) -> Vec<Rational> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let mut diffs: Vec<Rational> = (0..=deg as i64).map(|k| self.eval_int(k)).collect();
        let mut out = Vec::with_capacity(deg + 1);
        for _ in 0..=deg {
            out.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        out
    }

    /// True iff `p(k)` is an integer for every integer `k`.
    ///
    /// Exact: `p` is integer-valued iff all of its binomial-basis
    /// coefficients are integers.
    pub fn is_integer_valued(&self) -> bool {
        self.newton_coefficients().iter().all(is_integer)
    }

    /// An integer strictly greater than the modulus of every complex root
    /// (Cauchy's bound). `None` for constants.
    pub fn root_bound(&self) -> Option<BigInt> {
        let deg = self.degree().filter(|&d| d > 0)?;
        let lead = self.coeffs[deg].abs();
        let max = self.coeffs[..deg]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        Some((max + Rational::one()).floor().to_integer() + 1)
    }

    /// Sign of the polynomial evaluated at every integer `n >= start`.
    ///
    /// Beyond the root bound the sign is that of the leading coefficient, so
    /// only the finitely many integers below it are evaluated. Returns `None`
    /// if that window is wider than `max_evals`.
    pub fn signs_from(&self, start: i64, max_evals: u64) -> Option<SignSet> {
        let Some(bound) = self.root_bound() else {
            let c = self.as_constant().unwrap_or_else(Rational::zero);
            return Some(SignSet::of(&c));
        };
        let mut set = SignSet::of(self.leading().expect("nonconstant"));
        let start = BigInt::from(start);
        if bound > start {
            let width = &bound - &start;
            if width > BigInt::from(max_evals) {
                return None;
            }
            let mut k = start;
            while k < bound {
                set = set.union(SignSet::of(&self.eval_int(k.clone())));
                k += 1;
            }
        }
        Some(set)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

/// Which signs a quantity takes over some set of points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SignSet {
    pub negative: bool,
    pub zero: bool,
    pub positive: bool,
}

impl SignSet {
    pub fn of(r: &Rational) -> Self {
        SignSet {
            negative: r.is_negative(),
            zero: r.is_zero(),
            positive: r.is_positive(),
        }
    }

    pub fn union(self, other: SignSet) -> Self {
        SignSet {
            negative: self.negative || other.negative,
            zero: self.zero || other.zero,
            positive: self.positive || other.positive,
        }
    }

    pub fn always_positive(self) -> bool {
        self.positive && !self.negative && !self.zero
    }

    pub fn never_negative(self) -> bool {
        !self.negative
    }

    pub fn always_negative(self) -> bool {
        self.negative && !self.positive && !self.zero
    }
}

impl fmt::Display for Poly {
    /// Descending powers, e.g. `(1/3)n^7 - 3n^4 + n^3 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "n")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[Rational], var: &str) -> fmt::Result {
    let mut first = true;
    for (power, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        match (first, c.is_negative()) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if power == 0 {
            f.write_str(&format_rational(&mag))?;
            continue;
        }
        if !mag.is_one() {
            if is_integer(&mag) {
                write!(f, "{}", mag.numer())?;
            } else {
                write!(f, "({})", format_rational(&mag))?;
            }
        }
        f.write_str(var)?;
        if power > 1 {
            write!(f, "^{power}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($imp:ident :: $method:ident),*) => {$(
        impl $imp<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly { (&self).$method(&rhs) }
        }
        impl $imp<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly { (&self).$method(rhs) }
        }
        impl $imp<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);
