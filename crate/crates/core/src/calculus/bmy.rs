use std::fmt;

use super::record::ManifoldRecord;
use super::scalar::Scalar;
use crate::algebra::{format_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Below,
    On,
    Above,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Below => "below",
            Side::On => "on",
            Side::Above => "above",
        })
    }
}

/// `c1^2 / chi_h`: exact for numeric records, the limit `n -> oo` for symbolic ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ratio {
    Exact(Rational),
    Limit(Rational),
}

impl Ratio {
    pub fn value(&self) -> &Rational {
        match self {
            Ratio::Exact(r) | Ratio::Limit(r) => r,
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratio::Exact(r) => f.write_str(&format_rational(r)),
            Ratio::Limit(r) => write!(f, "-> {} as n -> oo", format_rational(r)),
        }
    }
}

/// Position relative to the line `c1^2 = 9 chi_h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmyReport {
    pub ratio: Ratio,
    /// `9 chi_h - c1^2`.
    pub gap: Scalar,
    /// For symbolic records: the side for all large `n`.
    pub side: Side,
}

pub fn bmy_report(m: &ManifoldRecord) -> Result<BmyReport> {
    let chi = m.chi_h();
    let c1sq = m.c1sq();
    if chi.is_zero() {
        return Err(Error::ZeroChiH);
    }
    let gap = &chi.scale(&crate::algebra::int(9)) - &c1sq;
    let ratio = match (&c1sq, &chi) {
        (Scalar::Num(a), Scalar::Num(b)) => Ratio::Exact(a / b),
        _ if c1sq.degree() < chi.degree() => Ratio::Limit(Rational::from_integer(0.into())),
        _ if c1sq.degree() > chi.degree() => {
            return Err(Error::UndecidedSign(format!("unbounded ratio ({c1sq})/({chi})")))
        }
        _ => Ratio::Limit(c1sq.leading() / chi.leading()),
    };
    let lead = gap.leading();
    let side = if lead > Rational::from_integer(0.into()) {
        Side::Below
    } else if lead < Rational::from_integer(0.into()) {
        Side::Above
    } else {
        Side::On
    };
    Ok(BmyReport { ratio, gap, side })
}
