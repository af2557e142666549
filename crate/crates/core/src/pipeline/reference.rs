//! Closed-form reference values the constructions are checked against.
//!
//! These are written down directly as coefficient lists and never derived
//! from the surgery operations.

use crate::algebra::{rat, Poly, Rational};

fn p(coeffs: &[i64]) -> Poly {
    Poly::from_ints(coeffs)
}

fn pr(coeffs: &[(i64, i64)]) -> Poly {
    Poly::new(coeffs.iter().map(|&(a, b)| rat(a, b)).collect::<Vec<Rational>>())
}

pub mod xn {
    use super::*;

    pub fn c2() -> Poly {
        p(&[0, 0, 0, 0, 0, 0, 0, 1])
    }
    pub fn c1sq() -> Poly {
        p(&[0, 0, 0, 0, 0, -4, 0, 3])
    }
    pub fn chi_h() -> Poly {
        pr(&[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (-1, 3), (0, 1), (1, 3)])
    }
    pub fn sigma() -> Poly {
        pr(&[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (-4, 3), (0, 1), (1, 3)])
    }
    pub fn e_regular_fiber() -> Poly {
        p(&[0, 0, 0, 0, 3, -3])
    }
    pub fn g_regular_fiber() -> Poly {
        pr(&[(1, 1), (0, 1), (0, 1), (0, 1), (-3, 2), (3, 2)])
    }
    pub fn e_singular_fiber() -> Poly {
        p(&[0, 0, 0, 0, 3, -2])
    }
    pub fn e_exceptional_cover() -> Poly {
        p(&[0, 0, 4, -2])
    }
}

pub mod surface_f {
    use super::*;

    pub fn genus() -> Poly {
        p(&[1, 0, 0, 1, -3, 3])
    }
    pub fn self_int() -> Poly {
        p(&[0, 0, 0, 2])
    }
    pub fn intersections() -> Poly {
        p(&[0, 0, 0, 1])
    }
}

pub mod nn {
    use super::*;

    pub fn c2() -> Poly {
        p(&[22, 0, 0, 2])
    }
    pub fn c1sq() -> Poly {
        p(&[2, 0, 0, -2])
    }
    pub fn chi_h() -> Poly {
        p(&[2])
    }
    pub fn sigma() -> Poly {
        p(&[-14, 0, 0, -2])
    }
    pub fn surface_self_int() -> Poly {
        p(&[0, 0, 0, -2])
    }
}

pub mod kn {
    use super::*;

    pub fn c2() -> Poly {
        p(&[22, 0, 0, 6, -12, 12, 0, 1])
    }
    pub fn c1sq() -> Poly {
        p(&[2, 0, 0, 6, -24, 20, 0, 3])
    }
    pub fn chi_h() -> Poly {
        pr(&[(2, 1), (0, 1), (0, 1), (1, 1), (-3, 1), (8, 3), (0, 1), (1, 3)])
    }
    pub fn sigma() -> Poly {
        pr(&[(-14, 1), (0, 1), (0, 1), (-2, 1), (0, 1), (-4, 3), (0, 1), (1, 3)])
    }
}

/// Tabulated invariants of small members of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: u64,
    pub chi_h: i64,
    pub c1sq: i64,
    pub c2: i64,
    pub sigma: i64,
}

/// Printed table. The `n = 3` signature entry (227) disagrees with the other
/// three entries of its own row, which force `sigma = (c1^2 - 2 c2)/3 = 337`.
pub const TABLE: [TableRow; 2] = [
    TableRow {
        n: 3,
        chi_h: 1163,
        c1sq: 9641,
        c2: 4315,
        sigma: 227,
    },
    TableRow {
        n: 4,
        chi_h: 7490,
        c1sq: 63874,
        c2: 26006,
        sigma: 3954,
    },
];

/// Limit of `c1^2 / chi_h` along the family.
pub fn ratio_limit() -> Rational {
    rat(9, 1)
}
