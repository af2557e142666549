//! Knot catalog with Alexander polynomials, and the Seiberg-Witten ledger
//! transformation under knot surgery.

mod sw;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};

pub use sw::{
    distinguish_family, fibered_surgery_of_genus, knot_surgery, DeferredFactor, FamilyEntry,
    FamilyReport, SwLedger,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnotKind {
    Unknot,
    Torus { p: u64, q: u64 },
    /// Twist knot with `m` full twists: `Delta = m t - (2m + 1) + m t^-1`.
    Twist { m: u64 },
}

impl fmt::Display for KnotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotKind::Unknot => f.write_str("unknot"),
            KnotKind::Torus { p, q } => write!(f, "T({p},{q})"),
            KnotKind::Twist { m } => write!(f, "twist({m})"),
        }
    }
}

/// A knot in `S^3` with its genus and symmetrized Alexander polynomial.
///
/// The Alexander polynomial is normalized to satisfy `Delta(t) = Delta(t^-1)`
/// with a positive top coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Knot {
    pub kind: KnotKind,
    pub genus: u64,
    pub alexander: LaurentPoly,
    pub fibered: bool,
}

impl Knot {
    pub fn unknot() -> Self {
        Knot {
            kind: KnotKind::Unknot,
            genus: 0,
            alexander: LaurentPoly::one(),
            fibered: true,
        }
    }

    /// Whether the Alexander polynomial is symmetric with top coefficient `±1`.
    pub fn is_monic(&self) -> bool {
        self.alexander.is_monic_symmetric().unwrap_or(false)
    }
}

impl fmt::Display for Knot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (genus {}, Delta = {})", self.kind, self.genus, self.alexander)
    }
}

fn t_pow_minus_one(k: u64) -> LaurentPoly {
    LaurentPoly::new([(k as i64, BigInt::from(1)), (0, BigInt::from(-1))])
}

/// Symmetric form: shift so the exponents are centred on zero, and flip the
/// overall sign if the top coefficient is negative.
fn normalize_alexander(p: LaurentPoly) -> LaurentPoly {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return p;
    };
    debug_assert!((lo + hi) % 2 == 0, "Alexander polynomial has even span");
    let centred = p.shift(-(lo + hi) / 2);
    if centred.leading().is_some_and(|c| c < &BigInt::from(0)) {
        -&centred
    } else {
        centred
    }
}

/// The `(p, q)` torus knot: fibered of genus `(p-1)(q-1)/2`, with
/// `Delta = (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))` symmetrized.
pub fn torus_knot(p: u64, q: u64) -> Result<Knot> {
    if p < 2 || q < 2 {
        return Err(Error::TorusParameters { p, q });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotAKnot { p, q });
    }
    let num = &t_pow_minus_one(p * q) * &t_pow_minus_one(1);
    let den = &t_pow_minus_one(p) * &t_pow_minus_one(q);
    let quotient = num
        .div_exact(&den)
        .expect("cyclotomic quotient is a polynomial for coprime p, q");
    Ok(Knot {
        kind: KnotKind::Torus { p, q },
        genus: (p - 1) * (q - 1) / 2,
        alexander: normalize_alexander(quotient),
        fibered: true,
    })
}

/// Twist knot with `m` full twists (genus one, not fibered for `m >= 2`).
pub fn twist_knot(m: u64) -> Result<Knot> {
    if m == 0 {
        return Err(Error::TwistParameter(m));
    }
    let mm = BigInt::from(m);
    let alexander = LaurentPoly::new([
        (1, mm.clone()),
        (0, -(BigInt::from(2) * &mm + BigInt::from(1))),
        (-1, mm),
    ]);
    Ok(Knot {
        kind: KnotKind::Twist { m },
        genus: 1,
        // m = 1 is the figure-eight knot, which is fibered.
        fibered: m == 1,
        alexander,
    })
}

/// A fibered knot of genus `g`: the `(2, 2g + 1)` torus knot, or the unknot
/// for `g = 0`.
pub fn find_fibered_knot_of_genus(g: u64) -> Knot {
    if g == 0 {
        return Knot::unknot();
    }
    torus_knot(2, 2 * g + 1).expect("2 and 2g+1 are coprime")
}

/// Twist knots `m = 2 ..= count + 1`: not fibered, with pairwise distinct
/// non-monic Alexander polynomials.
pub fn nonfibered_nonmonic_family(count: usize) -> Vec<Knot> {
    (2..count as u64 + 2)
        .map(|m| twist_knot(m).expect("m >= 2"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil() {
        let k = torus_knot(2, 3).unwrap();
        assert_eq!(k.genus, 1);
        assert_eq!(k.alexander, LaurentPoly::from_coeffs(-1, &[1, -1, 1]));
        assert!(k.fibered && k.is_monic());
    }

    #[test]
    fn torus_genera() {
        assert_eq!(torus_knot(2, 7).unwrap().genus, 3);
        let k = torus_knot(2, 115).unwrap();
        assert_eq!(k.genus, 57);
        assert_eq!(k.alexander.span(), Some(114));
        // T(3,4): genus 3, Delta = t^3 - t^2 + 1 - t^-2 + t^-3.
        let k = torus_knot(3, 4).unwrap();
        assert_eq!(k.genus, 3);
        assert_eq!(k.alexander, LaurentPoly::from_coeffs(-3, &[1, -1, 0, 1, 0, -1, 1]));
    }

    #[test]
    fn torus_errors() {
        assert_eq!(torus_knot(2, 4), Err(Error::NotAKnot { p: 2, q: 4 }));
        assert_eq!(torus_knot(1, 4), Err(Error::TorusParameters { p: 1, q: 4 }));
    }

    #[test]
    fn fibered_of_genus() {
        assert_eq!(find_fibered_knot_of_genus(1).kind, KnotKind::Torus { p: 2, q: 3 });
        assert_eq!(find_fibered_knot_of_genus(57).kind, KnotKind::Torus { p: 2, q: 115 });
        let u = find_fibered_knot_of_genus(0);
        assert_eq!(u.kind, KnotKind::Unknot);
        assert!(u.alexander.is_one());
    }

    #[test]
    fn twist_family() {
        let fam = nonfibered_nonmonic_family(2);
        assert_eq!(fam[0].alexander, LaurentPoly::from_coeffs(-1, &[2, -5, 2]));
        assert_eq!(fam[0].alexander.eval_at_one(), BigInt::from(-1));
        assert!(fam[0].alexander.is_symmetric());
        assert!(!fam[0].is_monic() && !fam[0].fibered);
        assert_eq!(fam[1].alexander, LaurentPoly::from_coeffs(-1, &[3, -7, 3]));
        assert_ne!(fam[0].alexander, fam[1].alexander);
        assert_eq!(nonfibered_nonmonic_family(1).len(), 1);
    }

    #[test]
    fn catalog_invariants() {
        let mut knots = vec![Knot::unknot()];
        for q in [3u64, 5, 7, 9, 11, 13, 15] {
            knots.push(torus_knot(2, q).unwrap());
        }
        knots.push(torus_knot(3, 5).unwrap());
        knots.push(torus_knot(5, 7).unwrap());
        knots.extend(nonfibered_nonmonic_family(10));
        for k in &knots {
            let at_one = k.alexander.eval_at_one();
            assert!(at_one == BigInt::from(1) || at_one == BigInt::from(-1), "{k}");
            assert!(k.alexander.is_symmetric(), "{k}");
            assert!(!k.fibered || k.is_monic(), "{k}");
            if let KnotKind::Torus { .. } = k.kind {
                assert_eq!(k.alexander.span(), Some(2 * k.genus as i64));
                assert_eq!(k.alexander.substitute_square().span(), Some(4 * k.genus as i64));
            }
        }
    }
}
