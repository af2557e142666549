//! Surgery operations on characteristic numbers.
//!
//! Every operation is a pure function of its inputs and works identically on
//! numeric and symbolic scalars.

use super::record::{BranchData, Connectivity, ManifoldRecord, MarkedSurface};
use super::scalar::Scalar;
use crate::algebra::int;
use crate::error::{Error, Result};

pub fn mk_manifold(e: Scalar, sigma: Scalar) -> ManifoldRecord {
    ManifoldRecord::new(e, sigma)
}

/// Blow up `k` points: `e + k`, `sigma - k`.
pub fn blow_up(m: &ManifoldRecord, k: &Scalar) -> Result<ManifoldRecord> {
    k.require_count("blow-up count")?;
    Ok(m
        .with_numbers(m.e() + k, m.sigma() - k)
        .logged(format!("blow_up(k = {k})")))
}

/// Blow up `k` points that all lie on the marked surface `surface`.
pub fn blow_up_on_surface(m: &ManifoldRecord, k: &Scalar, surface: &str) -> Result<ManifoldRecord> {
    let updated = surface_blowup(m.surface(surface)?, k)?;
    let mut out = blow_up(m, k)?;
    out.surfaces.insert(updated.name.clone(), updated);
    if let Some(last) = out.log.last_mut() {
        last.push_str(&format!(" on {surface}"));
    }
    Ok(out)
}

/// Proper transform after blowing up `points` points on the surface.
pub fn surface_blowup(s: &MarkedSurface, points: &Scalar) -> Result<MarkedSurface> {
    points.require_count("blown-up point count")?;
    Ok(MarkedSurface {
        self_int: &s.self_int - points,
        ..s.clone()
    })
}

fn cover_quotient(degree: &Scalar, index: &Scalar) -> Result<Scalar> {
    degree.require_positive_integer("cover degree")?;
    index.require_positive_integer("branching index")?;
    let q = degree
        .checked_div(index)
        .filter(Scalar::is_integral)
        .ok_or_else(|| {
            Error::InconsistentBranchData(format!("index {index} does not divide degree {degree}"))
        })?;
    Ok(q)
}

/// Euler characteristic of a degree-`d` cover of a curve branched with
/// index `m` over `b` points: `d (e - b) + (d/m) b`.
pub fn riemann_hurwitz(e_base: &Scalar, branch_points: &Scalar, degree: &Scalar, index: &Scalar) -> Result<Scalar> {
    let q = cover_quotient(degree, index)?;
    Ok(degree * &(e_base - branch_points) + &q * branch_points)
}

/// Branched cover of a surface along a divisor with disjoint components.
///
/// The Euler characteristic counts sheets over the divisor complement and
/// over the divisor separately; `c1^2` is `d (K + lambda D)^2` with
/// `lambda = 1 - 1/m`. The signature is recovered from `(e, c1^2)`.
pub fn branched_cover(m: &ManifoldRecord, b: &BranchData) -> Result<ManifoldRecord> {
    let d = &b.degree;
    let q = cover_quotient(d, &b.index)?;
    let e = d * &(m.e() - &b.e_branch) + &q * &b.e_branch;

    // d * lambda = d - d/m keeps every term polynomial.
    let d_lambda = d - &q;
    let k_sq = m.c1sq();
    let cross = (&d_lambda * &b.k_dot_d).scale(&int(2));
    let square = (&d_lambda * &d_lambda * &b.d_sq)
        .checked_div(d)
        .ok_or_else(|| Error::InconsistentBranchData(format!("D^2 term not divisible by degree {d}")))?;
    let c1sq = &(d * &k_sq) + &cross + square;

    let sigma = (&c1sq - &e.scale(&int(2))).scale(&crate::algebra::rat(1, 3));
    if !sigma.is_integral() {
        return Err(Error::InconsistentBranchData(format!("signature {sigma} is not integral")));
    }
    let chi = (&sigma + &e).scale(&crate::algebra::rat(1, 4));
    if !chi.is_integral() {
        return Err(Error::InconsistentBranchData(format!("chi_h {chi} is not integral")));
    }

    let mut out = ManifoldRecord::new(e, sigma);
    out.almost_complex = true;
    out.symplectic = m.symplectic;
    out.log = m.log.clone();
    Ok(out.logged(format!(
        "branched_cover(degree = {}, index = {}, e_branch = {}, D^2 = {}, K.D = {})",
        b.degree, b.index, b.e_branch, b.d_sq, b.k_dot_d
    )))
}

/// Euler characteristic of a union of components meeting transversally in
/// `intersections` points, each shared by exactly two components.
///
/// Components are given as `(multiplicity, euler)` pairs so symbolic counts
/// of identical components stay compact.
pub fn euler_of_union(components: &[(Scalar, Scalar)], intersections: &Scalar) -> Scalar {
    components
        .iter()
        .fold(Scalar::zero(), |acc, (count, e)| &acc + &(count * e))
        - intersections
}

/// `g = 1 - e/2` for a closed connected orientable surface.
pub fn genus_from_euler(e: &Scalar) -> Result<Scalar> {
    let half = e.scale(&crate::algebra::rat(1, 2));
    let genus = &Scalar::from(1) - &half;
    if !half.is_integral() || !genus.is_nonnegative()? {
        return Err(Error::NotASurface(e.to_string()));
    }
    Ok(genus)
}

/// Smooth the `k` positive transverse intersections of two surfaces.
pub fn resolve_surfaces(s1: &MarkedSurface, s2: &MarkedSurface, k: &Scalar) -> Result<MarkedSurface> {
    if !k.is_integral() || !k.is_positive()? {
        return Err(Error::NoIntersection(k.to_string()));
    }
    let genus = &(&s1.genus + &s2.genus) + &(k - &Scalar::from(1));
    let self_int = &(&s1.self_int + &s2.self_int) + &k.scale(&int(2));
    MarkedSurface::new(format!("{}+{}", s1.name, s2.name), genus, self_int)
}

/// Symplectic sum along surfaces of equal genus and opposite square.
///
/// `e = e_X + e_Y + 4g - 4`, `sigma = sigma_X + sigma_Y`. The result is
/// declared simply connected only if one surface surjects on pi1 of its
/// side and the other has simply connected complement.
pub fn fiber_sum(
    x: &ManifoldRecord,
    fx: &MarkedSurface,
    y: &ManifoldRecord,
    fy: &MarkedSurface,
) -> Result<ManifoldRecord> {
    if fx.genus != fy.genus {
        return Err(Error::SurfaceMismatch {
            what: "genus",
            left: fx.genus.to_string(),
            right: fy.genus.to_string(),
        });
    }
    if !(&fx.self_int + &fy.self_int).is_zero() {
        return Err(Error::SurfaceMismatch {
            what: "self-intersections (must cancel)",
            left: fx.self_int.to_string(),
            right: fy.self_int.to_string(),
        });
    }
    let g = &fx.genus;
    let e = &(x.e() + y.e()) + &(g.scale(&int(4)) - Scalar::from(4));
    let sigma = x.sigma() + y.sigma();

    let mut out = ManifoldRecord::new(e, sigma);
    out.simply_connected = sum_connectivity(fx, fy);
    out.almost_complex = x.almost_complex && y.almost_complex;
    out.symplectic = x.symplectic && y.symplectic;
    out.surgery_tori = x.surgery_tori + y.surgery_tori;
    out.log = x
        .log
        .iter()
        .map(|l| format!("[X] {l}"))
        .chain(y.log.iter().map(|l| format!("[Y] {l}")))
        .collect();

    for (side, rec, used) in [("X", x, fx), ("Y", y, fy)] {
        for (name, s) in &rec.surfaces {
            if *name == used.name {
                continue;
            }
            let key = if out.surfaces.contains_key(name) {
                format!("{side}.{name}")
            } else {
                name.clone()
            };
            out.surfaces.insert(key.clone(), s.clone().renamed(key.clone()));
            if rec.knot_target.as_deref() == Some(name.as_str()) {
                out.knot_target = Some(key);
            }
        }
    }

    out.sw = match (&x.sw, &y.sw) {
        (Some(l), None) | (None, Some(l)) => Some(l.clone().noted("carried across symplectic sum")),
        _ => None,
    };

    if out.almost_complex {
        let chi = out.chi_h();
        if !chi.is_integral() {
            return Err(Error::NonIntegralChiH(chi.to_string()));
        }
    }
    Ok(out.logged(format!(
        "fiber_sum along {} (genus {}, self-intersection {}) and {} (self-intersection {})",
        fx.name, g, fx.self_int, fy.name, fy.self_int
    )))
}

fn sum_connectivity(fx: &MarkedSurface, fy: &MarkedSurface) -> Connectivity {
    let chain = |a: &MarkedSurface, b: &MarkedSurface| match (&a.pi1_surjective, &b.complement_simply_connected) {
        (Some(s), Some(c)) => Some(format!("{s}; {c}; van Kampen on the glued union")),
        _ => None,
    };
    chain(fx, fy)
        .or_else(|| chain(fy, fx))
        .map_or(Connectivity::Unknown, Connectivity::DeclaredTrue)
}
