//! End-to-end constructions: the branched cover `X_n`, its resolved fiber
//! surface `F`, the knot-surgered rational-surface block `N_n`, and their
//! symplectic sum `K_n`. Each builder checks its output against the closed
//! forms in [`reference`].

pub mod reference;
mod verify;

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{int, Poly};
use crate::calculus::{
    blocks, blow_up, blow_up_on_surface, branched_cover, euler_of_union, fiber_sum,
    genus_from_euler, resolve_surfaces, riemann_hurwitz, BranchData, Connectivity, ManifoldRecord,
    MarkedSurface, Scalar,
};
use crate::error::{Error, Result};
use crate::knots::{
    distinguish_family, fibered_surgery_of_genus, nonfibered_nonmonic_family, torus_knot,
    FamilyReport, Knot,
};

pub use verify::{verify_paper, VerifyReport};

/// Name of the resolved fiber surface inside `X_n`.
pub const SURFACE_F: &str = "F";
/// Name of the section that becomes the gluing surface inside `N_n`.
pub const SURFACE_SECTION: &str = "section";

const PI1_SURJECTIVE: &str =
    "pi1(F) -> pi1(X_n) onto: the two regular fibers carry pi1(X_n) and resolution keeps a surjection";
const N_SIMPLY_CONNECTED: &str = "pi1(N_n minus F') = 1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Numeric(BigInt),
}

impl Mode {
    pub fn numeric(n: u64) -> Self {
        Mode::Numeric(BigInt::from(n))
    }

    /// The construction parameter, rejecting `n < 2`.
    pub fn n(&self) -> Result<Scalar> {
        match self {
            Mode::Symbolic => Ok(Scalar::n()),
            Mode::Numeric(n) if *n >= BigInt::from(2) => Ok(Scalar::from(n.clone())),
            Mode::Numeric(n) => Err(Error::ParameterOutOfRange(n.to_string())),
        }
    }

    /// A reference formula in this mode: the polynomial itself, or its value.
    pub fn expect(&self, p: &Poly) -> Scalar {
        match self {
            Mode::Symbolic => Scalar::from_poly(p.clone()),
            Mode::Numeric(n) => Scalar::Num(p.eval(&int(n.clone()))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Symbolic => f.write_str("symbolic"),
            Mode::Numeric(n) => write!(f, "n = {n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    /// A failure means the engine is wrong.
    Hard,
    /// A known inconsistency in tabulated reference data.
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckValue {
    Scalar(Scalar),
    Flag(bool),
}

impl fmt::Display for CheckValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckValue::Scalar(s) => write!(f, "{s}"),
            CheckValue::Flag(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: CheckValue,
    pub got: CheckValue,
    pub pass: bool,
    pub severity: Severity,
    pub note: Option<String>,
}

impl Check {
    pub fn equal(name: impl Into<String>, expected: Scalar, got: Scalar) -> Self {
        Check {
            name: name.into(),
            pass: expected == got,
            expected: CheckValue::Scalar(expected),
            got: CheckValue::Scalar(got),
            severity: Severity::Hard,
            note: None,
        }
    }

    pub fn flag(name: impl Into<String>, got: bool) -> Self {
        Check {
            name: name.into(),
            pass: got,
            expected: CheckValue::Flag(true),
            got: CheckValue::Flag(got),
            severity: Severity::Hard,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn as_warning(mut self) -> Self {
        self.severity = Severity::Warning;
        self
    }

    /// Counts against the run: a failed hard check.
    pub fn is_failure(&self) -> bool {
        !self.pass && self.severity == Severity::Hard
    }

    pub fn row(&self) -> CheckRow {
        CheckRow {
            name: self.name.clone(),
            expected: self.expected.to_string(),
            got: self.got.to_string(),
            pass: self.pass,
            note: self.note.clone(),
        }
    }
}

/// Flat, serializable form of a [`Check`].
#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
    pub note: Option<String>,
}

/// Euler characteristics of the fibers of `X_n -> T^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberData {
    pub e_regular: Scalar,
    pub g_regular: Scalar,
    pub e_singular: Scalar,
    /// Branched cover of one exceptional sphere.
    pub e_exceptional_cover: Scalar,
}

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub name: &'static str,
    pub mode: Mode,
    pub manifold: ManifoldRecord,
    pub fiber_data: Option<FiberData>,
    /// Intersection count of the two transverse regular fibers.
    pub intersections: Option<Scalar>,
    pub checks: Vec<Check>,
}

impl PipelineReport {
    pub fn all_pass(&self) -> bool {
        !self.checks.iter().any(Check::is_failure)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.is_failure())
    }
}

fn number_checks(
    prefix: &str,
    mode: &Mode,
    m: &ManifoldRecord,
    [c2, c1sq, chi, sigma]: [Poly; 4],
) -> Vec<Check> {
    vec![
        Check::equal(format!("{prefix} c2"), mode.expect(&c2), m.c2().clone()),
        Check::equal(format!("{prefix} c1^2"), mode.expect(&c1sq), m.c1sq()),
        Check::equal(format!("{prefix} chi_h"), mode.expect(&chi), m.chi_h()),
        Check::equal(format!("{prefix} sigma"), mode.expect(&sigma), m.sigma().clone()),
        Check::flag(format!("{prefix} chi_h integral"), m.chi_h().is_integral()),
    ]
}

/// `X_n`: blow up the `n^4` lattice points of `T^4`, then take the branched
/// cover over the four families of elliptic curves.
pub fn build_xn(mode: &Mode) -> Result<PipelineReport> {
    use reference::xn;
    let n = mode.n()?;
    let y = blow_up(&blocks::t4(), &n.pow(4))?;
    let branch = BranchData::hirzebruch(&n);
    let x = branched_cover(&y, &branch)?;

    let sheets_over_divisor = branch.degree.div_exact(&branch.index)?;
    let n2 = n.pow(2);
    // A regular fiber meets three of the four families, n^2 curves each.
    let e_regular = riemann_hurwitz(&Scalar::zero(), &n2.scale(&int(3)), &branch.degree, &branch.index)?;
    let g_regular = genus_from_euler(&e_regular)?;
    // Each exceptional sphere meets all four families once.
    let e_exceptional_cover = riemann_hurwitz(&Scalar::from(2), &Scalar::from(4), &branch.degree, &branch.index)?;
    // n^2 covered spheres and n^2 tori; each covered sphere meets the tori
    // over its one point on the vertical curve, i.e. in d/m points.
    let e_singular = euler_of_union(
        &[(n2.clone(), e_exceptional_cover.clone()), (n2.clone(), Scalar::zero())],
        &(&n2 * &sheets_over_divisor),
    );

    let mut checks = number_checks("X_n", mode, &x, [xn::c2(), xn::c1sq(), xn::chi_h(), xn::sigma()]);
    checks.extend([
        Check::equal("X_n regular fiber e", mode.expect(&xn::e_regular_fiber()), e_regular.clone()),
        Check::equal("X_n regular fiber genus", mode.expect(&xn::g_regular_fiber()), g_regular.clone()),
        Check::equal("X_n singular fiber e", mode.expect(&xn::e_singular_fiber()), e_singular.clone()),
        Check::equal(
            "X_n exceptional sphere cover e",
            mode.expect(&xn::e_exceptional_cover()),
            e_exceptional_cover.clone(),
        ),
    ]);

    Ok(PipelineReport {
        name: "X_n",
        mode: mode.clone(),
        manifold: x,
        fiber_data: Some(FiberData {
            e_regular,
            g_regular,
            e_singular,
            e_exceptional_cover,
        }),
        // A regular fiber of the second projection covers the first base
        // torus with degree d, hence meets a fiber of the first in d points.
        intersections: Some(branch.degree),
        checks,
    })
}

/// `X_n` carrying the surface `F` obtained by resolving the intersections of
/// two transverse regular fibers.
pub fn build_f(mode: &Mode) -> Result<PipelineReport> {
    use reference::surface_f;
    let mut report = build_xn(mode)?;
    let fibers = report.fiber_data.as_ref().expect("X_n has fiber data");
    let k = report.intersections.clone().expect("X_n has intersection count");
    let f1 = MarkedSurface::new("F1", fibers.g_regular.clone(), Scalar::zero())?;
    let f2 = MarkedSurface::new("F2", fibers.g_regular.clone(), Scalar::zero())?;
    let f = resolve_surfaces(&f1, &f2, &k)?
        .renamed(SURFACE_F)
        .with_pi1_surjective(PI1_SURJECTIVE);

    report.name = "F";
    report.checks.extend([
        Check::equal("F genus", mode.expect(&surface_f::genus()), f.genus.clone()),
        Check::equal("F self-intersection", mode.expect(&surface_f::self_int()), f.self_int.clone()),
        Check::equal("F1.F2 intersections", mode.expect(&surface_f::intersections()), k),
    ]);
    report.manifold = report.manifold.with_surface(f);
    Ok(report)
}

/// The genus that `N_n`'s gluing surface has to match.
fn genus_of_f(mode: &Mode) -> Result<Scalar> {
    let report = build_f(mode)?;
    Ok(report.manifold.surface(SURFACE_F)?.genus.clone())
}

/// `N_n`: blow up `2n^3 - 2` points on a section of the K3 surface, then do
/// fibered knot surgery with a knot of genus `g(F)` so the section becomes a
/// surface of genus `g(F)` and square `-2n^3`.
pub fn build_nn(mode: &Mode) -> Result<PipelineReport> {
    use reference::nn;
    let n = mode.n()?;
    let points = &n.pow(3).scale(&int(2)) - &Scalar::from(2);
    let blown = blow_up_on_surface(&blocks::e2(), &points, SURFACE_SECTION)?;
    let g = genus_of_f(mode)?;
    let mut m = fibered_surgery_of_genus(&blown, &g)?;
    m.simply_connected = Connectivity::DeclaredTrue(N_SIMPLY_CONNECTED.into());

    let section = m.surface(SURFACE_SECTION)?.clone();
    let mut checks = number_checks("N_n", mode, &m, [nn::c2(), nn::c1sq(), nn::chi_h(), nn::sigma()]);
    checks.extend([
        Check::equal("N_n F' genus = g(F)", g, section.genus.clone()),
        Check::equal("N_n F' self-intersection", mode.expect(&nn::surface_self_int()), section.self_int.clone()),
        Check::flag("N_n symplectic", m.symplectic),
    ]);
    Ok(PipelineReport {
        name: "N_n",
        mode: mode.clone(),
        manifold: m,
        fiber_data: None,
        intersections: None,
        checks,
    })
}

/// `K_n = X_n #_F N_n`.
pub fn build_kn(mode: &Mode) -> Result<PipelineReport> {
    use reference::kn;
    let xf = build_f(mode)?;
    let nn = build_nn(mode)?;
    let x = &xf.manifold;
    let f = x.surface(SURFACE_F)?;
    let y = &nn.manifold;
    let f_prime = y.surface(SURFACE_SECTION)?;
    let k = fiber_sum(x, f, y, f_prime)?;

    let mut checks = number_checks("K_n", mode, &k, [kn::c2(), kn::c1sq(), kn::chi_h(), kn::sigma()]);
    let eight_g_minus_one = (&f.genus - &Scalar::from(1)).scale(&int(8));
    checks.push(Check::equal(
        "K_n c1^2 additivity: c1^2(K) - c1^2(X) - c1^2(N) = 8(g - 1)",
        eight_g_minus_one,
        &(&k.c1sq() - &x.c1sq()) - &y.c1sq(),
    ));
    checks.push(Check::equal(
        "K_n signature additivity",
        x.sigma() + y.sigma(),
        k.sigma().clone(),
    ));
    checks.push(Check::flag("K_n declared simply connected", k.simply_connected.is_declared_true()));
    checks.push(Check::flag("K_n symplectic", k.symplectic));
    if let Mode::Numeric(n) = mode {
        checks.extend(table_checks(n, &k));
    }
    Ok(PipelineReport {
        name: "K_n",
        mode: mode.clone(),
        manifold: k,
        fiber_data: xf.fiber_data,
        intersections: xf.intersections,
        checks,
    })
}

/// Compare a numeric `K_n` with the tabulated row for that `n`, if any.
fn table_checks(n: &BigInt, k: &ManifoldRecord) -> Vec<Check> {
    let Some(row) = reference::TABLE.iter().find(|r| BigInt::from(r.n) == *n) else {
        return Vec::new();
    };
    let tag = format!("table K_{}", row.n);
    let mut out = vec![
        Check::equal(format!("{tag} chi_h"), row.chi_h.into(), k.chi_h()),
        Check::equal(format!("{tag} c1^2"), row.c1sq.into(), k.c1sq()),
        Check::equal(format!("{tag} c2"), row.c2.into(), k.c2().clone()),
    ];
    let forced = Scalar::from(row.c1sq - 2 * row.c2).scale(&crate::algebra::rat(1, 3));
    let sigma = Check::equal(format!("{tag} sigma"), row.sigma.into(), k.sigma().clone());
    if sigma.pass {
        out.push(sigma);
    } else if forced == *k.sigma() {
        out.push(sigma.as_warning().with_note(format!(
            "tabulated sigma = {} is inconsistent with the tabulated chi_h/c2/c1^2, which force sigma = (c1^2 - 2 c2)/3 = {}; reporting {}",
            row.sigma,
            forced,
            k.sigma()
        )));
    } else {
        out.push(sigma);
    }
    out
}

/// Knot surgeries on the remaining fiber torus of `K_n`: `count` torus knots
/// `T(2, 2k + 1)` and `count` non-fibered twist knots.
pub fn exotic_family(n: u64, count: usize) -> Result<FamilyReport> {
    let base = build_kn(&Mode::numeric(n))?;
    distinguish_family(&base.manifold, &exotic_knots(count)?)
}

pub fn exotic_knots(count: usize) -> Result<Vec<Knot>> {
    let mut knots = (1..=count as u64)
        .map(|k| torus_knot(2, 2 * k + 1))
        .collect::<Result<Vec<_>>>()?;
    knots.extend(nonfibered_nonmonic_family(count));
    Ok(knots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_all_pass(r: &PipelineReport) {
        for c in &r.checks {
            assert!(!c.is_failure(), "{}: expected {}, got {}", c.name, c.expected, c.got);
        }
    }

    #[test]
    fn xn_symbolic() {
        let r = build_xn(&Mode::Symbolic).unwrap();
        assert_all_pass(&r);
        assert_eq!(r.manifold.c2(), &Scalar::from_poly(reference::xn::c2()));
    }

    #[test]
    fn xn_numeric_values() {
        let r = build_xn(&Mode::numeric(3)).unwrap();
        assert_all_pass(&r);
        assert_eq!(r.manifold.e(), &Scalar::from(2187));
        assert_eq!(r.manifold.sigma(), &Scalar::from(405));
        assert_eq!(r.manifold.c1sq(), Scalar::from(5589));
        let r = build_xn(&Mode::numeric(2)).unwrap();
        assert_eq!(r.manifold.e(), &Scalar::from(128));
        assert_eq!(r.manifold.sigma(), &Scalar::zero());
        assert_eq!(r.manifold.c1sq(), Scalar::from(256));
    }

    #[test]
    fn n_below_two_rejected() {
        for n in [0, 1] {
            assert!(matches!(build_xn(&Mode::numeric(n)), Err(Error::ParameterOutOfRange(_))));
            assert!(matches!(build_kn(&Mode::numeric(n)), Err(Error::ParameterOutOfRange(_))));
        }
    }

    #[test]
    fn f_values() {
        let f = |n| {
            let r = build_f(&Mode::numeric(n)).unwrap();
            assert_all_pass(&r);
            let s = r.manifold.surface(SURFACE_F).unwrap().clone();
            (s.genus, s.self_int)
        };
        assert_eq!(f(2), (Scalar::from(57), Scalar::from(16)));
        assert_eq!(f(3), (Scalar::from(514), Scalar::from(54)));
        assert_all_pass(&build_f(&Mode::Symbolic).unwrap());
    }

    #[test]
    fn nn_values() {
        let r = build_nn(&Mode::numeric(2)).unwrap();
        assert_all_pass(&r);
        assert_eq!(r.manifold.e(), &Scalar::from(38));
        assert_eq!(r.manifold.sigma(), &Scalar::from(-30));
        let fp = r.manifold.surface(SURFACE_SECTION).unwrap();
        assert_eq!((fp.genus.clone(), fp.self_int.clone()), (Scalar::from(57), Scalar::from(-16)));
        let r = build_nn(&Mode::numeric(3)).unwrap();
        assert_eq!(r.manifold.e(), &Scalar::from(76));
        assert_eq!(r.manifold.sigma(), &Scalar::from(-68));
        let s = build_nn(&Mode::Symbolic).unwrap();
        assert_all_pass(&s);
        assert_eq!(s.manifold.chi_h(), Scalar::from(2));
    }

    #[test]
    fn kn_numeric_tables() {
        let r = build_kn(&Mode::numeric(4)).unwrap();
        assert_all_pass(&r);
        assert!(r.checks.iter().all(|c| c.pass));
        let m = &r.manifold;
        assert_eq!(m.numbers(), [26006.into(), 3954.into(), 63874.into(), 7490.into()]);

        let r = build_kn(&Mode::numeric(3)).unwrap();
        assert!(r.all_pass());
        let warn: Vec<_> = r.checks.iter().filter(|c| c.severity == Severity::Warning).collect();
        assert_eq!(warn.len(), 1);
        assert!(!warn[0].pass);
        assert_eq!(warn[0].expected, CheckValue::Scalar(227.into()));
        assert_eq!(warn[0].got, CheckValue::Scalar(337.into()));
        assert!(warn[0].note.as_ref().unwrap().contains("337"));
    }

    #[test]
    fn kn_connectivity_and_ledger() {
        let r = build_kn(&Mode::numeric(2)).unwrap();
        assert!(r.manifold.simply_connected.is_declared_true());
        assert_eq!(r.manifold.surgery_tori, 1);
        let sw = r.manifold.sw.as_ref().unwrap();
        assert!(sw.is_monic().unwrap());
        assert_eq!(sw.to_string(), "Delta[T(2,115)](t^2)");
    }

    #[test]
    fn exotic_small() {
        let r = exotic_family(3, 5).unwrap();
        assert_eq!(r.entries.len(), 10);
        assert!(r.pairwise_distinct());
        assert_eq!(r.symplectic_count(), 5);
        assert_eq!(r.non_symplectic_count(), 5);
    }

    #[test]
    fn exotic_with_unknot_flagged() {
        let base = build_kn(&Mode::numeric(3)).unwrap().manifold;
        let mut knots = exotic_knots(1).unwrap();
        knots.push(Knot::unknot());
        let r = distinguish_family(&base, &knots).unwrap();
        assert!(r.pairwise_distinct());
        assert_eq!(r.trivial, vec![2]);
    }
}
