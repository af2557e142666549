//! Named building blocks.

use super::record::{Connectivity, ManifoldRecord, MarkedSurface};
use super::scalar::Scalar;
use crate::knots::SwLedger;

/// The 4-torus: complex, `e = sigma = 0`.
pub fn t4() -> ManifoldRecord {
    let mut m = ManifoldRecord::new(0.into(), 0.into())
        .declare_symplectic()
        .expect("chi_h(T^4) = 0");
    m.simply_connected = Connectivity::DeclaredFalse("pi1(T^4) = Z^4".into());
    m.logged("T4")
}

/// The K3 surface with its elliptic fibration.
///
/// Carries a section `section` of square -2 (the knot-surgery target), a
/// trivial Seiberg-Witten ledger, and two cusp-neighbourhood fiber tori:
/// one inside the nucleus and one c-embedded in its complement.
pub fn e2() -> ManifoldRecord {
    let mut m = ManifoldRecord::new(24.into(), (-16).into())
        .declare_symplectic()
        .expect("chi_h(K3) = 2");
    m.simply_connected = Connectivity::DeclaredTrue("K3 surface is simply connected".into());
    m.sw = Some(SwLedger::trivial("K3 surface: SW = 1 on the fiber class"));
    m.surgery_tori = 2;
    m.knot_target = Some("section".into());
    let section = MarkedSurface::new("section", Scalar::zero(), (-2).into())
        .expect("valid section")
        .with_simply_connected_complement(
            "complement of section and surgery fiber is simply connected (fibers over a disk with a simply connected cusp fiber)",
        );
    m.with_surface(section).logged("E2")
}

pub fn cp2() -> ManifoldRecord {
    let mut m = ManifoldRecord::new(3.into(), 1.into())
        .declare_symplectic()
        .expect("chi_h(CP2) = 1");
    m.simply_connected = Connectivity::DeclaredTrue("CP2 is simply connected".into());
    m.logged("CP2")
}

/// `CP2` with reversed orientation; `chi_h = 1/2`, so not almost complex.
pub fn cp2bar() -> ManifoldRecord {
    let mut m = ManifoldRecord::new(3.into(), (-1).into());
    m.simply_connected = Connectivity::DeclaredTrue("CP2 is simply connected".into());
    m.logged("CP2BAR")
}

/// Look up a block by the name used in construction scripts.
pub fn by_name(name: &str) -> Option<ManifoldRecord> {
    match name {
        "T4" => Some(t4()),
        "E2" => Some(e2()),
        "CP2" => Some(cp2()),
        "CP2BAR" => Some(cp2bar()),
        _ => None,
    }
}

pub const BLOCK_NAMES: [&str; 4] = ["T4", "E2", "CP2", "CP2BAR"];
