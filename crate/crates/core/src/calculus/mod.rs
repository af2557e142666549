//! Manifold records and the operations that transform their characteristic
//! numbers. Works uniformly over numeric and symbolic scalars.

pub mod blocks;
mod bmy;
mod ops;
mod record;
mod scalar;

pub use bmy::{bmy_report, BmyReport, Ratio, Side};
pub use ops::{
    blow_up, blow_up_on_surface, branched_cover, euler_of_union, fiber_sum, genus_from_euler,
    mk_manifold, resolve_surfaces, riemann_hurwitz, surface_blowup,
};
pub use record::{BranchData, Connectivity, ManifoldRecord, MarkedSurface};
pub use scalar::{Scalar, DOMAIN_START};
