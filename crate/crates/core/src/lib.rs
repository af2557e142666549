//! Exact characteristic-number calculus for 4-manifolds built by blow-ups,
//! branched covers, surface resolution, symplectic sums and knot surgery.
//!
//! Every quantity is a [`Scalar`]: a big rational, or a polynomial in the
//! construction parameter `n`. The same operations therefore produce both
//! the numbers for a specific `n` and closed-form formulas valid for all `n`.

pub mod algebra;
pub mod calculus;
pub mod dsl;
mod error;
pub mod geography;
pub mod knots;
pub mod pipeline;

pub use algebra::{LaurentPoly, Poly, Rational};
pub use calculus::{BranchData, Connectivity, ManifoldRecord, MarkedSurface, Scalar};
pub use error::{Error, Result};
pub use knots::{Knot, KnotKind, SwLedger};
