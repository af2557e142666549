use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::knots::SwLedger;

/// Simple-connectivity is declared with a justification, never computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Connectivity {
    DeclaredTrue(String),
    DeclaredFalse(String),
    Unknown,
}

impl Connectivity {
    pub fn is_declared_true(&self) -> bool {
        matches!(self, Connectivity::DeclaredTrue(_))
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::DeclaredTrue(why) => write!(f, "yes (declared: {why})"),
            Connectivity::DeclaredFalse(why) => write!(f, "no (declared: {why})"),
            Connectivity::Unknown => f.write_str("unknown"),
        }
    }
}

/// An embedded surface: genus and self-intersection.
///
/// The optional claims describe how the surface sits in its ambient
/// manifold; a fiber sum uses them to declare the result simply connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedSurface {
    pub name: String,
    pub genus: Scalar,
    pub self_int: Scalar,
    /// Justification that pi1 of the surface surjects onto pi1 of the ambient manifold.
    pub pi1_surjective: Option<String>,
    /// Justification that the complement of the surface is simply connected.
    pub complement_simply_connected: Option<String>,
}

impl MarkedSurface {
    pub fn new(name: impl Into<String>, genus: Scalar, self_int: Scalar) -> Result<Self> {
        genus.require_count("genus")?;
        if !self_int.is_integral() {
            return Err(Error::NotIntegral {
                what: "self-intersection",
                value: self_int.to_string(),
            });
        }
        Ok(MarkedSurface {
            name: name.into(),
            genus,
            self_int,
            pi1_surjective: None,
            complement_simply_connected: None,
        })
    }

    /// `2 - 2g`.
    pub fn euler(&self) -> Scalar {
        &Scalar::from(2) - &self.genus.scale(&crate::algebra::int(2))
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_pi1_surjective(mut self, why: impl Into<String>) -> Self {
        self.pi1_surjective = Some(why.into());
        self
    }

    pub fn with_simply_connected_complement(mut self, why: impl Into<String>) -> Self {
        self.complement_simply_connected = Some(why.into());
        self
    }

    pub fn at(&self, n: &BigInt) -> Self {
        MarkedSurface {
            genus: self.genus.at(n),
            self_int: self.self_int.at(n),
            ..self.clone()
        }
    }
}

impl fmt::Display for MarkedSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: genus {}, self-intersection {}", self.name, self.genus, self.self_int)
    }
}

/// Euler characteristic and signature of a closed 4-manifold, plus the
/// bookkeeping carried along by surgeries.
///
/// `c1sq`, `chi_h` and `c2` are derived on demand, so the relations
/// `c1sq = 3 sigma + 2 e`, `4 chi_h = sigma + e` and `c2 = e` hold by
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldRecord {
    e: Scalar,
    sigma: Scalar,
    pub simply_connected: Connectivity,
    pub almost_complex: bool,
    pub symplectic: bool,
    pub log: Vec<String>,
    pub surfaces: BTreeMap<String, MarkedSurface>,
    pub sw: Option<SwLedger>,
    /// Square-zero tori with cusp neighbourhoods still available for knot surgery.
    pub surgery_tori: u32,
    /// Marked surface that meets the surgery torus once and gains the knot's genus.
    pub knot_target: Option<String>,
}

impl ManifoldRecord {
    pub fn new(e: Scalar, sigma: Scalar) -> Self {
        ManifoldRecord {
            e,
            sigma,
            simply_connected: Connectivity::Unknown,
            almost_complex: false,
            symplectic: false,
            log: Vec::new(),
            surfaces: BTreeMap::new(),
            sw: None,
            surgery_tori: 0,
            knot_target: None,
        }
    }

    pub fn e(&self) -> &Scalar {
        &self.e
    }

    pub fn sigma(&self) -> &Scalar {
        &self.sigma
    }

    pub fn c2(&self) -> &Scalar {
        &self.e
    }

    pub fn c1sq(&self) -> Scalar {
        &self.sigma.scale(&crate::algebra::int(3)) + &self.e.scale(&crate::algebra::int(2))
    }

    pub fn chi_h(&self) -> Scalar {
        (&self.sigma + &self.e).scale(&crate::algebra::rat(1, 4))
    }

    /// Same bookkeeping with new `(e, sigma)`.
    pub(crate) fn with_numbers(&self, e: Scalar, sigma: Scalar) -> Self {
        ManifoldRecord {
            e,
            sigma,
            ..self.clone()
        }
    }

    pub(crate) fn logged(mut self, entry: impl Into<String>) -> Self {
        self.log.push(entry.into());
        self
    }

    /// Mark as admitting an almost-complex structure; requires integral `chi_h`.
    pub fn declare_almost_complex(mut self) -> Result<Self> {
        let chi = self.chi_h();
        if !chi.is_integral() {
            return Err(Error::NonIntegralChiH(chi.to_string()));
        }
        self.almost_complex = true;
        Ok(self)
    }

    pub fn declare_symplectic(self) -> Result<Self> {
        let mut out = self.declare_almost_complex()?;
        out.symplectic = true;
        Ok(out)
    }

    pub fn with_surface(mut self, s: MarkedSurface) -> Self {
        self.surfaces.insert(s.name.clone(), s);
        self
    }

    pub fn surface(&self, name: &str) -> Result<&MarkedSurface> {
        self.surfaces
            .get(name)
            .ok_or_else(|| Error::UnknownSurface(name.to_string()))
    }

    /// Every scalar substituted at `n`.
    pub fn at(&self, n: &BigInt) -> Self {
        ManifoldRecord {
            e: self.e.at(n),
            sigma: self.sigma.at(n),
            surfaces: self
                .surfaces
                .iter()
                .map(|(k, s)| (k.clone(), s.at(n)))
                .collect(),
            sw: self.sw.as_ref().map(|l| l.at(n)),
            ..self.clone()
        }
    }

    /// Characteristic numbers only: `(e, sigma, c1sq, chi_h)`.
    pub fn numbers(&self) -> [Scalar; 4] {
        [self.e.clone(), self.sigma.clone(), self.c1sq(), self.chi_h()]
    }
}

/// Aggregate data of a branch divisor with pairwise disjoint components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchData {
    /// Euler characteristic of the whole branch divisor.
    pub e_branch: Scalar,
    /// Self-intersection of the branch divisor.
    pub d_sq: Scalar,
    /// Canonical class of the base paired with the branch divisor.
    pub k_dot_d: Scalar,
    /// Degree of the cover.
    pub degree: Scalar,
    /// Branching index along every component.
    pub index: Scalar,
}

impl BranchData {
    /// The lattice configuration of four families of elliptic curves in the
    /// blown-up abelian surface: `n^2` disjoint tori per family after
    /// blowing up the `n^4` points of order `n`, cover of degree `n^3`
    /// branched with index `n`.
    ///
    /// Over the base with `K^2 = -n^4` these aggregates are
    /// `e(D) = 0`, `D^2 = -4n^4`, `K.D = 4n^4`.
    pub fn hirzebruch(n: &Scalar) -> Self {
        let n4 = n.pow(4);
        BranchData {
            e_branch: Scalar::zero(),
            d_sq: -n4.scale(&crate::algebra::int(4)),
            k_dot_d: n4.scale(&crate::algebra::int(4)),
            degree: n.pow(3),
            index: n.clone(),
        }
    }
}
