use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use super::{Knot, KnotKind};
use crate::algebra::LaurentPoly;
use crate::calculus::{ManifoldRecord, MarkedSurface, Scalar};
use crate::error::{Error, Result};

/// Rule applied by knot surgery on a fiber torus.
pub const SURGERY_RULE: &str = "Fintushel-Stern knot surgery: SW multiplied by Delta_K(t^2)";

/// A factor `Delta_K(t^2)` for a fibered knot whose polynomial is not expanded.
///
/// Fibered knots have monic Alexander polynomials, so the factor is a nonzero
/// monic symmetric Laurent polynomial. Only its genus is tracked; a numeric
/// genus `g` stands for the torus knot `T(2, 2g + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeferredFactor {
    pub genus: Scalar,
}

impl DeferredFactor {
    pub fn label(&self) -> String {
        match self.genus.to_u64() {
            Some(g) => format!("Delta[{}]", KnotKind::Torus { p: 2, q: 2 * g + 1 }),
            None => format!("Delta[fibered knot of genus {}]", self.genus),
        }
    }
}

/// Seiberg-Witten invariant relative to one distinguished torus class `t`.
///
/// The value is `explicit * prod(deferred)`. Equality ignores provenance.
#[derive(Clone, Debug)]
pub struct SwLedger {
    explicit: LaurentPoly,
    deferred: Vec<DeferredFactor>,
    pub provenance: Vec<String>,
}

impl PartialEq for SwLedger {
    fn eq(&self, other: &Self) -> bool {
        self.explicit == other.explicit && self.deferred == other.deferred
    }
}

impl Eq for SwLedger {}

impl SwLedger {
    pub fn trivial(provenance: impl Into<String>) -> Self {
        SwLedger::explicit(LaurentPoly::one(), provenance)
    }

    pub fn explicit(value: LaurentPoly, provenance: impl Into<String>) -> Self {
        SwLedger {
            explicit: value,
            deferred: Vec::new(),
            provenance: vec![provenance.into()],
        }
    }

    pub fn explicit_part(&self) -> &LaurentPoly {
        &self.explicit
    }

    pub fn deferred(&self) -> &[DeferredFactor] {
        &self.deferred
    }

    /// The full value, if nothing is deferred.
    pub fn value(&self) -> Option<&LaurentPoly> {
        self.deferred.is_empty().then_some(&self.explicit)
    }

    pub fn is_zero(&self) -> bool {
        self.explicit.is_zero()
    }

    /// Monic and symmetric; deferred factors always are.
    pub fn is_monic(&self) -> Result<bool> {
        self.explicit.is_monic_symmetric()
    }

    pub(crate) fn noted(mut self, note: impl Into<String>) -> Self {
        self.provenance.push(note.into());
        self
    }

    fn times_alexander_squared(&self, knot: &Knot) -> Self {
        let mut out = self.clone();
        out.explicit = &self.explicit * &knot.alexander.substitute_square();
        out.provenance.push(format!("x Delta_{}(t^2) ({SURGERY_RULE})", knot.kind));
        out
    }

    fn times_deferred(&self, factor: DeferredFactor) -> Self {
        let mut out = self.clone();
        out.provenance.push(format!("x {}(t^2) deferred ({SURGERY_RULE})", factor.label()));
        out.deferred.push(factor);
        out.deferred.sort_by_key(DeferredFactor::label);
        out
    }

    pub(crate) fn at(&self, n: &BigInt) -> Self {
        let mut out = self.clone();
        for d in &mut out.deferred {
            d.genus = d.genus.at(n);
        }
        out.deferred.sort_by_key(DeferredFactor::label);
        out
    }
}

impl fmt::Display for SwLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deferred.is_empty() {
            return write!(f, "{}", self.explicit);
        }
        if !self.explicit.is_one() {
            write!(f, "({}) * ", self.explicit)?;
        }
        let parts: Vec<String> = self.deferred.iter().map(|d| format!("{}(t^2)", d.label())).collect();
        f.write_str(&parts.join(" * "))
    }
}

fn apply_surgery(
    m: &ManifoldRecord,
    genus: &Scalar,
    fibered: bool,
    ledger: impl FnOnce(&SwLedger) -> SwLedger,
    label: &str,
) -> Result<ManifoldRecord> {
    let sw = m.sw.as_ref().ok_or(Error::SurgeryUnavailable("a Seiberg-Witten ledger"))?;
    if m.surgery_tori == 0 {
        return Err(Error::SurgeryUnavailable("a c-embedded square-zero torus"));
    }
    let mut out = m.clone();
    out.sw = Some(ledger(sw));
    out.surgery_tori -= 1;
    out.symplectic = m.symplectic && fibered;
    if let Some(target) = &m.knot_target {
        let s = m.surface(target)?;
        let grown = MarkedSurface {
            genus: &s.genus + genus,
            ..s.clone()
        };
        out.surfaces.insert(target.clone(), grown);
    }
    out.log.push(format!("knot_surgery({label})"));
    Ok(out)
}

/// Knot surgery along a fiber torus. Leaves `(e, sigma)` alone, multiplies
/// the ledger by `Delta_K(t^2)`, keeps the symplectic flag only for fibered
/// knots, and adds the knot's genus to the surface meeting the torus once.
pub fn knot_surgery(m: &ManifoldRecord, knot: &Knot) -> Result<ManifoldRecord> {
    apply_surgery(
        m,
        &Scalar::from(BigInt::from(knot.genus)),
        knot.fibered,
        |sw| sw.times_alexander_squared(knot),
        &knot.kind.to_string(),
    )
}

/// Knot surgery with a fibered knot of the given (possibly symbolic) genus,
/// leaving its Alexander polynomial unexpanded in the ledger.
///
/// For numeric genus the knot is `T(2, 2g + 1)`.
pub fn fibered_surgery_of_genus(m: &ManifoldRecord, genus: &Scalar) -> Result<ManifoldRecord> {
    genus.require_count("knot genus")?;
    if genus.is_zero() {
        return knot_surgery(m, &Knot::unknot());
    }
    let factor = DeferredFactor { genus: genus.clone() };
    let label = factor.label();
    apply_surgery(m, genus, true, |sw| sw.times_deferred(factor), &label)
}

#[derive(Clone, Debug)]
pub struct FamilyEntry {
    pub knot: KnotKind,
    pub sw: SwLedger,
    pub monic: bool,
    /// Candidate for carrying a symplectic structure (fibered knot, monic ledger).
    pub symplectic: bool,
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub base_sw: SwLedger,
    pub entries: Vec<FamilyEntry>,
    /// Index pairs with identical ledgers.
    pub collisions: Vec<(usize, usize)>,
    /// Entries whose ledger equals the base's.
    pub trivial: Vec<usize>,
    pub notes: Vec<String>,
}

impl FamilyReport {
    pub fn pairwise_distinct(&self) -> bool {
        self.collisions.is_empty()
    }

    pub fn symplectic_count(&self) -> usize {
        self.entries.iter().filter(|e| e.symplectic).count()
    }

    pub fn non_symplectic_count(&self) -> usize {
        self.entries.len() - self.symplectic_count()
    }
}

/// Apply knot surgery with each knot to the same base and compare ledgers.
pub fn distinguish_family(base: &ManifoldRecord, knots: &[Knot]) -> Result<FamilyReport> {
    let base_sw = base
        .sw
        .clone()
        .ok_or(Error::SurgeryUnavailable("a Seiberg-Witten ledger"))?;
    let mut entries = Vec::with_capacity(knots.len());
    for knot in knots {
        let out = knot_surgery(base, knot)?;
        let sw = out.sw.expect("surgery keeps the ledger");
        let monic = sw.is_monic()?;
        entries.push(FamilyEntry {
            knot: knot.kind,
            symplectic: knot.fibered && monic,
            monic,
            sw,
        });
    }

    let mut seen: HashMap<(&LaurentPoly, &[DeferredFactor]), usize> = HashMap::new();
    let mut collisions = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        match seen.get(&(e.sw.explicit_part(), e.sw.deferred())) {
            Some(&j) => collisions.push((j, i)),
            None => {
                seen.insert((e.sw.explicit_part(), e.sw.deferred()), i);
            }
        }
    }

    let trivial: Vec<usize> = entries
        .iter()
        .enumerate()
        .filter(|(_, e)| e.sw == base_sw)
        .map(|(i, _)| i)
        .collect();
    let mut notes = vec![format!("ledger rule: {SURGERY_RULE}")];
    for &i in &trivial {
        notes.push(format!("{}: trivial Delta, no exotic pair", entries[i].knot));
    }
    Ok(FamilyReport {
        base_sw,
        entries,
        collisions,
        trivial,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::blocks;
    use crate::knots::{nonfibered_nonmonic_family, torus_knot};

    #[test]
    fn unknot_surgery_changes_nothing_visible() {
        let e2 = blocks::e2();
        let out = knot_surgery(&e2, &Knot::unknot()).unwrap();
        assert_eq!(out.numbers(), e2.numbers());
        assert_eq!(out.sw, e2.sw);
        assert_eq!(out.surfaces, e2.surfaces);
    }

    #[test]
    fn trefoil_on_k3() {
        let out = knot_surgery(&blocks::e2(), &torus_knot(2, 3).unwrap()).unwrap();
        let sw = out.sw.clone().unwrap();
        assert_eq!(sw.value(), Some(&LaurentPoly::from_coeffs(-2, &[1, 0, -1, 0, 1])));
        assert_eq!(sw.to_string(), "t^2 - 1 + t^-2");
        assert!(out.symplectic);
        assert_eq!(out.surface("section").unwrap().genus, Scalar::from(1));
    }

    #[test]
    fn nonfibered_surgery_drops_symplectic() {
        let k = &nonfibered_nonmonic_family(1)[0];
        let out = knot_surgery(&blocks::e2(), k).unwrap();
        assert!(!out.symplectic);
        assert!(!out.sw.unwrap().is_monic().unwrap());
    }

    #[test]
    fn needs_ledger_and_torus() {
        let t4 = blocks::t4();
        assert_eq!(
            knot_surgery(&t4, &Knot::unknot()),
            Err(Error::SurgeryUnavailable("a Seiberg-Witten ledger"))
        );
        let once = knot_surgery(&blocks::e2(), &Knot::unknot()).unwrap();
        let twice = knot_surgery(&once, &Knot::unknot()).unwrap();
        assert_eq!(
            knot_surgery(&twice, &Knot::unknot()),
            Err(Error::SurgeryUnavailable("a c-embedded square-zero torus"))
        );
    }

    #[test]
    fn deferred_and_explicit_agree_on_topology() {
        let e2 = blocks::e2();
        let explicit = knot_surgery(&e2, &torus_knot(2, 115).unwrap()).unwrap();
        let deferred = fibered_surgery_of_genus(&e2, &Scalar::from(57)).unwrap();
        assert_eq!(explicit.numbers(), deferred.numbers());
        assert_eq!(explicit.surfaces, deferred.surfaces);
        assert!(deferred.sw.as_ref().unwrap().is_monic().unwrap());
        assert_eq!(deferred.sw.as_ref().unwrap().to_string(), "Delta[T(2,115)](t^2)");
        assert!(explicit.sw.unwrap().is_monic().unwrap());
    }

    #[test]
    fn family_distinctness() {
        let knots: Vec<Knot> = (1..=10).map(|k| torus_knot(2, 2 * k + 1).unwrap()).collect();
        let report = distinguish_family(&blocks::e2(), &knots).unwrap();
        assert!(report.pairwise_distinct());
        assert_eq!(report.symplectic_count(), 10);
        assert!(report.trivial.is_empty());
    }

    #[test]
    fn family_flags() {
        let only_unknot = distinguish_family(&blocks::e2(), &[Knot::unknot()]).unwrap();
        assert!(only_unknot.pairwise_distinct());
        assert_eq!(only_unknot.trivial, vec![0]);
        assert!(only_unknot.notes.iter().any(|n| n.contains("trivial Delta")));

        let mut mixed = vec![torus_knot(2, 3).unwrap()];
        mixed.extend(nonfibered_nonmonic_family(1));
        let r = distinguish_family(&blocks::e2(), &mixed).unwrap();
        assert_eq!(r.non_symplectic_count(), 1);
        assert!(!r.entries[1].symplectic);

        let dup = distinguish_family(&blocks::e2(), &[torus_knot(2, 3).unwrap(), torus_knot(2, 3).unwrap()]).unwrap();
        assert_eq!(dup.collisions, vec![(0, 1)]);
    }
}
