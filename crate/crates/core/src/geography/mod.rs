//! Geography scans of `K_n`: one row of characteristic numbers per `n`, as
//! CSV or as an SVG scatter plot in the `(chi_h, c1^2)` plane.

mod svg;

use std::io::Write;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::{format_rational, round_half_even, Rational};
use crate::calculus::{bmy_report, ManifoldRecord, Scalar, Side};
use crate::error::{Error, Result};
use crate::pipeline::{build_kn, Mode};

pub use svg::render_svg;

pub const CSV_HEADER: &str = "n,e,sigma,c1sq,chi_h,ratio,bmy_gap,side";
const RATIO_PLACES: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeographyRow {
    pub n: u64,
    pub e: Rational,
    pub sigma: Rational,
    pub c1sq: Rational,
    pub chi_h: Rational,
    /// `c1^2 / chi_h` exactly; rounded only when written out.
    pub ratio: Rational,
    pub bmy_gap: Rational,
    pub side: Side,
}

#[derive(Serialize)]
struct CsvRow {
    n: u64,
    e: String,
    sigma: String,
    c1sq: String,
    chi_h: String,
    ratio: String,
    bmy_gap: String,
    side: String,
}

fn numeric(s: &Scalar, what: &str) -> Result<Rational> {
    s.as_num()
        .cloned()
        .ok_or_else(|| Error::NeedsNumeric(format!("{what} = {s}")))
}

impl GeographyRow {
    pub fn from_record(n: u64, m: &ManifoldRecord) -> Result<Self> {
        let bmy = bmy_report(m)?;
        Ok(GeographyRow {
            n,
            e: numeric(m.e(), "e")?,
            sigma: numeric(m.sigma(), "sigma")?,
            c1sq: numeric(&m.c1sq(), "c1^2")?,
            chi_h: numeric(&m.chi_h(), "chi_h")?,
            ratio: bmy.ratio.value().clone(),
            bmy_gap: numeric(&bmy.gap, "bmy gap")?,
            side: bmy.side,
        })
    }

    pub fn ratio_decimal(&self) -> String {
        round_half_even(&self.ratio, RATIO_PLACES)
    }

    fn csv(&self) -> CsvRow {
        CsvRow {
            n: self.n,
            e: format_rational(&self.e),
            sigma: format_rational(&self.sigma),
            c1sq: format_rational(&self.c1sq),
            chi_h: format_rational(&self.chi_h),
            ratio: self.ratio_decimal(),
            bmy_gap: format_rational(&self.bmy_gap),
            side: self.side.to_string(),
        }
    }

    /// `(chi_h, c1^2)` as floats, for plotting only.
    pub(crate) fn point(&self) -> (f64, f64) {
        (
            self.chi_h.to_f64().unwrap_or(f64::NAN),
            self.c1sq.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// Rows for `K_n`, `n_min <= n <= n_max`, ordered by `n`.
pub fn scan(n_min: u64, n_max: u64) -> Result<Vec<GeographyRow>> {
    if n_min > n_max {
        return Err(Error::ParameterOutOfRange(format!("empty range {n_min}..={n_max}")));
    }
    (n_min..=n_max)
        .map(|n| GeographyRow::from_record(n, &build_kn(&Mode::numeric(n))?.manifold))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[GeographyRow], out: W) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    if rows.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    for row in rows {
        w.serialize(row.csv())?;
    }
    w.flush()
}

pub fn to_csv(rows: &[GeographyRow]) -> String {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is ascii")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use num_bigint::BigInt;

    #[test]
    fn scan_two_to_six() {
        let rows = scan(2, 6).unwrap();
        assert_eq!(rows.len(), 5);
        let k4 = &rows[2];
        assert_eq!(k4.n, 4);
        assert_eq!(k4.chi_h, int(7490));
        assert_eq!(k4.bmy_gap, int(3536));
        assert_eq!(k4.ratio_decimal(), "8.527904");
        assert!(rows.iter().all(|r| r.side == Side::Below));
    }

    #[test]
    fn csv_layout() {
        let text = to_csv(&scan(2, 4).unwrap());
        let lines: Vec<_> = text.split('\n').collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[4], "");
        assert!(!text.contains('\r'));
        assert_eq!(lines[3], "4,26006,3954,63874,7490,8.527904,3536,below");
        assert!(lines[1].starts_with("2,"));
    }

    #[test]
    fn csv_rows_satisfy_relations() {
        let text = to_csv(&scan(2, 12).unwrap());
        for line in text.lines().skip(1) {
            let f: Vec<BigInt> = line.split(',').take(5).map(|s| s.parse().unwrap()).collect();
            assert_eq!(&f[3], &(BigInt::from(3) * &f[2] + BigInt::from(2) * &f[1]));
            assert_eq!(BigInt::from(4) * &f[4], &f[2] + &f[1]);
        }
    }

    #[test]
    fn empty_range_rejected() {
        assert!(scan(5, 4).is_err());
        assert!(matches!(scan(1, 4), Err(Error::ParameterOutOfRange(_))));
    }
}
