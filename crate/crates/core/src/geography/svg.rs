use std::fmt::Write;

use super::GeographyRow;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 60.0;

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn fit(points: &[(f64, f64)]) -> Frame {
        let mut x1 = points.iter().map(|p| p.0).fold(1.0, f64::max);
        let x0 = points.iter().map(|p| p.0).fold(0.0, f64::min);
        if x1 <= x0 {
            x1 = x0 + 1.0;
        }
        let y0 = points.iter().map(|p| p.1).fold(8.0 * x0, f64::min).min(0.0);
        let y1 = points.iter().map(|p| p.1).fold(9.0 * x1, f64::max);
        Frame { x0, x1, y0, y1 }
    }

    fn sx(&self, x: f64) -> f64 {
        MARGIN + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - 2.0 * MARGIN)
    }

    fn sy(&self, y: f64) -> f64 {
        HEIGHT - MARGIN - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - 2.0 * MARGIN)
    }
}

/// Scatter of `(chi_h, c1^2)` with the lines `c1^2 = 8 chi_h` and
/// `c1^2 = 9 chi_h`. Output depends only on the rows.
pub fn render_svg(rows: &[GeographyRow]) -> String {
    let points: Vec<(f64, f64)> = rows.iter().map(GeographyRow::point).collect();
    let fr = Frame::fit(&points);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let (left, right) = (fr.sx(fr.x0), fr.sx(fr.x1));
    let (bottom, top) = (fr.sy(fr.y0), fr.sy(fr.y1));
    let _ = writeln!(
        s,
        r#"<path d="M {left:.2} {top:.2} L {left:.2} {bottom:.2} L {right:.2} {bottom:.2}" fill="none" stroke="black"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="12">chi_h</text>"#,
        (left + right) / 2.0,
        HEIGHT - MARGIN / 3.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="12" transform="rotate(-90 {:.2} {:.2})">c1^2</text>"#,
        MARGIN / 3.0,
        (top + bottom) / 2.0,
        MARGIN / 3.0,
        (top + bottom) / 2.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{right:.2}" y="{:.2}" text-anchor="end" font-size="10">{}</text>"#,
        bottom + 14.0,
        fr.x1
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{top:.2}" text-anchor="end" font-size="10">{}</text>"#,
        left - 4.0,
        fr.y1
    );

    for (slope, label, dash) in [(8.0, "c1^2 = 8 chi_h", "6 3"), (9.0, "c1^2 = 9 chi_h", "2 2")] {
        let (xa, xb) = (fr.x0, fr.x1.min(fr.y1 / slope));
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray" stroke-dasharray="{dash}"/>"#,
            fr.sx(xa),
            fr.sy(slope * xa),
            fr.sx(xb),
            fr.sy(slope * xb)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="10" fill="gray">{label}</text>"#,
            fr.sx(xb) - 70.0,
            fr.sy(slope * xb) - 4.0
        );
    }

    for (row, (x, y)) in rows.iter().zip(&points) {
        let (px, py) = (fr.sx(*x), fr.sy(*y));
        let _ = writeln!(s, r#"<circle cx="{px:.2}" cy="{py:.2}" r="3" fill="steelblue"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="10">n={}</text>"#,
            px + 5.0,
            py - 5.0,
            row.n
        );
    }
    s.push_str("</svg>\n");
    s
}
