//! Hand-rolled SVG line charts: axes, ticks, one polyline, a title.
//! Deliberately spartan — these are quick-look companions to the CSVs,
//! not publication figures.

use std::fmt::Write;

use crate::render::fmt_float;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 64.0;
const TICKS: usize = 5;

/// Render `points` as a single polyline chart. Non-finite values are
/// dropped from the plot (they still live in the CSV next to it).
pub fn line_chart(title: &str, x_label: &str, y_label: &str, points: &[(f64, f64)]) -> String {
    let finite: Vec<(f64, f64)> = points
        .iter()
        .copied()
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .collect();

    let (x_lo, x_hi) = padded_span(finite.iter().map(|p| p.0));
    let (y_lo, y_hi) = padded_span(finite.iter().map(|p| p.1));
    let to_px = |x: f64, y: f64| {
        let px = MARGIN + (x - x_lo) / (x_hi - x_lo) * (WIDTH - 2.0 * MARGIN);
        let py = HEIGHT - MARGIN - (y - y_lo) / (y_hi - y_lo) * (HEIGHT - 2.0 * MARGIN);
        (px, py)
    };

    let mut out = String::new();
    let _ = write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="monospace" font-size="13">"#
    );
    let _ = write!(
        out,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = write!(
        out,
        r#"<text x="{}" y="28" text-anchor="middle" font-size="16">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );

    // Axes.
    let _ = write!(
        out,
        r#"<path d="M {m} {m} V {v} H {h}" fill="none" stroke="black"/>"#,
        m = MARGIN,
        v = HEIGHT - MARGIN,
        h = WIDTH - MARGIN
    );
    for i in 0..=TICKS {
        let frac = i as f64 / TICKS as f64;
        let x = x_lo + frac * (x_hi - x_lo);
        let y = y_lo + frac * (y_hi - y_lo);
        let (px, _) = to_px(x, y_lo);
        let (_, py) = to_px(x_lo, y);
        let _ = write!(
            out,
            r#"<line x1="{px:.2}" y1="{}" x2="{px:.2}" y2="{}" stroke="black"/>"#,
            HEIGHT - MARGIN,
            HEIGHT - MARGIN + 6.0
        );
        let _ = write!(
            out,
            r#"<text x="{px:.2}" y="{}" text-anchor="middle">{}</text>"#,
            HEIGHT - MARGIN + 22.0,
            fmt_float(x, 3)
        );
        let _ = write!(
            out,
            r#"<line x1="{}" y1="{py:.2}" x2="{}" y2="{py:.2}" stroke="black"/>"#,
            MARGIN - 6.0,
            MARGIN
        );
        let _ = write!(
            out,
            r#"<text x="{}" y="{py:.2}" text-anchor="end" dominant-baseline="middle">{}</text>"#,
            MARGIN - 10.0,
            fmt_float(y, 3)
        );
    }
    let _ = write!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 16.0,
        escape(x_label)
    );
    let _ = write!(
        out,
        r#"<text x="18" y="{}" text-anchor="middle" transform="rotate(-90 18 {})">{}</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0,
        escape(y_label)
    );

    if !finite.is_empty() {
        let mut path = String::new();
        for (x, y) in &finite {
            let (px, py) = to_px(*x, *y);
            let _ = write!(path, "{px:.2},{py:.2} ");
        }
        let _ = write!(
            out,
            r##"<polyline points="{}" fill="none" stroke="#1f6fb2" stroke-width="1.5"/>"##,
            path.trim_end()
        );
    }
    out.push_str("</svg>\n");
    out
}

fn padded_span(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if lo > hi {
        return (0.0, 1.0); // nothing to plot; keep the frame well-formed
    }
    let pad = if hi > lo { 0.05 * (hi - lo) } else { 1.0 };
    (lo - pad, hi + pad)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn produces_a_wellformed_standalone_chart() {
        let pts: Vec<(f64, f64)> = (0..50).map(|i| (i as f64, (i as f64).sqrt())).collect();
        let svg = line_chart("demo", "n", "V", &pts);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(svg.contains("<polyline"));
        assert!(!svg.contains("NaN"));
    }

    #[test]
    fn empty_series_still_renders_axes() {
        let svg = line_chart("empty", "x", "y", &[]);
        assert!(svg.contains("<path"));
        assert!(!svg.contains("<polyline"));
    }
}
