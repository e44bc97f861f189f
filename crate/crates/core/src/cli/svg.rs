use std::fmt::Write;

use crate::stats::Histogram;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 48.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Static SVG with the histogram as bars and `curve` as a polyline on shared
/// axes. Coordinates are printed with fixed precision, so equal inputs give
/// byte-identical files.
pub fn overlay_svg(hist: &Histogram, curve: &[(f64, f64)], title: &str) -> String {
    let mut x_lo = hist.edges[0];
    let mut x_hi = hist.edges[hist.edges.len() - 1];
    let mut y_hi = hist.densities.iter().cloned().fold(0.0, f64::max);
    for &(x, y) in curve {
        x_lo = x_lo.min(x);
        x_hi = x_hi.max(x);
        y_hi = y_hi.max(y);
    }
    if !(x_hi > x_lo) {
        x_hi = x_lo + 1.0;
    }
    if !(y_hi > 0.0) {
        y_hi = 1.0;
    }
    y_hi *= 1.05;
    let plot_w = WIDTH - 2.0 * MARGIN;
    let plot_h = HEIGHT - 2.0 * MARGIN;
    let px = |x: f64| MARGIN + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let py = |y: f64| HEIGHT - MARGIN - y / y_hi * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        MARGIN / 2.0,
        escape(title)
    );
    let _ = writeln!(s, r##"<g fill="#9ecae1" stroke="#3182bd" stroke-width="0.5">"##);
    for (w, &d) in hist.edges.windows(2).zip(&hist.densities) {
        let (x0, x1) = (px(w[0]), px(w[1]));
        let y = py(d);
        let _ = writeln!(
            s,
            r#"<rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}"/>"#,
            x0,
            y,
            x1 - x0,
            HEIGHT - MARGIN - y
        );
    }
    let _ = writeln!(s, "</g>");
    if !curve.is_empty() {
        let pts: Vec<String> = curve
            .iter()
            .map(|&(x, y)| format!("{:.3},{:.3}", px(x), py(y)))
            .collect();
        let _ = writeln!(
            s,
            r##"<polyline fill="none" stroke="#d62728" stroke-width="1.5" points="{}"/>"##,
            pts.join(" ")
        );
    }
    // axes with end labels
    let (bx, by) = (MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(
        s,
        r#"<path d="M{bx:.2},{MARGIN:.2} L{bx:.2},{by:.2} L{:.2},{by:.2}" fill="none" stroke="black"/>"#,
        WIDTH - MARGIN
    );
    let label = |s: &mut String, x: f64, y: f64, anchor: &str, v: f64| {
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="11" text-anchor="{anchor}">{v:.4}</text>"#
        );
    };
    label(&mut s, bx, by + 16.0, "middle", x_lo);
    label(&mut s, WIDTH - MARGIN, by + 16.0, "middle", x_hi);
    label(&mut s, bx - 4.0, MARGIN + 4.0, "end", y_hi);
    let _ = writeln!(s, "</svg>");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{histogram, Bins};

    #[test]
    fn deterministic_and_well_formed() {
        let h = histogram(&[0.1, 0.2, 0.2, 0.5, 0.9], &Bins::Count(4)).unwrap();
        let curve = [(0.0, 1.0), (0.5, 1.5), (1.0, 0.2)];
        let a = overlay_svg(&h, &curve, "a < b");
        assert_eq!(a, overlay_svg(&h, &curve, "a < b"));
        assert!(a.starts_with("<svg") && a.trim_end().ends_with("</svg>"));
        assert_eq!(a.matches("<rect x=").count(), 4);
        assert!(a.contains("a &lt; b"));
    }
}
