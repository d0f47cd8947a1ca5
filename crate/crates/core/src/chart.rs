//! Self-contained SVG line charts.
//!
//! Renders fixed-size (800×500) SVG 1.1 documents with axes, 1–2–5 tick
//! spacing, gridlines, a legend, and one polyline per series. Output is a
//! pure function of the input — no timestamps, random ids, or environment
//! lookups — so rendered charts are byte-stable across runs and platforms
//! and safe to pin in golden tests.

use std::fmt::Write as _;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 160.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_BOTTOM: f64 = 60.0;
/// Series with at most this many points also get per-point markers.
const MARKER_LIMIT: usize = 32;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

/// One named line.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
}

impl Series {
    pub fn new<S: Into<String>>(name: S, points: Vec<(f64, f64)>) -> Self {
        Series {
            name: name.into(),
            points,
        }
    }
}

/// A titled, labeled chart over one or more series.
#[derive(Debug, Clone, PartialEq)]
pub struct LineChart {
    title: String,
    x_label: String,
    y_label: String,
    series: Vec<Series>,
}

impl LineChart {
    pub fn new<S: Into<String>>(title: S, x_label: S, y_label: S) -> Self {
        LineChart {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            series: Vec::new(),
        }
    }

    pub fn push_series(&mut self, series: Series) -> &mut Self {
        self.series.push(series);
        self
    }

    /// Renders the chart as a complete SVG document.
    pub fn render(&self) -> String {
        let (x0, x1) = self.x_range();
        let (y0, y1) = self.y_range();
        let pw = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
        let ph = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
        let px = |x: f64| MARGIN_LEFT + (x - x0) / (x1 - x0) * pw;
        let py = |y: f64| MARGIN_TOP + ph - (y - y0) / (y1 - y0) * ph;

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
             width=\"{WIDTH:.0}\" height=\"{HEIGHT:.0}\" \
             viewBox=\"0 0 {WIDTH:.0} {HEIGHT:.0}\">"
        );
        let _ = writeln!(
            svg,
            "<rect x=\"0\" y=\"0\" width=\"{WIDTH:.0}\" height=\"{HEIGHT:.0}\" \
             fill=\"#ffffff\"/>"
        );
        let _ = writeln!(
            svg,
            "<text x=\"{:.2}\" y=\"28\" text-anchor=\"middle\" \
             font-family=\"sans-serif\" font-size=\"18\" fill=\"#222222\">{}</text>",
            MARGIN_LEFT + pw / 2.0,
            escape(&self.title)
        );

        // Gridlines and tick labels.
        for tick in ticks(x0, x1) {
            let x = px(tick);
            let _ = writeln!(
                svg,
                "<line x1=\"{x:.2}\" y1=\"{:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" \
                 stroke=\"#dddddd\" stroke-width=\"1\"/>",
                MARGIN_TOP,
                MARGIN_TOP + ph
            );
            let _ = writeln!(
                svg,
                "<text x=\"{x:.2}\" y=\"{:.2}\" text-anchor=\"middle\" \
                 font-family=\"sans-serif\" font-size=\"12\" fill=\"#444444\">{}</text>",
                MARGIN_TOP + ph + 18.0,
                fmt_tick(tick, x1 - x0)
            );
        }
        for tick in ticks(y0, y1) {
            let y = py(tick);
            let _ = writeln!(
                svg,
                "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" \
                 stroke=\"#dddddd\" stroke-width=\"1\"/>",
                MARGIN_LEFT,
                MARGIN_LEFT + pw
            );
            let _ = writeln!(
                svg,
                "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\" \
                 font-family=\"sans-serif\" font-size=\"12\" fill=\"#444444\">{}</text>",
                MARGIN_LEFT - 8.0,
                y + 4.0,
                fmt_tick(tick, y1 - y0)
            );
        }

        // Axes over the gridlines.
        let _ = writeln!(
            svg,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" \
             stroke=\"#222222\" stroke-width=\"1.5\"/>",
            MARGIN_LEFT,
            MARGIN_TOP + ph,
            MARGIN_LEFT + pw,
            MARGIN_TOP + ph
        );
        let _ = writeln!(
            svg,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" \
             stroke=\"#222222\" stroke-width=\"1.5\"/>",
            MARGIN_LEFT,
            MARGIN_TOP,
            MARGIN_LEFT,
            MARGIN_TOP + ph
        );
        let _ = writeln!(
            svg,
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" \
             font-family=\"sans-serif\" font-size=\"14\" fill=\"#222222\">{}</text>",
            MARGIN_LEFT + pw / 2.0,
            HEIGHT - 12.0,
            escape(&self.x_label)
        );
        let _ = writeln!(
            svg,
            "<text x=\"18\" y=\"{:.2}\" text-anchor=\"middle\" \
             font-family=\"sans-serif\" font-size=\"14\" fill=\"#222222\" \
             transform=\"rotate(-90 18 {:.2})\">{}</text>",
            MARGIN_TOP + ph / 2.0,
            MARGIN_TOP + ph / 2.0,
            escape(&self.y_label)
        );

        // Data.
        for (idx, series) in self.series.iter().enumerate() {
            let color = PALETTE[idx % PALETTE.len()];
            if series.points.len() > 1 {
                let pts: Vec<String> = series
                    .points
                    .iter()
                    .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
                    .collect();
                let _ = writeln!(
                    svg,
                    "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" \
                     points=\"{}\"/>",
                    pts.join(" ")
                );
            }
            if series.points.len() <= MARKER_LIMIT {
                for &(x, y) in &series.points {
                    let _ = writeln!(
                        svg,
                        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{color}\"/>",
                        px(x),
                        py(y)
                    );
                }
            }
        }

        // Legend to the right of the plot area.
        for (idx, series) in self.series.iter().enumerate() {
            let color = PALETTE[idx % PALETTE.len()];
            let ly = MARGIN_TOP + 14.0 + idx as f64 * 22.0;
            let lx = MARGIN_LEFT + pw + 14.0;
            let _ = writeln!(
                svg,
                "<line x1=\"{lx:.2}\" y1=\"{ly:.2}\" x2=\"{:.2}\" y2=\"{ly:.2}\" \
                 stroke=\"{color}\" stroke-width=\"2\"/>",
                lx + 22.0
            );
            let _ = writeln!(
                svg,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" \
                 font-size=\"12\" fill=\"#222222\">{}</text>",
                lx + 28.0,
                ly + 4.0,
                escape(&series.name)
            );
        }

        svg.push_str("</svg>\n");
        svg
    }

    fn x_range(&self) -> (f64, f64) {
        let xs = self
            .series
            .iter()
            .flat_map(|s| s.points.iter().map(|p| p.0));
        finite_range(xs, false)
    }

    fn y_range(&self) -> (f64, f64) {
        let ys = self
            .series
            .iter()
            .flat_map(|s| s.points.iter().map(|p| p.1));
        finite_range(ys, true)
    }
}

/// Data range for one axis. The y axis (`anchor_zero`) is pinned to zero
/// from below when the data is nonnegative and padded 5% above; the x axis
/// hugs the data exactly. Degenerate ranges widen symmetrically so the
/// projection never divides by zero.
fn finite_range<I: Iterator<Item = f64>>(values: I, anchor_zero: bool) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if !lo.is_finite() || !hi.is_finite() {
        return (0.0, 1.0);
    }
    if anchor_zero {
        lo = lo.min(0.0);
        let span = if hi > lo { hi - lo } else { 1.0 };
        let padded_lo = if lo < 0.0 { lo - span * 0.05 } else { 0.0 };
        (padded_lo, lo + span * 1.05)
    } else if hi > lo {
        (lo, hi)
    } else {
        (lo - 0.5, hi + 0.5)
    }
}

/// Tick positions with a 1–2–5 step sized for about six intervals.
fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let step = nice_step((hi - lo) / 6.0);
    let mut ticks = Vec::new();
    let mut k = (lo / step).ceil() as i64;
    // Guard against a ceil() that lands an ulp below the bound.
    if (k as f64) * step < lo {
        k += 1;
    }
    while (k as f64) * step <= hi + step * 1e-9 {
        ticks.push(k as f64 * step);
        k += 1;
    }
    ticks
}

/// Smallest of 1·10^k, 2·10^k, 5·10^k at or above `raw`.
fn nice_step(raw: f64) -> f64 {
    let raw = raw.max(f64::MIN_POSITIVE);
    let pow = 10f64.powf(raw.log10().floor());
    for mult in [1.0, 2.0, 5.0, 10.0] {
        if pow * mult >= raw * (1.0 - 1e-12) {
            return pow * mult;
        }
    }
    pow * 10.0
}

/// Tick label with just enough decimals for the step size of its axis.
fn fmt_tick(value: f64, span: f64) -> String {
    let step = nice_step(span / 6.0);
    let decimals = if step >= 1.0 {
        0
    } else {
        (-step.log10().floor()) as usize
    };
    format!("{value:.decimals$}")
}

/// Escapes the five XML-reserved characters.
fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_a_complete_deterministic_document() {
        let mut chart = LineChart::new("Demo & test", "x", "y");
        chart.push_series(Series::new("unit <line>", vec![(0.0, 0.0), (1.0, 1.0)]));
        let svg = chart.render();
        assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("width=\"800\" height=\"500\""));
        assert!(svg.contains("Demo &amp; test"));
        assert!(svg.contains("unit &lt;line&gt;"));
        // (0,0)→(70,440) and (1,1)→(640,68.57) under the 5% y headroom.
        assert!(svg.contains("points=\"70.00,440.00 640.00,68.57\""), "{svg}");
        assert!(svg.contains("cx=\"70.00\" cy=\"440.00\""));
        assert!(!svg.contains("NaN"));
        assert_eq!(svg, chart.render(), "rendering must be pure");
    }

    #[test]
    fn dense_series_skip_markers() {
        let points: Vec<(f64, f64)> = (0..100).map(|j| (j as f64, (j * j) as f64)).collect();
        let mut chart = LineChart::new("dense", "x", "y");
        chart.push_series(Series::new("s", points));
        let svg = chart.render();
        assert!(svg.contains("<polyline"));
        assert!(!svg.contains("<circle"));
    }

    #[test]
    fn tick_steps_follow_one_two_five() {
        assert_eq!(nice_step(0.9), 1.0);
        assert_eq!(nice_step(1.2), 2.0);
        assert_eq!(nice_step(3.0), 5.0);
        assert_eq!(nice_step(6.5), 10.0);
        assert_eq!(nice_step(0.03), 0.05);
        assert_eq!(ticks(0.0, 1.05), vec![0.0, 0.2, 0.4, 0.6000000000000001, 0.8, 1.0]);
    }

    #[test]
    fn degenerate_ranges_still_render() {
        let mut chart = LineChart::new("flat", "x", "y");
        chart.push_series(Series::new("s", vec![(2.0, 5.0)]));
        let svg = chart.render();
        assert!(svg.contains("<circle"));
        assert!(!svg.contains("NaN"));
    }

    #[test]
    fn legend_lists_every_series_in_palette_order() {
        let mut chart = LineChart::new("t", "x", "y");
        chart.push_series(Series::new("first", vec![(0.0, 1.0), (1.0, 2.0)]));
        chart.push_series(Series::new("second", vec![(0.0, 2.0), (1.0, 1.0)]));
        let svg = chart.render();
        assert!(svg.contains(">first</text>"));
        assert!(svg.contains(">second</text>"));
        assert!(svg.contains("#1f77b4"));
        assert!(svg.contains("#d62728"));
    }
}
