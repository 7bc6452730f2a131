//! SVG rendering of the potential with energy levels drawn across the well.

use std::fmt::Write as _;

use quartic_core::{Error, OscillatorParams, Result};

/// Number of samples of the `V(x)` polyline.
pub const POTENTIAL_SAMPLES: usize = 401;

const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 50.0;

pub const COMPUTED_COLOR: &str = "#CC0000";
pub const WKB_COLOR: &str = "#888888";

/// One group of energies drawn in a common color.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSet {
    /// Used as the CSS class suffix and the legend text.
    pub label: String,
    pub color: String,
    pub energies: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    /// Plot spans `[−x_max, x_max]`.
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub level_sets: Vec<LevelSet>,
    pub potential: OscillatorParams,
    pub width: u32,
    pub height: u32,
    /// Draw levels across the whole plot instead of between turning points.
    pub full_width: bool,
}

impl PlotSpec {
    /// Ranges that hold the outer turning points of the highest level with a
    /// 10% margin, and 10% headroom above it.
    pub fn with_default_ranges(
        potential: OscillatorParams,
        level_sets: Vec<LevelSet>,
        width: u32,
        height: u32,
    ) -> Result<Self> {
        let e_max = level_sets
            .iter()
            .flat_map(|s| s.energies.iter().copied())
            .fold(f64::NEG_INFINITY, f64::max);
        if !e_max.is_finite() {
            return Err(Error::Domain("no energies to plot".into()));
        }
        let x_t = potential
            .turning_point(e_max)
            .ok_or_else(|| Error::Domain(format!("energy {e_max} lies below the potential")))?;
        let y_min = potential_minimum(&potential).min(0.0);
        let y_max = if e_max > 0.0 { 1.1 * e_max } else { 0.1 * (e_max - y_min).abs() + e_max };
        Ok(Self {
            x_max: 1.1 * x_t.max(f64::MIN_POSITIVE),
            y_min,
            y_max,
            level_sets,
            potential,
            width,
            height,
            full_width: false,
        })
    }

    fn validate(&self) -> Result<()> {
        let domain = |m: String| Err(Error::Domain(m));
        if self.level_sets.is_empty() || self.level_sets.iter().all(|s| s.energies.is_empty()) {
            return domain("plot needs at least one energy level".into());
        }
        if !(self.x_max > 0.0 && self.x_max.is_finite()) {
            return domain(format!("x_max must be positive, got {}", self.x_max));
        }
        if self.y_max.is_nan() || self.y_min.is_nan() || self.y_max <= self.y_min {
            return domain(format!("empty y range [{}, {}]", self.y_min, self.y_max));
        }
        if (self.width as f64) <= MARGIN_LEFT + MARGIN_RIGHT || (self.height as f64) <= MARGIN_TOP + MARGIN_BOTTOM {
            return domain(format!("canvas {}x{} is too small", self.width, self.height));
        }
        for s in &self.level_sets {
            if let Some(e) = s.energies.iter().find(|e| !(**e >= self.y_min && **e <= self.y_max)) {
                return domain(format!("energy {e} of '{}' is outside [{}, {}]", s.label, self.y_min, self.y_max));
            }
        }
        Ok(())
    }
}

fn potential_minimum(p: &OscillatorParams) -> f64 {
    if p.k() < 0.0 && p.lambda() > 0.0 {
        -p.k() * p.k() / (4.0 * p.lambda())
    } else {
        0.0
    }
}

struct Frame {
    x_max: f64,
    y_min: f64,
    y_max: f64,
    plot_w: f64,
    plot_h: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        MARGIN_LEFT + (x + self.x_max) / (2.0 * self.x_max) * self.plot_w
    }

    fn py(&self, y: f64) -> f64 {
        MARGIN_TOP + (self.y_max - y) / (self.y_max - self.y_min) * self.plot_h
    }
}

/// Tick step of the form {1, 2, 5}·10ᵏ giving at most ~8 intervals.
fn tick_step(span: f64) -> f64 {
    let raw = span / 8.0;
    let mag = 10f64.powf(raw.log10().floor());
    [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag)
}

fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let step = tick_step(hi - lo);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|i| i as f64 * step).collect()
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn label(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.to_string() }
}

/// Renders a standalone SVG document. Output depends only on `spec`.
pub fn render_levels_svg(spec: &PlotSpec) -> Result<String> {
    spec.validate()?;
    let (w, h) = (spec.width as f64, spec.height as f64);
    let f = Frame {
        x_max: spec.x_max,
        y_min: spec.y_min,
        y_max: spec.y_max,
        plot_w: w - MARGIN_LEFT - MARGIN_RIGHT,
        plot_h: h - MARGIN_TOP - MARGIN_BOTTOM,
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" viewBox="0 0 {0} {1}" font-family="sans-serif" font-size="14">"#,
        spec.width, spec.height
    );
    let _ = writeln!(
        svg,
        r#"<defs><clipPath id="plot-area"><rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}"/></clipPath></defs>"#,
        MARGIN_LEFT, MARGIN_TOP, f.plot_w, f.plot_h
    );
    let _ = writeln!(svg, r##"<rect x="0" y="0" width="{}" height="{}" fill="#FFFFFF"/>"##, spec.width, spec.height);

    // Axes: bottom and left edges of the plot area.
    let (x0, x1) = (MARGIN_LEFT, MARGIN_LEFT + f.plot_w);
    let (y0, y1) = (MARGIN_TOP, MARGIN_TOP + f.plot_h);
    let _ = writeln!(
        svg,
        r##"<path class="axis" d="M{x0:.2},{y0:.2} L{x0:.2},{y1:.2} L{x1:.2},{y1:.2}" fill="none" stroke="#000000" stroke-width="1"/>"##
    );
    for t in ticks(-spec.x_max, spec.x_max) {
        let x = f.px(t);
        let _ = writeln!(
            svg,
            r##"<line class="tick" x1="{x:.2}" y1="{y1:.2}" x2="{x:.2}" y2="{:.2}" stroke="#000000"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"##,
            y1 + 5.0,
            y1 + 20.0,
            label(t)
        );
    }
    for t in ticks(spec.y_min, spec.y_max) {
        let y = f.py(t);
        let _ = writeln!(
            svg,
            r##"<line class="tick" x1="{:.2}" y1="{y:.2}" x2="{x0:.2}" y2="{y:.2}" stroke="#000000"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"##,
            x0 - 5.0,
            x0 - 8.0,
            y + 5.0,
            label(t)
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">x</text>"#,
        MARGIN_LEFT + 0.5 * f.plot_w,
        h - 10.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="15" y="{:.2}" text-anchor="middle" transform="rotate(-90 15 {:.2})">E</text>"#,
        MARGIN_TOP + 0.5 * f.plot_h,
        MARGIN_TOP + 0.5 * f.plot_h
    );

    let mut points = String::new();
    for i in 0..POTENTIAL_SAMPLES {
        let x = -spec.x_max + 2.0 * spec.x_max * i as f64 / (POTENTIAL_SAMPLES - 1) as f64;
        if i > 0 {
            points.push(' ');
        }
        let _ = write!(points, "{:.2},{:.2}", f.px(x), f.py(spec.potential.potential(x)));
    }
    let _ = writeln!(
        svg,
        r##"<polyline class="potential" clip-path="url(#plot-area)" fill="none" stroke="#000000" stroke-width="2" points="{points}"/>"##
    );

    for set in &spec.level_sets {
        for &e in &set.energies {
            let (xa, xb) = match spec.potential.turning_point(e) {
                Some(t) if !spec.full_width => (-t.min(spec.x_max), t.min(spec.x_max)),
                _ => (-spec.x_max, spec.x_max),
            };
            let y = f.py(e);
            let _ = writeln!(
                svg,
                r#"<line class="level {}" data-energy="{e}" x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{}" stroke-width="1.5"/>"#,
                escape(&set.label),
                f.px(xa),
                f.px(xb),
                escape(&set.color)
            );
        }
    }

    for (i, set) in spec.level_sets.iter().enumerate() {
        let y = MARGIN_TOP + 20.0 + 20.0 * i as f64;
        let x = MARGIN_LEFT + 15.0;
        let _ = writeln!(
            svg,
            r#"<line class="legend" x1="{x:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{}" stroke-width="3"/><text x="{:.2}" y="{:.2}">{}</text>"#,
            y - 5.0,
            x + 25.0,
            y - 5.0,
            escape(&set.color),
            x + 32.0,
            y,
            escape(&set.label)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quartic() -> OscillatorParams {
        OscillatorParams::pure_quartic(1.0).unwrap()
    }

    fn one_level(e: f64) -> PlotSpec {
        let set = LevelSet {
            label: "computed".into(),
            color: COMPUTED_COLOR.into(),
            energies: vec![e],
        };
        PlotSpec::with_default_ranges(quartic(), vec![set], 800, 1000).unwrap()
    }

    fn level_lines(svg: &str) -> Vec<&str> {
        svg.lines().filter(|l| l.contains(r#"class="level "#)).collect()
    }

    fn attr(line: &str, name: &str) -> f64 {
        let key = format!(" {name}=\"");
        let start = line.find(&key).unwrap() + key.len();
        let end = start + line[start..].find('"').unwrap();
        line[start..end].parse().unwrap()
    }

    #[test]
    fn single_level_single_segment() {
        let svg = render_levels_svg(&one_level(1.0)).unwrap();
        assert_eq!(level_lines(&svg).len(), 1);
        assert_eq!(svg.matches("<polyline").count(), 1);
        let pts = svg.lines().find(|l| l.contains("potential")).unwrap();
        assert_eq!(pts.matches(',').count(), POTENTIAL_SAMPLES);
    }

    #[test]
    fn segment_ends_at_turning_points() {
        let e = 2.5;
        let spec = one_level(e);
        let svg = render_levels_svg(&spec).unwrap();
        let line = level_lines(&svg)[0];
        let plot_w = 800.0 - MARGIN_LEFT - MARGIN_RIGHT;
        let to_x = |px: f64| (px - MARGIN_LEFT) / plot_w * 2.0 * spec.x_max - spec.x_max;
        let x_t = (4.0 * e).powf(0.25);
        let px_per_unit = plot_w / (2.0 * spec.x_max);
        assert!((to_x(attr(line, "x1")) + x_t).abs() * px_per_unit <= 1.0);
        assert!((to_x(attr(line, "x2")) - x_t).abs() * px_per_unit <= 1.0);
    }

    #[test]
    fn full_width_spans_plot() {
        let mut spec = one_level(1.0);
        spec.full_width = true;
        let svg = render_levels_svg(&spec).unwrap();
        let line = level_lines(&svg)[0];
        assert_eq!(attr(line, "x1"), MARGIN_LEFT);
        assert_eq!(attr(line, "x2"), 800.0 - MARGIN_RIGHT);
    }

    #[test]
    fn empty_sets_are_rejected() {
        let mut spec = one_level(1.0);
        spec.level_sets.clear();
        assert!(matches!(render_levels_svg(&spec), Err(Error::Domain(_))));
        spec.level_sets.push(LevelSet { label: "x".into(), color: "#000".into(), energies: vec![] });
        assert!(render_levels_svg(&spec).is_err());
        assert!(PlotSpec::with_default_ranges(quartic(), vec![], 800, 600).is_err());
    }

    #[test]
    fn out_of_range_energy_is_rejected() {
        let mut spec = one_level(1.0);
        spec.level_sets[0].energies.push(100.0);
        assert!(render_levels_svg(&spec).is_err());
    }

    #[test]
    fn deterministic() {
        let spec = one_level(3.0);
        assert_eq!(render_levels_svg(&spec).unwrap(), render_levels_svg(&spec).unwrap());
    }

    #[test]
    fn tick_steps() {
        assert_eq!(tick_step(8.0), 1.0);
        assert_eq!(tick_step(19.5), 5.0);
        assert!((tick_step(0.7) - 0.1).abs() < 1e-15);
        assert_eq!(ticks(-3.4, 3.4), vec![-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0]);
        assert_eq!(label(-0.0), "0");
        assert_eq!(label(2.5), "2.5");
    }
}
