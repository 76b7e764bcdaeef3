//! Standalone SVG line plots, written by hand: axes, ticks, one polyline
//! per curve, and clipping that breaks a line instead of drawing it off-panel.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::numerics::SampledSignal;

const PANEL_W: f64 = 480.0;
const PANEL_H: f64 = 320.0;
const MARGIN_L: f64 = 60.0;
const MARGIN_R: f64 = 20.0;
const MARGIN_T: f64 = 36.0;
const MARGIN_B: f64 = 44.0;
const TITLE_H: f64 = 32.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Original,
    Transformed,
    Kernel,
}

impl Role {
    fn style(&self) -> &'static str {
        match self {
            Role::Original => r##"stroke="#1f4fbf" stroke-width="1.6""##,
            Role::Transformed => r##"stroke="#c0392b" stroke-width="1.6" stroke-dasharray="6 3""##,
            Role::Kernel => r##"stroke="#111111" stroke-width="1.4""##,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Curve {
    pub signal: SampledSignal,
    pub role: Role,
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct Panel {
    pub title: String,
    pub curves: Vec<Curve>,
    pub x_range: (f64, f64),
    /// Samples outside this range are clipped.
    pub y_range: (f64, f64),
}

#[derive(Debug, Clone)]
pub struct FigureSpec {
    figure_id: u8,
    pub title: String,
    pub panels: Vec<Panel>,
}

impl FigureSpec {
    pub fn new(figure_id: u8, title: impl Into<String>, panels: Vec<Panel>) -> Result<Self> {
        if !(1..=3).contains(&figure_id) {
            return Err(Error::InvalidParameter(format!(
                "figure id {figure_id} is not 1, 2 or 3"
            )));
        }
        if panels.is_empty() {
            return Err(Error::EmptyFigure);
        }
        Ok(Self {
            figure_id,
            title: title.into(),
            panels,
        })
    }

    pub fn figure_id(&self) -> u8 {
        self.figure_id
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Tick positions at 1, 2 or 5 times a power of ten, about five per axis.
fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let raw = (hi - lo) / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|k| k as f64 * step).collect()
}

fn fmt_tick(v: f64) -> String {
    let s = format!("{:.3}", v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

struct Frame {
    ox: f64,
    oy: f64,
    x: (f64, f64),
    y: (f64, f64),
}

impl Frame {
    fn w(&self) -> f64 {
        PANEL_W - MARGIN_L - MARGIN_R
    }
    fn h(&self) -> f64 {
        PANEL_H - MARGIN_T - MARGIN_B
    }
    fn px(&self, x: f64) -> f64 {
        self.ox + MARGIN_L + (x - self.x.0) / (self.x.1 - self.x.0) * self.w()
    }
    fn py(&self, y: f64) -> f64 {
        self.oy + MARGIN_T + (self.y.1 - y) / (self.y.1 - self.y.0) * self.h()
    }
}

fn curve_segments(frame: &Frame, signal: &SampledSignal) -> Vec<Vec<(f64, f64)>> {
    let mut segments = Vec::new();
    let mut current: Vec<(f64, f64)> = Vec::new();
    for (x, y) in signal.iter() {
        if x < frame.x.0 || x > frame.x.1 {
            continue;
        }
        if y < frame.y.0 || y > frame.y.1 {
            if current.len() > 1 {
                segments.push(std::mem::take(&mut current));
            }
            current.clear();
            continue;
        }
        let p = (frame.px(x), frame.py(y));
        // drop points that would not move the pen by half a pixel
        if let Some(last) = current.last() {
            if (p.0 - last.0).abs() < 0.5 && (p.1 - last.1).abs() < 0.5 {
                continue;
            }
        }
        current.push(p);
    }
    if current.len() > 1 {
        segments.push(current);
    }
    segments
}

fn render_panel(out: &mut String, panel: &Panel, ox: f64, oy: f64) -> Result<()> {
    let (x0, x1) = panel.x_range;
    let (y0, y1) = panel.y_range;
    if !(x1 > x0 && y1 > y0 && x0.is_finite() && x1.is_finite() && y0.is_finite() && y1.is_finite())
    {
        return Err(Error::InvalidParameter(format!(
            "bad axis ranges in panel `{}`",
            panel.title
        )));
    }
    let f = Frame {
        ox,
        oy,
        x: (x0, x1),
        y: (y0, y1),
    };
    let (left, right, top, bottom) = (f.px(x0), f.px(x1), f.py(y1), f.py(y0));
    let w = |out: &mut String, s: String| out.push_str(&s);

    w(
        out,
        format!(
            r##"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="14">{}</text>"##,
            (left + right) / 2.0,
            oy + 22.0,
            escape(&panel.title)
        ),
    );
    w(
        out,
        format!(
            r##"<rect x="{left:.1}" y="{top:.1}" width="{:.1}" height="{:.1}" fill="none" stroke="#444444"/>"##,
            right - left,
            bottom - top
        ),
    );
    for t in ticks(x0, x1) {
        let p = f.px(t);
        w(
            out,
            format!(
                r##"<line x1="{p:.1}" y1="{bottom:.1}" x2="{p:.1}" y2="{:.1}" stroke="#444444"/>"##,
                bottom + 5.0
            ),
        );
        w(
            out,
            format!(
                r##"<text x="{p:.1}" y="{:.1}" text-anchor="middle" font-size="11">{}</text>"##,
                bottom + 18.0,
                fmt_tick(t)
            ),
        );
    }
    for t in ticks(y0, y1) {
        let p = f.py(t);
        w(
            out,
            format!(
                r##"<line x1="{:.1}" y1="{p:.1}" x2="{left:.1}" y2="{p:.1}" stroke="#444444"/>"##,
                left - 5.0
            ),
        );
        w(
            out,
            format!(
                r##"<text x="{:.1}" y="{:.1}" text-anchor="end" font-size="11">{}</text>"##,
                left - 8.0,
                p + 4.0,
                fmt_tick(t)
            ),
        );
    }
    if y0 < 0.0 && y1 > 0.0 {
        let p = f.py(0.0);
        w(
            out,
            format!(
                r##"<line x1="{left:.1}" y1="{p:.1}" x2="{right:.1}" y2="{p:.1}" stroke="#bbbbbb" stroke-width="0.8"/>"##
            ),
        );
    }
    w(
        out,
        format!(
            r##"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="12">x</text>"##,
            (left + right) / 2.0,
            bottom + 36.0
        ),
    );
    w(
        out,
        format!(
            r##"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="12" transform="rotate(-90 {:.1} {:.1})">value</text>"##,
            ox + 16.0,
            (top + bottom) / 2.0,
            ox + 16.0,
            (top + bottom) / 2.0
        ),
    );

    for c in &panel.curves {
        for seg in curve_segments(&f, &c.signal) {
            out.push_str(r##"<polyline fill="none" "##);
            out.push_str(c.role.style());
            out.push_str(r##" points=""##);
            for (i, (px, py)) in seg.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{px:.2},{py:.2}");
            }
            out.push_str("\"/>\n");
        }
    }
    for (i, c) in panel.curves.iter().enumerate() {
        let y = top + 14.0 + 16.0 * i as f64;
        let _ = write!(
            out,
            r##"<line x1="{:.1}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" {}/><text x="{:.1}" y="{:.1}" text-anchor="end" font-size="11">{}</text>"##,
            right - 34.0,
            right - 8.0,
            c.role.style(),
            right - 40.0,
            y + 4.0,
            escape(&c.label)
        );
        out.push('\n');
    }
    Ok(())
}

/// Lays panels out in one row (up to two panels) or a two-column grid.
pub fn render_figure(spec: &FigureSpec) -> Result<String> {
    if spec.panels.is_empty() {
        return Err(Error::EmptyFigure);
    }
    let n = spec.panels.len();
    let cols = n.min(2);
    let rows = n.div_ceil(cols);
    let width = cols as f64 * PANEL_W;
    let height = TITLE_H + rows as f64 * PANEL_H;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif">"##
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="white"/>"##);
    let _ = writeln!(
        out,
        r##"<text x="{:.1}" y="22" text-anchor="middle" font-size="16" font-weight="bold">{}</text>"##,
        width / 2.0,
        escape(&spec.title)
    );
    for (i, p) in spec.panels.iter().enumerate() {
        let ox = (i % cols) as f64 * PANEL_W;
        let oy = TITLE_H + (i / cols) as f64 * PANEL_H;
        let _ = writeln!(out, r##"<g class="panel" id="panel-{}">"##, i + 1);
        render_panel(&mut out, p, ox, oy)?;
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn write_figure(spec: &FigureSpec, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, render_figure(spec)?)?;
    Ok(())
}
