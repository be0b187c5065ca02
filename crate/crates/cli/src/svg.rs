//! Deterministic SVG 1.1 diagram of the lattice rectangle.
//!
//! Lattice unit = 24 px, x to the right, y upward. The line `q·x = p·y` is
//! drawn from the origin to `(p/2, q/2)`, the far corner of the half-cell
//! border around `S`. All coordinates are multiples of 12 px, so output is
//! integer-only and byte-stable.

use std::fmt::Write as _;

use reciprocity_core::{
    fixed_points, partition_counts, side_flip_violations, LatticeRect, Result, Side, SymmetryMap,
};

const UNIT: i64 = 24;
const MARGIN_LEFT: i64 = 48;
const MARGIN_RIGHT: i64 = 56;
const MARGIN_TOP: i64 = 40;
const MARGIN_BOTTOM: i64 = 40;
const LEGEND_LINE: i64 = 18;

const COLOR_PLUS: &str = "#1f77b4";
const COLOR_MINUS: &str = "#d62728";
const COLOR_LINK: &str = "#ff7f0e";

struct Frame {
    height: u64,
}

impl Frame {
    /// `x2` and `y2` are doubled lattice coordinates.
    fn px(&self, x2: i64) -> i64 {
        MARGIN_LEFT + x2 * UNIT / 2
    }

    fn py(&self, y2: i64) -> i64 {
        MARGIN_TOP + (2 * (self.height as i64 + 1) - y2) * UNIT / 2
    }
}

fn label_step(n: u64) -> u64 {
    match n {
        0..=30 => 1,
        31..=150 => 5,
        _ => 10 * (n / 200 + 1),
    }
}

pub fn render_svg(rect: &LatticeRect, cap: u64) -> Result<String> {
    let points: Vec<_> = rect.enumerate_points(cap)?.collect();
    let centre = fixed_points(SymmetryMap::Central, rect, cap)?;
    let links = side_flip_violations(rect, cap)?;
    let counts = partition_counts(rect);

    let frame = Frame {
        height: rect.height,
    };
    let (w, h) = (rect.width as i64, rect.height as i64);
    let plot_w = (w + 1) * UNIT;
    let plot_h = (h + 1) * UNIT;
    let legend_lines = 2 + i64::from(!centre.fixed.is_empty()) + i64::from(!links.is_empty());
    let width = MARGIN_LEFT + plot_w + MARGIN_RIGHT;
    let height = MARGIN_TOP + plot_h + MARGIN_BOTTOM + legend_lines * LEGEND_LINE;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(
        s,
        "<title>Lattice rectangle for p = {}, q = {}</title>",
        rect.p(),
        rect.q()
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="20" font-size="13">p = {}, q = {}: |S| = {}</text>"#,
        MARGIN_LEFT,
        rect.p(),
        rect.q(),
        rect.total()
    );

    // grid
    let _ = writeln!(s, r##"<g stroke="#dddddd" stroke-width="1">"##);
    for x in 1..=w {
        let _ = writeln!(
            s,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            frame.px(2 * x),
            frame.py(0),
            frame.py(2 * (h + 1))
        );
    }
    for y in 1..=h {
        let _ = writeln!(
            s,
            r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#,
            frame.py(2 * y),
            frame.px(0),
            frame.px(2 * (w + 1))
        );
    }
    let _ = writeln!(s, "</g>");

    // axes and labels
    let _ = writeln!(
        s,
        r#"<g stroke="black" stroke-width="1"><line x1="{0}" y1="{1}" x2="{2}" y2="{1}"/><line x1="{0}" y1="{1}" x2="{0}" y2="{3}"/></g>"#,
        frame.px(0),
        frame.py(0),
        frame.px(2 * (w + 1)),
        frame.py(2 * (h + 1))
    );
    let _ = writeln!(s, r#"<g text-anchor="middle">"#);
    let step = label_step(rect.width);
    for x in (1..=rect.width).filter(|x| x % step == 0 || *x == 1) {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}">{x}</text>"#,
            frame.px(2 * x as i64),
            frame.py(0) + 16
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}">x</text>"#,
        frame.px(2 * (w + 1)),
        frame.py(0) + 16
    );
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g text-anchor="end">"#);
    let step = label_step(rect.height);
    for y in (1..=rect.height).filter(|y| y % step == 0 || *y == 1) {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}">{y}</text>"#,
            frame.px(0) - 6,
            frame.py(2 * y as i64) + 4
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}">y</text>"#,
        frame.px(0) - 6,
        frame.py(2 * (h + 1)) + 4
    );
    let _ = writeln!(s, "</g>");

    // border of S, half a cell outside the outermost points
    let _ = writeln!(
        s,
        r##"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#888888" stroke-dasharray="4 3"/>"##,
        frame.px(1),
        frame.py(2 * h + 1),
        w * UNIT,
        h * UNIT
    );

    let _ = writeln!(
        s,
        r#"<line class="divider" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1.5"/>"#,
        frame.px(0),
        frame.py(0),
        frame.px(2 * w + 1),
        frame.py(2 * h + 1)
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}">qx = py</text>"#,
        frame.px(2 * w + 1) + 4,
        frame.py(2 * h + 1) - 4
    );

    if !links.is_empty() {
        let _ = writeln!(
            s,
            r#"<g class="same-side" stroke="{COLOR_LINK}" stroke-width="2" stroke-dasharray="5 3">"#
        );
        for link in &links {
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                frame.px(2 * link.first.x as i64),
                frame.py(2 * link.first.y as i64),
                frame.px(2 * link.second.x as i64),
                frame.py(2 * link.second.y as i64)
            );
        }
        let _ = writeln!(s, "</g>");
    }

    let _ = writeln!(s, "<g>");
    for pt in &points {
        let (class, color) = match pt.side() {
            Some(Side::Plus) => ("s-plus", COLOR_PLUS),
            _ => ("s-minus", COLOR_MINUS),
        };
        let _ = writeln!(
            s,
            r#"<circle class="{class}" cx="{}" cy="{}" r="5" fill="{color}"><title>({}, {}) qx-py={}</title></circle>"#,
            frame.px(2 * pt.x as i64),
            frame.py(2 * pt.y as i64),
            pt.x,
            pt.y,
            pt.side_value
        );
    }
    let _ = writeln!(s, "</g>");

    for pt in &centre.fixed {
        let _ = writeln!(
            s,
            r#"<circle class="fixed" cx="{}" cy="{}" r="9" fill="none" stroke="black" stroke-width="2"/>"#,
            frame.px(2 * pt.x as i64),
            frame.py(2 * pt.y as i64)
        );
    }

    // legend
    let mut ly = MARGIN_TOP + plot_h + MARGIN_BOTTOM;
    let mut legend = vec![
        (COLOR_PLUS, format!("S+ (qx &lt; py): {}", counts.n_plus)),
        (COLOR_MINUS, format!("S- (qx &gt; py): {}", counts.n_minus)),
    ];
    if let Some(pt) = centre.fixed.first() {
        legend.push(("black", format!("fixed by C: ({}, {})", pt.x, pt.y)));
    }
    if !links.is_empty() {
        legend.push((COLOR_LINK, format!("same-side C pairs: {}", links.len())));
    }
    for (color, text) in legend {
        let _ = writeln!(
            s,
            r#"<rect x="{}" y="{}" width="10" height="10" fill="{color}"/><text x="{}" y="{}">{text}</text>"#,
            MARGIN_LEFT,
            ly - 9,
            MARGIN_LEFT + 16,
            ly
        );
        ly += LEGEND_LINE;
    }

    let _ = writeln!(s, "</svg>");
    Ok(s)
}
