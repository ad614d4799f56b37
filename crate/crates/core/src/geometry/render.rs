use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};

use super::{Pattern, TileMap};

/// Printed color numbers of the canonical blocks of the hexagon Type II
/// coloring under the `paper-fig1b` palette: blue 1, green 2, red 3,
/// yellow 4.
pub const FOUR_COLOR_NUMBERS: [usize; 4] = [4, 3, 1, 2];

const DEFAULT_COLORS: [(&str, &str); 12] = [
    ("blue", "#4e79a7"),
    ("orange", "#f28e2b"),
    ("red", "#e15759"),
    ("teal", "#76b7b2"),
    ("green", "#59a14f"),
    ("yellow", "#edc948"),
    ("purple", "#b07aa1"),
    ("pink", "#ff9da7"),
    ("brown", "#9c755f"),
    ("gray", "#bab0ac"),
    ("olive", "#8f8c2e"),
    ("navy", "#2b3a67"),
];

// canonical blocks of the hexagon Type II 4-coloring are {e,a²b}, the red orbit, {a²,a⁴b}, {a⁴,b}
const FIG1B: [(&str, &str); 4] =
    [("yellow", "#f2d21b"), ("red", "#d62728"), ("blue", "#1f77b4"), ("green", "#2ca02c")];

// the transferred coloring, canonical blocks {e,a⁵b}, the gray orbit, {a²,ab}, {a⁴,a³b}
const FIG5A: [(&str, &str); 4] =
    [("purple", "#7b3fa0"), ("gray", "#8c8c8c"), ("white", "#ffffff"), ("light blue", "#8fc7ef")];

/// Fill colors by block index; indices past the end wrap around.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Palette {
    names: Vec<String>,
    colors: Vec<String>,
}

fn valid_hex(s: &str) -> bool {
    s.len() == 7 && s.starts_with('#') && s[1..].chars().all(|c| c.is_ascii_hexdigit())
}

impl Default for Palette {
    fn default() -> Self {
        Self::from_pairs(&DEFAULT_COLORS)
    }
}

impl Palette {
    fn from_pairs(pairs: &[(&str, &str)]) -> Self {
        Palette {
            names: pairs.iter().map(|p| p.0.to_string()).collect(),
            colors: pairs.iter().map(|p| p.1.to_string()).collect(),
        }
    }

    /// `default`, `paper-fig1b` or `paper-fig5a`.
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "default" => Ok(Self::default()),
            "paper-fig1b" => Ok(Self::from_pairs(&FIG1B)),
            "paper-fig5a" => Ok(Self::from_pairs(&FIG5A)),
            other => Err(Error::invalid(format!("unknown palette \"{other}\""))),
        }
    }

    pub fn from_colors(colors: Vec<String>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::invalid("palette is empty"));
        }
        let colors: Vec<String> = colors.into_iter().map(|c| c.to_ascii_lowercase()).collect();
        if let Some(bad) = colors.iter().find(|c| !valid_hex(c)) {
            return Err(Error::invalid(format!("\"{bad}\" is not a #rrggbb color")));
        }
        Ok(Palette { names: colors.clone(), colors })
    }

    /// `{"0": "#rrggbb", "1": ...}` with keys exactly `0..k`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BTreeMap<String, String> =
            serde_json::from_str(text).map_err(|e| Error::invalid(format!("palette JSON: {e}")))?;
        let mut indexed = BTreeMap::new();
        for (k, v) in raw {
            let i: usize = k.parse().map_err(|_| Error::invalid(format!("palette key \"{k}\" is not an index")))?;
            indexed.insert(i, v);
        }
        if indexed.keys().enumerate().any(|(pos, &i)| pos != i) {
            return Err(Error::invalid("palette keys must be 0, 1, ..., k-1"));
        }
        Self::from_colors(indexed.into_values().collect())
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, block: usize) -> &str {
        &self.colors[block % self.colors.len()]
    }

    pub fn name(&self, block: usize) -> &str {
        &self.names[block % self.names.len()]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    /// Cell blocks drawn along x and y (p4m only).
    pub repeat: [usize; 2],
    /// Pixels per unit length.
    pub scale: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { repeat: [1, 1], scale: 60.0 }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn key(p: [f64; 2]) -> (i64, i64) {
    ((p[0] * 1e6).round() as i64, (p[1] * 1e6).round() as i64)
}

/// SVG 1.1 document with one `<path>` per tile (`data-label` carries the
/// element label) and a single stroked path along block boundaries, which
/// are edges whose two sides lie in different blocks or on the border.
pub fn render_svg(map: &TileMap, assignment: &[usize], palette: &Palette, options: &RenderOptions) -> Result<String> {
    let group = map.group();
    if assignment.len() != group.order() {
        return Err(Error::invalid(format!(
            "coloring assigns {} of {} tiles",
            assignment.len(),
            group.order()
        )));
    }
    if options.repeat[0] == 0 || options.repeat[1] == 0 || !(options.scale > 0.0) {
        return Err(Error::invalid("repeat counts and scale must be positive"));
    }
    let offsets: Vec<[f64; 2]> = match map.pattern() {
        Pattern::Hexagon => vec![[0.0, 0.0]],
        Pattern::P4m { n } => {
            let n = n as f64;
            let mut v = Vec::new();
            for j in 0..options.repeat[1] {
                for i in 0..options.repeat[0] {
                    v.push([i as f64 * n, j as f64 * n]);
                }
            }
            v
        }
    };

    // screen coordinates: y grows downward
    let to_screen = |p: [f64; 2]| [p[0] * options.scale, -p[1] * options.scale];
    let mut tiles = Vec::new();
    for off in &offsets {
        for g in group.elements() {
            let pts: Vec<[f64; 2]> =
                map.polygon(g).iter().map(|p| to_screen([p[0] + off[0], p[1] + off[1]])).collect();
            tiles.push((g, assignment[g.index()], pts));
        }
    }

    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    let mut edges: BTreeMap<((i64, i64), (i64, i64)), (Vec<usize>, [[f64; 2]; 2])> = BTreeMap::new();
    for (_, block, pts) in &tiles {
        for (k, p) in pts.iter().enumerate() {
            for d in 0..2 {
                lo[d] = lo[d].min(p[d]);
                hi[d] = hi[d].max(p[d]);
            }
            let q = pts[(k + 1) % pts.len()];
            let (a, b) = (key(*p), key(q));
            let id = if a <= b { (a, b) } else { (b, a) };
            edges.entry(id).or_insert_with(|| (Vec::new(), [*p, q])).0.push(*block);
        }
    }
    let pad = 4.0;
    let (w, h) = (hi[0] - lo[0] + 2.0 * pad, hi[1] - lo[1] + 2.0 * pad);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">",
        num(lo[0] - pad),
        num(lo[1] - pad),
        num(w),
        num(h),
        num(w),
        num(h)
    );
    out.push_str("<g stroke-width=\"0.5\" stroke-linejoin=\"round\">\n");
    for (g, block, pts) in &tiles {
        let mut d = String::new();
        for (k, p) in pts.iter().enumerate() {
            let _ = write!(d, "{}{} {} ", if k == 0 { "M" } else { "L" }, num(p[0]), num(p[1]));
        }
        d.push('Z');
        let fill = palette.color(*block);
        let _ = writeln!(
            out,
            "<path d=\"{d}\" fill=\"{fill}\" stroke=\"{fill}\" data-label=\"{}\" data-block=\"{block}\"/>",
            escape(group.label(*g))
        );
    }
    out.push_str("</g>\n");
    let mut d = String::new();
    for (blocks, [p, q]) in edges.values() {
        if blocks.len() == 1 || blocks.iter().any(|&b| b != blocks[0]) {
            let _ = write!(d, "M{} {} L{} {} ", num(p[0]), num(p[1]), num(q[0]), num(q[1]));
        }
    }
    let _ = writeln!(
        out,
        "<path class=\"block-boundaries\" d=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" stroke-linecap=\"round\"/>",
        d.trim_end()
    );
    out.push_str("</svg>\n");
    Ok(out)
}
