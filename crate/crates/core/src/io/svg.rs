use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{good_edges, segment_points, trace_polygons, Block, Direction, Region, Segment, TraceError, UnitSquare};
use crate::param::Param;
use crate::pet::{oriented_tile, OrientedLabel};
use crate::scalar::Scalar;
use crate::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Layer {
    GridLines,
    LightPoints,
    Connectors,
    Polygons,
    OrientationArrows,
}

impl Layer {
    pub const ALL: [Layer; 5] = [
        Layer::GridLines,
        Layer::LightPoints,
        Layer::Connectors,
        Layer::Polygons,
        Layer::OrientationArrows,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Layer::GridLines => "grid-lines",
            Layer::LightPoints => "light-points",
            Layer::Connectors => "connectors",
            Layer::Polygons => "polygons",
            Layer::OrientationArrows => "orientation-arrows",
        }
    }

    fn default_color(self) -> &'static str {
        match self {
            Layer::GridLines => "#9aa5b1",
            Layer::LightPoints => "#d9480f",
            Layer::Connectors => "#1c7ed6",
            Layer::Polygons => "#212529",
            Layer::OrientationArrows => "#2b8a3e",
        }
    }
}

impl FromStr for Layer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Layer::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown layer {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderConfig {
    pub window: Region,
    /// Pixels per unit.
    pub scale: i64,
    pub layers: BTreeSet<Layer>,
    /// Overrides of the default layer colors.
    pub palette: BTreeMap<Layer, String>,
}

impl RenderConfig {
    pub fn new(window: Region, scale: i64, layers: impl IntoIterator<Item = Layer>) -> Self {
        RenderConfig {
            window,
            scale,
            layers: layers.into_iter().collect(),
            palette: BTreeMap::new(),
        }
    }

    fn color(&self, l: Layer) -> &str {
        self.palette.get(&l).map_or(l.default_color(), String::as_str)
    }
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("scale must be at least 1")]
    Scale,
    #[error(transparent)]
    Trace(#[from] TraceError),
}

/// Exact pixel mapping: `floor(scale·(x − x0))`, with `y` flipped.
struct Pixels {
    x0: Rat,
    y1: Rat,
    scale: Rat,
}

impl Pixels {
    fn x(&self, x: &Rat) -> i64 {
        (self.scale.clone() * (x.clone() - self.x0.clone())).floor_i64()
    }

    fn y(&self, y: &Rat) -> i64 {
        (self.scale.clone() * (self.y1.clone() - y.clone())).floor_i64()
    }
}

/// Renders the window as an SVG 1.1 document. Output depends only on the
/// arguments.
pub fn render_svg(param: &Param, cfg: &RenderConfig) -> Result<String, RenderError> {
    if cfg.scale < 1 {
        return Err(RenderError::Scale);
    }
    let w = cfg.window;
    let (width, height) = (w.width * cfg.scale, w.height * cfg.scale);
    let px = Pixels {
        x0: Rat::int(w.x0),
        y1: Rat::int(w.y0 + w.height),
        scale: Rat::int(cfg.scale),
    };
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, "<!-- plaid model p/q={param} window={},{},{},{} -->", w.x0, w.y0, w.width, w.height).unwrap();
    if cfg.layers.contains(&Layer::OrientationArrows) {
        let c = cfg.color(Layer::OrientationArrows);
        writeln!(
            out,
            r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="{c}"/></marker></defs>"#
        )
        .unwrap();
    }
    writeln!(out, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#).unwrap();
    for layer in &cfg.layers {
        writeln!(out, r#"<g id="{}">"#, layer.name()).unwrap();
        match layer {
            Layer::GridLines => grid_lines(param, cfg, &px, &mut out),
            Layer::LightPoints => light_points(param, cfg, &px, &mut out),
            Layer::Connectors => connectors(param, cfg, &px, &mut out),
            Layer::Polygons => polygons(param, cfg, &px, &mut out)?,
            Layer::OrientationArrows => arrows(param, cfg, &px, &mut out),
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

fn line(out: &mut String, px: &Pixels, a: (&Rat, &Rat), b: (&Rat, &Rat), color: &str, width: i64) {
    writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="{width}"/>"#,
        px.x(a.0),
        px.y(a.1),
        px.x(b.0),
        px.y(b.1)
    )
    .unwrap();
}

fn grid_lines(param: &Param, cfg: &RenderConfig, px: &Pixels, out: &mut String) {
    let w = cfg.window;
    let color = cfg.color(Layer::GridLines);
    let (x0, x1) = (Rat::int(w.x0), Rat::int(w.x0 + w.width));
    let (y0, y1) = (Rat::int(w.y0), Rat::int(w.y0 + w.height));
    for c in w.y0..=w.y0 + w.height {
        line(out, px, (&x0, &Rat::int(c)), (&x1, &Rat::int(c)), color, 1);
    }
    for c in w.x0..=w.x0 + w.width {
        line(out, px, (&Rat::int(c), &y0), (&Rat::int(c), &y1), color, 1);
    }
    // Lines y = m − s·x for both slopes, clipped to the window.
    for s in [param.big_p::<Rat>(), param.big_q::<Rat>()] {
        let lo = (y0.clone() + s.clone() * x0.clone()).floor_i64();
        let hi = (y1.clone() + s.clone() * x1.clone()).floor_i64() + 1;
        for m in lo..=hi {
            let m = Rat::int(m);
            let xa = x0.clone().max((m.clone() - y1.clone()) / s.clone());
            let xb = x1.clone().min((m.clone() - y0.clone()) / s.clone());
            if xa >= xb {
                continue;
            }
            let ya = m.clone() - s.clone() * xa.clone();
            let yb = m - s.clone() * xb.clone();
            line(out, px, (&xa, &ya), (&xb, &yb), color, 1);
        }
    }
}

fn light_points(param: &Param, cfg: &RenderConfig, px: &Pixels, out: &mut String) {
    let w = cfg.window;
    let color = cfg.color(Layer::LightPoints);
    let r = (cfg.scale / 10).max(1);
    let mut segs = Vec::new();
    for y in w.y0..=w.y0 + w.height {
        for x in w.x0..w.x0 + w.width {
            segs.push(Segment::Horizontal { x, y });
        }
    }
    for x in w.x0..=w.x0 + w.width {
        for y in w.y0..w.y0 + w.height {
            segs.push(Segment::Vertical { x, y });
        }
    }
    for s in segs {
        for p in segment_points::<Rat>(param, s).into_iter().filter(|p| p.is_light()) {
            writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="{}" fill="{color}"/>"#,
                px.x(&p.location.0),
                px.y(&p.location.1),
                r * p.multiplicity as i64
            )
            .unwrap();
        }
    }
}

fn edge_midpoint(sq: UnitSquare, d: Direction) -> (Rat, Rat) {
    let (cx, cy) = sq.center::<Rat>();
    let h = Rat::ratio(1, 2);
    let (dx, dy) = d.vector();
    (cx + h.clone() * Rat::int(dx), cy + h * Rat::int(dy))
}

fn connectors(param: &Param, cfg: &RenderConfig, px: &Pixels, out: &mut String) {
    let color = cfg.color(Layer::Connectors);
    let width = (cfg.scale / 12).max(1);
    for sq in cfg.window.squares() {
        let (cx, cy) = sq.center::<Rat>();
        for d in good_edges(param, sq).iter() {
            let (mx, my) = edge_midpoint(sq, d);
            line(out, px, (&cx, &cy), (&mx, &my), color, width);
        }
    }
}

fn polygons(param: &Param, cfg: &RenderConfig, px: &Pixels, out: &mut String) -> Result<(), TraceError> {
    let w = cfg.window;
    let color = cfg.color(Layer::Polygons);
    let width = (cfg.scale / 8).max(1);
    let om = param.omega();
    let (bi0, bj0) = (w.x0.div_euclid(om), w.y0.div_euclid(om));
    let (bi1, bj1) = ((w.x0 + w.width - 1).div_euclid(om), (w.y0 + w.height - 1).div_euclid(om));
    for bi in bi0..=bi1 {
        for bj in bj0..=bj1 {
            let b = Block::new(bi, bj);
            for poly in trace_polygons(param, b.region(param))? {
                if !poly.vertices().iter().any(|v| w.contains(*v)) {
                    continue;
                }
                let pts: Vec<String> = poly
                    .vertices()
                    .iter()
                    .map(|v| {
                        let (x, y) = v.center::<Rat>();
                        format!("{},{}", px.x(&x), px.y(&y))
                    })
                    .collect();
                writeln!(
                    out,
                    r#"<polygon points="{}" fill="none" stroke="{color}" stroke-width="{width}"/>"#,
                    pts.join(" ")
                )
                .unwrap();
            }
        }
    }
    Ok(())
}

fn arrows(param: &Param, cfg: &RenderConfig, px: &Pixels, out: &mut String) {
    let color = cfg.color(Layer::OrientationArrows);
    for sq in cfg.window.squares() {
        let Ok(OrientedLabel::Arrow { to, .. }) = oriented_tile::<Rat>(param, sq) else { continue };
        let (cx, cy) = sq.center::<Rat>();
        let (mx, my) = edge_midpoint(sq, to);
        writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="1" marker-end="url(#arrow)"/>"#,
            px.x(&cx),
            px.y(&cy),
            px.x(&mx),
            px.y(&my)
        )
        .unwrap();
    }
}
