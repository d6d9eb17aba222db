//! Walking strings over the lattice and drawing the result.

mod trace;

use std::fmt::Write;

pub use trace::{DrawnShape, Edge, Pen, Point, Trace, TraceEvent};

use crate::digit::Dimension;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderConfig {
    /// Pixels per block.
    pub cell: u32,
    pub show_grid: bool,
    pub show_origin: bool,
    pub margin: u32,
}

impl Default for RenderConfig {
    fn default() -> Self {
        Self {
            cell: 20,
            show_grid: false,
            show_origin: true,
            margin: 10,
        }
    }
}

fn require_plane(shape: &DrawnShape) -> Result<()> {
    if shape.dim() != Dimension::PLANE {
        return Err(Error::DimensionUnsupported(shape.dim().get()));
    }
    Ok(())
}

/// Text grid, top row at the largest axis-2 coordinate.
///
/// Lattice points touched by an edge are `+`, the origin is `o`. Horizontal
/// edges are `--` and vertical ones `|`; edges drawn more than once use `==`
/// and `‖`. Trailing spaces are trimmed and every line ends in `\n`.
pub fn render_ascii(shape: &DrawnShape) -> Result<String> {
    require_plane(shape)?;
    let (lo, hi) = shape.bounds();
    let width = 3 * (hi[0] - lo[0]) as usize + 1;
    let height = 2 * (hi[1] - lo[1]) as usize + 1;
    let mut grid = vec![vec![' '; width]; height];
    let col = |x: i64| 3 * (x - lo[0]) as usize;
    let row = |y: i64| 2 * (hi[1] - y) as usize;

    for (edge, &count) in shape.edges() {
        let (x, y) = (edge.low[0], edge.low[1]);
        let high = edge.high();
        if edge.axis == 1 {
            let glyph = if count > 1 { '=' } else { '-' };
            grid[row(y)][col(x) + 1] = glyph;
            grid[row(y)][col(x) + 2] = glyph;
        } else {
            grid[row(y) - 1][col(x)] = if count > 1 { '‖' } else { '|' };
        }
        grid[row(y)][col(x)] = '+';
        grid[row(high[1])][col(high[0])] = '+';
    }
    grid[row(0)][col(0)] = 'o';

    let mut out = String::new();
    for line in grid {
        let line: String = line.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

/// Standalone SVG document. Lattice point `(x, y)` maps to
/// `((x - min_x)·cell + margin, (max_y - y)·cell + margin)`.
pub fn render_svg(shape: &DrawnShape, cfg: &RenderConfig) -> Result<String> {
    require_plane(shape)?;
    if cfg.cell == 0 {
        return Err(Error::InvalidRenderConfig(
            "cell size must be at least 1".into(),
        ));
    }
    let (lo, hi) = shape.bounds();
    let (cell, margin) = (i64::from(cfg.cell), i64::from(cfg.margin));
    let px = |x: i64| (x - lo[0]) * cell + margin;
    let py = |y: i64| (hi[1] - y) * cell + margin;
    let width = (hi[0] - lo[0]) * cell + 2 * margin;
    let height = (hi[1] - lo[1]) * cell + 2 * margin;
    let stroke = (cell / 10).max(1);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    if cfg.show_grid {
        let mut d = String::new();
        for x in lo[0]..=hi[0] {
            write!(d, "M{} {}V{}", px(x), py(hi[1]), py(lo[1])).unwrap();
        }
        for y in lo[1]..=hi[1] {
            write!(d, "M{} {}H{}", px(lo[0]), py(y), px(hi[0])).unwrap();
        }
        writeln!(
            out,
            r##"  <path d="{d}" fill="none" stroke="#cccccc" stroke-width="1"/>"##
        )
        .unwrap();
    }
    for (edge, &count) in shape.edges() {
        let high = edge.high();
        let w = if count > 1 { 2 * stroke } else { stroke };
        writeln!(
            out,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="{w}" stroke-linecap="round" data-multiplicity="{count}"/>"#,
            px(edge.low[0]),
            py(edge.low[1]),
            px(high[0]),
            py(high[1]),
        )
        .unwrap();
    }
    if cfg.show_origin {
        writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="red"/>"#,
            px(0),
            py(0),
            stroke * 2
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
