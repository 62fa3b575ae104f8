//! ASCII and SVG snapshot rendering.
//!
//! ASCII uses `#` burning, `o` protected, `.` free and `=` for the highway
//! row. SVG shades fire cells by ignition time and labels protected cells
//! with the step they were bought.

use std::fmt::Write as _;

use crate::grid::{Cell, Frame};

/// Rendering bounds plus the optional highway row.
#[derive(Debug, Clone, Copy)]
pub struct Viewport {
    pub min: Cell,
    pub max: Cell,
    pub highway_row: Option<i32>,
}

impl Viewport {
    /// Bounding box of all active cells, padded by `margin`.
    pub fn around(frame: &Frame, margin: i32, highway_row: Option<i32>) -> Viewport {
        let cells = frame.burning.iter().chain(frame.protected.iter()).map(|(c, _)| *c);
        let mut min = Cell::new(i32::MAX, i32::MAX);
        let mut max = Cell::new(i32::MIN, i32::MIN);
        for c in cells {
            min = Cell::new(min.x.min(c.x), min.y.min(c.y));
            max = Cell::new(max.x.max(c.x), max.y.max(c.y));
        }
        if min.x > max.x {
            min = Cell::new(0, 0);
            max = Cell::new(0, 0);
        }
        if let Some(row) = highway_row {
            min = Cell::new(min.x, min.y.min(row));
            max = Cell::new(max.x, max.y.max(row));
        }
        Viewport {
            min: min.offset(-margin, -margin),
            max: max.offset(margin, margin),
            highway_row,
        }
    }
}

pub fn ascii_frame(frame: &Frame, view: &Viewport) -> String {
    let burning: std::collections::HashSet<Cell> = frame.burning.iter().map(|(c, _)| *c).collect();
    let protected: std::collections::HashSet<Cell> = frame.protected.iter().map(|(c, _)| *c).collect();
    let mut out = String::new();
    for y in (view.min.y..=view.max.y).rev() {
        for x in view.min.x..=view.max.x {
            let cell = Cell::new(x, y);
            let ch = if burning.contains(&cell) {
                '#'
            } else if protected.contains(&cell) {
                'o'
            } else if view.highway_row == Some(y) {
                '='
            } else {
                '.'
            };
            out.push(ch);
        }
        out.push('\n');
    }
    out
}

/// Linear yellow-to-red ramp over ignition time.
fn fire_color(ignited: u32, latest: u32) -> String {
    let f = if latest == 0 { 1.0 } else { ignited as f64 / latest as f64 };
    let g = (220.0 - 170.0 * f).round() as u8;
    format!("#ff{g:02x}30")
}

pub fn svg_frame(frame: &Frame, view: &Viewport) -> String {
    const CELL: i32 = 12;
    let width = (view.max.x - view.min.x + 1) * CELL;
    let height = (view.max.y - view.min.y + 1) * CELL;
    let px = |c: Cell| -> (i32, i32) {
        ((c.x - view.min.x) * CELL, (view.max.y - c.y) * CELL)
    };
    let latest = frame.burning.iter().map(|(_, t)| *t).max().unwrap_or(0);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(out, "  <rect width=\"{width}\" height=\"{height}\" fill=\"#f8f8f8\"/>");
    if let Some(row) = view.highway_row {
        if row >= view.min.y && row <= view.max.y {
            let (_, y) = px(Cell::new(view.min.x, row));
            let _ = writeln!(
                out,
                "  <rect x=\"0\" y=\"{y}\" width=\"{width}\" height=\"{CELL}\" fill=\"#9aa0a6\"/>"
            );
        }
    }
    for (cell, ignited) in &frame.burning {
        let (x, y) = px(*cell);
        let color = fire_color(*ignited, latest);
        let _ = writeln!(
            out,
            "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{color}\" stroke=\"#d0d0d0\" stroke-width=\"0.5\"/>"
        );
    }
    for (cell, step) in &frame.protected {
        let (x, y) = px(*cell);
        let _ = writeln!(
            out,
            "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"#202020\"/>"
        );
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"6\" fill=\"#ffffff\" text-anchor=\"middle\">{step}</text>",
            x + CELL / 2,
            y + CELL / 2 + 2
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_frame() -> Frame {
        Frame {
            t: 2,
            burning: vec![(Cell::new(0, 1), 0), (Cell::new(0, 2), 1)],
            protected: vec![(Cell::new(1, 1), 1)],
        }
    }

    #[test]
    fn ascii_symbols() {
        let frame = tiny_frame();
        let view = Viewport { min: Cell::new(-1, 0), max: Cell::new(1, 2), highway_row: Some(0) };
        let art = ascii_frame(&frame, &view);
        let lines: Vec<&str> = art.lines().collect();
        assert_eq!(lines, vec![".#.", ".#o", "==="]);
    }

    #[test]
    fn svg_contains_all_cells() {
        let frame = tiny_frame();
        let view = Viewport::around(&frame, 1, Some(0));
        let svg = svg_frame(&frame, &view);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<rect").count(), 2 + 1 + 1 + 1); // bg + highway + fire + wall
        assert_eq!(svg.matches("<text").count(), 1);
    }

    #[test]
    fn rendering_is_deterministic() {
        let frame = tiny_frame();
        let view = Viewport::around(&frame, 2, None);
        assert_eq!(svg_frame(&frame, &view), svg_frame(&frame, &view));
        assert_eq!(ascii_frame(&frame, &view), ascii_frame(&frame, &view));
    }
}
