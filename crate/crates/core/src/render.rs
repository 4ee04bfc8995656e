//! ASCII and SVG pictures of diagonal rectangulations.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rect::DiagonalRectangulation;

const CELL_W: usize = 4;
const CELL_H: usize = 2;
const PX: usize = 40;

/// Box drawing with `+`, `-` and `|`; each rectangle shows its label
/// when it fits.
pub fn ascii(r: &DiagonalRectangulation) -> String {
    let n = r.n();
    let (w, h) = (CELL_W * n + 1, CELL_H * n + 1);
    let mut grid = vec![vec![' '; w]; h];
    let row = |y: u8| CELL_H * (n - y as usize);
    let col = |x: u8| CELL_W * x as usize;
    for rect in r.rects() {
        let (c1, c2, r1, r2) = (col(rect.x1), col(rect.x2), row(rect.y2), row(rect.y1));
        for c in c1..=c2 {
            for rr in [r1, r2] {
                if grid[rr][c] != '+' {
                    grid[rr][c] = '-';
                }
            }
        }
        for rr in r1..=r2 {
            for c in [c1, c2] {
                if grid[rr][c] != '+' {
                    grid[rr][c] = '|';
                }
            }
        }
        for (rr, c) in [(r1, c1), (r1, c2), (r2, c1), (r2, c2)] {
            grid[rr][c] = '+';
        }
    }
    for (i, rect) in r.rects().iter().enumerate() {
        let label = (i + 1).to_string();
        let (c1, c2) = (col(rect.x1), col(rect.x2));
        let mid = (row(rect.y2) + row(rect.y1)) / 2;
        if c2 - c1 > label.len() {
            let start = (c1 + c2 + 1 - label.len()) / 2;
            for (k, ch) in label.chars().enumerate() {
                grid[mid][start + k] = ch;
            }
        }
    }
    let mut s = String::new();
    for line in grid {
        s.extend(line.iter());
        s.truncate(s.trim_end().len());
        s.push('\n');
    }
    s
}

/// A standalone SVG document. The rectangulation JSON is kept in `<desc>`
/// so [`parse_svg`] can recover it.
pub fn svg(r: &DiagonalRectangulation) -> String {
    let n = r.n();
    let size = PX * n.max(1);
    let m = 4;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{w}" viewBox="-{m} -{m} {w} {w}">"#,
        w = size + 2 * m
    );
    let _ = writeln!(s, "  <desc>{}</desc>", escape(&r.to_string()));
    let _ = writeln!(s, r##"  <line x1="0" y1="0" x2="{size}" y2="{size}" stroke="#999" stroke-width="1"/>"##);
    for (i, rect) in r.rects().iter().enumerate() {
        let (x, y) = (PX * rect.x1 as usize, PX * (n - rect.y2 as usize));
        let (w, h) = (PX * (rect.x2 - rect.x1) as usize, PX * (rect.y2 - rect.y1) as usize);
        let _ = writeln!(
            s,
            r#"  <rect x="{x}" y="{y}" width="{w}" height="{h}" fill="none" stroke="black" stroke-width="2"/>"#
        );
        let _ = writeln!(
            s,
            r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            x + w / 2,
            y + h / 2,
            i + 1
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn unescape(s: &str) -> String {
    s.replace("&quot;", "\"").replace("&lt;", "<").replace("&gt;", ">").replace("&amp;", "&")
}

pub fn parse_svg(doc: &str) -> Result<DiagonalRectangulation> {
    let start = doc.find("<desc>").ok_or_else(|| Error::invalid("svg has no <desc>"))? + "<desc>".len();
    let end = doc[start..].find("</desc>").ok_or_else(|| Error::invalid("unterminated <desc>"))? + start;
    unescape(&doc[start..end]).parse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rect::rho;

    #[test]
    fn ascii_unit_and_strips() {
        assert_eq!(ascii(&DiagonalRectangulation::unit()), "+---+\n| 1 |\n+---+\n");
        let v = ascii(&DiagonalRectangulation::vertical_strips(2));
        assert_eq!(v, "+---+---+\n|   |   |\n| 1 | 2 |\n|   |   |\n+---+---+\n");
    }

    #[test]
    fn svg_round_trip() {
        let r = rho(&"2413".parse().unwrap());
        let doc = svg(&r);
        assert!(doc.starts_with("<svg"));
        assert_eq!(parse_svg(&doc).unwrap(), r);
        assert_eq!(doc.matches("<rect ").count(), 4);
    }
}
