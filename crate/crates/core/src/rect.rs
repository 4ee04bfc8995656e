//! Diagonal rectangulations in canonical integer coordinates.
//!
//! The square is `[0, n]²` with the y-axis pointing up. Diagonal point `k`
//! is `(k, n - k)`, and rectangle `i` (1-based) meets the antidiagonal in
//! the segment between points `i - 1` and `i`. Every wall lies on the line
//! `x = k` or `y = n - k` through the diagonal point it contains.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tree::{Orientation, PlanarBinaryTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rect {
    pub x1: u8,
    pub y1: u8,
    pub x2: u8,
    pub y2: u8,
}

impl Rect {
    pub fn new(x1: u8, y1: u8, x2: u8, y2: u8) -> Self {
        Rect { x1, y1, x2, y2 }
    }

    pub fn area(&self) -> usize {
        (self.x2 - self.x1) as usize * (self.y2 - self.y1) as usize
    }

    fn interiors_meet(&self, o: &Rect) -> bool {
        self.x1 < o.x2 && o.x1 < self.x2 && self.y1 < o.y2 && o.y1 < self.y2
    }

    /// Upper end of the antidiagonal stretch inside the rectangle, i.e. its
    /// label in a square of size `n`.
    fn label(&self, n: u8) -> u8 {
        self.x2.min(n - self.y1)
    }

    fn lower_label(&self, n: u8) -> u8 {
        self.x1.max(n - self.y2)
    }

    fn transposed(self) -> Rect {
        Rect { x1: self.y1, y1: self.x1, x2: self.y2, y2: self.x2 }
    }
}

pub type Point = (u8, u8);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orient {
    Vertical,
    Horizontal,
}

/// A maximal segment of the rectangle boundaries away from the square's
/// edges. `coord` is the line (`x` for vertical, `y` for horizontal) and
/// `span` the closed range along it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Wall {
    pub orientation: Orient,
    pub coord: u8,
    pub span: (u8, u8),
    pub diag_point: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Corner,
    Up,
    Down,
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VertexInfo {
    pub point: Point,
    pub kind: VertexKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeInfo {
    /// Endpoints, lower-left first.
    pub a: Point,
    pub b: Point,
    pub orientation: Orient,
    pub locked: bool,
    pub lock_source: Option<Point>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PivotKind {
    Diagonal,
    Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pivot {
    pub edge: EdgeInfo,
    pub kind: PivotKind,
    pub result: DiagonalRectangulation,
}

/// Order on `1..=n` generated by left/bottom edge contact; `less[i][j]`
/// holds (0-based labels) for the reflexive-transitive closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyPoset {
    pub n: usize,
    pub contacts: Vec<(usize, usize)>,
    pub less: Vec<Vec<bool>>,
}

impl AdjacencyPoset {
    /// All linear extensions, as permutations of labels.
    pub fn linear_extensions(&self) -> Vec<Permutation> {
        let n = self.n;
        let mut out = Vec::new();
        let mut used = vec![false; n];
        let mut word = Vec::with_capacity(n);
        fn rec(p: &AdjacencyPoset, used: &mut [bool], word: &mut Vec<u8>, out: &mut Vec<Permutation>) {
            if word.len() == p.n {
                out.push(Permutation::from_word_unchecked(word.clone()));
                return;
            }
            for j in 0..p.n {
                if !used[j] && (0..p.n).all(|i| i == j || used[i] || !p.less[i][j]) {
                    used[j] = true;
                    word.push(j as u8 + 1);
                    rec(p, used, word, out);
                    word.pop();
                    used[j] = false;
                }
            }
        }
        rec(self, &mut used, &mut word, &mut out);
        out
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalRectangulation {
    n: usize,
    rects: Vec<Rect>,
}

impl DiagonalRectangulation {
    /// Validates canonical form: integer tiling of `[0, n]²` with rectangle
    /// `i` crossing the antidiagonal exactly between points `i - 1` and `i`.
    pub fn new(n: usize, rects: Vec<Rect>) -> Result<Self> {
        if n > u8::MAX as usize / 2 {
            return Err(Error::invalid(format!("rectangulation size {n} too large")));
        }
        if rects.len() != n {
            return Err(Error::invalid(format!("expected {n} rectangles, got {}", rects.len())));
        }
        let nn = n as u8;
        for (i, r) in rects.iter().enumerate() {
            if r.x1 >= r.x2 || r.y1 >= r.y2 || r.x2 > nn || r.y2 > nn {
                return Err(Error::invalid(format!("rectangle {} is degenerate or outside the square", i + 1)));
            }
            if r.label(nn) as usize != i + 1 || r.lower_label(nn) as usize != i {
                return Err(Error::invalid(format!(
                    "rectangle {} does not cross the diagonal between points {} and {}",
                    i + 1,
                    i,
                    i + 1
                )));
            }
        }
        let area: usize = rects.iter().map(Rect::area).sum();
        if area != n * n {
            return Err(Error::invalid("rectangles do not cover the square"));
        }
        for i in 0..n {
            for j in i + 1..n {
                if rects[i].interiors_meet(&rects[j]) {
                    return Err(Error::invalid(format!("rectangles {} and {} overlap", i + 1, j + 1)));
                }
            }
        }
        Ok(DiagonalRectangulation { n, rects })
    }

    /// Sorts by label; the caller guarantees a valid canonical tiling.
    fn from_rects_unchecked(n: usize, mut rects: Vec<Rect>) -> Self {
        let nn = n as u8;
        rects.sort_unstable_by_key(|r| r.label(nn));
        DiagonalRectangulation { n, rects }
    }

    pub fn empty() -> Self {
        DiagonalRectangulation { n: 0, rects: Vec::new() }
    }

    pub fn unit() -> Self {
        DiagonalRectangulation { n: 1, rects: vec![Rect::new(0, 0, 1, 1)] }
    }

    pub fn vertical_strips(n: usize) -> Self {
        let nn = n as u8;
        DiagonalRectangulation { n, rects: (0..nn).map(|i| Rect::new(i, 0, i + 1, nn)).collect() }
    }

    pub fn horizontal_strips(n: usize) -> Self {
        let nn = n as u8;
        DiagonalRectangulation { n, rects: (0..nn).map(|i| Rect::new(0, nn - i - 1, nn, nn - i)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    pub fn walls(&self) -> Vec<Wall> {
        let nn = self.n as u8;
        let mut out = Vec::with_capacity(self.n.saturating_sub(1));
        for k in 1..nn {
            let vert: Vec<&Rect> = self.rects.iter().filter(|r| r.x2 == k).collect();
            if !vert.is_empty() {
                let lo = vert.iter().map(|r| r.y1).min().unwrap();
                let hi = vert.iter().map(|r| r.y2).max().unwrap();
                out.push(Wall { orientation: Orient::Vertical, coord: k, span: (lo, hi), diag_point: k });
            } else {
                let y = nn - k;
                let horiz: Vec<&Rect> = self.rects.iter().filter(|r| r.y2 == y).collect();
                let lo = horiz.iter().map(|r| r.x1).min().unwrap_or(0);
                let hi = horiz.iter().map(|r| r.x2).max().unwrap_or(0);
                out.push(Wall { orientation: Orient::Horizontal, coord: y, span: (lo, hi), diag_point: k });
            }
        }
        out
    }

    /// Reflection in the antidiagonal, `(x, y) -> (n - y, n - x)`.
    pub fn reflect_antidiagonal(&self) -> Self {
        let nn = self.n as u8;
        let rects = self.rects.iter().map(|r| Rect::new(nn - r.y2, nn - r.x2, nn - r.y1, nn - r.x1)).collect();
        DiagonalRectangulation::from_rects_unchecked(self.n, rects)
    }

    /// Reflection in the main diagonal, `(x, y) -> (y, x)`.
    pub fn reflect_diagonal(&self) -> Self {
        let rects = self.rects.iter().map(|r| r.transposed()).collect();
        DiagonalRectangulation::from_rects_unchecked(self.n, rects)
    }

    /// Bottom edge and left edge of `r` lie in the staircase `h`.
    fn available(r: &Rect, h: &[u8]) -> bool {
        (r.x1..r.x2).all(|c| h[c as usize] == r.y1) && (r.x1 == 0 || h[r.x1 as usize - 1] >= r.y2)
    }

    /// Smallest element of the fiber: greedy by smallest available label.
    pub fn tau(&self) -> Permutation {
        let n = self.n;
        let mut h = vec![0u8; n];
        let mut placed = vec![false; n];
        let mut word = Vec::with_capacity(n);
        for _ in 0..n {
            let i = (0..n)
                .find(|&i| !placed[i] && Self::available(&self.rects[i], &h))
                .expect("a valid rectangulation always has an available rectangle");
            placed[i] = true;
            let r = self.rects[i];
            for c in r.x1..r.x2 {
                h[c as usize] = r.y2;
            }
            word.push(i as u8 + 1);
        }
        Permutation::from_word_unchecked(word)
    }

    /// Every order in which the rectangles can be laid down; equals ρ⁻¹(R).
    pub fn fiber(&self) -> BTreeSet<Permutation> {
        fn rec(
            r: &DiagonalRectangulation,
            h: &mut Vec<u8>,
            placed: &mut [bool],
            word: &mut Vec<u8>,
            out: &mut BTreeSet<Permutation>,
        ) {
            if word.len() == r.n {
                out.insert(Permutation::from_word_unchecked(word.clone()));
                return;
            }
            for i in 0..r.n {
                let rect = r.rects[i];
                if placed[i] || !DiagonalRectangulation::available(&rect, h) {
                    continue;
                }
                let saved: Vec<u8> = h[rect.x1 as usize..rect.x2 as usize].to_vec();
                for c in rect.x1..rect.x2 {
                    h[c as usize] = rect.y2;
                }
                placed[i] = true;
                word.push(i as u8 + 1);
                rec(r, h, placed, word, out);
                word.pop();
                placed[i] = false;
                h[rect.x1 as usize..rect.x2 as usize].copy_from_slice(&saved);
            }
        }
        let mut out = BTreeSet::new();
        rec(self, &mut vec![0; self.n], &mut vec![false; self.n], &mut Vec::new(), &mut out);
        out
    }

    /// The Baxter permutation in the fiber, built by the corner-walking rule.
    pub fn beta(&self) -> Permutation {
        let n = self.n;
        if n == 0 {
            return Permutation::empty();
        }
        let nn = n as u8;
        let at_bottom_left =
            |x: u8, y: u8| self.rects.iter().position(|r| r.x1 == x && r.y1 == y).expect("rectangle at corner");
        let mut h = vec![0u8; n];
        let mut word = Vec::with_capacity(n);
        let mut cur = at_bottom_left(0, 0);
        loop {
            let u = self.rects[cur];
            for c in u.x1..u.x2 {
                h[c as usize] = u.y2;
            }
            word.push(cur as u8 + 1);
            if word.len() == n {
                break;
            }
            let (px, py) = (u.x2, u.y2);
            let go_left = if py == nn {
                false
            } else if px == nn {
                true
            } else {
                // a vertical wall continuing above p makes it a left vertex
                self.rects.iter().any(|r| r.x2 == px && r.y1 <= py && r.y2 > py)
            };
            cur = if go_left {
                let mut a = px;
                while a > 0 && h[a as usize - 1] <= py {
                    a -= 1;
                }
                at_bottom_left(a, py)
            } else {
                at_bottom_left(px, h[px as usize])
            };
        }
        Permutation::from_word_unchecked(word)
    }

    fn restrict(&self, x0: u8, y0: u8, size: usize) -> Self {
        let s = size as u8;
        let rects = self
            .rects
            .iter()
            .filter_map(|r| {
                let x1 = r.x1.max(x0);
                let x2 = r.x2.min(x0 + s);
                let y1 = r.y1.max(y0);
                let y2 = r.y2.min(y0 + s);
                (x1 < x2 && y1 < y2).then(|| Rect::new(x1 - x0, y1 - y0, x2 - x0, y2 - y0))
            })
            .collect();
        DiagonalRectangulation::from_rects_unchecked(size, rects)
    }

    /// Restriction to the principal subsquare `[0, p] × [n - p, n]`.
    pub fn tl_restrict(&self, p: usize) -> Result<Self> {
        if p > self.n {
            return Err(Error::invalid(format!("p = {p} exceeds n = {}", self.n)));
        }
        Ok(self.restrict(0, (self.n - p) as u8, p))
    }

    /// Restriction to the principal subsquare `[n - q, n] × [0, q]`.
    pub fn br_restrict(&self, q: usize) -> Result<Self> {
        if q > self.n {
            return Err(Error::invalid(format!("q = {q} exceeds n = {}", self.n)));
        }
        Ok(self.restrict((self.n - q) as u8, 0, q))
    }

    pub fn adjacency_poset(&self) -> AdjacencyPoset {
        let n = self.n;
        let mut contacts = Vec::new();
        let mut less = vec![vec![false; n]; n];
        for i in 0..n {
            less[i][i] = true;
            for j in 0..n {
                let (a, b) = (self.rects[i], self.rects[j]);
                let below = a.y2 == b.y1 && a.x1.max(b.x1) < a.x2.min(b.x2);
                let left = a.x2 == b.x1 && a.y1.max(b.y1) < a.y2.min(b.y2);
                if below || left {
                    contacts.push((i + 1, j + 1));
                    less[i][j] = true;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        AdjacencyPoset { n, contacts, less }
    }

    fn corner_points(&self) -> [Point; 4] {
        let nn = self.n as u8;
        [(0, 0), (0, nn), (nn, 0), (nn, nn)]
    }

    fn vertex_set(&self) -> BTreeSet<Point> {
        self.rects.iter().flat_map(|r| [(r.x1, r.y1), (r.x1, r.y2), (r.x2, r.y1), (r.x2, r.y2)]).collect()
    }

    /// Edges as (lower-left endpoint, upper-right endpoint).
    fn raw_edges(&self, verts: &BTreeSet<Point>) -> BTreeSet<(Point, Point)> {
        let mut edges = BTreeSet::new();
        for r in &self.rects {
            let sides = [
                ((r.x1, r.y1), (r.x2, r.y1)),
                ((r.x1, r.y2), (r.x2, r.y2)),
                ((r.x1, r.y1), (r.x1, r.y2)),
                ((r.x2, r.y1), (r.x2, r.y2)),
            ];
            for (a, b) in sides {
                let mut on: Vec<Point> = verts
                    .iter()
                    .copied()
                    .filter(|&(x, y)| {
                        if a.1 == b.1 {
                            y == a.1 && x >= a.0 && x <= b.0
                        } else {
                            x == a.0 && y >= a.1 && y <= b.1
                        }
                    })
                    .collect();
                on.sort_unstable();
                for w in on.windows(2) {
                    edges.insert((w[0], w[1]));
                }
            }
        }
        edges
    }

    pub fn vertices(&self) -> Vec<VertexInfo> {
        let verts = self.vertex_set();
        let edges = self.raw_edges(&verts);
        let corners = self.corner_points();
        verts.iter().map(|&p| VertexInfo { point: p, kind: classify(p, &edges, &corners) }).collect()
    }

    pub fn edges(&self) -> Vec<EdgeInfo> {
        let verts = self.vertex_set();
        let edges = self.raw_edges(&verts);
        let corners = self.corner_points();
        let kinds: Vec<(Point, VertexKind)> = verts.iter().map(|&p| (p, classify(p, &edges, &corners))).collect();
        edges
            .iter()
            .map(|&(a, b)| {
                let orientation = if a.0 == b.0 { Orient::Vertical } else { Orient::Horizontal };
                let lock_source = [a, b].into_iter().find(|&v| {
                    let kind = kinds.iter().find(|(p, _)| *p == v).unwrap().1;
                    let other = if v == a { b } else { a };
                    let dir = direction(v, other);
                    match kind {
                        VertexKind::Corner => true,
                        VertexKind::Left => dir == Dir::Down,
                        VertexKind::Down => dir == Dir::Left,
                        VertexKind::Right => dir == Dir::Up,
                        VertexKind::Up => dir == Dir::Right,
                    }
                });
                EdgeInfo { a, b, orientation, locked: lock_source.is_some(), lock_source }
            })
            .collect()
    }

    /// One pivot per non-locked edge.
    pub fn pivots(&self) -> Vec<Pivot> {
        let n = self.n as u8;
        let mut out = Vec::new();
        for edge in self.edges().into_iter().filter(|e| !e.locked) {
            let (a, b) = (edge.a, edge.b);
            let (i1, i2) = match edge.orientation {
                Orient::Vertical => (
                    self.rects.iter().position(|r| r.x2 == a.0 && r.y1 <= a.1 && r.y2 >= b.1),
                    self.rects.iter().position(|r| r.x1 == a.0 && r.y1 <= a.1 && r.y2 >= b.1),
                ),
                Orient::Horizontal => (
                    self.rects.iter().position(|r| r.y2 == a.1 && r.x1 <= a.0 && r.x2 >= b.0),
                    self.rects.iter().position(|r| r.y1 == a.1 && r.x1 <= a.0 && r.x2 >= b.0),
                ),
            };
            let (Some(i1), Some(i2)) = (i1, i2) else { continue };
            let (u1, u2) = (self.rects[i1], self.rects[i2]);
            let recut = match edge.orientation {
                Orient::Vertical => recut_vertical(u1, u2, n),
                Orient::Horizontal => recut_vertical(u1.transposed(), u2.transposed(), n)
                    .map(|(r1, r2, k)| (r1.transposed(), r2.transposed(), k)),
            };
            let Some((r1, r2, kind)) = recut else { continue };
            let mut rects = self.rects.clone();
            rects[i1] = r1;
            rects[i2] = r2;
            let result = DiagonalRectangulation::from_rects_unchecked(self.n, rects);
            out.push(Pivot { edge, kind, result });
        }
        out
    }
}

/// Recut two rectangles sharing a vertical edge, `u1` on the left.
fn recut_vertical(u1: Rect, u2: Rect, n: u8) -> Option<(Rect, Rect, PivotKind)> {
    let (a1, a2, c) = (u1.x1, u2.x2, u1.x2);
    let (b1, t1, b2, t2) = (u1.y1, u1.y2, u2.y1, u2.y2);
    if b1 == b2 && t1 == t2 {
        let y = n - c;
        return Some((Rect::new(a1, b1, a2, y), Rect::new(a1, y, a2, t1), PivotKind::Diagonal));
    }
    let (r1, r2) = if t1 == t2 {
        if b1 < b2 {
            (Rect::new(a1, b2, a2, t1), Rect::new(a1, b1, c, b2))
        } else {
            (Rect::new(a1, b1, a2, t1), Rect::new(c, b2, a2, b1))
        }
    } else if b1 == b2 {
        if t1 < t2 {
            (Rect::new(a1, b1, a2, t1), Rect::new(c, t1, a2, t2))
        } else {
            (Rect::new(a1, b1, a2, t2), Rect::new(a1, t2, c, t1))
        }
    } else {
        return None;
    };
    Some((r1, r2, PivotKind::Vertex))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    Up,
    Down,
    Left,
    Right,
}

fn direction(from: Point, to: Point) -> Dir {
    if from.0 == to.0 {
        if to.1 > from.1 {
            Dir::Up
        } else {
            Dir::Down
        }
    } else if to.0 > from.0 {
        Dir::Right
    } else {
        Dir::Left
    }
}

fn classify(p: Point, edges: &BTreeSet<(Point, Point)>, corners: &[Point; 4]) -> VertexKind {
    if corners.contains(&p) {
        return VertexKind::Corner;
    }
    let dirs: Vec<Dir> = edges
        .iter()
        .filter_map(|&(a, b)| {
            if a == p {
                Some(direction(p, b))
            } else if b == p {
                Some(direction(p, a))
            } else {
                None
            }
        })
        .collect();
    let has = |d: Dir| dirs.contains(&d);
    if !has(Dir::Down) {
        VertexKind::Up
    } else if !has(Dir::Up) {
        VertexKind::Down
    } else if !has(Dir::Left) {
        VertexKind::Right
    } else {
        VertexKind::Left
    }
}

/// Staircase construction: rectangles laid down in the order of `x`,
/// tracking the height `h[c]` of the filled region over column `c`.
pub fn rho(x: &Permutation) -> DiagonalRectangulation {
    let n = x.len();
    let nn = n as u8;
    let mut h = vec![0u8; n];
    let mut rects = vec![Rect::new(0, 0, 0, 0); n];
    let count_at_least = |h: &[u8], y: u8| h.iter().take_while(|&&v| v >= y).count() as u8;
    for &v in x.word() {
        let k = v - 1;
        // top-left corner from diagonal point k
        let (x1, y2) = if k == 0 {
            (0, nn)
        } else if h[k as usize - 1] >= nn - k {
            (k, h[k as usize - 1])
        } else {
            (count_at_least(&h, nn - k), nn - k)
        };
        // bottom-right corner from diagonal point k + 1
        let k2 = v;
        let (x2, y1) = if k2 == nn {
            (nn, 0)
        } else if h[k2 as usize - 1] >= nn - k2 {
            (count_at_least(&h, nn - k2), nn - k2)
        } else {
            (k2, h[k2 as usize - 1])
        };
        for c in x1..x2 {
            h[c as usize] = y2;
        }
        rects[v as usize - 1] = Rect::new(x1, y1, x2, y2);
    }
    DiagonalRectangulation { n, rects }
}

/// Glue a bottom tree and a top tree along the antidiagonal. `None` when the
/// pair does not tile the square.
pub fn from_twin_trees(b: &PlanarBinaryTree, t: &PlanarBinaryTree) -> Result<Option<DiagonalRectangulation>> {
    if b.n() != t.n() {
        return Err(Error::invalid(format!("tree sizes differ: {} vs {}", b.n(), t.n())));
    }
    if b.orientation != Orientation::Bottom || t.orientation != Orientation::Top {
        return Err(Error::invalid("expected a bottom tree and a top tree"));
    }
    let n = b.n();
    let nn = n as u8;
    let rects: Vec<Rect> = b
        .spans()
        .into_iter()
        .zip(t.spans())
        .map(|((ab, bb), (at, bt))| Rect::new(ab as u8, nn - bb as u8, bt as u8, nn - at as u8))
        .collect();
    if rects.iter().any(|r| r.x1 >= r.x2 || r.y1 >= r.y2) {
        return Ok(None);
    }
    Ok(DiagonalRectangulation::new(n, rects).ok())
}

impl fmt::Debug for DiagonalRectangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DRec{}", self)
    }
}

impl fmt::Display for DiagonalRectangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

#[derive(Serialize, Deserialize)]
struct RectJson {
    n: usize,
    rects: Vec<[u8; 4]>,
}

impl Serialize for DiagonalRectangulation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RectJson { n: self.n, rects: self.rects.iter().map(|r| [r.x1, r.y1, r.x2, r.y2]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiagonalRectangulation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RectJson::deserialize(d)?;
        let rects = j.rects.into_iter().map(|[a, b, c, e]| Rect::new(a, b, c, e)).collect();
        DiagonalRectangulation::new(j.n, rects).map_err(serde::de::Error::custom)
    }
}

impl FromStr for DiagonalRectangulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::invalid(format!("bad rectangulation JSON: {e}")))
    }
}
