//! The Hopf algebra dRec on diagonal rectangulations.
//!
//! The intrinsic product keeps the size-`n` rectangulations whose top-left
//! and bottom-right restrictions are the two factors. The intrinsic
//! coproduct cuts along every monotone edge path γ and completes the wall
//! pieces left on either side. `ViaRho` transports tBax through ρ and τ.

use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::enumerate::{self, ENUM_LIMIT};
use crate::error::{check_size, Error, Result};
use crate::hopf::perms::TBax;
use crate::hopf::{FreeElement, GradedHopf, TensorElement};
use crate::rect::{rho, DiagonalRectangulation, Orient, Wall};

/// A piece of a wall; `diag_point` is the diagonal point of the full wall,
/// which the piece itself need not contain.
pub type Segment = Wall;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DRecImpl {
    Intrinsic,
    ViaRho,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DRec {
    pub imp: DRecImpl,
}

impl DRec {
    pub const INTRINSIC: DRec = DRec { imp: DRecImpl::Intrinsic };
    pub const VIA_RHO: DRec = DRec { imp: DRecImpl::ViaRho };
}

struct Tables {
    list: &'static [DiagonalRectangulation],
    index: HashMap<DiagonalRectangulation, u32>,
    walls: Vec<Vec<Wall>>,
}

static TABLES: [OnceLock<Tables>; ENUM_LIMIT + 1] = [const { OnceLock::new() }; ENUM_LIMIT + 1];

fn tables(n: usize) -> Result<&'static Tables> {
    check_size("dRec tables", n, ENUM_LIMIT)?;
    let list = enumerate::drec(n)?;
    Ok(TABLES[n].get_or_init(|| Tables {
        list,
        index: list.iter().enumerate().map(|(i, r)| (r.clone(), i as u32)).collect(),
        walls: list.iter().map(|r| r.walls()).collect(),
    }))
}

type ProductTable = HashMap<(u8, u32, u32), Vec<u32>>;

static PRODUCTS: [OnceLock<ProductTable>; ENUM_LIMIT + 1] = [const { OnceLock::new() }; ENUM_LIMIT + 1];

/// `(p, TL_p index, BR_{n-p} index) -> indices into dRec_n`.
fn product_table(n: usize) -> Result<&'static ProductTable> {
    let big = tables(n)?;
    let small: Vec<&Tables> = (0..=n).map(tables).collect::<Result<_>>()?;
    Ok(PRODUCTS[n].get_or_init(|| {
        let mut table: ProductTable = HashMap::new();
        for (idx, r) in big.list.iter().enumerate() {
            for p in 0..=n {
                let tl = r.tl_restrict(p).expect("p <= n");
                let br = r.br_restrict(n - p).expect("q <= n");
                let key = (p as u8, small[p].index[&tl], small[n - p].index[&br]);
                table.entry(key).or_default().push(idx as u32);
            }
        }
        table
    }))
}

/// Index of `r` in the cached, sorted `dRec_n`.
pub fn drec_index(r: &DiagonalRectangulation) -> Result<usize> {
    let t = tables(r.n())?;
    t.index.get(r).map(|&i| i as usize).ok_or_else(|| Error::invalid("not in dRec_n"))
}

/// `Σ R` over `R ∈ dRec_n` with `TL_p(R) = r1` and `BR_q(R) = r2`.
pub fn product_intrinsic(
    r1: &DiagonalRectangulation,
    r2: &DiagonalRectangulation,
) -> Result<FreeElement<DiagonalRectangulation>> {
    let (p, q) = (r1.n(), r2.n());
    let n = p + q;
    let table = product_table(n)?;
    let key = (p as u8, drec_index(r1)? as u32, drec_index(r2)? as u32);
    let list = tables(n)?.list;
    Ok(FreeElement::sum_of(table.get(&key).into_iter().flatten().map(|&i| list[i as usize].clone())))
}

pub fn product_via_rho(
    r1: &DiagonalRectangulation,
    r2: &DiagonalRectangulation,
) -> FreeElement<DiagonalRectangulation> {
    TBax.mul_basis(&r1.tau(), &r2.tau()).map_keys(rho)
}

pub fn coproduct_via_rho(r: &DiagonalRectangulation) -> TensorElement<DiagonalRectangulation> {
    TBax.delta_basis(&r.tau()).map_keys(|(a, b)| (rho(a), rho(b)))
}

/// A monotone path from `(0, n)` to `(n, 0)` along rectangle edges;
/// `heights[c]` is its height over column `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GammaPath {
    pub heights: Vec<u8>,
}

pub fn gamma_paths(r: &DiagonalRectangulation) -> Vec<GammaPath> {
    let n = r.n();
    if n == 0 {
        return vec![GammaPath { heights: Vec::new() }];
    }
    // hcov[y][c]: unit segment [c, c+1] x {y} lies on a rectangle side
    let mut hcov = vec![vec![false; n]; n + 1];
    let mut vcov = vec![vec![false; n]; n + 1];
    for rect in r.rects() {
        for c in rect.x1..rect.x2 {
            hcov[rect.y1 as usize][c as usize] = true;
            hcov[rect.y2 as usize][c as usize] = true;
        }
        for y in rect.y1..rect.y2 {
            vcov[rect.x1 as usize][y as usize] = true;
            vcov[rect.x2 as usize][y as usize] = true;
        }
    }
    let mut out = Vec::new();
    let mut heights = Vec::with_capacity(n);
    fn rec(
        c: usize,
        prev: usize,
        heights: &mut Vec<u8>,
        hcov: &[Vec<bool>],
        vcov: &[Vec<bool>],
        out: &mut Vec<GammaPath>,
    ) {
        let n = hcov.len() - 1;
        if c == n {
            out.push(GammaPath { heights: heights.clone() });
            return;
        }
        for h in (0..=prev).rev() {
            if h < prev && !vcov[c][h] {
                break;
            }
            if hcov[h][c] {
                heights.push(h as u8);
                rec(c + 1, h, heights, hcov, vcov, out);
                heights.pop();
            }
        }
    }
    rec(0, n, &mut heights, &hcov, &vcov, &mut out);
    out
}

/// Wall pieces strictly below/left of γ and strictly above/right of it,
/// with the number of rectangles on each side.
pub fn split_along(r: &DiagonalRectangulation, gamma: &GammaPath) -> ((usize, Vec<Segment>), (usize, Vec<Segment>)) {
    let n = r.n();
    let h = |c: isize| -> u8 {
        if c < 0 {
            n as u8
        } else if c as usize >= n {
            0
        } else {
            gamma.heights[c as usize]
        }
    };
    let p = r.rects().iter().filter(|u| u.y2 <= h(u.x2 as isize - 1)).count();
    let mut below = Vec::new();
    let mut above = Vec::new();
    for w in r.walls() {
        let (lo, hi) = w.span;
        let (b, a) = match w.orientation {
            Orient::Vertical => {
                let k = w.coord as isize;
                ((lo, hi.min(h(k))), (lo.max(h(k - 1)), hi))
            }
            Orient::Horizontal => {
                let d = w.coord;
                let xl = (0..=n as isize).find(|&k| h(k) <= d).unwrap() as u8;
                let xr = (0..=n as isize).rev().find(|&k| h(k - 1) >= d).unwrap() as u8;
                ((lo, hi.min(xl)), (lo.max(xr), hi))
            }
        };
        if b.0 < b.1 {
            below.push(Wall { span: b, ..w });
        }
        if a.0 < a.1 {
            above.push(Wall { span: a, ..w });
        }
    }
    ((p, below), (n - p, above))
}

/// Every `R ∈ dRec_m` whose walls, placed on the lines through the given
/// segments' diagonal points, contain those segments. `n` is the size of
/// the square holding the segments. With no segments every `R` qualifies.
pub fn completions(n: usize, segments: &[Segment], m: usize) -> Result<Vec<DiagonalRectangulation>> {
    let t = tables(m)?;
    if segments.is_empty() {
        return Ok(t.list.to_vec());
    }
    if segments.len() + 1 != m {
        return Err(Error::invalid(format!("{} segments cannot be completed to size {m}", segments.len())));
    }
    let mut segs = segments.to_vec();
    segs.sort_by_key(|s| s.diag_point);
    if segs.windows(2).any(|w| w[0].diag_point == w[1].diag_point) {
        return Err(Error::invalid("two segments share a diagonal point"));
    }
    let nn = n as u8;
    let mut k = vec![0u8];
    k.extend(segs.iter().map(|s| s.diag_point));
    k.push(nn);
    let fits = |walls: &[Wall]| {
        walls.iter().zip(&segs).all(|(w, s)| {
            if w.orientation != s.orientation {
                return false;
            }
            let (a, b) = (w.span.0 as usize, w.span.1 as usize);
            let (lo, hi) = match w.orientation {
                Orient::Vertical => (nn - k[m - a], nn - k[m - b]),
                Orient::Horizontal => (k[a], k[b]),
            };
            lo <= s.span.0 && s.span.1 <= hi
        })
    };
    Ok(t.list.iter().zip(&t.walls).filter(|(_, w)| fits(w)).map(|(r, _)| r.clone()).collect())
}

static COPRODUCTS: OnceLock<Mutex<HashMap<DiagonalRectangulation, TensorElement<DiagonalRectangulation>>>> =
    OnceLock::new();

/// `Σ_γ A_γ ⊗ B_γ`.
pub fn coproduct_intrinsic(r: &DiagonalRectangulation) -> Result<TensorElement<DiagonalRectangulation>> {
    let cache = COPRODUCTS.get_or_init(Default::default);
    if let Some(d) = cache.lock().unwrap().get(r) {
        return Ok(d.clone());
    }
    let n = r.n();
    let mut out = FreeElement::zero();
    for gamma in gamma_paths(r) {
        let ((p, below), (q, above)) = split_along(r, &gamma);
        let a = FreeElement::sum_of(completions(n, &below, p)?);
        let b = FreeElement::sum_of(completions(n, &above, q)?);
        out = out + FreeElement::tensor(&a, &b);
    }
    cache.lock().unwrap().insert(r.clone(), out.clone());
    Ok(out)
}

impl GradedHopf for DRec {
    type Key = DiagonalRectangulation;

    fn name(&self) -> &'static str {
        "dRec"
    }
    fn degree(&self, k: &DiagonalRectangulation) -> usize {
        k.n()
    }
    fn unit(&self) -> DiagonalRectangulation {
        DiagonalRectangulation::empty()
    }
    fn basis(&self, n: usize) -> Result<Vec<DiagonalRectangulation>> {
        Ok(enumerate::drec(n)?.to_vec())
    }
    fn contains(&self, _: &DiagonalRectangulation) -> bool {
        true
    }
    fn mul_basis(&self, a: &DiagonalRectangulation, b: &DiagonalRectangulation) -> FreeElement<DiagonalRectangulation> {
        match self.imp {
            DRecImpl::Intrinsic => product_intrinsic(a, b).expect("size within enumeration limit"),
            DRecImpl::ViaRho => product_via_rho(a, b),
        }
    }
    fn delta_basis(&self, a: &DiagonalRectangulation) -> TensorElement<DiagonalRectangulation> {
        match self.imp {
            DRecImpl::Intrinsic => coproduct_intrinsic(a).expect("size within enumeration limit"),
            DRecImpl::ViaRho => coproduct_via_rho(a),
        }
    }
}

/// Distinct keys of an element, for quick set comparisons in tests.
pub fn support<K: Ord + Clone + std::hash::Hash>(e: &FreeElement<K>) -> HashSet<K> {
    e.keys().cloned().collect()
}
