//! Finite posets: dRec_n as a quotient of the weak order, Baxter
//! permutations under the weak order, Möbius values and connectivity.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;

use serde_json::{json, Value};

use crate::enumerate;
use crate::error::{check_size, Result};
use crate::perm::Permutation;
use crate::rect::{DiagonalRectangulation, Orient};

pub const LATTICE_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b))
    }
}

/// A finite poset on indexed elements. `up[i]` and `down[i]` are reflexive.
#[derive(Clone, Debug)]
pub struct FinitePoset<K> {
    elements: Vec<K>,
    index: HashMap<K, usize>,
    up: Vec<Bits>,
    down: Vec<Bits>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl<K: Clone + Eq + Hash> FinitePoset<K> {
    /// `leq` must already be a partial order; it is not closed transitively.
    pub fn from_order(elements: Vec<K>, leq: impl Fn(&K, &K) -> bool) -> Self {
        let rel = |i: usize, j: usize| leq(&elements[i], &elements[j]);
        let (up, down) = order_bits(elements.len(), rel);
        Self::from_bits(elements, up, down)
    }

    /// As [`Self::from_order`], with the order given on indices.
    pub fn from_indexed(elements: Vec<K>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let (up, down) = order_bits(elements.len(), leq);
        Self::from_bits(elements, up, down)
    }

    fn from_bits(elements: Vec<K>, up: Vec<Bits>, down: Vec<Bits>) -> Self {
        let len = elements.len();
        let mut upper = vec![Vec::new(); len];
        let mut lower = vec![Vec::new(); len];
        for i in 0..len {
            for j in up[i].ones() {
                if j == i {
                    continue;
                }
                // i < j is a cover iff nothing lies strictly between
                let between = up[i].and(&down[j]).count();
                if between == 2 {
                    upper[i].push(j);
                    lower[j].push(i);
                }
            }
        }
        let index = elements.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        FinitePoset { elements, index, up, down, upper, lower }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[K] {
        &self.elements
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].get(j)
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// Hasse diagram edges `(lower, upper)`.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|i| self.upper[i].iter().map(move |&j| (i, j))).collect()
    }

    fn least_in(&self, set: &Bits) -> Option<usize> {
        set.ones().find(|&z| set.is_subset(&self.up[z]))
    }

    fn greatest_in(&self, set: &Bits) -> Option<usize> {
        set.ones().find(|&z| set.is_subset(&self.down[z]))
    }

    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        self.least_in(&self.up[i].and(&self.up[j]))
    }

    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        self.greatest_in(&self.down[i].and(&self.down[j]))
    }

    pub fn is_lattice(&self) -> bool {
        (0..self.len()).all(|i| (i + 1..self.len()).all(|j| self.join(i, j).is_some() && self.meet(i, j).is_some()))
    }

    /// `mu[i][j]`, zero unless `i <= j`.
    pub fn moebius(&self) -> Vec<Vec<i64>> {
        let len = self.len();
        let mut mu = vec![vec![0i64; len]; len];
        for (i, row) in mu.iter_mut().enumerate() {
            let mut memo: Vec<Option<i64>> = vec![None; len];
            for j in self.up[i].ones() {
                row[j] = self.mu_from(i, j, &mut memo);
            }
        }
        mu
    }

    fn mu_from(&self, i: usize, j: usize, memo: &mut Vec<Option<i64>>) -> i64 {
        if let Some(v) = memo[j] {
            return v;
        }
        let v = if i == j {
            1
        } else {
            let interval = self.up[i].and(&self.down[j]);
            -interval.ones().filter(|&z| z != j).map(|z| self.mu_from(i, z, memo)).sum::<i64>()
        };
        memo[j] = Some(v);
        v
    }

    fn hasse_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for (a, b) in self.hasse_edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Vertex connectivity of the undirected Hasse diagram. A complete graph
    /// on `m` vertices has connectivity `m - 1`.
    pub fn connectivity(&self) -> usize {
        let adj = self.hasse_neighbors();
        let len = adj.len();
        if len <= 1 {
            return 0;
        }
        let mut best = adj.iter().map(Vec::len).min().unwrap();
        // the source of a minimum separator's pair can be found among the first best + 1 vertices
        let mut i = 0;
        while i <= best && i < len {
            for j in i + 1..len {
                if !adj[i].contains(&j) {
                    best = best.min(local_connectivity(&adj, i, j, best));
                }
            }
            i += 1;
        }
        best
    }

    pub fn to_dot(&self, label: impl Fn(&K) -> String) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (i, k) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", label(k).replace('"', "\\\""));
        }
        for (a, b) in self.hasse_edges() {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self, label: impl Fn(&K) -> Value) -> Value {
        json!({
            "nodes": self.elements.iter().map(label).collect::<Vec<_>>(),
            "edges": self.hasse_edges(),
        })
    }
}

fn order_bits(len: usize, leq: impl Fn(usize, usize) -> bool) -> (Vec<Bits>, Vec<Bits>) {
    let mut up = vec![Bits::new(len); len];
    let mut down = vec![Bits::new(len); len];
    for i in 0..len {
        for j in 0..len {
            if leq(i, j) {
                up[i].set(j);
                down[j].set(i);
            }
        }
    }
    (up, down)
}

/// Number of internally vertex-disjoint `s`-`t` paths, stopping at `cap`.
fn local_connectivity(adj: &[Vec<usize>], s: usize, t: usize, cap: usize) -> usize {
    // split v into v_in = 2v and v_out = 2v + 1
    let nodes = 2 * adj.len();
    let mut graph: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nodes];
    let mut to = Vec::new();
    let mut cap_left = Vec::new();
    let mut add = |u: usize, v: usize, c: usize, graph: &mut Vec<Vec<(usize, usize)>>| {
        graph[u].push((v, to.len()));
        to.push(v);
        cap_left.push(c);
        graph[v].push((u, to.len()));
        to.push(u);
        cap_left.push(0);
    };
    let big = adj.len();
    for v in 0..adj.len() {
        let c = if v == s || v == t { big } else { 1 };
        add(2 * v, 2 * v + 1, c, &mut graph);
        for &w in &adj[v] {
            add(2 * v + 1, 2 * w, big, &mut graph);
        }
    }
    let (src, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < cap {
        let mut prev: Vec<Option<usize>> = vec![None; nodes];
        let mut seen = vec![false; nodes];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for &(v, e) in &graph[u] {
                if !seen[v] && cap_left[e] > 0 {
                    seen[v] = true;
                    prev[v] = Some(e);
                    queue.push_back(v);
                }
            }
        }
        if !seen[sink] {
            break;
        }
        let mut v = sink;
        while let Some(e) = prev[v] {
            cap_left[e] -= 1;
            cap_left[e ^ 1] += 1;
            v = to[e ^ 1];
        }
        flow += 1;
    }
    flow
}

/// `dRec_n` ordered by `R <= R'` iff `τ(R) <= τ(R')` in the weak order.
pub fn drec_lattice(n: usize) -> Result<FinitePoset<DiagonalRectangulation>> {
    check_size("drec lattice", n, LATTICE_LIMIT)?;
    let elements = enumerate::drec(n)?.to_vec();
    let masks: Vec<u128> = elements.iter().map(|r| r.tau().inversion_mask().expect("n <= 8")).collect();
    Ok(FinitePoset::from_indexed(elements, |i, j| masks[i] & !masks[j] == 0))
}

/// Weak order restricted to the permutations of `set`.
pub fn weak_subposet(set: &[Permutation]) -> FinitePoset<Permutation> {
    let masks: Vec<u128> = set.iter().map(|x| x.inversion_mask().expect("n <= 16")).collect();
    FinitePoset::from_indexed(set.to_vec(), |i, j| masks[i] & !masks[j] == 0)
}

pub fn baxter_weak_poset(n: usize) -> Result<FinitePoset<Permutation>> {
    check_size("baxter poset", n, LATTICE_LIMIT)?;
    Ok(weak_subposet(enumerate::bax(n)?))
}

pub fn tbax_weak_poset(n: usize) -> Result<FinitePoset<Permutation>> {
    check_size("twisted baxter poset", n, LATTICE_LIMIT)?;
    Ok(weak_subposet(enumerate::tbax(n)?))
}

/// Pivot results split by the orientation of the pivoted edge of `r`:
/// vertical edges move up, horizontal edges move down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotCovers {
    pub up: Vec<DiagonalRectangulation>,
    pub down: Vec<DiagonalRectangulation>,
}

pub fn covers_via_pivots(r: &DiagonalRectangulation) -> PivotCovers {
    let mut out = PivotCovers { up: Vec::new(), down: Vec::new() };
    for p in r.pivots() {
        match p.edge.orientation {
            Orient::Vertical => out.up.push(p.result),
            Orient::Horizontal => out.down.push(p.result),
        }
    }
    out.up.sort();
    out.down.sort();
    out
}

/// Lattice covers of `r` in `dRec_n`, as sorted lists.
pub fn covers_in_lattice(p: &FinitePoset<DiagonalRectangulation>, r: &DiagonalRectangulation) -> Option<PivotCovers> {
    let i = p.index_of(r)?;
    let pick = |v: &[usize]| {
        let mut v: Vec<_> = v.iter().map(|&j| p.elements()[j].clone()).collect();
        v.sort();
        v
    };
    Some(PivotCovers { up: pick(p.upper_covers(i)), down: pick(p.lower_covers(i)) })
}
