//! Independent brute-force oracles shared by the integration tests. Nothing
//! here calls the library's combinatorics beyond constructors.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use baxter_hopf::perm::Permutation;
use baxter_hopf::rect::{DiagonalRectangulation, Rect};

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

/// Every permutation of `1..=n` by Heap's algorithm, sorted.
pub fn all_words(n: usize) -> Vec<Vec<u8>> {
    fn heap(k: usize, a: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out.sort();
    out
}

pub fn all_perms(n: usize) -> Vec<Permutation> {
    all_words(n).into_iter().map(|w| Permutation::new(w).unwrap()).collect()
}

pub fn std_word(seq: &[u8]) -> Vec<u8> {
    seq.iter().map(|&v| 1 + seq.iter().filter(|&&u| u < v).count() as u8).collect()
}

/// Shifted shuffles by filtering `S_{p+q}`.
pub fn naive_shuffles(x: &[u8], y: &[u8]) -> BTreeSet<Vec<u8>> {
    let p = x.len() as u8;
    all_words(x.len() + y.len())
        .into_iter()
        .filter(|z| {
            let lo: Vec<u8> = z.iter().copied().filter(|&v| v <= p).collect();
            let hi: Vec<u8> = z.iter().copied().filter(|&v| v > p).map(|v| v - p).collect();
            lo == x && hi == y
        })
        .collect()
}

/// Vincular containment by trying every increasing index tuple; `adj[i]`
/// forces positions `i` and `i+1` of the occurrence to be consecutive.
pub fn naive_contains(x: &[u8], pat: &[u8], adj: &[bool]) -> bool {
    let n = x.len();
    let k = pat.len();
    fn rec(x: &[u8], pat: &[u8], adj: &[bool], idx: &mut Vec<usize>, n: usize, k: usize) -> bool {
        if idx.len() == k {
            let vals: Vec<u8> = idx.iter().map(|&i| x[i]).collect();
            return std_word(&vals) == pat;
        }
        let start = idx.last().map_or(0, |&i| i + 1);
        for i in start..n {
            if let Some(&last) = idx.last() {
                if adj[idx.len() - 1] && i != last + 1 {
                    continue;
                }
            }
            idx.push(i);
            if rec(x, pat, adj, idx, n, k) {
                return true;
            }
            idx.pop();
        }
        false
    }
    rec(x, pat, adj, &mut Vec::new(), n, k)
}

pub fn naive_twisted_baxter(x: &[u8]) -> bool {
    let adj = [false, true, false];
    !naive_contains(x, &[3, 4, 1, 2], &adj) && !naive_contains(x, &[2, 4, 1, 3], &adj)
}

pub fn naive_baxter(x: &[u8]) -> bool {
    let adj = [false, true, false];
    !naive_contains(x, &[3, 1, 4, 2], &adj) && !naive_contains(x, &[2, 4, 1, 3], &adj)
}

/// `(n+2)(n+3) B(n) = (7n^2 + 7n - 2) B(n-1) + 8(n-1)(n-2) B(n-2)`.
pub fn baxter_by_recurrence(max: usize) -> Vec<u128> {
    let mut b = vec![1u128, 1];
    for n in 2..=max as u128 {
        let v = ((7 * n * n + 7 * n - 2) * b[n as usize - 1] + 8 * (n - 1) * (n - 2) * b[n as usize - 2])
            / ((n + 2) * (n + 3));
        b.push(v);
    }
    b.truncate(max + 1);
    b
}

/// Tilings of the `n x n` grid by `n` integer rectangles, each crossing the
/// antidiagonal `x + y = n` in its interior.
pub fn tilings(n: usize) -> BTreeSet<Vec<Rect>> {
    fn rec(n: usize, grid: &mut Vec<Vec<bool>>, rects: &mut Vec<Rect>, out: &mut BTreeSet<Vec<Rect>>) {
        let free = (0..n).flat_map(|y| (0..n).map(move |x| (x, y))).find(|&(x, y)| !grid[y][x]);
        let Some((x0, y0)) = free else {
            if rects.len() == n {
                let mut v = rects.clone();
                v.sort_by_key(|r| (r.x1 as usize).max(n - r.y2 as usize));
                out.insert(v);
            }
            return;
        };
        if rects.len() == n {
            return;
        }
        for x1 in x0 + 1..=n {
            if grid[y0][x1 - 1] {
                break;
            }
            for y1 in y0 + 1..=n {
                if (x0..x1).any(|x| grid[y1 - 1][x]) {
                    break;
                }
                if !(x0 + y0 < n && n < x1 + y1) {
                    continue;
                }
                for y in y0..y1 {
                    for x in x0..x1 {
                        grid[y][x] = true;
                    }
                }
                rects.push(Rect::new(x0 as u8, y0 as u8, x1 as u8, y1 as u8));
                rec(n, grid, rects, out);
                rects.pop();
                for y in y0..y1 {
                    for x in x0..x1 {
                        grid[y][x] = false;
                    }
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    if n == 0 {
        out.insert(Vec::new());
        return out;
    }
    rec(n, &mut vec![vec![false; n]; n], &mut Vec::new(), &mut out);
    out
}

pub fn tiling_rects(r: &DiagonalRectangulation) -> Vec<Rect> {
    r.rects().to_vec()
}

/// Distinct rectangle corners.
pub fn corner_count(r: &DiagonalRectangulation) -> usize {
    r.rects()
        .iter()
        .flat_map(|u| [(u.x1, u.y1), (u.x1, u.y2), (u.x2, u.y1), (u.x2, u.y2)])
        .collect::<BTreeSet<_>>()
        .len()
}

/// True when the graph stays connected after deleting any set of fewer than
/// `k` vertices.
pub fn is_k_connected_brute(adj: &[Vec<usize>], k: usize) -> bool {
    let n = adj.len();
    if n <= k {
        return false;
    }
    fn connected(adj: &[Vec<usize>], removed: &[bool]) -> bool {
        let Some(s) = (0..adj.len()).find(|&v| !removed[v]) else { return true };
        let mut seen = removed.to_vec();
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
        seen.iter().all(|&b| b)
    }
    fn subsets(adj: &[Vec<usize>], start: usize, left: usize, removed: &mut Vec<bool>) -> bool {
        if !connected(adj, removed) {
            return false;
        }
        if left == 0 {
            return true;
        }
        for v in start..adj.len() {
            removed[v] = true;
            let ok = subsets(adj, v + 1, left - 1, removed);
            removed[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    subsets(adj, 0, k.saturating_sub(1), &mut vec![false; n])
}

/// Groups `items` by `key`, returning the blocks as sorted index sets.
pub fn partition_by<T, K: std::hash::Hash + Eq>(items: &[T], key: impl Fn(&T) -> K) -> BTreeSet<BTreeSet<usize>> {
    let mut blocks: HashMap<K, BTreeSet<usize>> = HashMap::new();
    for (i, t) in items.iter().enumerate() {
        blocks.entry(key(t)).or_default().insert(i);
    }
    blocks.into_values().collect()
}

/// Finest common coarsening of two partitions of `0..len`.
pub fn join_partitions(
    len: usize,
    a: &BTreeSet<BTreeSet<usize>>,
    b: &BTreeSet<BTreeSet<usize>>,
) -> BTreeSet<BTreeSet<usize>> {
    let mut parent: Vec<usize> = (0..len).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for block in a.iter().chain(b) {
        let mut it = block.iter();
        if let Some(&first) = it.next() {
            for &j in it {
                let (r1, r2) = (find(&mut parent, first), find(&mut parent, j));
                parent[r1] = r2;
            }
        }
    }
    let roots: Vec<usize> = (0..len).map(|i| find(&mut parent, i)).collect();
    partition_by(&roots, |&r| r)
}

/// Common refinement of two partitions of `0..len`.
pub fn meet_partitions(
    len: usize,
    a: &BTreeSet<BTreeSet<usize>>,
    b: &BTreeSet<BTreeSet<usize>>,
) -> BTreeSet<BTreeSet<usize>> {
    let label = |p: &BTreeSet<BTreeSet<usize>>| {
        let mut l = vec![0usize; len];
        for (k, block) in p.iter().enumerate() {
            for &i in block {
                l[i] = k;
            }
        }
        l
    };
    let (la, lb) = (label(a), label(b));
    let idx: Vec<usize> = (0..len).collect();
    partition_by(&idx, |&i| (la[i], lb[i]))
}
