//! Permutations in one-line notation, the (right) weak order, standardization,
//! vincular patterns and shifted shuffles.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest size accepted when parsing permutations from text.
pub const MAX_PARSE_SIZE: usize = 20;

/// A permutation of `1..=n` in one-line notation. `n = 0` is the empty
/// permutation, the index of the unit in every algebra of this crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        if n > u8::MAX as usize {
            return Err(Error::invalid(format!("permutation of size {n} is too long")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::invalid(format!("value {v} out of range 1..={n}")));
            }
            if seen[v] {
                return Err(Error::invalid(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// Caller guarantees `word` is a bijection on `1..=len`.
    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u8).collect() }
    }

    /// The maximum `n(n-1)...1` of the weak order on `S_n`.
    pub fn longest(n: usize) -> Self {
        Permutation { word: (1..=n as u8).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u8> {
        self.word
    }

    /// `positions()[v]` is the 0-based position of value `v`; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.len() + 1];
        for (i, &v) in self.word.iter().enumerate() {
            pos[v as usize] = i;
        }
        pos
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { word: inv }
    }

    /// Reverse values: `w0 . x`.
    pub fn rv(&self) -> Self {
        let n = self.len() as u8;
        Permutation { word: self.word.iter().map(|&v| n + 1 - v).collect() }
    }

    /// Reverse positions: `x . w0`.
    pub fn rp(&self) -> Self {
        Permutation { word: self.word.iter().rev().copied().collect() }
    }

    /// Subsequence of the word made of the values in `values`.
    pub fn restrict_to_values(&self, values: &BTreeSet<usize>) -> Result<Vec<u8>> {
        if let Some(&v) = values.iter().find(|&&v| v == 0 || v > self.len()) {
            return Err(Error::invalid(format!("value {v} out of range 1..={}", self.len())));
        }
        Ok(self.word.iter().copied().filter(|&v| values.contains(&(v as usize))).collect())
    }

    /// Standardized restriction to the contiguous value range `lo..=hi`.
    pub fn restrict_to_range(&self, lo: usize, hi: usize) -> Permutation {
        let seq: Vec<u8> = self.word.iter().copied().filter(|&v| (lo..=hi).contains(&(v as usize))).collect();
        standardize_unchecked(&seq)
    }

    /// The set of `a < n` such that `a + 1` precedes `a`.
    pub fn sigma(&self) -> DescentData {
        let pos = self.positions();
        let set = (1..self.len()).filter(|&a| pos[a + 1] < pos[a]).collect();
        DescentData { set, n: self.len() }
    }

    /// Positions `i` (0-based) with `word[i] > word[i + 1]`.
    pub fn descents(&self) -> Vec<usize> {
        (0..self.len().saturating_sub(1)).filter(|&i| self.word[i] > self.word[i + 1]).collect()
    }

    pub fn ascents(&self) -> Vec<usize> {
        (0..self.len().saturating_sub(1)).filter(|&i| self.word[i] < self.word[i + 1]).collect()
    }

    pub fn inversion_count(&self) -> usize {
        let w = &self.word;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// Returns a copy with positions `i` and `i + 1` exchanged.
    pub fn swapped(&self, i: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(i, i + 1);
        Permutation { word }
    }

    pub fn inversion_set(&self) -> InversionSet {
        let pos = self.positions();
        let n = self.len();
        let mut pairs = BTreeSet::new();
        for a in 1..=n {
            for b in 1..a {
                if pos[a] < pos[b] {
                    pairs.insert((a as u8, b as u8));
                }
            }
        }
        InversionSet { n, pairs }
    }

    /// Inversion set packed into a bit mask, one bit per pair `a > b`.
    /// `None` when `n > 16`.
    pub fn inversion_mask(&self) -> Option<u128> {
        let n = self.len();
        if n > 16 {
            return None;
        }
        let pos = self.positions();
        let mut mask = 0u128;
        let mut bit = 0;
        for a in 1..=n {
            for b in 1..a {
                if pos[a] < pos[b] {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        Some(mask)
    }

    /// Permutations covering `self` in the weak order, ordered by swap position.
    pub fn weak_covers_up(&self) -> Vec<Permutation> {
        self.ascents().into_iter().map(|i| self.swapped(i)).collect()
    }

    pub fn weak_covers_down(&self) -> Vec<Permutation> {
        self.descents().into_iter().map(|i| self.swapped(i)).collect()
    }

    /// Weak order comparison: inversion-set containment.
    pub fn weak_leq(&self, other: &Permutation) -> Result<bool> {
        same_size(self, other)?;
        let (p, q) = (self.positions(), other.positions());
        let n = self.len();
        for a in 1..=n {
            for b in 1..a {
                if p[a] < p[b] && q[a] > q[b] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn weak_join(&self, other: &Permutation) -> Result<Permutation> {
        same_size(self, other)?;
        let n = self.len();
        let (p, q) = (self.positions(), other.positions());
        // before[a][b]: a must precede b, for a > b.
        let mut before = vec![vec![false; n + 1]; n + 1];
        for a in 1..=n {
            for b in 1..a {
                before[a][b] = p[a] < p[b] || q[a] < q[b];
            }
        }
        transitive_closure(&mut before);
        InversionSet::from_matrix(n, &before).to_permutation()
    }

    pub fn weak_meet(&self, other: &Permutation) -> Result<Permutation> {
        same_size(self, other)?;
        let n = self.len();
        let (p, q) = (self.positions(), other.positions());
        // Non-inversions: a < b with a before b.
        let mut before = vec![vec![false; n + 1]; n + 1];
        for a in 1..=n {
            for b in a + 1..=n {
                before[a][b] = p[a] < p[b] || q[a] < q[b];
            }
        }
        transitive_closure(&mut before);
        let mut inv = vec![vec![false; n + 1]; n + 1];
        for a in 1..=n {
            for b in 1..a {
                inv[a][b] = !before[b][a];
            }
        }
        InversionSet::from_matrix(n, &inv).to_permutation()
    }
}

fn same_size(x: &Permutation, y: &Permutation) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::invalid(format!("size mismatch: {} vs {}", x.len(), y.len())));
    }
    Ok(())
}

fn transitive_closure(rel: &mut [Vec<bool>]) {
    let m = rel.len();
    for k in 0..m {
        for i in 0..m {
            if rel[i][k] {
                for j in 0..m {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
}

/// Standardization of a sequence of distinct integers.
pub fn standardize<T: Ord + Copy>(seq: &[T]) -> Result<Permutation> {
    let mut sorted: Vec<T> = seq.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("standardize: repeated entries"));
    }
    if seq.len() > u8::MAX as usize {
        return Err(Error::invalid("standardize: sequence too long"));
    }
    let word = seq.iter().map(|v| (sorted.binary_search(v).unwrap() + 1) as u8).collect();
    Ok(Permutation { word })
}

pub(crate) fn standardize_unchecked(seq: &[u8]) -> Permutation {
    let mut rank = [0u8; 256];
    for &v in seq {
        rank[v as usize] = 1;
    }
    let mut r = 0u8;
    for slot in rank.iter_mut() {
        if *slot == 1 {
            r += 1;
            *slot = r;
        }
    }
    Permutation { word: seq.iter().map(|&v| rank[v as usize]).collect() }
}

/// All shifted shuffles of `x` and `y`, in lexicographic order of the
/// positions taken by `x`.
pub fn shifted_shuffles(x: &Permutation, y: &Permutation) -> Vec<Permutation> {
    let (p, q) = (x.len(), y.len());
    let n = p + q;
    let shift = p as u8;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = (0..p).collect();
    loop {
        let mut word = Vec::with_capacity(n);
        let (mut xi, mut yi, mut ci) = (0, 0, 0);
        for pos in 0..n {
            if ci < p && chosen[ci] == pos {
                word.push(x.word[xi]);
                xi += 1;
                ci += 1;
            } else {
                word.push(y.word[yi] + shift);
                yi += 1;
            }
        }
        out.push(Permutation { word });
        // next p-combination of 0..n
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if chosen[i] < n - p + i {
                chosen[i] += 1;
                for j in i + 1..p {
                    chosen[j] = chosen[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lexicographic enumeration of `S_n`.
pub fn all_permutations(n: usize) -> Permutations {
    Permutations { next: Some((1..=n as u8).collect()) }
}

pub struct Permutations {
    next: Option<Vec<u8>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut w = cur.clone();
        let n = w.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| w[i] < w[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| w[j] > w[i]).unwrap();
                w.swap(i, j);
                w[i + 1..].reverse();
                self.next = Some(w);
            }
        }
        Some(Permutation { word: cur })
    }
}

/// A set of inversions `(a, b)`, `a > b`, meaning `a` precedes `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSet {
    pub n: usize,
    pub pairs: BTreeSet<(u8, u8)>,
}

impl InversionSet {
    fn from_matrix(n: usize, before: &[Vec<bool>]) -> Self {
        let mut pairs = BTreeSet::new();
        for a in 1..=n {
            for b in 1..a {
                if before[a][b] {
                    pairs.insert((a as u8, b as u8));
                }
            }
        }
        InversionSet { n, pairs }
    }

    /// The unique permutation with this inversion set, if there is one.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let n = self.n;
        let mut word = vec![0u8; n];
        for v in 1..=n {
            // number of values placed before v
            let before = (v + 1..=n).filter(|&u| self.pairs.contains(&(u as u8, v as u8))).count()
                + (1..v).filter(|&u| !self.pairs.contains(&(v as u8, u as u8))).count();
            if word[before] != 0 {
                return Err(Error::invalid("not the inversion set of a permutation"));
            }
            word[before] = v as u8;
        }
        let perm = Permutation { word };
        if perm.inversion_set() != *self {
            return Err(Error::invalid("not the inversion set of a permutation"));
        }
        Ok(perm)
    }
}

/// `sigma(x) = (U(x), n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DescentData {
    pub set: Vec<usize>,
    pub n: usize,
}

/// A pattern such as `3-41-2`: letters joined without a dash must occur in
/// adjacent positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VincularPattern {
    values: Vec<u8>,
    /// `adjacent[i]` ties pattern positions `i` and `i + 1`.
    adjacent: Vec<bool>,
}

impl VincularPattern {
    pub fn new(values: Vec<u8>, adjacent: Vec<bool>) -> Result<Self> {
        Permutation::new(values.clone())?;
        if adjacent.len() != values.len().saturating_sub(1) {
            return Err(Error::invalid("adjacency flags must have length k - 1"));
        }
        Ok(VincularPattern { values, adjacent })
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn adjacent(&self) -> &[bool] {
        &self.adjacent
    }

    /// Positions where adjacency is required, 1-based as in the dash notation.
    pub fn adjacency_positions(&self) -> Vec<usize> {
        self.adjacent.iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| i + 1).collect()
    }

    pub fn is_contained_in(&self, x: &Permutation) -> bool {
        let k = self.values.len();
        if k == 0 {
            return true;
        }
        let mut chosen = Vec::with_capacity(k);
        self.search(x.word(), &mut chosen)
    }

    fn search(&self, w: &[u8], chosen: &mut Vec<usize>) -> bool {
        let j = chosen.len();
        if j == self.values.len() {
            return true;
        }
        let (lo, hi) = match chosen.last() {
            None => (0, w.len()),
            Some(&prev) if self.adjacent[j - 1] => (prev + 1, (prev + 2).min(w.len())),
            Some(&prev) => (prev + 1, w.len()),
        };
        let remaining = self.values.len() - j - 1;
        for pos in lo..hi {
            if pos + remaining >= w.len() {
                break;
            }
            let fits = chosen.iter().zip(&self.values).all(|(&cp, &pv)| w[cp].cmp(&w[pos]) == pv.cmp(&self.values[j]));
            if fits {
                chosen.push(pos);
                if self.search(w, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

impl FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut adjacent = Vec::new();
        let mut pending_dash = false;
        for ch in s.chars() {
            match ch {
                '-' => {
                    if values.is_empty() || pending_dash {
                        return Err(Error::invalid(format!("bad pattern {s:?}")));
                    }
                    pending_dash = true;
                }
                c if c.is_ascii_digit() && c != '0' => {
                    if !values.is_empty() {
                        adjacent.push(!pending_dash);
                    }
                    pending_dash = false;
                    values.push(c as u8 - b'0');
                }
                _ => return Err(Error::invalid(format!("bad pattern {s:?}"))),
            }
        }
        if pending_dash {
            return Err(Error::invalid(format!("bad pattern {s:?}")));
        }
        VincularPattern::new(values, adjacent)
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 && !self.adjacent[i - 1] {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The named patterns used throughout the crate.
pub mod patterns {
    use super::VincularPattern;

    fn p(s: &str) -> VincularPattern {
        s.parse().expect("static pattern")
    }

    pub fn p3_41_2() -> VincularPattern {
        p("3-41-2")
    }
    pub fn p2_41_3() -> VincularPattern {
        p("2-41-3")
    }
    pub fn p3_14_2() -> VincularPattern {
        p("3-14-2")
    }
    pub fn p2_14_3() -> VincularPattern {
        p("2-14-3")
    }
    pub fn p2_3_1() -> VincularPattern {
        p("2-3-1")
    }
    pub fn p3_1_2() -> VincularPattern {
        p("3-1-2")
    }
    pub fn p1_3_2() -> VincularPattern {
        p("1-3-2")
    }
    pub fn p2_1_3() -> VincularPattern {
        p("2-1-3")
    }
}

pub fn contains_vincular(x: &Permutation, pattern: &VincularPattern) -> bool {
    pattern.is_contained_in(x)
}

/// Scan for the length-4 patterns whose middle letters are adjacent:
/// `inner_desc` picks 41 over 14, `outer` is how the left letter compares
/// to the right one.
fn adjacent_middle_occurrence(w: &[u8], inner_desc: bool, outer: Ordering) -> bool {
    let n = w.len();
    for i in 1..n.saturating_sub(2) {
        let (m1, m2) = (w[i], w[i + 1]);
        let (lo, hi) = if inner_desc {
            if m1 < m2 {
                continue;
            }
            (m2, m1)
        } else {
            if m1 > m2 {
                continue;
            }
            (m1, m2)
        };
        for &l in &w[..i] {
            if l <= lo || l >= hi {
                continue;
            }
            if w[i + 2..].iter().any(|&r| r > lo && r < hi && r.cmp(&l) == outer) {
                return true;
            }
        }
    }
    false
}

/// Avoids 3-41-2 and 2-41-3.
pub fn is_twisted_baxter(x: &Permutation) -> bool {
    let w = x.word();
    // 3-41-2: left > right; 2-41-3: right > left
    !adjacent_middle_occurrence(w, true, Ordering::Less) && !adjacent_middle_occurrence(w, true, Ordering::Greater)
}

/// Avoids 3-14-2 and 2-41-3.
pub fn is_baxter(x: &Permutation) -> bool {
    let w = x.word();
    !adjacent_middle_occurrence(w, false, Ordering::Less) && !adjacent_middle_occurrence(w, true, Ordering::Greater)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string (`3412`), a comma list (`3,4,1,2`), a JSON-ish
    /// bracketed list, or `∅` / the empty string for `S_0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s).trim();
        if s.is_empty() || s == "∅" || s == "e" {
            return Ok(Permutation::empty());
        }
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::invalid(format!("bad entry {t:?} in {s:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::invalid(format!("bad digit {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        if values.len() > MAX_PARSE_SIZE {
            return Err(Error::ResourceLimit { what: "permutation", n: values.len(), limit: MAX_PARSE_SIZE });
        }
        if values.iter().any(|&v| v > u8::MAX as usize) {
            return Err(Error::invalid(format!("value out of range in {s:?}")));
        }
        Permutation::new(values.into_iter().map(|v| v as u8).collect())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let word = Vec::<u8>::deserialize(d)?;
        Permutation::new(word).map_err(serde::de::Error::custom)
    }
}
