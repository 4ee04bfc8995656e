//! Self-duality of MR and the failed tBax pairing.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::congruence::{congruence_class, project_down, CongruenceKind};
use crate::enumerate;
use crate::error::{check_size, Result};
use crate::perm::{all_permutations, shifted_shuffles, standardize_unchecked, Permutation};

pub const DUALITY_LIMIT: usize = 6;

/// Coefficient of `x ⊗ y` in `Δ_S(z)` equals that of `z⁻¹` in `x⁻¹ • y⁻¹`,
/// for all `z ∈ S_n` and all splits.
pub fn duality_coefficient_check(n: usize) -> Result<bool> {
    check_size("duality check", n, DUALITY_LIMIT)?;
    for p in 0..=n {
        // (x, y) -> set of z with x ⊗ y in Δ_S(z)
        let mut lhs: BTreeMap<(Permutation, Permutation), BTreeSet<Permutation>> = BTreeMap::new();
        for z in all_permutations(n) {
            let w = z.word();
            let key = (standardize_unchecked(&w[..p]), standardize_unchecked(&w[p..]));
            lhs.entry(key).or_default().insert(z);
        }
        for x in all_permutations(p) {
            for y in all_permutations(n - p) {
                let rhs: BTreeSet<Permutation> =
                    shifted_shuffles(&x.inverse(), &y.inverse()).iter().map(Permutation::inverse).collect();
                let got = lhs.remove(&(x.clone(), y.clone())).unwrap_or_default();
                if got != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Entry `(x, y)` counts `w` in the ΘtB-class of `x` with `w⁻¹` in the class
/// of `y`; rows and columns follow the lexicographic order of `tBax_n`.
pub fn dual_pairing_matrix(n: usize) -> Result<Vec<Vec<i64>>> {
    check_size("pairing matrix", n, DUALITY_LIMIT)?;
    let basis = enumerate::tbax(n)?;
    let index: BTreeMap<&Permutation, usize> = basis.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut m = vec![vec![0i64; basis.len()]; basis.len()];
    for (i, x) in basis.iter().enumerate() {
        for w in congruence_class(x, CongruenceKind::CTb) {
            let j = index[&project_down(&w.inverse(), CongruenceKind::CTb)];
            m[i][j] += 1;
        }
    }
    Ok(m)
}

/// Pairs of row indices `(i, j)`, `i < j`, with equal rows.
pub fn identical_rows(m: &[Vec<i64>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if m[i] == m[j] {
                out.push((i, j));
            }
        }
    }
    out
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, piv);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let (f, g) = (a[r][c].clone(), a[i][c].clone());
            for j in c..cols {
                a[i][j] = &a[i][j] * &f - &a[r][j] * &g;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duality_small() {
        for n in 0..=4 {
            assert!(duality_coefficient_check(n).unwrap());
        }
    }

    #[test]
    fn pairing_matrices() {
        assert_eq!(dual_pairing_matrix(1).unwrap(), vec![vec![1]]);
        let m3 = dual_pairing_matrix(3).unwrap();
        assert_eq!(m3.len(), 6);
        assert_eq!(rank(&m3), 6);
        let m4 = dual_pairing_matrix(4).unwrap();
        assert_eq!(m4.len(), 22);
        assert!(!identical_rows(&m4).is_empty());
        assert!(rank(&m4) < 22);
    }
}
