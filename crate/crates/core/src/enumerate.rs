//! Cached bases of the four graded families and the Baxter number.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::congruence::{project_down, CongruenceKind};
use crate::error::{check_size, Result};
use crate::perm::{all_permutations, is_baxter, is_twisted_baxter, Permutation};
use crate::rect::{rho, DiagonalRectangulation};
use crate::tree::{rho_b, rho_t};

/// Largest size for which a basis is enumerated and cached.
pub const ENUM_LIMIT: usize = 10;

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Closed form `Σ C(n+1,k-1) C(n+1,k) C(n+1,k+1) / (C(n+1,1) C(n+1,2))`.
/// The sum is empty at `n = 0`; `B(0) = 1` counts the empty object.
pub fn baxter_number(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let m = n + 1;
    let sum: BigUint = (1..=n).map(|k| binomial(m, k - 1) * binomial(m, k) * binomial(m, k + 1)).sum();
    sum / (binomial(m, 1) * binomial(m, 2))
}

type Cache<T> = [OnceLock<Vec<T>>; ENUM_LIMIT + 1];

fn cached<T>(cache: &'static Cache<T>, n: usize, build: impl FnOnce() -> Vec<T>) -> Result<&'static [T]> {
    check_size("enumeration", n, ENUM_LIMIT)?;
    Ok(cache[n].get_or_init(build))
}

static TBAX: Cache<Permutation> = [const { OnceLock::new() }; ENUM_LIMIT + 1];
static BAX: Cache<Permutation> = [const { OnceLock::new() }; ENUM_LIMIT + 1];
static DREC: Cache<DiagonalRectangulation> = [const { OnceLock::new() }; ENUM_LIMIT + 1];

/// Twisted Baxter permutations of size `n`, lexicographic.
pub fn tbax(n: usize) -> Result<&'static [Permutation]> {
    cached(&TBAX, n, || all_permutations(n).filter(is_twisted_baxter).collect())
}

/// Baxter permutations of size `n`, lexicographic.
pub fn bax(n: usize) -> Result<&'static [Permutation]> {
    cached(&BAX, n, || all_permutations(n).filter(is_baxter).collect())
}

/// `ρ` of the twisted Baxter permutations, sorted by rectangle list.
pub fn drec(n: usize) -> Result<&'static [DiagonalRectangulation]> {
    let base = tbax(n)?;
    cached(&DREC, n, || {
        let mut v: Vec<_> = base.iter().map(rho).collect();
        v.sort_unstable();
        v
    })
}

/// Distinct `ρ` images over all of `S_n`; independent of the cached basis.
pub fn count_rho_images(n: usize) -> Result<usize> {
    check_size("enumeration", n, ENUM_LIMIT)?;
    Ok(all_permutations(n).map(|x| rho(&x)).collect::<HashSet<_>>().len())
}

/// Number of class minima of ΘtB, found by projection rather than patterns.
pub fn count_tb_minima(n: usize) -> Result<usize> {
    check_size("enumeration", n, ENUM_LIMIT)?;
    Ok(all_permutations(n).filter(|x| project_down(x, CongruenceKind::CTb) == *x).count())
}

/// Distinct pairs `(ρ_b(x), ρ_t(x))` over `S_n`.
pub fn count_twin_pairs(n: usize) -> Result<usize> {
    check_size("enumeration", n, ENUM_LIMIT)?;
    Ok(all_permutations(n).map(|x| (rho_b(&x).encode(), rho_t(&x).encode())).collect::<HashSet<_>>().len())
}
