//! MR and its sub Hopf algebras tBax and Bax, on permutation bases.

use crate::congruence::{congruence_class, CongruenceKind};
use crate::enumerate;
use crate::error::Result;
use crate::hopf::{FreeElement, GradedHopf, TensorElement};
use crate::perm::{
    all_permutations, is_baxter, is_twisted_baxter, shifted_shuffles, standardize_unchecked, Permutation,
};

/// `Δ_S(x) = Σ std(x_1..x_i) ⊗ std(x_{i+1}..x_n)`.
pub fn mr_delta(x: &Permutation) -> TensorElement<Permutation> {
    let w = x.word();
    FreeElement::sum_of((0..=w.len()).map(|i| (standardize_unchecked(&w[..i]), standardize_unchecked(&w[i..]))))
}

pub fn mr_mul(x: &Permutation, y: &Permutation) -> FreeElement<Permutation> {
    FreeElement::sum_of(shifted_shuffles(x, y))
}

/// Sum of `Δ_S(w)` over the ΘtB-class of `x`, keeping only terms whose
/// factors both satisfy `keep`.
fn class_delta(x: &Permutation, keep: fn(&Permutation) -> bool) -> TensorElement<Permutation> {
    let mut out = FreeElement::zero();
    for w in congruence_class(x, CongruenceKind::CTb) {
        let mut d = mr_delta(&w);
        d.retain(|(a, b)| keep(a) && keep(b));
        out = out + d;
    }
    out
}

/// The Malvenuto-Reutenauer algebra.
#[derive(Clone, Copy, Debug, Default)]
pub struct MR;

/// Twisted Baxter permutations: ΘtB class minima.
#[derive(Clone, Copy, Debug, Default)]
pub struct TBax;

/// Baxter permutations, one per ΘtB class.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bax;

impl GradedHopf for MR {
    type Key = Permutation;

    fn name(&self) -> &'static str {
        "MR"
    }
    fn degree(&self, k: &Permutation) -> usize {
        k.len()
    }
    fn unit(&self) -> Permutation {
        Permutation::empty()
    }
    fn basis(&self, n: usize) -> Result<Vec<Permutation>> {
        crate::error::check_size("MR basis", n, enumerate::ENUM_LIMIT)?;
        Ok(all_permutations(n).collect())
    }
    fn contains(&self, _: &Permutation) -> bool {
        true
    }
    fn mul_basis(&self, a: &Permutation, b: &Permutation) -> FreeElement<Permutation> {
        mr_mul(a, b)
    }
    fn delta_basis(&self, a: &Permutation) -> TensorElement<Permutation> {
        mr_delta(a)
    }
}

impl GradedHopf for TBax {
    type Key = Permutation;

    fn name(&self) -> &'static str {
        "tBax"
    }
    fn degree(&self, k: &Permutation) -> usize {
        k.len()
    }
    fn unit(&self) -> Permutation {
        Permutation::empty()
    }
    fn basis(&self, n: usize) -> Result<Vec<Permutation>> {
        Ok(enumerate::tbax(n)?.to_vec())
    }
    fn contains(&self, k: &Permutation) -> bool {
        is_twisted_baxter(k)
    }
    fn mul_basis(&self, a: &Permutation, b: &Permutation) -> FreeElement<Permutation> {
        FreeElement::sum_of(shifted_shuffles(a, b).into_iter().filter(is_twisted_baxter))
    }
    fn delta_basis(&self, a: &Permutation) -> TensorElement<Permutation> {
        class_delta(a, is_twisted_baxter)
    }
}

impl GradedHopf for Bax {
    type Key = Permutation;

    fn name(&self) -> &'static str {
        "Bax"
    }
    fn degree(&self, k: &Permutation) -> usize {
        k.len()
    }
    fn unit(&self) -> Permutation {
        Permutation::empty()
    }
    fn basis(&self, n: usize) -> Result<Vec<Permutation>> {
        Ok(enumerate::bax(n)?.to_vec())
    }
    fn contains(&self, k: &Permutation) -> bool {
        is_baxter(k)
    }
    fn mul_basis(&self, a: &Permutation, b: &Permutation) -> FreeElement<Permutation> {
        FreeElement::sum_of(shifted_shuffles(a, b).into_iter().filter(is_baxter))
    }
    fn delta_basis(&self, a: &Permutation) -> TensorElement<Permutation> {
        class_delta(a, is_baxter)
    }
}
