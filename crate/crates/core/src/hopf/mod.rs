//! Graded Hopf algebras on permutations and on diagonal rectangulations.

pub mod drec;
pub mod duality;
pub mod element;
pub mod perms;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

pub use drec::{DRec, DRecImpl};
pub use element::{element_json, tensor_json, FreeElement, TensorElement};
pub use perms::{Bax, TBax, MR};

use crate::error::{Error, Result};

type Triple<K> = FreeElement<(K, K, K)>;

/// A connected graded bialgebra given on a basis. The antipode and all
/// axiom checks are derived from the basis product and coproduct.
pub trait GradedHopf {
    type Key: Ord + Clone + fmt::Debug;

    fn name(&self) -> &'static str;
    fn degree(&self, k: &Self::Key) -> usize;
    fn unit(&self) -> Self::Key;
    fn basis(&self, n: usize) -> Result<Vec<Self::Key>>;
    fn contains(&self, k: &Self::Key) -> bool;
    fn mul_basis(&self, a: &Self::Key, b: &Self::Key) -> FreeElement<Self::Key>;
    fn delta_basis(&self, a: &Self::Key) -> TensorElement<Self::Key>;

    fn check(&self, k: &Self::Key) -> Result<()> {
        if self.contains(k) {
            Ok(())
        } else {
            Err(Error::invalid(format!("{k:?} is not a basis element of {}", self.name())))
        }
    }

    fn mul(&self, u: &FreeElement<Self::Key>, v: &FreeElement<Self::Key>) -> FreeElement<Self::Key> {
        let mut out = FreeElement::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in v.iter() {
                out.add_scaled(&self.mul_basis(a, b), &(ca * cb));
            }
        }
        out
    }

    fn delta(&self, u: &FreeElement<Self::Key>) -> TensorElement<Self::Key> {
        u.flat_map(|k| self.delta_basis(k))
    }

    fn product(&self, u: &FreeElement<Self::Key>, v: &FreeElement<Self::Key>) -> Result<FreeElement<Self::Key>> {
        for k in u.keys().chain(v.keys()) {
            self.check(k)?;
        }
        Ok(self.mul(u, v))
    }

    fn coproduct(&self, u: &FreeElement<Self::Key>) -> Result<TensorElement<Self::Key>> {
        for k in u.keys() {
            self.check(k)?;
        }
        Ok(self.delta(u))
    }

    fn counit(&self, u: &FreeElement<Self::Key>) -> BigInt {
        u.coeff(&self.unit())
    }

    /// `S(x) = -Σ S(x')·x''` over coproduct terms with `deg x' < deg x`.
    fn antipode(&self, u: &FreeElement<Self::Key>) -> Result<FreeElement<Self::Key>> {
        let mut degrees = u.keys().map(|k| self.degree(k));
        if let Some(d) = degrees.next() {
            if degrees.any(|e| e != d) {
                return Err(Error::invalid("antipode expects a homogeneous element"));
            }
        }
        for k in u.keys() {
            self.check(k)?;
        }
        let mut memo = BTreeMap::new();
        Ok(u.flat_map(|k| antipode_basis(self, k, &mut memo)))
    }
}

pub fn antipode_basis<H: GradedHopf + ?Sized>(
    h: &H,
    k: &H::Key,
    memo: &mut BTreeMap<H::Key, FreeElement<H::Key>>,
) -> FreeElement<H::Key> {
    if let Some(s) = memo.get(k) {
        return s.clone();
    }
    let n = h.degree(k);
    let s = if n == 0 {
        FreeElement::basis(k.clone())
    } else {
        let mut acc = FreeElement::zero();
        for ((a, b), c) in h.delta_basis(k).iter() {
            if h.degree(a) < n {
                let sa = antipode_basis(h, a, memo);
                acc.add_scaled(&h.mul(&sa, &FreeElement::basis(b.clone())), c);
            }
        }
        -acc
    };
    memo.insert(k.clone(), s.clone());
    s
}

/// Outcome of one exhaustive axiom check.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < 10 {
            self.failures.push(msg);
        }
    }
}

fn keys_up_to<H: GradedHopf + ?Sized>(h: &H, max_deg: usize) -> Result<Vec<Vec<H::Key>>> {
    (0..=max_deg).map(|d| h.basis(d)).collect()
}

fn mul_tensors<H: GradedHopf + ?Sized>(
    h: &H,
    s: &TensorElement<H::Key>,
    t: &TensorElement<H::Key>,
) -> TensorElement<H::Key> {
    let mut out = FreeElement::zero();
    for ((a1, a2), ca) in s.iter() {
        for ((b1, b2), cb) in t.iter() {
            let left = h.mul_basis(a1, b1);
            let right = h.mul_basis(a2, b2);
            out.add_scaled(&FreeElement::tensor(&left, &right), &(ca * cb));
        }
    }
    out
}

/// Unit laws and `(ab)c = a(bc)` on basis triples of total degree `<= max_deg`.
pub fn check_associativity<H: GradedHopf + ?Sized>(h: &H, max_deg: usize) -> Result<AxiomReport> {
    let keys = keys_up_to(h, max_deg)?;
    let mut rep = AxiomReport::default();
    let one = FreeElement::basis(h.unit());
    for (d, ks) in keys.iter().enumerate() {
        for a in ks {
            let x = FreeElement::basis(a.clone());
            rep.checked += 1;
            if h.mul(&one, &x) != x || h.mul(&x, &one) != x {
                rep.fail(format!("unit law fails for {a:?} (degree {d})"));
            }
        }
    }
    for p in 1..=max_deg {
        for q in 1..=max_deg - p {
            for r in 1..=max_deg - p - q {
                for a in &keys[p] {
                    for b in &keys[q] {
                        let ab = h.mul_basis(a, b);
                        for c in &keys[r] {
                            let vc = FreeElement::basis(c.clone());
                            let left = h.mul(&ab, &vc);
                            let right = h.mul(&FreeElement::basis(a.clone()), &h.mul_basis(b, c));
                            rep.checked += 1;
                            if left != right {
                                rep.fail(format!("(ab)c != a(bc) for {a:?}, {b:?}, {c:?}"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Counit laws and `(Δ⊗id)Δ = (id⊗Δ)Δ` on basis elements of degree `<= max_deg`.
pub fn check_coassociativity<H: GradedHopf + ?Sized>(h: &H, max_deg: usize) -> Result<AxiomReport> {
    let keys = keys_up_to(h, max_deg)?;
    let mut rep = AxiomReport::default();
    let unit = h.unit();
    for ks in &keys {
        for a in ks {
            let d = h.delta_basis(a);
            let x = FreeElement::basis(a.clone());
            let left_counit: FreeElement<H::Key> = FreeElement::from_terms(
                d.iter().filter(|((l, _), _)| *l == unit).map(|((_, r), c)| (r.clone(), c.clone())),
            );
            let right_counit: FreeElement<H::Key> = FreeElement::from_terms(
                d.iter().filter(|((_, r), _)| *r == unit).map(|((l, _), c)| (l.clone(), c.clone())),
            );
            if left_counit != x || right_counit != x {
                rep.fail(format!("counit law fails for {a:?}"));
            }
            let mut left: Triple<H::Key> = FreeElement::zero();
            let mut right: Triple<H::Key> = FreeElement::zero();
            for ((l, r), c) in d.iter() {
                for ((l1, l2), c1) in h.delta_basis(l).iter() {
                    left.add_term((l1.clone(), l2.clone(), r.clone()), c * c1);
                }
                for ((r1, r2), c2) in h.delta_basis(r).iter() {
                    right.add_term((l.clone(), r1.clone(), r2.clone()), c * c2);
                }
            }
            rep.checked += 1;
            if left != right {
                rep.fail(format!("coassociativity fails for {a:?}"));
            }
        }
    }
    Ok(rep)
}

/// `Δ(ab) = Δ(a)Δ(b)` on basis pairs of total degree `<= max_deg`.
pub fn check_compatibility<H: GradedHopf + ?Sized>(h: &H, max_deg: usize) -> Result<AxiomReport> {
    let keys = keys_up_to(h, max_deg)?;
    let mut rep = AxiomReport::default();
    for p in 0..=max_deg {
        for q in 0..=max_deg - p {
            for a in &keys[p] {
                let da = h.delta_basis(a);
                for b in &keys[q] {
                    let left = h.delta(&h.mul_basis(a, b));
                    let right = mul_tensors(h, &da, &h.delta_basis(b));
                    rep.checked += 1;
                    if left != right {
                        rep.fail(format!("Δ(ab) != Δ(a)Δ(b) for {a:?}, {b:?}"));
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// `m(S⊗id)Δ = m(id⊗S)Δ = uε` on basis elements of degree `<= max_deg`.
pub fn check_antipode<H: GradedHopf + ?Sized>(h: &H, max_deg: usize) -> Result<AxiomReport> {
    let keys = keys_up_to(h, max_deg)?;
    let mut rep = AxiomReport::default();
    let mut memo = BTreeMap::new();
    let one = FreeElement::basis(h.unit());
    for (d, ks) in keys.iter().enumerate() {
        for a in ks {
            let mut left = FreeElement::zero();
            let mut right = FreeElement::zero();
            for ((l, r), c) in h.delta_basis(a).iter() {
                let sl = antipode_basis(h, l, &mut memo);
                left.add_scaled(&h.mul(&sl, &FreeElement::basis(r.clone())), c);
                let sr = antipode_basis(h, r, &mut memo);
                right.add_scaled(&h.mul(&FreeElement::basis(l.clone()), &sr), c);
            }
            let want = if d == 0 { one.clone() } else { FreeElement::zero() };
            rep.checked += 1;
            if left != want || right != want {
                rep.fail(format!("antipode axiom fails for {a:?}"));
            }
        }
    }
    Ok(rep)
}

/// Coefficients of `Δ(x)` all in `{0, 1}` for every basis element of degree `n`.
pub fn coproduct_is_multiplicity_free<H: GradedHopf + ?Sized>(h: &H, n: usize) -> Result<bool> {
    Ok(h.basis(n)?.iter().all(|k| h.delta_basis(k).is_multiplicity_free()))
}
