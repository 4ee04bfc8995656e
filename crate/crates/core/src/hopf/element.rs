//! Finite integer linear combinations over an ordered basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

/// Terms with zero coefficient are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeElement<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

pub type TensorElement<K> = FreeElement<(K, K)>;

impl<K: Ord> Default for FreeElement<K> {
    fn default() -> Self {
        FreeElement { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> FreeElement<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        let mut e = Self::zero();
        e.add_term(key, BigInt::one());
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, BigInt)>) -> Self {
        let mut e = Self::zero();
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    /// Sum of the keys, each with coefficient one (repeats accumulate).
    pub fn sum_of(keys: impl IntoIterator<Item = K>) -> Self {
        Self::from_terms(keys.into_iter().map(|k| (k, BigInt::one())))
    }

    pub fn add_term(&mut self, key: K, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: &BigInt) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn scaled(&self, scale: &BigInt) -> Self {
        let mut e = Self::zero();
        e.add_scaled(self, scale);
        e
    }

    pub fn coeff(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Linear extension of a map on keys.
    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> FreeElement<L> {
        FreeElement::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Linear extension of a map from keys to elements.
    pub fn flat_map<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> FreeElement<L>) -> FreeElement<L> {
        let mut out = FreeElement::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&K) -> bool) {
        self.terms.retain(|k, _| keep(k));
    }

    /// True when every coefficient is 0 or 1.
    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|c| c.is_one())
    }
}

impl<K: Ord + Clone> FreeElement<(K, K)> {
    /// The swap `a ⊗ b -> b ⊗ a`.
    pub fn tw(&self) -> Self {
        self.map_keys(|(a, b)| (b.clone(), a.clone()))
    }

    pub fn tensor(a: &FreeElement<K>, b: &FreeElement<K>) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in a.iter() {
            for (kb, cb) in b.iter() {
                out.add_term((ka.clone(), kb.clone()), ca * cb);
            }
        }
        out
    }
}

impl<K: Ord + Clone> Add for FreeElement<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Ord + Clone> Sub for FreeElement<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Ord + Clone> Neg for FreeElement<K> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<K: Ord + fmt::Display> fmt::Display for FreeElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = if neg { -c.clone() } else { c.clone() };
            if !abs.is_one() {
                write!(f, "{abs}·")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for FreeElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, c)| (k, c.to_string()))).finish()
    }
}

/// Numbers when they fit in an `i64`, decimal strings otherwise.
pub fn coeff_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

pub fn element_json<K: Ord + Serialize>(e: &FreeElement<K>) -> Value {
    Value::Array(e.terms.iter().map(|(k, c)| json!({ "coeff": coeff_json(c), "key": k })).collect())
}

pub fn tensor_json<K: Ord + Serialize>(e: &FreeElement<(K, K)>) -> Value {
    Value::Array(e.terms.iter().map(|((a, b), c)| json!({ "coeff": coeff_json(c), "left": a, "right": b })).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_are_dropped() {
        let mut e = FreeElement::basis("a");
        e.add_term("a", BigInt::from(-1));
        assert!(e.is_zero());
        let e = FreeElement::sum_of(["x", "y", "x"]);
        assert_eq!(e.coeff(&"x"), BigInt::from(2));
        assert_eq!((e.clone() - e).len(), 0);
    }

    #[test]
    fn json_shapes() {
        let e = FreeElement::from_terms([(1u8, BigInt::from(3)), (2u8, BigInt::from(10).pow(30))]);
        let v = element_json(&e);
        assert_eq!(v[0]["coeff"], json!(3));
        assert!(v[1]["coeff"].is_string());
        let t = FreeElement::basis((1u8, 2u8));
        assert_eq!(tensor_json(&t), json!([{ "coeff": 1, "left": 1, "right": 2 }]));
        assert_eq!(t.tw().coeff(&(2, 1)), BigInt::one());
    }
}
