//! Sparse square matrices indexed by weight vectors.

use std::collections::BTreeMap;

use crate::forms::Form;
use crate::lincomb::LinComb;
use crate::vector::WeightVector;

/// Entry types that can be summed.
pub trait Additive: Clone {
    fn is_null(&self) -> bool;
    fn accumulate(&mut self, other: &Self);
}

impl<K: Ord + Clone> Additive for LinComb<K> {
    fn is_null(&self) -> bool {
        self.is_zero()
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

impl Additive for Form {
    fn is_null(&self) -> bool {
        self.is_zero()
    }
    fn accumulate(&mut self, other: &Self) {
        *self = &*self + other;
    }
}

/// Rows and columns share one ordered key list; absent entries are zero.
#[derive(Clone, PartialEq, Debug)]
pub struct IndexedMatrix<T> {
    keys: Vec<WeightVector>,
    entries: BTreeMap<(usize, usize), T>,
}

impl<T: Additive> IndexedMatrix<T> {
    pub fn new(keys: Vec<WeightVector>) -> Self {
        IndexedMatrix { keys, entries: BTreeMap::new() }
    }

    pub fn keys(&self) -> &[WeightVector] {
        &self.keys
    }

    pub fn size(&self) -> usize {
        self.keys.len()
    }

    pub fn index_of(&self, key: &WeightVector) -> Option<usize> {
        self.keys.binary_search(key).ok()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&T> {
        self.entries.get(&(row, col))
    }

    pub fn add_at(&mut self, row: usize, col: usize, value: &T) {
        match self.entries.get_mut(&(row, col)) {
            Some(e) => {
                e.accumulate(value);
                if e.is_null() {
                    self.entries.remove(&(row, col));
                }
            }
            None if !value.is_null() => {
                self.entries.insert((row, col), value.clone());
            }
            None => {}
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &T)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn map<U: Additive>(&self, mut f: impl FnMut(&T) -> U) -> IndexedMatrix<U> {
        let mut out = IndexedMatrix::new(self.keys.clone());
        for (&(r, c), v) in &self.entries {
            out.add_at(r, c, &f(v));
        }
        out
    }

    pub fn try_map<U: Additive, E>(&self, mut f: impl FnMut(&T) -> Result<U, E>) -> Result<IndexedMatrix<U>, E> {
        let mut out = IndexedMatrix::new(self.keys.clone());
        for (&(r, c), v) in &self.entries {
            out.add_at(r, c, &f(v)?);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = IndexedMatrix::new(self.keys.clone());
        for (&(r, c), v) in &self.entries {
            out.add_at(c, r, v);
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_at(r, c, v);
        }
        out
    }

    /// `sum_k f(self[i,k], other[k,j])`.
    pub fn product<B: Additive, C: Additive>(
        &self,
        other: &IndexedMatrix<B>,
        f: impl Fn(&T, &B) -> C,
    ) -> IndexedMatrix<C> {
        assert_eq!(self.keys, other.keys, "matrices indexed by different keys");
        let mut out = IndexedMatrix::new(self.keys.clone());
        for (&(i, k), a) in &self.entries {
            for (&(_, j), b) in other.entries.range((k, 0)..=(k, usize::MAX)) {
                out.add_at(i, j, &f(a, b));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::int;

    type Q = LinComb<()>;

    fn q(n: i64) -> Q {
        Q::term((), int(n))
    }

    #[test]
    fn multiply_and_transpose() {
        let keys = vec![WeightVector::zero(), WeightVector::new(vec![1])];
        let mut a = IndexedMatrix::new(keys);
        a.add_at(0, 0, &q(1));
        a.add_at(1, 1, &q(1));
        a.add_at(1, 0, &q(3));
        let sq = a.product(&a, |x, y| x.product_with(y, |_, _| Some(((), int(1)))));
        assert_eq!(sq.get(1, 0), Some(&q(6)));
        assert_eq!(a.transpose().get(0, 1), Some(&q(3)));
        let mut b = a.clone();
        b.add_at(1, 0, &q(-3));
        assert!(b.get(1, 0).is_none());
        assert_eq!(a.index_of(&WeightVector::new(vec![1])), Some(1));
    }
}
