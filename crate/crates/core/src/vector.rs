//! Weight vectors, their correspondence with regular generators, and the order on them.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{Generator, PolyGen};
use crate::error::{Error, Result};

/// An element of Z^inf_{>=0}; the zero vector is stored with no entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    entries: Vec<u32>,
}

impl WeightVector {
    pub fn zero() -> Self {
        WeightVector { entries: Vec::new() }
    }

    pub fn new(entries: Vec<u32>) -> Self {
        if entries.iter().all(|&e| e == 0) {
            Self::zero()
        } else {
            WeightVector { entries }
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn norm(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Strict order: by norm, then dimension, then the sign of the rightmost
    /// nonzero entry of `other - self`.
    pub fn precedes(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Less
    }
}

impl Ord for WeightVector {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        self.norm()
            .cmp(&other.norm())
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| {
                // k < l iff the rightmost nonzero entry of l - k is negative.
                for (k, l) in self.entries.iter().zip(&other.entries).rev() {
                    if k != l {
                        return if l < k { Ordering::Less } else { Ordering::Greater };
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for WeightVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn precede(a: &WeightVector, b: &WeightVector) -> bool {
    a.precedes(b)
}

/// `[x_{i1->i2},...]_{n}` maps to `(0^{i1-1}, n1, 0^{i2-i1-1}, ..., nd, 0^{i(d+1)-id-1})`.
pub fn generator_to_vector(g: Option<&Generator>) -> Result<WeightVector> {
    let p = match g {
        None => return Ok(WeightVector::zero()),
        Some(Generator::Poly(p)) if !p.inverted() => p,
        Some(other) => {
            return Err(Error::InvalidGenerator(format!(
                "{:?} has no weight vector",
                other
            )))
        }
    };
    let idx = p.indices();
    let len = (idx[idx.len() - 1] - 1) as usize;
    let mut entries = vec![0; len];
    for (k, &n) in p.weights().iter().enumerate() {
        entries[(idx[k] - 1) as usize] = n;
    }
    Ok(WeightVector { entries })
}

/// Inverse of [`generator_to_vector`]; the zero vector gives `None` (the unit).
pub fn vector_to_generator(v: &WeightVector) -> Result<Option<Generator>> {
    if v.is_zero() {
        return Ok(None);
    }
    let mut indices = Vec::new();
    let mut weights = Vec::new();
    for (p, &n) in v.entries.iter().enumerate() {
        if n > 0 {
            indices.push(p as u32 + 1);
            weights.push(n);
        }
    }
    indices.push(v.entries.len() as u32 + 1);
    PolyGen::new(indices, weights, false)
        .map(|g| Some(Generator::Poly(g)))
        .map_err(|e| Error::MalformedVector(e.to_string()))
}

/// All vectors with the given length and entries bounded componentwise.
pub(crate) fn bounded_vectors(bounds: &[u32]) -> Vec<WeightVector> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        let mut next = Vec::new();
        for prefix in &out {
            for e in 0..=b {
                let mut v: Vec<u32> = prefix.clone();
                v.push(e);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(WeightVector::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(e: &[u32]) -> WeightVector {
        WeightVector::new(e.to_vec())
    }

    #[test]
    fn ordering_chain() {
        assert!(precede(&wv(&[0, 1]), &wv(&[1, 0])));
        assert!(precede(&wv(&[1, 1]), &wv(&[2, 0])));
        assert!(!precede(&wv(&[2, 1]), &wv(&[2, 1])));
        assert!(precede(&WeightVector::zero(), &wv(&[1])));
        assert!(precede(&wv(&[1, 0]), &wv(&[1, 1])));
    }

    #[test]
    fn correspondence_examples() {
        let g = Generator::poly(vec![1, 2, 3], vec![2, 1]).unwrap();
        assert_eq!(generator_to_vector(Some(&g)).unwrap(), wv(&[2, 1]));
        let g = Generator::poly(vec![1, 3], vec![2]).unwrap();
        assert_eq!(generator_to_vector(Some(&g)).unwrap().entries(), &[2, 0]);
        assert!(generator_to_vector(None).unwrap().is_zero());
        assert_eq!(vector_to_generator(&wv(&[2, 0])).unwrap(), Some(g));
        assert_eq!(vector_to_generator(&WeightVector::zero()).unwrap(), None);
    }

    #[test]
    fn leading_zero_shifts_indices() {
        let g = vector_to_generator(&wv(&[0, 1])).unwrap().unwrap();
        assert_eq!(g, Generator::poly(vec![2, 3], vec![1]).unwrap());
    }

    #[test]
    fn inverted_has_no_vector() {
        let g = Generator::inverted(vec![1, 2], vec![1]).unwrap();
        assert!(generator_to_vector(Some(&g)).is_err());
        assert!(generator_to_vector(Some(&Generator::Log(1))).is_err());
    }
}
