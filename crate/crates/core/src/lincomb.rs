//! Sparse rational linear combinations over an ordered key type.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// Keys that form a monoid; the product of two basis elements is a basis element.
pub trait MonoidKey: Ord + Clone {
    fn unit() -> Self;
    fn combine(&self, other: &Self) -> Self;
}

impl<A: MonoidKey, B: MonoidKey> MonoidKey for (A, B) {
    fn unit() -> Self {
        (A::unit(), B::unit())
    }
    fn combine(&self, other: &Self) -> Self {
        (self.0.combine(&other.0), self.1.combine(&other.1))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
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

    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Relabel keys; colliding images are summed.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, v) in self.iter() {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// Linear extension of `f` from keys to linear combinations.
    pub fn flat_map<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, v) in self.iter() {
            out.add_scaled(&f(k), v);
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Bilinear product driven by a key-level product.
    pub fn product_with<K2: Ord + Clone, K3: Ord + Clone>(
        &self,
        other: &LinComb<K2>,
        mut f: impl FnMut(&K, &K2) -> Option<(K3, Rational)>,
    ) -> LinComb<K3> {
        let mut out = LinComb::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                if let Some((k, s)) = f(a, b) {
                    out.add_term(k, ca * cb * s);
                }
            }
        }
        out
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.terms
            .values()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl<K: MonoidKey> LinComb<K> {
    pub fn one() -> Self {
        Self::basis(K::unit())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(K::unit(), c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.product_with(other, |a, b| Some((a.combine(b), Rational::one())))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The coefficient of the unit key.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&K::unit())
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, v) in iter {
            out.add_term(k, v);
        }
        out
    }
}

impl<K: Ord + Clone> IntoIterator for LinComb<K> {
    type Item = (K, Rational);
    type IntoIter = btree_map::IntoIter<K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord + Clone> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Rational);
    type IntoIter = btree_map::Iter<'a, K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in rhs.iter() {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in rhs.iter() {
            self.add_term(k.clone(), -v.clone());
        }
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Add<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = Self;
    fn neg(self) -> Self {
        LinComb {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        -(self.clone())
    }
}

impl<K: Ord + Clone> Mul<&Rational> for &LinComb<K> {
    type Output = LinComb<K>;
    fn mul(self, rhs: &Rational) -> LinComb<K> {
        self.scaled(rhs)
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{:?}", v, k)?;
        }
        Ok(())
    }
}

/// Coefficient rings usable inside truncated series and matrices.
pub trait Ring: Clone {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn vanishes(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl Ring for Rational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

impl<K: MonoidKey> Ring for LinComb<K> {
    fn zero_value() -> Self {
        LinComb::zero()
    }
    fn one_value() -> Self {
        LinComb::one()
    }
    fn vanishes(&self) -> bool {
        LinComb::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scale(&self, c: &Rational) -> Self {
        self.scaled(c)
    }
}

/// Commutative monomials: sorted multisets of atoms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SortedMulti<T: Ord>(pub Vec<T>);

impl<T: Ord + Clone> SortedMulti<T> {
    pub fn from_vec(mut v: Vec<T>) -> Self {
        v.sort();
        SortedMulti(v)
    }
    pub fn atom(t: T) -> Self {
        SortedMulti(vec![t])
    }
    pub fn factors(&self) -> &[T] {
        &self.0
    }
    pub fn degree(&self) -> usize {
        self.0.len()
    }
    /// Distinct atoms with multiplicities.
    pub fn powers(&self) -> Vec<(T, u32)> {
        let mut out: Vec<(T, u32)> = Vec::new();
        for t in &self.0 {
            match out.last_mut() {
                Some((last, m)) if last == t => *m += 1,
                _ => out.push((t.clone(), 1)),
            }
        }
        out
    }
    /// The monomial with one copy of `t` removed, if present.
    pub fn without_one(&self, t: &T) -> Option<Self> {
        let pos = self.0.iter().position(|x| x == t)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(SortedMulti(v))
    }
}

impl<T: Ord + Clone> MonoidKey for SortedMulti<T> {
    fn unit() -> Self {
        SortedMulti(Vec::new())
    }
    fn combine(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                out.push(a[i].clone());
                i += 1;
            } else {
                out.push(b[j].clone());
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        SortedMulti(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LinComb<SortedMulti<u8>>;

    fn x(i: u8) -> P {
        P::basis(SortedMulti::atom(i))
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = x(1) + x(2);
        let b = &a - &a;
        assert!(b.is_zero());
        assert_eq!(b.len(), 0);
    }

    #[test]
    fn multiplication_is_commutative_and_graded() {
        let a = x(1) + x(2).scaled(&rat(1, 2));
        let b = x(3) - x(1);
        assert_eq!(a.mul(&b), b.mul(&a));
        for (k, _) in a.mul(&b).iter() {
            assert_eq!(k.degree(), 2);
        }
    }

    #[test]
    fn binomial_square() {
        let s = (x(1) + x(2)).pow(2);
        assert_eq!(s.coeff(&SortedMulti(vec![1, 2])), int(2));
        assert_eq!(s.coeff(&SortedMulti(vec![1, 1])), int(1));
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(5), int(120));
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(2, 3), int(0));
        assert_eq!(rat(2, 4), rat(1, 2));
    }

    #[test]
    fn powers_groups_runs() {
        let m = SortedMulti::from_vec(vec![3, 1, 3, 2, 3]);
        assert_eq!(m.powers(), vec![(1, 1), (2, 1), (3, 3)]);
        assert_eq!(m.without_one(&3).unwrap().0, vec![1, 2, 3, 3]);
    }
}
