//! Generators, monomials and elements of the two symbolic polylogarithm algebras.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::lincomb::{LinComb, MonoidKey, Rational, SortedMulti};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sort {
    /// Regular symbols only.
    H,
    /// Regular and inverted symbols.
    Hbar,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sort::H => write!(f, "H"),
            Sort::Hbar => write!(f, "Hbar"),
        }
    }
}

/// A polylogarithm symbol `[x_{i1->i2}, ..., x_{id->i(d+1)}]_{n1..nd}`.
///
/// Inverted symbols `[x_{id->}^{-1}, ..., x_{i1->i2}^{-1}]_{nd..n1}` use the same
/// increasing indices, with `weights[k]` attached to window `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PolyGen {
    indices: Vec<u32>,
    weights: Vec<u32>,
    inverted: bool,
}

impl PolyGen {
    pub fn new(indices: Vec<u32>, weights: Vec<u32>, inverted: bool) -> Result<Self> {
        if indices.len() < 2 {
            return Err(Error::InvalidGenerator("need at least two indices".into()));
        }
        if indices.len() != weights.len() + 1 {
            return Err(Error::InvalidGenerator(format!(
                "{} indices for {} weights",
                indices.len(),
                weights.len()
            )));
        }
        if indices[0] == 0 || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGenerator(format!(
                "indices {:?} are not strictly increasing positive integers",
                indices
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidGenerator("zero weight".into()));
        }
        Ok(PolyGen { indices, weights, inverted })
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }
    pub fn inverted(&self) -> bool {
        self.inverted
    }
    pub fn depth(&self) -> usize {
        self.weights.len()
    }
    pub fn weight(&self) -> u32 {
        self.weights.iter().sum()
    }

    /// Window `k` (0-based) as a regular letter.
    pub fn window(&self, k: usize) -> Letter {
        Letter::new(self.indices[k], self.indices[k + 1], false)
    }

    /// Letters in reading order, with their weights.
    pub fn word(&self) -> (Vec<Letter>, Vec<u32>) {
        let d = self.depth();
        if self.inverted {
            let letters = (0..d).rev().map(|k| self.window(k).inverse()).collect();
            let weights = self.weights.iter().rev().cloned().collect();
            (letters, weights)
        } else {
            ((0..d).map(|k| self.window(k)).collect(), self.weights.clone())
        }
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> Result<Self> {
        PolyGen::new(self.indices.clone(), weights, self.inverted)
    }
}

/// A generator of the free commutative algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Generator {
    /// `[x_i]_0`
    Log(u32),
    Poly(PolyGen),
}

impl Generator {
    pub fn log(i: u32) -> Result<Self> {
        if i == 0 {
            return Err(Error::InvalidGenerator("log index must be positive".into()));
        }
        Ok(Generator::Log(i))
    }

    pub fn poly(indices: Vec<u32>, weights: Vec<u32>) -> Result<Self> {
        Ok(Generator::Poly(PolyGen::new(indices, weights, false)?))
    }

    pub fn inverted(indices: Vec<u32>, weights: Vec<u32>) -> Result<Self> {
        Ok(Generator::Poly(PolyGen::new(indices, weights, true)?))
    }

    pub fn weight(&self) -> u32 {
        match self {
            Generator::Log(_) => 1,
            Generator::Poly(p) => p.weight(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Generator::Log(_) => 1,
            Generator::Poly(p) => p.depth(),
        }
    }

    pub fn is_inverted(&self) -> bool {
        matches!(self, Generator::Poly(p) if p.inverted)
    }

    /// Largest variable index the generator touches.
    pub fn max_variable(&self) -> u32 {
        match self {
            Generator::Log(i) => *i,
            Generator::Poly(p) => p.indices.last().unwrap() - 1,
        }
    }
}

/// A window product `x_start ... x_{end-1}`, possibly inverted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub start: u32,
    pub end: u32,
    pub inverted: bool,
}

impl Letter {
    pub fn new(start: u32, end: u32, inverted: bool) -> Self {
        debug_assert!(start < end);
        Letter { start, end, inverted }
    }

    pub fn inverse(self) -> Self {
        Letter { inverted: !self.inverted, ..self }
    }

    /// Product of two adjacent letters of the same orientation.
    pub fn merge(self, next: Letter) -> Letter {
        debug_assert_eq!(self.inverted, next.inverted);
        if self.inverted {
            debug_assert_eq!(next.end, self.start);
            Letter::new(next.start, self.end, true)
        } else {
            debug_assert_eq!(self.end, next.start);
            Letter::new(self.start, next.end, false)
        }
    }

    /// Product of a consecutive run of letters.
    pub fn product(letters: &[Letter]) -> Letter {
        let mut it = letters.iter();
        let first = *it.next().expect("empty letter product");
        it.fold(first, |acc, &l| acc.merge(l))
    }

    /// `[letter]_0` expanded into log generators.
    pub fn log_terms(self) -> Terms {
        let e = expand_log_terms(self.start, self.end);
        if self.inverted {
            -e
        } else {
            e
        }
    }
}

/// The generator `[letters]_{weights}`; `None` for the empty word.
///
/// Panics if the word is not a consecutive run of one orientation.
pub fn word_generator(letters: &[Letter], weights: &[u32]) -> Option<Generator> {
    if letters.is_empty() {
        return None;
    }
    assert_eq!(letters.len(), weights.len());
    let inverted = letters[0].inverted;
    let (ordered, w): (Vec<Letter>, Vec<u32>) = if inverted {
        (letters.iter().rev().cloned().collect(), weights.iter().rev().cloned().collect())
    } else {
        (letters.to_vec(), weights.to_vec())
    };
    let mut indices = vec![ordered[0].start];
    for (k, l) in ordered.iter().enumerate() {
        assert_eq!(l.inverted, inverted, "mixed orientation in word");
        if k > 0 {
            assert_eq!(ordered[k - 1].end, l.start, "non-consecutive word");
        }
        indices.push(l.end);
    }
    Some(Generator::Poly(
        PolyGen::new(indices, w, inverted).expect("word produced an invalid generator"),
    ))
}

pub type Monomial = SortedMulti<Generator>;
pub type Terms = LinComb<Monomial>;

pub fn monomial_weight(m: &Monomial) -> u32 {
    m.factors().iter().map(Generator::weight).sum()
}

pub fn gen_terms(g: Generator) -> Terms {
    Terms::basis(SortedMulti::atom(g))
}

pub(crate) fn expand_log_terms(i: u32, j: u32) -> Terms {
    (i..j).map(|r| (SortedMulti::atom(Generator::Log(r)), Rational::one())).collect()
}

/// `[x_{i->j}]_0 = sum_{r=i}^{j-1} [x_r]_0`.
pub fn expand_log(i: u32, j: u32) -> Result<Element> {
    if i == 0 || i > j {
        return Err(Error::OutOfRange(format!("expand_log({}, {})", i, j)));
    }
    Ok(Element::from_terms(Sort::H, expand_log_terms(i, j)).unwrap())
}

/// A rational linear combination of monomials, tagged with its sort.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element {
    sort: Sort,
    terms: Terms,
}

impl Element {
    pub fn zero(sort: Sort) -> Self {
        Element { sort, terms: Terms::zero() }
    }

    pub fn one(sort: Sort) -> Self {
        Self::constant(sort, Rational::one())
    }

    pub fn constant(sort: Sort, c: Rational) -> Self {
        Element { sort, terms: Terms::constant(c) }
    }

    pub fn from_terms(sort: Sort, terms: Terms) -> Result<Self> {
        if sort == Sort::H && terms.keys().any(|m| m.factors().iter().any(Generator::is_inverted)) {
            return Err(Error::InvertedInH);
        }
        Ok(Element { sort, terms })
    }

    pub(crate) fn from_terms_unchecked(sort: Sort, terms: Terms) -> Self {
        debug_assert!(Self::from_terms(sort, terms.clone()).is_ok());
        Element { sort, terms }
    }

    /// A single generator; inverted generators land in the Hbar sort.
    pub fn generator(g: Generator) -> Self {
        let sort = if g.is_inverted() { Sort::Hbar } else { Sort::H };
        Element { sort, terms: gen_terms(g) }
    }

    pub fn log(i: u32) -> Result<Self> {
        Ok(Self::generator(Generator::log(i)?))
    }

    pub fn li(weights: &[u32], indices: &[u32]) -> Result<Self> {
        Ok(Self::generator(Generator::poly(indices.to_vec(), weights.to_vec())?))
    }

    /// Inverted symbol with weights in reading order `(nd, ..., n1)`.
    pub fn ili(weights_reading: &[u32], indices: &[u32]) -> Result<Self> {
        let w: Vec<u32> = weights_reading.iter().rev().cloned().collect();
        Ok(Self::generator(Generator::inverted(indices.to_vec(), w)?))
    }

    pub fn sort(&self) -> Sort {
        self.sort
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-tag the element; moving into H fails if inverted symbols occur.
    pub fn into_sort(self, sort: Sort) -> Result<Self> {
        Self::from_terms(sort, self.terms)
    }

    fn common_sort(&self, other: &Self) -> Result<Sort> {
        if self.sort == other.sort {
            Ok(self.sort)
        } else if self.is_constant() {
            Ok(other.sort)
        } else if other.is_constant() {
            Ok(self.sort)
        } else {
            Err(Error::SortMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let sort = self.common_sort(other)?;
        Ok(Element { sort, terms: &self.terms + &other.terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let sort = self.common_sort(other)?;
        Ok(Element { sort, terms: &self.terms - &other.terms })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let sort = self.common_sort(other)?;
        Ok(Element { sort, terms: self.terms.mul(&other.terms) })
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Element { sort: self.sort, terms: self.terms.scaled(c) }
    }

    pub fn pow(&self, e: u32) -> Self {
        Element { sort: self.sort, terms: self.terms.pow(e) }
    }

    /// `Some(n)` if every term has weight `n`; `Some(0)` for zero.
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(monomial_weight);
        let first = it.next().unwrap_or(0);
        it.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weight().is_some()
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(monomial_weight).max().unwrap_or(0)
    }

    pub fn homogeneous_part(&self, w: u32) -> Self {
        Element { sort: self.sort, terms: self.terms.filter(|m| monomial_weight(m) == w) }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.constant_term()
    }

    pub fn generators(&self) -> Vec<Generator> {
        let mut out: Vec<Generator> =
            self.terms.keys().flat_map(|m| m.factors().iter().cloned()).collect();
        out.sort();
        out.dedup();
        out
    }
}

macro_rules! element_op {
    ($tr:ident, $f:ident, $checked:ident) => {
        impl std::ops::$tr<&Element> for &Element {
            type Output = Element;
            /// Panics on a sort mismatch; use the `checked_*` form to handle it.
            fn $f(self, rhs: &Element) -> Element {
                self.$checked(rhs).expect("sort mismatch")
            }
        }
        impl std::ops::$tr for Element {
            type Output = Element;
            fn $f(self, rhs: Element) -> Element {
                self.$checked(&rhs).expect("sort mismatch")
            }
        }
    };
}

element_op!(Add, add, checked_add);
element_op!(Sub, sub, checked_sub);
element_op!(Mul, mul, checked_mul);

impl std::ops::Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { sort: self.sort, terms: -self.terms }
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        -(self.clone())
    }
}

impl std::ops::Mul<&Element> for Rational {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scaled(&self)
    }
}

pub(crate) fn unit_monomial() -> Monomial {
    Monomial::unit()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::{int, rat};

    #[test]
    fn log_square() {
        let a = Element::log(1).unwrap();
        let sq = &a * &a;
        assert_eq!(sq.len(), 1);
        let (m, c) = sq.terms().iter().next().unwrap();
        assert_eq!(m.factors(), &[Generator::Log(1), Generator::Log(1)]);
        assert_eq!(*c, int(1));
        assert_eq!(sq.weight(), Some(2));
    }

    #[test]
    fn additive_inverse() {
        let e = Element::li(&[2, 1], &[1, 2, 3]).unwrap() + Element::log(2).unwrap();
        assert!((&e + &(-&e)).is_zero());
    }

    #[test]
    fn scalar_arithmetic() {
        let a = Element::li(&[1], &[1, 2]).unwrap().scaled(&rat(1, 2));
        let b = Element::li(&[1], &[2, 3]).unwrap().scaled(&int(2));
        let p = &a * &b;
        let expected = &Element::li(&[1], &[1, 2]).unwrap() * &Element::li(&[1], &[2, 3]).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn expand_log_cases() {
        let e = expand_log(1, 3).unwrap();
        assert_eq!(e, Element::log(1).unwrap() + Element::log(2).unwrap());
        assert!(expand_log(2, 2).unwrap().is_zero());
        let inv = Letter::new(1, 3, true).log_terms();
        assert_eq!(inv, -e.terms().clone());
        assert!(expand_log(3, 2).is_err());
    }

    #[test]
    fn expand_log_is_additive() {
        for i in 1..4 {
            for j in i..5 {
                for k in j..6 {
                    let lhs = expand_log(i, j).unwrap() + expand_log(j, k).unwrap();
                    assert_eq!(lhs, expand_log(i, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn sort_mismatch() {
        let h = Element::li(&[1], &[1, 2]).unwrap();
        let hb = Element::ili(&[1], &[1, 2]).unwrap();
        assert_eq!(hb.sort(), Sort::Hbar);
        assert_eq!(h.checked_add(&hb), Err(Error::SortMismatch));
        let c = Element::constant(Sort::H, int(3));
        assert_eq!(c.checked_mul(&hb).unwrap().sort(), Sort::Hbar);
        assert_eq!(hb.into_sort(Sort::H), Err(Error::InvertedInH));
    }

    #[test]
    fn generator_validation() {
        assert!(Generator::poly(vec![1, 1], vec![1]).is_err());
        assert!(Generator::poly(vec![1, 2], vec![0]).is_err());
        assert!(Generator::poly(vec![1, 2, 3], vec![1]).is_err());
        assert!(Generator::poly(vec![0, 2], vec![1]).is_err());
        assert!(Generator::log(0).is_err());
    }

    #[test]
    fn inverted_word_reads_right_to_left() {
        let g = PolyGen::new(vec![1, 2, 4], vec![3, 1], true).unwrap();
        let (letters, w) = g.word();
        assert_eq!(letters, vec![Letter::new(2, 4, true), Letter::new(1, 2, true)]);
        assert_eq!(w, vec![1, 3]);
        assert_eq!(word_generator(&letters, &w), Some(Generator::Poly(g)));
        assert_eq!(
            Letter::product(&letters),
            Letter::new(1, 4, true)
        );
    }

    #[test]
    fn generator_order_is_kind_then_indices() {
        let a = Generator::Log(5);
        let b = Generator::poly(vec![1, 2], vec![3]).unwrap();
        let c = Generator::poly(vec![1, 3], vec![1]).unwrap();
        assert!(a < b && b < c);
    }
}
