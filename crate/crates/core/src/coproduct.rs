//! Coproducts on both algebras, read off from truncated generating series.

use std::sync::{Arc, LazyLock};

use num_traits::One;

use crate::algebra::{
    gen_terms, monomial_weight, unit_monomial, word_generator, Element,
    Generator, Letter, Monomial, PolyGen, Sort, Terms,
};
use crate::error::{Error, Result};
use crate::inv::inv_terms;
use crate::lincomb::{sign, LinComb, MonoidKey, Rational, SortedMulti};
use crate::memo::Memo;
use crate::series::{LinearForm, TruncatedSeries};

pub type TensorTerms = LinComb<(Monomial, Monomial)>;
pub type Tensor3Terms = LinComb<(Monomial, Monomial, Monomial)>;

/// An element of A ⊗ A for A one of the two algebras.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement2 {
    sort: Sort,
    terms: TensorTerms,
}

impl TensorElement2 {
    pub fn new(sort: Sort, terms: TensorTerms) -> Self {
        TensorElement2 { sort, terms }
    }

    pub fn sort(&self) -> Sort {
        self.sort
    }

    pub fn terms(&self) -> &TensorTerms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Projection onto left weight `k`, right weight `l`.
    pub fn component(&self, k: u32, l: u32) -> Self {
        TensorElement2 {
            sort: self.sort,
            terms: self
                .terms
                .filter(|(a, b)| monomial_weight(a) == k && monomial_weight(b) == l),
        }
    }

    pub fn tensor(a: &Element, b: &Element) -> Result<Self> {
        if a.sort() != b.sort() && !a.is_constant() && !b.is_constant() {
            return Err(Error::SortMismatch);
        }
        let sort = if a.sort() == Sort::Hbar || b.sort() == Sort::Hbar { Sort::Hbar } else { Sort::H };
        Ok(TensorElement2 { sort, terms: tensor_terms(a.terms(), b.terms()) })
    }

    pub fn left_right(&self) -> impl Iterator<Item = (Element, Element, &Rational)> {
        self.terms.iter().map(move |((a, b), c)| {
            (
                Element::from_terms_unchecked(self.sort, Terms::basis(a.clone())),
                Element::from_terms_unchecked(self.sort, Terms::basis(b.clone())),
                c,
            )
        })
    }
}

pub(crate) fn tensor_terms(a: &Terms, b: &Terms) -> TensorTerms {
    a.product_with(b, |x, y| Some(((x.clone(), y.clone()), Rational::one())))
}

static BAR: LazyLock<Memo<Generator, TensorTerms>> = LazyLock::new(Memo::new);
static HCOP: LazyLock<Memo<Generator, TensorTerms>> = LazyLock::new(Memo::new);

/// Coproduct on the larger algebra of a single generator.
pub fn coproduct_bar(g: &Generator) -> TensorElement2 {
    TensorElement2 { sort: Sort::Hbar, terms: (*bar_generator(g)).clone() }
}

pub(crate) fn bar_generator(g: &Generator) -> Arc<TensorTerms> {
    BAR.get_or_compute(g, || match g {
        Generator::Log(_) => primitive(g),
        Generator::Poly(p) => bar_poly(p),
    })
}

fn primitive(g: &Generator) -> TensorTerms {
    let m = SortedMulti::atom(g.clone());
    let mut t = TensorTerms::zero();
    t.add_term((m.clone(), unit_monomial()), Rational::one());
    t.add_term((unit_monomial(), m), Rational::one());
    t
}

/// Coproduct of a regular generator in H: the bar coproduct with INV applied
/// to both tensor slots.
pub(crate) fn h_generator(g: &Generator) -> Arc<TensorTerms> {
    assert!(!g.is_inverted(), "H coproduct of an inverted generator");
    HCOP.get_or_compute(g, || inv_tensor(&bar_generator(g)))
}

pub(crate) fn inv_tensor(t: &TensorTerms) -> TensorTerms {
    let mut out = TensorTerms::zero();
    for ((a, b), c) in t.iter() {
        let ia = inv_terms(&Terms::basis(a.clone()));
        let ib = inv_terms(&Terms::basis(b.clone()));
        out.add_scaled(&tensor_terms(&ia, &ib), c);
    }
    out
}

fn monomial_coproduct(m: &Monomial, gen: &impl Fn(&Generator) -> Arc<TensorTerms>) -> TensorTerms {
    let mut acc = TensorTerms::one();
    for (g, e) in m.powers() {
        let d = gen(&g);
        for _ in 0..e {
            acc = acc.mul(&d);
        }
    }
    acc
}

pub(crate) fn coproduct_terms(sort: Sort, t: &Terms) -> TensorTerms {
    let mut out = TensorTerms::zero();
    for (m, c) in t.iter() {
        let d = match sort {
            Sort::Hbar => monomial_coproduct(m, &bar_generator),
            Sort::H => monomial_coproduct(m, &h_generator),
        };
        out.add_scaled(&d, c);
    }
    out
}

/// The coproduct of the element's own sort; multiplicative.
pub fn coproduct(e: &Element) -> TensorElement2 {
    TensorElement2 { sort: e.sort(), terms: coproduct_terms(e.sort(), e.terms()) }
}

/// Graded component `Δ_{k,l}`; the element must be homogeneous of weight `k + l`.
pub fn component(e: &Element, k: u32, l: u32) -> Result<TensorElement2> {
    match e.weight() {
        Some(w) if w == k + l || e.is_zero() => Ok(coproduct(e).component(k, l)),
        Some(_) => Err(Error::OutOfRange(format!("component ({}, {}) of a weight-{} element", k, l, e.max_weight()))),
        None => Err(Error::Inhomogeneous),
    }
}

/// `Δ' = Δ - id ⊗ 1 - 1 ⊗ id`.
pub fn reduced_coproduct(e: &Element) -> TensorElement2 {
    let mut t = coproduct(e).terms;
    for (m, c) in e.terms().iter() {
        t.add_term((m.clone(), unit_monomial()), -c.clone());
        t.add_term((unit_monomial(), m.clone()), -c.clone());
    }
    TensorElement2 { sort: e.sort(), terms: t }
}

/// Representative of the cobracket: the reduced coproduct itself.
pub fn cobracket_rep(e: &Element) -> TensorElement2 {
    reduced_coproduct(e)
}

pub(crate) fn reduced_terms(sort: Sort, t: &Terms) -> TensorTerms {
    let mut out = coproduct_terms(sort, t);
    for (m, c) in t.iter() {
        out.add_term((m.clone(), unit_monomial()), -c.clone());
        out.add_term((unit_monomial(), m.clone()), -c.clone());
    }
    out
}

/// `(Δ ⊗ id)Δ` and `(id ⊗ Δ)Δ` of an element, as triple tensors.
pub fn iterated_coproducts(e: &Element) -> (Tensor3Terms, Tensor3Terms) {
    let sort = e.sort();
    let d = coproduct_terms(sort, e.terms());
    let mut left = Tensor3Terms::zero();
    let mut right = Tensor3Terms::zero();
    for ((a, b), c) in d.iter() {
        for ((a1, a2), c1) in coproduct_terms(sort, &Terms::basis(a.clone())).iter() {
            left.add_term((a1.clone(), a2.clone(), b.clone()), c * c1);
        }
        for ((b1, b2), c2) in coproduct_terms(sort, &Terms::basis(b.clone())).iter() {
            right.add_term((a.clone(), b1.clone(), b2.clone()), c * c2);
        }
    }
    (left, right)
}

/// Counit: the constant term.
pub fn counit(e: &Element) -> Rational {
    e.constant_term()
}

fn word_forms(vars: impl Iterator<Item = LinearForm>) -> Vec<LinearForm> {
    vars.collect()
}

/// Series `[letters | forms]` with generator coefficients.
pub(crate) fn generator_series(letters: &[Letter], forms: &[LinearForm], caps: &[u32]) -> TruncatedSeries<Terms> {
    if letters.is_empty() {
        return TruncatedSeries::one(caps);
    }
    TruncatedSeries::word_series(forms, caps, |m| gen_terms(word_generator(letters, m).unwrap()))
}

fn bar_poly(p: &PolyGen) -> TensorTerms {
    let (y, n) = p.word();
    let d = y.len();
    let caps: Vec<u32> = n.iter().map(|k| k - 1).collect();
    let t = |r: usize| -> LinearForm {
        if r == 0 {
            LinearForm::zero(d)
        } else {
            LinearForm::var(d, r - 1)
        }
    };
    let letter = |r: usize| y[r - 1];

    let mut out = TensorTerms::zero();
    for chain in chains(d) {
        let k = chain.len();
        let next_i = |alpha: usize| if alpha < k { chain[alpha].0 } else { d + 1 };

        // right factor
        let first = next_i(0);
        let mut right = generator_series(
            &(1..first).map(letter).collect::<Vec<_>>(),
            &word_forms((1..first).map(t)),
            &caps,
        );
        let mut sgn = false;
        let mut left_letters = Vec::with_capacity(k);
        for (alpha, &(i, j)) in chain.iter().enumerate() {
            let inext = next_i(alpha + 1);
            let window = Letter::product(&(i..inext).map(letter).collect::<Vec<_>>());
            left_letters.push((window, j));
            sgn ^= (j - i) % 2 == 1;
            let e = TruncatedSeries::exp_linear(&window.log_terms(), &t(j), &caps);
            right = right.mul(&e);
            let inv_letters: Vec<Letter> = (i..j).rev().map(|r| letter(r).inverse()).collect();
            let inv_forms = word_forms((i..j).rev().map(|r| t(j).sub(&t(r))));
            if !inv_letters.is_empty() {
                right = right.mul(&generator_series(&inv_letters, &inv_forms, &caps));
            }
            let reg_letters: Vec<Letter> = (j + 1..inext).map(letter).collect();
            let reg_forms = word_forms((j + 1..inext).map(|r| t(r).sub(&t(j))));
            if !reg_letters.is_empty() {
                right = right.mul(&generator_series(&reg_letters, &reg_forms, &caps));
            }
        }
        let s = sign(sgn);

        // left factor [y_{i1->i2}, ... | t_{j1}, ...] is supported on the t_{j_alpha}
        let mut degs = vec![0u32; k];
        loop {
            let mut rest = caps.clone();
            for (alpha, &(_, j)) in chain.iter().enumerate() {
                rest[j - 1] -= degs[alpha];
            }
            let r = right.get(&rest);
            if !r.is_zero() {
                let windows: Vec<Letter> = left_letters.iter().map(|&(w, _)| w).collect();
                let weights: Vec<u32> = degs.iter().map(|e| e + 1).collect();
                let lm = match word_generator(&windows, &weights) {
                    Some(g) => SortedMulti::atom(g),
                    None => unit_monomial(),
                };
                for (rm, c) in r.iter() {
                    out.add_term((lm.clone(), rm.clone()), c * &s);
                }
            }
            // odometer over degs[alpha] in 0..=caps[j_alpha - 1]
            let mut carry = true;
            for (alpha, &(_, j)) in chain.iter().enumerate() {
                if degs[alpha] < caps[j - 1] {
                    degs[alpha] += 1;
                    carry = false;
                    break;
                }
                degs[alpha] = 0;
            }
            if carry {
                break;
            }
        }
    }
    out
}

/// All chains `1 <= i1 <= j1 < i2 <= j2 < ... <= jk <= d` (1-based), including the empty one.
fn chains(d: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(start: usize, d: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(cur.clone());
        for i in start..=d {
            for j in i..=d {
                cur.push((i, j));
                rec(j + 1, d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(1, d, &mut Vec::new(), &mut out);
    out
}

impl MonoidKey for (Monomial, Monomial, Monomial) {
    fn unit() -> Self {
        (Monomial::unit(), Monomial::unit(), Monomial::unit())
    }
    fn combine(&self, o: &Self) -> Self {
        (self.0.combine(&o.0), self.1.combine(&o.1), self.2.combine(&o.2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn li(w: &[u32], i: &[u32]) -> Element {
        Element::li(w, i).unwrap()
    }
    fn lg(i: u32) -> Element {
        Element::log(i).unwrap()
    }
    fn t(a: &Element, b: &Element) -> TensorTerms {
        tensor_terms(a.terms(), b.terms())
    }
    fn one() -> Element {
        Element::one(Sort::H)
    }

    #[test]
    fn chain_count() {
        // depth 1: empty, (1,1)
        assert_eq!(chains(1).len(), 2);
        // depth 2: empty, (1,1), (1,2), (2,2), (1,1)(2,2)
        assert_eq!(chains(2).len(), 5);
    }

    #[test]
    fn depth_one_weight_two() {
        let g = Generator::poly(vec![1, 2], vec![2]).unwrap();
        let y2 = li(&[2], &[1, 2]);
        let y1 = li(&[1], &[1, 2]);
        let expected = t(&y2, &one()) + t(&y1, &lg(1)) + t(&one(), &y2);
        assert_eq!(coproduct_bar(&g).terms().clone(), expected);
    }

    #[test]
    fn log_is_primitive() {
        let x = lg(1);
        let expected = t(&x, &one()) + t(&one(), &x);
        assert_eq!(coproduct(&x).terms().clone(), expected);
    }

    #[test]
    fn depth_one_general() {
        // Δ[y]_n = sum_k [y]_k ⊗ [y]_0^(n-k)/(n-k)!
        for n in 1..5u32 {
            let mut expected = t(&one(), &li(&[n], &[1, 2]));
            for k in 1..=n {
                let r = lg(1).pow(n - k).scaled(&(Rational::one() / crate::lincomb::factorial(n - k)));
                expected += &t(&li(&[k], &[1, 2]), &r);
            }
            assert_eq!(coproduct(&li(&[n], &[1, 2])).terms().clone(), expected, "n = {}", n);
        }
    }

    #[test]
    fn products_are_multiplicative() {
        let a = li(&[1], &[1, 2]);
        let b = li(&[1], &[2, 3]);
        let lhs = coproduct(&(&a * &b)).terms().clone();
        let rhs = coproduct(&a).terms().mul(coproduct(&b).terms());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduced_on_primitive_and_products() {
        assert!(reduced_coproduct(&li(&[1], &[1, 2])).is_zero());
        let a = li(&[1], &[1, 2]);
        let b = li(&[1], &[2, 3]);
        let r = reduced_coproduct(&(&a * &b));
        assert_eq!(r.terms().clone(), t(&a, &b) + t(&b, &a));
        let y2 = li(&[2], &[1, 2]);
        assert_eq!(cobracket_rep(&y2).terms().clone(), t(&li(&[1], &[1, 2]), &lg(1)));
    }

    #[test]
    fn components_partition() {
        let e = li(&[1, 1], &[1, 2, 3]);
        let full = coproduct(&e);
        let mut sum = TensorTerms::zero();
        for k in 0..=2 {
            sum += component(&e, k, 2 - k).unwrap().terms();
        }
        assert_eq!(&sum, full.terms());
        assert_eq!(
            component(&li(&[2], &[1, 2]), 1, 1).unwrap().terms().clone(),
            t(&li(&[1], &[1, 2]), &lg(1))
        );
        assert!(component(&(li(&[2], &[1, 2]) + lg(1)), 1, 1).is_err());
    }

    #[test]
    fn weight_one_regular_is_primitive_in_both_sorts() {
        let x = li(&[1], &[1, 3]);
        let expected = t(&x, &one()) + t(&one(), &x);
        assert_eq!(coproduct(&x).terms().clone(), expected);
        let g = Generator::poly(vec![1, 3], vec![1]).unwrap();
        assert_eq!(coproduct_bar(&g).terms().clone(), expected);
    }
}
