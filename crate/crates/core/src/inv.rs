//! The inversion map rewriting inverted symbols in terms of regular ones.

use std::sync::{Arc, LazyLock};

use num_traits::One;

use crate::algebra::{gen_terms, word_generator, Element, Generator, Letter, PolyGen, Sort, Terms};
use crate::coproduct::generator_series;
use crate::error::{Error, Result};
use crate::lincomb::{sign, Rational};
use crate::memo::Memo;
use crate::series::{LinearForm, TruncatedSeries};

static INV: LazyLock<Memo<PolyGen, Terms>> = LazyLock::new(Memo::new);

/// INV of an element of either sort; the result lies in H.
pub fn inv(e: &Element) -> Element {
    Element::from_terms_unchecked(Sort::H, inv_terms(e.terms()))
}

pub fn inv_generator(g: &Generator) -> Element {
    Element::from_terms_unchecked(Sort::H, inv_gen_terms(g).as_ref().clone())
}

/// Same as [`inv_generator`], surfacing a failed pole division as an error.
pub fn try_inv_generator(g: &Generator) -> Result<Element> {
    match g {
        Generator::Poly(p) if p.inverted() => Ok(Element::from_terms_unchecked(
            Sort::H,
            inv_inverted(p)?,
        )),
        _ => Ok(Element::generator(g.clone())),
    }
}

fn inv_gen_terms(g: &Generator) -> Arc<Terms> {
    match g {
        Generator::Poly(p) if p.inverted() => INV.get_or_compute(p, || {
            inv_inverted(p).unwrap_or_else(|e| panic!("{}", e))
        }),
        _ => Arc::new(gen_terms(g.clone())),
    }
}

pub(crate) fn inv_terms(t: &Terms) -> Terms {
    let mut out = Terms::zero();
    for (m, c) in t.iter() {
        if m.factors().iter().all(|g| !g.is_inverted()) {
            out.add_term(m.clone(), c.clone());
            continue;
        }
        let mut acc = Terms::one();
        for g in m.factors() {
            acc = acc.mul(&inv_gen_terms(g));
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// Series `INV[letters | forms]` over a word of inverted letters.
fn inv_series(letters: &[Letter], forms: &[LinearForm], caps: &[u32]) -> TruncatedSeries<Terms> {
    if letters.is_empty() {
        return TruncatedSeries::one(caps);
    }
    TruncatedSeries::word_series(forms, caps, |m| {
        inv_gen_terms(&word_generator(letters, m).unwrap()).as_ref().clone()
    })
}

/// Coefficient extraction from the depth recursion for
/// `INV([y_d^{-1}, ..., y_1^{-1} | -t_d, ..., -t_1])`.
fn inv_inverted(p: &PolyGen) -> Result<Terms> {
    let d = p.depth();
    let n = p.weights();
    let y = |r: usize| p.window(r - 1);
    let t = |r: usize| LinearForm::var(d, r - 1);
    let caps: Vec<u32> = n.iter().map(|k| k - 1).collect();
    let total = Letter::product(&(1..=d).map(y).collect::<Vec<_>>());

    let inv_word = |j: usize| -> Vec<Letter> { (1..=j).rev().map(|r| y(r).inverse()).collect() };
    let neg_forms = |j: usize| -> Vec<LinearForm> { (1..=j).rev().map(|r| t(r).neg()).collect() };
    let reg_word = |j: usize| -> Vec<Letter> { (j + 1..=d).map(y).collect() };

    let mut acc = Terms::zero();

    for j in 0..d {
        let s = sign((d - 1 + j) % 2 == 1);
        let a = inv_series(&inv_word(j), &neg_forms(j), &caps);
        let reg_forms: Vec<LinearForm> = (j + 1..=d).map(t).collect();
        let b = generator_series(&reg_word(j), &reg_forms, &caps);
        acc.add_scaled(&a.mul(&b).get(&caps), &s);
    }

    for j in 1..=d {
        let s = sign((d - 1 + j) % 2 == 1);
        let mut pole_caps = caps.clone();
        pole_caps[j - 1] += 1;
        let pc = &pole_caps;

        let a1 = inv_series(&inv_word(j - 1), &neg_forms(j - 1), pc);
        let reg_forms: Vec<LinearForm> = (j + 1..=d).map(t).collect();
        let b1 = generator_series(&reg_word(j), &reg_forms, pc);
        let mut numer = a1.mul(&b1);

        let shifted: Vec<LinearForm> = (1..j).rev().map(|r| t(j).sub(&t(r))).collect();
        let a2 = inv_series(&inv_word(j - 1), &shifted, pc);
        let e = TruncatedSeries::exp_linear(&total.log_terms(), &t(j), pc);
        let reg_shifted: Vec<LinearForm> = (j + 1..=d).map(|r| t(r).sub(&t(j))).collect();
        let b2 = generator_series(&reg_word(j), &reg_shifted, pc);
        let second = a2.mul(&e).mul(&b2).scale(&-Rational::one());
        numer.add_assign(&second);

        for (deg, c) in numer.nonzero() {
            if deg[j - 1] == 0 {
                return Err(Error::PoleNotClean(format!(
                    "{:?}: t_{} constant term {:?} at {:?}",
                    p, j, c, deg
                )));
            }
        }
        let mut target = caps.clone();
        target[j - 1] += 1;
        acc.add_scaled(&numer.get(&target), &s);
    }

    let flips: u32 = caps.iter().sum();
    Ok(acc.scaled(&sign(flips % 2 == 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::factorial;

    #[test]
    fn depth_one_closed_form() {
        for n in 1..6u32 {
            let g = Generator::inverted(vec![1, 2], vec![n]).unwrap();
            let s = sign((n - 1) % 2 == 1);
            let expected = Element::li(&[n], &[1, 2]).unwrap().scaled(&s)
                + Element::log(1).unwrap().pow(n).scaled(&(s.clone() / factorial(n)));
            assert_eq!(inv_generator(&g), expected, "n = {}", n);
        }
    }

    #[test]
    fn fixes_regular() {
        let e = Element::li(&[2, 1], &[1, 2, 3]).unwrap();
        assert_eq!(inv(&e), e);
        assert_eq!(inv(&Element::log(2).unwrap()), Element::log(2).unwrap());
    }

    #[test]
    fn depth_two_poles_are_clean() {
        for w in [[1u32, 1], [2, 1], [1, 2], [3, 1], [1, 3], [2, 2]] {
            let g = Generator::inverted(vec![1, 2, 3], w.to_vec()).unwrap();
            assert!(try_inv_generator(&g).is_ok());
        }
        let g = Generator::inverted(vec![1, 2, 3, 4], vec![1, 1, 1]).unwrap();
        assert!(try_inv_generator(&g).is_ok());
    }

    #[test]
    fn weight_one_window() {
        // INV[x_{1->3}^{-1}]_1 = [x_{1->3}]_1 + [x_1]_0 + [x_2]_0
        let g = Generator::inverted(vec![1, 3], vec![1]).unwrap();
        let expected = Element::li(&[1], &[1, 3]).unwrap()
            + Element::log(1).unwrap()
            + Element::log(2).unwrap();
        assert_eq!(inv_generator(&g), expected);
    }
}
