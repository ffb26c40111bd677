//! The tensor Hopf algebra on weight-1 symbols, the symbol map and the projection Π.

use std::sync::LazyLock;

use num_traits::One;

use crate::algebra::{Element, Monomial, Sort, Terms};
use crate::basis::{terms_vars, Letter1, Var};
use crate::coproduct::coproduct_terms;
use crate::lincomb::{rat, LinComb, Rational};
use crate::memo::Memo;

pub type TensorWord = Vec<Var>;
/// Linear combination of words; letters are already expanded in the `u`/`v` basis.
pub type TensorAlg = LinComb<TensorWord>;

pub fn empty_word() -> TensorAlg {
    TensorAlg::basis(Vec::new())
}

pub fn letter(v: Var) -> TensorAlg {
    TensorAlg::basis(vec![v])
}

/// Multilinear expansion of `f_1 ⊗ ... ⊗ f_n`.
pub fn word_of(letters: &[Letter1]) -> TensorAlg {
    letters.iter().fold(empty_word(), |acc, f| concat(&acc, &f.map_keys(|v| vec![*v])))
}

pub fn concat(a: &TensorAlg, b: &TensorAlg) -> TensorAlg {
    a.product_with(b, |x, y| {
        let mut w = x.clone();
        w.extend_from_slice(y);
        Some((w, Rational::one()))
    })
}

fn shuffle_words(a: &[Var], b: &[Var], prefix: &mut Vec<Var>, out: &mut TensorAlg) {
    if a.is_empty() || b.is_empty() {
        let mut w = prefix.clone();
        w.extend_from_slice(a);
        w.extend_from_slice(b);
        out.add_term(w, Rational::one());
        return;
    }
    prefix.push(a[0]);
    shuffle_words(&a[1..], b, prefix, out);
    prefix.pop();
    prefix.push(b[0]);
    shuffle_words(a, &b[1..], prefix, out);
    prefix.pop();
}

pub fn shuffle(a: &TensorAlg, b: &TensorAlg) -> TensorAlg {
    let mut out = TensorAlg::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            let mut part = TensorAlg::zero();
            shuffle_words(x, y, &mut Vec::new(), &mut part);
            out.add_scaled(&part, &(cx * cy));
        }
    }
    out
}

/// All splits `w = w_1 w_2`, including empty ends.
pub fn deconcatenate(w: &[Var]) -> LinComb<(TensorWord, TensorWord)> {
    (0..=w.len()).map(|k| ((w[..k].to_vec(), w[k..].to_vec()), Rational::one())).collect()
}

pub fn reverse(t: &TensorAlg) -> TensorAlg {
    t.map_keys(|w| w.iter().rev().cloned().collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Peel {
    /// `(id ⊗ Δ_{1..1}) ∘ Δ_{1,n-1}`
    Left,
    /// `(Δ_{1..1} ⊗ id) ∘ Δ_{n-1,1}`
    Right,
}

static SYMBOLS: LazyLock<Memo<(Sort, Peel, Monomial), TensorAlg>> = LazyLock::new(Memo::new);

fn monomial_symbol(sort: Sort, peel: Peel, m: &Monomial) -> TensorAlg {
    if m.degree() == 0 {
        return empty_word();
    }
    SYMBOLS
        .get_or_compute(&(sort, peel, m.clone()), || {
            let weight = crate::algebra::monomial_weight(m);
            let delta = coproduct_terms(sort, &Terms::basis(m.clone()));
            let mut out = TensorAlg::zero();
            for ((a, b), c) in delta.iter() {
                let (one, rest) = match peel {
                    Peel::Left => (a, b),
                    Peel::Right => (b, a),
                };
                if crate::algebra::monomial_weight(one) != 1
                    || crate::algebra::monomial_weight(rest) != weight - 1
                {
                    continue;
                }
                let f = terms_vars(&Terms::basis(one.clone()))
                    .expect("weight-1 monomial is a single generator");
                let head = f.map_keys(|v| vec![*v]);
                let tail = monomial_symbol(sort, peel, rest);
                let word = match peel {
                    Peel::Left => concat(&head, &tail),
                    Peel::Right => concat(&tail, &head),
                };
                out.add_scaled(&word, c);
            }
            out
        })
        .as_ref()
        .clone()
}

pub(crate) fn symbol_terms(sort: Sort, peel: Peel, t: &Terms) -> TensorAlg {
    let mut out = TensorAlg::zero();
    for (m, c) in t.iter() {
        out.add_scaled(&monomial_symbol(sort, peel, m), c);
    }
    out
}

/// The symbol map, computed by peeling weight-1 factors off the left.
pub fn symbol(e: &Element) -> TensorAlg {
    symbol_terms(e.sort(), Peel::Left, e.terms())
}

pub fn symbol_with(e: &Element, peel: Peel) -> TensorAlg {
    symbol_terms(e.sort(), peel, e.terms())
}

fn pi_word(w: &[Var]) -> TensorAlg {
    let n = w.len();
    match n {
        0 => TensorAlg::zero(),
        1 => TensorAlg::basis(w.to_vec()),
        _ => {
            let last = letter(w[n - 1]);
            let first = letter(w[0]);
            let a = concat(&pi_word(&w[..n - 1]), &last);
            let b = concat(&pi_word(&w[1..]), &first);
            (a - b).scaled(&rat(n as i64 - 1, n as i64))
        }
    }
}

/// The projection killing shuffle products, by the length recursion. `Π(1) = 0`.
pub fn project_pi(t: &TensorAlg) -> TensorAlg {
    t.flat_map(|w| pi_word(w))
}

/// The same projection from `id + Y^{-1} μ(S ⊗ Y) Δ'` written out on words.
pub fn project_pi_closed(t: &TensorAlg) -> TensorAlg {
    t.flat_map(|w| {
        let n = w.len();
        if n == 0 {
            return TensorAlg::zero();
        }
        let mut out = TensorAlg::basis(w.clone());
        for i in 1..n {
            let head: Vec<Var> = w[..i].iter().rev().cloned().collect();
            let tail = w[i..].to_vec();
            let c = crate::lincomb::sign(i % 2 == 1) * rat((n - i) as i64, n as i64);
            out.add_scaled(&shuffle(&TensorAlg::basis(head), &TensorAlg::basis(tail)), &c);
        }
        out
    })
}

/// Word-length homogeneity check.
pub fn word_length(t: &TensorAlg) -> Option<usize> {
    let mut it = t.keys().map(Vec::len);
    let first = it.next()?;
    it.all(|l| l == first).then_some(first)
}
