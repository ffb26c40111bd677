//! Total differentials of symbols, valued in `A ⊗ Ω¹` with the weight-1 basis `du_i`, `dv_{i,j}`.

use std::sync::LazyLock;

use num_traits::One;

use crate::algebra::{word_generator, Element, Generator, Letter, Monomial, Sort, Terms};
use crate::basis::{letter_differentials, terms_vars, Letter1, Var};
use crate::coproduct::component;
use crate::error::{Error, Result};
use crate::lincomb::{LinComb, MonoidKey, Rational};
use crate::memo::Memo;

/// `sum c * m d(var)`.
pub type DTerms = LinComb<(Monomial, Var)>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DElement {
    sort: Sort,
    terms: DTerms,
}

impl DElement {
    pub fn new(sort: Sort, terms: DTerms) -> Self {
        DElement { sort, terms }
    }

    pub fn sort(&self) -> Sort {
        self.sort
    }

    pub fn terms(&self) -> &DTerms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

static DERIV: LazyLock<Memo<Generator, DTerms>> = LazyLock::new(Memo::new);

/// `coeff * [letters]_{weights} * d(form)`; an empty word contributes the constant 1.
fn push(out: &mut DTerms, letters: &[Letter], weights: &[u32], form: &Letter1, sign: &Rational) {
    let m = match word_generator(letters, weights) {
        Some(g) => Monomial::atom(g),
        None => Monomial::unit(),
    };
    for (v, c) in form.iter() {
        out.add_term((m.clone(), *v), c * sign);
    }
}

fn derive_word(letters: &[Letter], n: &[u32]) -> DTerms {
    let d = letters.len();
    let one = Rational::one();
    let mut out = DTerms::zero();
    for k in 0..d {
        let (d1, d0) = letter_differentials(letters[k]);
        if n[k] >= 2 {
            let mut w = n.to_vec();
            w[k] -= 1;
            push(&mut out, letters, &w, &d0, &one);
            continue;
        }
        let drop = |k: usize| -> (Vec<Letter>, Vec<u32>) {
            let mut l = letters.to_vec();
            let mut w = n.to_vec();
            l.remove(k);
            w.remove(k);
            (l, w)
        };
        if k == 0 {
            let (l, w) = drop(0);
            push(&mut out, &l, &w, &d1, &one);
        } else {
            let (mut l, w) = drop(k);
            l[k - 1] = letters[k - 1].merge(letters[k]);
            push(&mut out, &l, &w, &d1, &one);
        }
        if k + 1 < d {
            let (mut l, w) = drop(k);
            l[k] = letters[k].merge(letters[k + 1]);
            push(&mut out, &l, &w, &(d1 + d0), &-one.clone());
        }
    }
    out
}

fn derive_generator(g: &Generator) -> DTerms {
    DERIV
        .get_or_compute(g, || match g {
            Generator::Log(i) => DTerms::basis((Monomial::unit(), Var::U(*i))),
            Generator::Poly(p) => {
                let (letters, weights) = p.word();
                derive_word(&letters, &weights)
            }
        })
        .as_ref()
        .clone()
}

pub(crate) fn derive_terms(t: &Terms) -> DTerms {
    let mut out = DTerms::zero();
    for (m, c) in t.iter() {
        for (g, e) in m.powers() {
            let rest = m.without_one(&g).expect("factor present");
            let mult = c * Rational::from_integer(e.into());
            for ((cm, v), dc) in derive_generator(&g).iter() {
                let mono = MonoidKey::combine(&rest, cm);
                out.add_term((mono, *v), dc * &mult);
            }
        }
    }
    out
}

/// The total differential.
pub fn derive(e: &Element) -> DElement {
    DElement::new(e.sort(), derive_terms(e.terms()))
}

/// `a ⊗ b ↦ a db` on the `(n-1, 1)` component of the coproduct.
pub fn phi_of_component(e: &Element) -> Result<DElement> {
    let n = e.weight().ok_or(Error::Inhomogeneous)?;
    if n == 0 {
        return Ok(DElement::new(e.sort(), DTerms::zero()));
    }
    let comp = component(e, n - 1, 1)?;
    let mut out = DTerms::zero();
    for ((a, b), c) in comp.terms().iter() {
        let db = terms_vars(&Terms::basis(b.clone()))?;
        for (v, dc) in db.iter() {
            out.add_term((a.clone(), *v), dc * c);
        }
    }
    Ok(DElement::new(e.sort(), out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inv::inv_terms;
    use crate::parse::parse;

    fn inv_d(t: &DTerms) -> DTerms {
        let mut out = DTerms::zero();
        for ((m, v), c) in t.iter() {
            for (m2, c2) in inv_terms(&Terms::basis(m.clone())).iter() {
                out.add_term((m2.clone(), *v), c * c2);
            }
        }
        out
    }

    #[test]
    fn weight_one() {
        let d = derive(&parse("Li[1](1,3)").unwrap());
        assert_eq!(d.terms(), &DTerms::term((Monomial::unit(), Var::V(1, 2)), -Rational::one()));
    }

    #[test]
    fn depth_one() {
        // d[x]_n = [x]_{n-1} du
        let d = derive(&parse("Li[3](1,2)").unwrap());
        let m = parse("Li[2](1,2)").unwrap().terms().keys().next().unwrap().clone();
        assert_eq!(d.terms(), &DTerms::basis((m, Var::U(1))));
    }

    #[test]
    fn agrees_with_coproduct() {
        for src in [
            "Li[1,1](1,2,3)",
            "Li[2,1](1,2,3)",
            "Li[1,2](1,2,3)",
            "Li[1,1,1](1,2,3,4)",
            "Li[2,1,1](1,2,4,5)",
            "Li[1,2](1,3,4) log(2)",
        ] {
            let e = parse(src).unwrap();
            assert_eq!(derive(&e), phi_of_component(&e).unwrap(), "{}", src);
        }
    }

    #[test]
    fn inverted_agrees_after_inv() {
        for src in ["ILi[1](1,2)", "ILi[1,1](1,2,3)", "ILi[1,3](1,2,3)", "ILi[2,1,1](1,2,3,4)"] {
            let e = parse(src).unwrap();
            let lhs = inv_d(derive(&e).terms());
            let rhs = derive_terms(&inv_terms(e.terms()));
            assert_eq!(lhs, rhs, "{}", src);
            assert_eq!(derive(&e), phi_of_component(&e).unwrap(), "{}", src);
        }
    }
}
