//! The antipode of the connected graded Hopf algebras.

use std::sync::LazyLock;

use crate::algebra::{gen_terms, Element, Generator, Monomial, Sort, Terms};
use crate::coproduct::{bar_generator, h_generator};
use crate::lincomb::MonoidKey;
use crate::memo::Memo;

static ANTIPODE: LazyLock<Memo<(Sort, Generator), Terms>> = LazyLock::new(Memo::new);

/// `S(x) = -x - sum S(x') x''` over the reduced coproduct; multiplicative.
pub fn antipode(e: &Element) -> Element {
    Element::from_terms_unchecked(e.sort(), antipode_terms(e.sort(), e.terms()))
}

pub(crate) fn antipode_terms(sort: Sort, t: &Terms) -> Terms {
    let mut out = Terms::zero();
    for (m, c) in t.iter() {
        out.add_scaled(&antipode_monomial(sort, m), c);
    }
    out
}

fn antipode_monomial(sort: Sort, m: &Monomial) -> Terms {
    let mut acc = Terms::one();
    for g in m.factors() {
        acc = acc.mul(&antipode_generator(sort, g));
    }
    acc
}

fn antipode_generator(sort: Sort, g: &Generator) -> Terms {
    ANTIPODE
        .get_or_compute(&(sort, g.clone()), || {
            let delta = match sort {
                Sort::Hbar => bar_generator(g),
                Sort::H => h_generator(g),
            };
            let x = Monomial::atom(g.clone());
            let mut out = -gen_terms(g.clone());
            for ((a, b), c) in delta.iter() {
                if a.degree() == 0 || b.degree() == 0 {
                    continue;
                }
                let sa = antipode_monomial(sort, a);
                out.add_scaled(&sa.mul(&Terms::basis(b.clone())), &-c.clone());
            }
            debug_assert!(out.keys().all(|k| *k != Monomial::unit() || x.degree() == 0));
            out
        })
        .as_ref()
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coproduct::coproduct;
    use crate::parse::parse;

    fn antipode_law(e: &Element) -> Terms {
        let mut out = Terms::zero();
        for ((a, b), c) in coproduct(e).terms().iter() {
            let sa = antipode_terms(e.sort(), &Terms::basis(a.clone()));
            out.add_scaled(&sa.mul(&Terms::basis(b.clone())), c);
        }
        out
    }

    #[test]
    fn primitive() {
        let e = parse("Li[1](1,2)").unwrap();
        assert_eq!(antipode(&e), -e);
    }

    #[test]
    fn weight_two() {
        let e = parse("Li[2](1,2)").unwrap();
        assert_eq!(antipode(&e), parse("-Li[2](1,2) + Li[1](1,2) log(1)").unwrap());
    }

    #[test]
    fn defining_property() {
        for src in ["Li[1,1](1,2,3)", "Li[2,1](1,2,3)", "Li[1](1,2) Li[2](2,3)"] {
            assert!(antipode_law(&parse(src).unwrap()).is_zero(), "{}", src);
        }
        let e = parse("ILi[2,1](1,2,3)").unwrap();
        assert!(antipode_law(&e).is_zero());
        assert_eq!(antipode(&Element::one(Sort::H)), Element::one(Sort::H));
    }
}
